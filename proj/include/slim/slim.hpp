#pragma once

// Umbrella header.

#include "slim/cohomology.hpp"
#include "slim/division_algebra.hpp"
#include "slim/grassmann.hpp"
#include "slim/integration.hpp"
#include "slim/koszul.hpp"
#include "slim/linalg.hpp"
#include "slim/linfty.hpp"
#include "slim/polynomial.hpp"
#include "slim/rational.hpp"
#include "slim/rng.hpp"
#include "slim/spacetime.hpp"
#include "slim/superalgebra.hpp"
#include "slim/supergeometry.hpp"
