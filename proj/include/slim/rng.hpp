#pragma once

// Deterministic splitmix64 generator. Seeded runs must reproduce bit-exact
// across platforms, so we avoid std:: distributions entirely.

#include "slim/rational.hpp"

#include <cstdint>

namespace slim {

struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }

    // small exact rational, numerator in [-9, 9], denominator in {1, 2, 3}
    Rat rat() {
        int num = int(below(19)) - 9;
        int den = int(below(3)) + 1;
        return Rat(num, den);
    }

    // nonzero variant
    Rat rat_nonzero() {
        Rat r = rat();
        while (r.is_zero()) r = rat();
        return r;
    }
};

} // namespace slim
