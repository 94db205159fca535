#include "slim/spacetime.hpp"
#include "slim/rng.hpp"

#include "doctest.h"

#include <array>

using namespace slim;

namespace {

const std::array<Algebra, 4> all_algebras{Algebra::R, Algebra::C, Algebra::H, Algebra::O};

VectorK2 rand_vk2(Rng& rng, Algebra t) {
    VectorK2 v(t);
    v.t = rng.rat();
    v.x = rng.rat();
    for (auto& c : v.y.c) c = rng.rat();
    return v;
}

VectorK3 rand_vk3(Rng& rng, Algebra t) {
    VectorK3 v(t);
    v.inner = rand_vk2(rng, t);
    v.a = rng.rat();
    return v;
}

SpinorK2 rand_sk2(Rng& rng, Algebra t, Chirality ch) {
    SpinorK2 s(t, ch);
    for (auto& c : s.a.c) c = rng.rat();
    for (auto& c : s.b.c) c = rng.rat();
    return s;
}

SpinorK3 rand_sk3(Rng& rng, Algebra t) {
    return {rand_sk2(rng, t, Chirality::plus), rand_sk2(rng, t, Chirality::minus)};
}

} // namespace

TEST_CASE("trace reversal is time reversal and an involution") {
    Rng rng(101);
    for (Algebra t : all_algebras) {
        VectorK2 v = rand_vk2(rng, t);
        VectorK2 w = trace_reversal(v);
        CHECK(w.t == -v.t);
        CHECK(w.x == v.x);
        CHECK(w.y == v.y);
        CHECK(trace_reversal(w) == v);
    }
    VectorK2 e(Algebra::O);
    e.t = Rat(1);
    CHECK(trace_reversal(e).t == Rat(-1));
}

TEST_CASE("A A~ = -det(A) 1 and g(A,A) = -det(A)") {
    Rng rng(103);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 15; ++i) {
            VectorK2 v = rand_vk2(rng, t);
            auto prod = to_matrix(v) * to_matrix(trace_reversal(v));
            auto expect = (-det(v)) * DAMatrix<>::identity(t, 2);
            CHECK(prod == expect);
            CHECK(minkowski_g(v, v) == -det(v));
        }
    }
}

TEST_CASE("metric values on simple vectors") {
    VectorK2 e(Algebra::H);
    e.t = Rat(1);
    CHECK(minkowski_g(e, e) == Rat(-1));
    VectorK2 nullv(Algebra::H);
    nullv.t = Rat(1);
    nullv.x = Rat(1);
    CHECK(minkowski_g(nullv, nullv) == Rat(0));
    // h = g + a^2, quarter-trace formula
    Rng rng(107);
    for (Algebra t : all_algebras) {
        VectorK3 a = rand_vk3(rng, t), b = rand_vk3(rng, t);
        CHECK(minkowski_h(a, b) == minkowski_g(a.inner, b.inner) + a.a * b.a);
        CHECK(minkowski_h(a, b) == frac(1, 4) * re_trace(to_matrix(a), to_matrix(b)));
        CHECK((to_matrix(a) * to_matrix(a)) == minkowski_h(a, a) * DAMatrix<>::identity(t, 4));
    }
}

TEST_CASE("Clifford relation in k+2 dimensions") {
    Rng rng(109);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 10; ++i) {
            VectorK2 A = rand_vk2(rng, t);
            SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
            CHECK(clifford_act(A, clifford_act(A, psi)) == minkowski_g(A, A) * psi);
            SpinorK2 phi = rand_sk2(rng, t, Chirality::minus);
            CHECK(clifford_act(A, clifford_act(A, phi)) == minkowski_g(A, A) * phi);
        }
        // identity matrix acts as identity S+ -> S-
        VectorK2 one(t);
        one.t = Rat(1);
        SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
        SpinorK2 img = clifford_act(one, psi);
        CHECK(img.a == psi.a);
        CHECK(img.b == psi.b);
        CHECK(img.chirality == Chirality::minus);
    }
}

TEST_CASE("Clifford relation in k+3 dimensions") {
    Rng rng(113);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 8; ++i) {
            VectorK3 A = rand_vk3(rng, t);
            SpinorK3 psi = rand_sk3(rng, t);
            CHECK(clifford_act(A, clifford_act(A, psi)) == minkowski_h(A, A) * psi);
        }
        VectorK3 ea(t);
        ea.a = Rat(1);
        SpinorK3 psi = rand_sk3(rng, t);
        CHECK(clifford_act(ea, clifford_act(ea, psi)) == psi);
    }
}

TEST_CASE("pairing is bilinear; big pairing is skew-symmetric") {
    Rng rng(127);
    for (Algebra t : all_algebras) {
        SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
        SpinorK2 phi = rand_sk2(rng, t, Chirality::minus);
        CHECK(pairing(Rat(2) * psi, phi) == Rat(2) * pairing(psi, phi));
        for (int i = 0; i < 10; ++i) {
            SpinorK3 P = rand_sk3(rng, t), Q = rand_sk3(rng, t);
            CHECK(pairing_big(P, Q) == -pairing_big(Q, P));
        }
    }
}

TEST_CASE("acting by a vector rescales the big pairing by -h(A,A)") {
    Rng rng(131);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 8; ++i) {
            VectorK3 A = rand_vk3(rng, t);
            SpinorK3 P = rand_sk3(rng, t), Q = rand_sk3(rng, t);
            CHECK(pairing_big(clifford_act(A, P), clifford_act(A, Q)) ==
                  -minkowski_h(A, A) * pairing_big(P, Q));
        }
    }
}

TEST_CASE("Gamma^0 A = -A^dagger Gamma^0 as matrices") {
    Rng rng(137);
    for (Algebra t : all_algebras) {
        DAMatrix<> g0 = to_matrix(time_unit(t));
        for (int i = 0; i < 6; ++i) {
            DAMatrix<> A = to_matrix(rand_vk3(rng, t));
            CHECK(g0 * A == Rat(-1) * (dagger(A) * g0));
        }
    }
}

TEST_CASE("spinor bracket: defining property, symmetry, hermitian-part formulas") {
    Rng rng(139);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 8; ++i) {
            SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 phi = rand_sk2(rng, t, Chirality::plus);
            VectorK2 br = bracket_spinors(psi, phi);
            CHECK(br == bracket_spinors(phi, psi));
            VectorK2 A = rand_vk2(rng, t);
            CHECK(minkowski_g(br, A) == pairing(psi, clifford_act(A, phi)));
            CHECK(br == trace_reversal(outer_hermitian(psi, phi)));

            SpinorK2 pm = rand_sk2(rng, t, Chirality::minus);
            SpinorK2 qm = rand_sk2(rng, t, Chirality::minus);
            VectorK2 brm = bracket_spinors(pm, qm);
            CHECK(minkowski_g(brm, A) == pairing(clifford_act(A, pm), qm));
            CHECK(brm == outer_hermitian(pm, qm));
        }
        CHECK_THROWS_AS(bracket_spinors(rand_sk2(rng, t, Chirality::plus),
                                        rand_sk2(rng, t, Chirality::minus)),
                        error);
    }
}

TEST_CASE("big bracket: defining property and symmetry") {
    Rng rng(149);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 6; ++i) {
            SpinorK3 P = rand_sk3(rng, t), Q = rand_sk3(rng, t);
            VectorK3 br = bracket_big(P, Q);
            CHECK(br == bracket_big(Q, P));
            VectorK3 A = rand_vk3(rng, t);
            CHECK(minkowski_h(br, A) == pairing_big(P, clifford_act(A, Q)));
        }
    }
}

TEST_CASE("3-psi rule: [psi,psi].psi = 0 in dimensions 3, 4, 6, 10") {
    Rng rng(151);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 25; ++i) {
            CHECK(three_psi(rand_sk2(rng, t, Chirality::plus)).is_zero());
            CHECK(three_psi(rand_sk2(rng, t, Chirality::minus)).is_zero());
        }
        // spinors square to null vectors
        SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
        VectorK2 sq = bracket_spinors(psi, psi);
        CHECK(minkowski_g(sq, sq) == Rat(0));
    }
}

TEST_CASE("4-Psi rule: [Psi,[Psi,Psi]Psi] = 0 in dimensions 4, 5, 7, 11") {
    Rng rng(157);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 12; ++i) {
            CHECK(four_psi(rand_sk3(rng, t)).is_zero());
        }
    }
}

TEST_CASE("polarized 3-psi rule vanishes") {
    Rng rng(163);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 10; ++i) {
            SpinorK2 a = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 b = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 c = rand_sk2(rng, t, Chirality::plus);
            CHECK(check_trilinear_sym(a, b, c).is_zero());
            SpinorK2 am = rand_sk2(rng, t, Chirality::minus);
            SpinorK2 bm = rand_sk2(rng, t, Chirality::minus);
            SpinorK2 cm = rand_sk2(rng, t, Chirality::minus);
            CHECK(check_trilinear_sym(am, bm, cm).is_zero());
        }
    }
}

TEST_CASE("4-linear symmetries of <theta, [psi,phi] chi>") {
    Rng rng(167);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 8; ++i) {
            SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 phi = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 chi = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 theta = rand_sk2(rng, t, Chirality::plus);
            auto quad = [&](const SpinorK2& a, const SpinorK2& b, const SpinorK2& c,
                            const SpinorK2& d) {
                return pairing(a, clifford_act(bracket_spinors(b, c), d));
            };
            Rat base = quad(theta, psi, phi, chi);
            CHECK(base == quad(chi, psi, phi, theta));
            CHECK(base == quad(psi, theta, chi, phi));

            SpinorK2 pm = rand_sk2(rng, t, Chirality::minus);
            SpinorK2 qm = rand_sk2(rng, t, Chirality::minus);
            SpinorK2 cm = rand_sk2(rng, t, Chirality::minus);
            SpinorK2 tm = rand_sk2(rng, t, Chirality::minus);
            auto quadm = [&](const SpinorK2& a, const SpinorK2& b, const SpinorK2& c,
                             const SpinorK2& d) {
                return pairing(clifford_act(bracket_spinors(a, b), c), d);
            };
            Rat basem = quadm(pm, qm, tm, cm);
            CHECK(basem == quadm(pm, qm, cm, tm));
            CHECK(basem == quadm(tm, cm, pm, qm));
        }
    }
}

TEST_CASE("star form: antisymmetric in vectors, symmetric in spinors") {
    Rng rng(173);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 6; ++i) {
            SpinorK3 P = rand_sk3(rng, t), Q = rand_sk3(rng, t);
            VectorK3 A = rand_vk3(rng, t), B = rand_vk3(rng, t);
            CHECK(star_form(P, Q, A, A) == Rat(0));
            CHECK(star_form(P, Q, A, B) == -star_form(P, Q, B, A));
            CHECK(star_form(P, Q, A, B) == star_form(Q, P, A, B));
            // inserting [Psi,Psi] kills a slot of Psi * Psi
            CHECK(star_form(P, P, A, bracket_big(P, P)) == Rat(0));
        }
    }
}

TEST_CASE("lorentz generators satisfy the equivariance relation") {
    Rng rng(179);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 4; ++i) {
            VectorK2 u = rand_vk2(rng, t), v = rand_vk2(rng, t);
            auto X = lorentz_generator(u, v);
            VectorK2 A = rand_vk2(rng, t);
            SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
            VectorK2 rhoA = vector_k2_from_coords(t, X.rho.apply(coords(A)));
            SpinorK2 lhs = clifford_act(rhoA, psi);
            SpinorK2 g = clifford_act(A, psi);
            SpinorK2 rhs =
                spinor_k2_from_coords(t, Chirality::minus, X.sigma_minus.apply(coords(g))) -
                clifford_act(A, spinor_k2_from_coords(t, Chirality::plus,
                                                      X.sigma_plus.apply(coords(psi))));
            CHECK(lhs == rhs);
            // rho is antisymmetric with respect to g
            VectorK2 B = rand_vk2(rng, t);
            VectorK2 rhoB = vector_k2_from_coords(t, X.rho.apply(coords(B)));
            CHECK(minkowski_g(rhoA, B) + minkowski_g(A, rhoB) == Rat(0));
        }
        // degenerate wedge gives the zero generator
        VectorK2 u = rand_vk2(rng, t);
        auto Z = lorentz_generator(u, u);
        CHECK(Z.rho.is_zero());
        CHECK(Z.sigma_plus.is_zero());
        CHECK(Z.sigma_minus.is_zero());
    }
}

TEST_CASE("lorentz generators one dimension up") {
    Rng rng(181);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 3; ++i) {
            VectorK3 u = rand_vk3(rng, t), v = rand_vk3(rng, t);
            auto X = lorentz_generator(u, v);
            VectorK3 A = rand_vk3(rng, t);
            SpinorK3 psi = rand_sk3(rng, t);
            VectorK3 rhoA = vector_k3_from_coords(t, X.rho.apply(coords(A)));
            SpinorK3 g = clifford_act(A, psi);
            SpinorK3 lhs = clifford_act(rhoA, psi);
            SpinorK3 rhs = spinor_k3_from_coords(t, X.sigma.apply(coords(g))) -
                           clifford_act(A, spinor_k3_from_coords(t, X.sigma.apply(coords(psi))));
            CHECK(lhs == rhs);
            VectorK3 B = rand_vk3(rng, t);
            VectorK3 rhoB = vector_k3_from_coords(t, X.rho.apply(coords(B)));
            CHECK(minkowski_h(rhoA, B) + minkowski_h(A, rhoB) == Rat(0));
        }
    }
}

TEST_CASE("infinitesimal invariance of the 3-cocycle integrand") {
    // alpha(rho(X)A, psi, phi) + alpha(A, sigma(X)psi, phi) + alpha(A, psi, sigma(X)phi) = 0
    Rng rng(191);
    for (Algebra t : all_algebras) {
        auto alpha = [&](const VectorK2& A, const SpinorK2& psi, const SpinorK2& phi) {
            return minkowski_g(bracket_spinors(psi, phi), A);
        };
        for (int i = 0; i < 4; ++i) {
            VectorK2 u = rand_vk2(rng, t), v = rand_vk2(rng, t);
            auto X = lorentz_generator(u, v);
            VectorK2 A = rand_vk2(rng, t);
            SpinorK2 psi = rand_sk2(rng, t, Chirality::plus);
            SpinorK2 phi = rand_sk2(rng, t, Chirality::plus);
            VectorK2 rhoA = vector_k2_from_coords(t, X.rho.apply(coords(A)));
            SpinorK2 spsi =
                spinor_k2_from_coords(t, Chirality::plus, X.sigma_plus.apply(coords(psi)));
            SpinorK2 sphi =
                spinor_k2_from_coords(t, Chirality::plus, X.sigma_plus.apply(coords(phi)));
            CHECK(alpha(rhoA, psi, phi) + alpha(A, spsi, phi) + alpha(A, psi, sphi) == Rat(0));
        }
    }
}

TEST_CASE("infinitesimal invariance of the 4-cocycle integrand") {
    Rng rng(193);
    for (Algebra t : all_algebras) {
        for (int i = 0; i < 3; ++i) {
            VectorK3 u = rand_vk3(rng, t), v = rand_vk3(rng, t);
            auto X = lorentz_generator(u, v);
            VectorK3 A = rand_vk3(rng, t), B = rand_vk3(rng, t);
            SpinorK3 P = rand_sk3(rng, t), Q = rand_sk3(rng, t);
            VectorK3 rhoA = vector_k3_from_coords(t, X.rho.apply(coords(A)));
            VectorK3 rhoB = vector_k3_from_coords(t, X.rho.apply(coords(B)));
            SpinorK3 sP = spinor_k3_from_coords(t, X.sigma.apply(coords(P)));
            SpinorK3 sQ = spinor_k3_from_coords(t, X.sigma.apply(coords(Q)));
            Rat defect = star_form(P, Q, rhoA, B) + star_form(P, Q, A, rhoB) +
                         star_form(sP, Q, A, B) + star_form(P, sQ, A, B);
            CHECK(defect == Rat(0));
        }
    }
}

TEST_CASE("coordinate round-trips") {
    Rng rng(197);
    for (Algebra t : all_algebras) {
        VectorK2 v = rand_vk2(rng, t);
        CHECK(vector_k2_from_coords(t, coords(v)) == v);
        VectorK3 w = rand_vk3(rng, t);
        CHECK(vector_k3_from_coords(t, coords(w)) == w);
        SpinorK2 s = rand_sk2(rng, t, Chirality::minus);
        CHECK(spinor_k2_from_coords(t, Chirality::minus, coords(s)) == s);
        SpinorK3 S = rand_sk3(rng, t);
        CHECK(spinor_k3_from_coords(t, coords(S)) == S);
    }
}
