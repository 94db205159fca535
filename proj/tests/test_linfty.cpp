#include "slim/linfty.hpp"
#include "slim/rng.hpp"

#include "doctest.h"

using namespace slim;

TEST_CASE("unshuffle counts and validity") {
    CHECK(unshuffles(1, 2).size() == 2);
    CHECK(unshuffles(2, 4).size() == 6);
    CHECK(unshuffles(2, 5).size() == 10);
    for (const auto& u : unshuffles(3, 6)) {
        for (int t = 1; t < 3; ++t) CHECK(u.perm[t - 1] < u.perm[t]);
        for (int t = 4; t < 6; ++t) CHECK(u.perm[t - 1] < u.perm[t]);
    }
    CHECK_THROWS_AS(unshuffles(0, 3), error);
    CHECK_THROWS_AS(unshuffles(3, 3), error);
    // chi of the identity is +1
    std::vector<int> grades{1, 0, 1};
    CHECK(chi_of_permutation({0, 1, 2}, grades) == 1);
}

TEST_CASE("build_slim validates its inputs") {
    auto h = build_heisenberg();
    Cochain gamma = make_gamma(&h);
    CHECK_NOTHROW(build_slim(&h, 2, gamma));
    // wrong level
    Cochain two(&h, 2);
    two.add_term({0, 1}, Rat(1));
    CHECK_THROWS_AS(build_slim(&h, 2, two), error);
    // odd cochain is refused
    auto t = build_supertranslation(1, Flavor::k2);
    Cochain odd(&t, 3);
    odd.add_term({0, 1, t.basis.even_dim()}, Rat(1));
    CHECK_THROWS_AS(build_slim(&t, 2, odd), error);
    // round trip of the correspondence: the data returns its pieces
    auto data = build_slim(&h, 2, gamma);
    CHECK(data.algebra == &h);
    CHECK(data.n == 2);
    CHECK(data.top == gamma);
}

TEST_CASE("Heisenberg Lie 2-algebra passes every arity") {
    auto h = build_heisenberg();
    auto data = build_slim(&h, 2, make_gamma(&h));
    auto rep = check_linfty(data, 5);
    INFO(rep.failure);
    CHECK(rep.ok);
    CHECK(rep.only_expected_splits);
}

TEST_CASE("zero top bracket passes") {
    auto h = build_heisenberg();
    auto data = build_slim(&h, 2, Cochain(&h, 3));
    CHECK(check_linfty(data, 5).ok);
}

TEST_CASE("a non-cocycle fails exactly at the cocycle arity") {
    // an even, non-closed (1,2)-form: a single diagonal spinor-squared term
    auto t = build_supertranslation(1, Flavor::k2);
    const int vd = t.basis.even_dim();
    Cochain w(&t, 3);
    w.add_term({0, vd, vd}, Rat(1));
    Cochain dw = coboundary(w);
    CHECK_FALSE(dw.empty());
    auto data = build_slim(&t, 2, w);
    auto rep = check_linfty(data, 5, 100'000);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failed_arity == 4);   // = cocycle level + 1
    CHECK(rep.failure.find("arity 4") != std::string::npos);

    // on Heisenberg every 2-cochain is closed, so slim 1-algebra data passes
    auto h = build_heisenberg();
    Cochain pq(&h, 2);
    pq.add_term({0, 1}, Rat(1));
    CHECK(coboundary(pq).empty());
    CHECK(check_linfty(build_slim(&h, 1, pq), 4).ok);
}

TEST_CASE("string Lie 2-algebras strng(n) for n <= 5") {
    for (int n : {3, 4, 5}) {
        auto so = build_so(n);
        Cochain j = make_j(&so.algebra, so.trace_form);
        auto data = build_slim(&so.algebra, 2, j);
        long long budget = n <= 4 ? 500'000 : 40'000;
        auto rep = check_linfty(data, 5, budget);
        INFO(rep.failure);
        CHECK(rep.ok);
        CHECK(rep.only_expected_splits);
    }
}

TEST_CASE("supertranslation Lie 2- and 3-superalgebras for k = 1") {
    auto t2 = build_supertranslation(1, Flavor::k2);
    Cochain alpha = make_alpha(&t2, 1);
    auto rep2 = check_linfty(build_slim(&t2, 2, alpha), 5, 100'000);
    INFO(rep2.failure);
    CHECK(rep2.ok);
    CHECK(rep2.only_expected_splits);

    auto t3 = build_supertranslation(1, Flavor::k3);
    Cochain beta = make_beta(&t3, 1);
    auto rep3 = check_linfty(build_slim(&t3, 3, beta), 6, 60'000);
    INFO(rep3.failure);
    CHECK(rep3.ok);
}

TEST_CASE("superstring(2,1): the slim algebra on the full Poincare superalgebra") {
    auto t = build_supertranslation(1, Flavor::k2);
    auto p = build_poincare(1, Flavor::k2);
    Cochain alpha = make_alpha(&t, 1);
    auto ext = extend_by_zero(alpha, p, p.dim() - t.dim());
    REQUIRE(ext.closed);
    auto data = build_slim(&p, 2, ext.extended);
    auto rep = check_linfty(data, 5, 150'000);
    INFO(rep.failure);
    CHECK(rep.ok);
}

TEST_CASE("check_linfty passes iff the top cochain is closed") {
    auto t = build_supertranslation(1, Flavor::k2);
    Rng rng(401);
    int closed_seen = 0, open_seen = 0;
    for (int it = 0; it < 10; ++it) {
        // random even level-3 cochain: coefficients on even-parity monomials
        Cochain w(&t, 3);
        enumerate_monomials(t, 3, [&](const std::vector<int>& m) {
            int q = 0;
            for (int l : m) q += t.parity_bit(l);
            if (q % 2) return;
            if (rng.below(3) == 0) w.add_term(m, rng.rat());
        });
        bool closed = coboundary(w).empty();
        (closed ? closed_seen : open_seen)++;
        auto rep = check_linfty(build_slim(&t, 2, w), 4, 50'000);
        CHECK(rep.ok == closed);
    }
    CHECK(open_seen > 0);   // the sample is not vacuous
}

TEST_CASE("arity guard") {
    auto h = build_heisenberg();
    auto data = build_slim(&h, 2, make_gamma(&h));
    CHECK_THROWS_AS(check_linfty(data, 6), error);
}
