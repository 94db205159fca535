#pragma once

// The functor of points on super vector spaces and the superized integration
// pipeline. An A-point of a super vector space V is an even element of the
// tensor product with a Grassmann algebra A: even basis labels carry even
// Grassmann coefficients, odd labels odd ones. Multilinear maps induce maps
// on A-points through the reversed-coefficient rule
//     f_A(a_1 v_1, ..., a_p v_p) = a_p ... a_1 f(v_1, ..., v_p),
// which turns a Lie superalgebra into an ordinary Lie algebra over A_0 and a
// graded-antisymmetric cochain into an alternating A_0-multilinear one. The
// integration engine then runs unchanged with coefficient ring A, giving the
// supergroup cochain (int omega)_A; naturality in A is a theorem and a test,
// not a storage format.

#include "slim/cohomology.hpp"
#include "slim/grassmann.hpp"
#include "slim/integration.hpp"
#include "slim/rng.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slim {

// --- A-points -----------------------------------------------------------------

struct APoint {
    const LieSuperalgebra* g = nullptr;
    GrassmannAlgebra A;
    std::vector<GrassmannElement> coef;

    APoint(const LieSuperalgebra* alg, GrassmannAlgebra a)
        : g(alg), A(a), coef(alg->dim(), GrassmannElement(a)) {}

    void check_parities() const {
        for (int i = 0; i < g->dim(); ++i) {
            if (g->parity_bit(i) ? coef[i].has_even_part() : coef[i].has_odd_part())
                throw error("APoint: coefficient parity does not match label " +
                            g->basis.labels[i]);
        }
    }

    GroupElement<GrassmannElement> as_group_element() const {
        return GroupElement<GrassmannElement>(g, coef);
    }

    friend bool operator==(const APoint& x, const APoint& y) {
        return x.g == y.g && x.A == y.A && x.coef == y.coef;
    }
};

inline APoint random_apoint(const LieSuperalgebra* g, GrassmannAlgebra A, Rng& rng,
                            int fill_one_in = 2) {
    APoint p(g, A);
    for (int i = 0; i < g->dim(); ++i) {
        GrassmannElement e(A);
        for (uint32_t m = 0; m < uint32_t(A.basis_size()); ++m) {
            if ((std::popcount(m) & 1) != g->parity_bit(i)) continue;
            if (rng.below(fill_one_in) == 0) e.coeff(m) = rng.rat();
        }
        p.coef[i] = std::move(e);
    }
    return p;
}

// the induced antisymmetric A_0-bilinear bracket on A-points
inline APoint a_bracket(const APoint& x, const APoint& y) {
    if (x.g != y.g || !(x.A == y.A)) throw error("a_bracket: parent mismatch");
    APoint out(x.g, x.A);
    out.coef = bracket_reversed(*x.g, x.coef, y.coef);
    return out;
}

// omega_A evaluated at A-points (an A_0 value for even omega)
inline GrassmannElement induced_cochain_eval(const Cochain& omega,
                                             const std::vector<APoint>& args) {
    if (args.empty()) throw error("induced_cochain_eval: no arguments");
    std::vector<LiePoly<GrassmannElement>> lifted;
    for (const auto& a : args)
        lifted.push_back(LiePoly<GrassmannElement>::constant(a.g, a.coef));
    Poly<GrassmannElement> v = eval_cochain(omega, lifted);
    if (!v.is_constant()) throw error("induced_cochain_eval: non-constant result");
    return v.constant_term();
}

// coordinatewise application of a Grassmann homomorphism: N_f
inline APoint apply_hom(const GrassmannHom& f, const APoint& x) {
    if (!(x.A == f.source())) throw error("apply_hom: algebra mismatch");
    APoint out(x.g, f.target());
    for (int i = 0; i < x.g->dim(); ++i) out.coef[i] = f.apply(x.coef[i]);
    return out;
}

// exponential supergroup multiplication on A-points (2-step BCH over A_0)
inline APoint super_exp_mul(const APoint& x, const APoint& y) {
    if (x.g != y.g || !(x.A == y.A)) throw error("super_exp_mul: parent mismatch");
    require_two_step(*x.g, "super_exp_mul");
    APoint out(x.g, x.A);
    out.coef = bch2(*x.g, x.coef, y.coef);
    return out;
}

inline APoint apoint_identity(const LieSuperalgebra* g, GrassmannAlgebra A) {
    return APoint(g, A);
}

// --- the superized integration map ----------------------------------------------

// (int omega)_A at a tuple of A-points: the ring-generic engine with R = A
inline GrassmannElement super_integrate_at(const Cochain& omega,
                                           const std::vector<APoint>& args) {
    std::vector<GroupElement<GrassmannElement>> lifted;
    for (const auto& a : args) lifted.push_back(a.as_group_element());
    return integrate_cochain_at(omega, lifted);
}

// the evaluator family: one engine, ring parameterized
struct SuperCochain {
    const Cochain* omega = nullptr;
    int level() const { return omega->level(); }
    GrassmannElement eval(const std::vector<APoint>& args) const {
        return super_integrate_at(*omega, args);
    }
};

inline SuperCochain super_integrate(const Cochain& omega) {
    require_two_step(omega.parent(), "super_integrate");
    return SuperCochain{&omega};
}

// inhomogeneous supergroup coboundary of the integrated cochain, evaluated at
// A-points: d f(n_1..n_{p+1}) = f(n_2..) + sum (-1)^i f(.., n_i n_{i+1}, ..)
// + (-1)^{p+1} f(n_1..n_p)
inline GrassmannElement super_coboundary_at(const SuperCochain& f,
                                            const std::vector<APoint>& args) {
    const int p = f.level();
    if (static_cast<int>(args.size()) != p + 1) throw error("super_coboundary_at: arity");
    GrassmannElement total(args[0].A);
    {
        std::vector<APoint> rest(args.begin() + 1, args.end());
        total = total + f.eval(rest);
    }
    for (int i = 1; i <= p; ++i) {
        std::vector<APoint> merged;
        for (int r = 0; r < p + 1; ++r) {
            if (r == i - 1) {
                merged.push_back(super_exp_mul(args[r], args[r + 1]));
                ++r;
            } else {
                merged.push_back(args[r]);
            }
        }
        GrassmannElement term = f.eval(merged);
        total = (i % 2 == 0) ? total + term : total - term;
    }
    {
        std::vector<APoint> head(args.begin(), args.end() - 1);
        GrassmannElement term = f.eval(head);
        total = (p % 2 == 0) ? total - term : total + term;
    }
    return total;
}

// --- homogeneous extension over a semidirect product -----------------------------
//
// Points of G ⋉ H with G acting on H by Lie algebra automorphisms; the
// homogeneous cochain F on H pulls back along the projection, and the pulled
// back cochain is homogeneous exactly when F is G-equivariant.

template <class R>
struct SemiDirectPoint {
    GroupElement<R> gpart;
    GroupElement<R> hpart;
};

// act: (g-coordinates, h-coordinates) -> h-coordinates, the automorphism by
// which exp(g) acts on logarithms
template <class R, class Act>
SemiDirectPoint<R> sd_mul(const SemiDirectPoint<R>& a, const SemiDirectPoint<R>& b, Act&& act) {
    GroupElement<R> acted(b.hpart.g, act(a.gpart.x, b.hpart.x));
    return SemiDirectPoint<R>{a.gpart * b.gpart, a.hpart * acted};
}

// homogeneous picture of an integrated cochain on H: F(n_0..n_p) =
// f(n_0^{-1} n_1, ..., n_{p-1}^{-1} n_p)
inline GrassmannElement super_homogeneous_at(const SuperCochain& f,
                                             const std::vector<APoint>& vertices) {
    if (static_cast<int>(vertices.size()) != f.level() + 1)
        throw error("super_homogeneous_at: vertex count");
    std::vector<APoint> quotients;
    for (size_t i = 1; i < vertices.size(); ++i) {
        APoint inv = vertices[i - 1];
        for (auto& c : inv.coef) c = -c;
        quotients.push_back(super_exp_mul(inv, vertices[i]));
    }
    return f.eval(quotients);
}

// the pulled-back evaluator on G ⋉ H tuples: project to H and evaluate
template <class Eval>
GrassmannElement homogeneous_extend_at(Eval&& F_hom, const std::vector<SemiDirectPoint<GrassmannElement>>& tuple,
                                       const LieSuperalgebra* h, GrassmannAlgebra A) {
    std::vector<APoint> hs;
    for (const auto& pt : tuple) {
        APoint p(h, A);
        p.coef = pt.hpart.x;
        hs.push_back(std::move(p));
    }
    return F_hom(hs);
}

// --- headline verifications -------------------------------------------------------

struct SuperGroupCocycleReport {
    bool ok = true;
    int samples = 0;
    std::string failure;
};

namespace detail {

inline SuperGroupCocycleReport verify_supergroup_cocycle(const Cochain& omega, int grassmann_n,
                                                         int samples, uint64_t seed) {
    const LieSuperalgebra* g = omega.parent_ptr();
    GrassmannAlgebra A{grassmann_n};
    SuperCochain f = super_integrate(omega);
    const int p = omega.level();
    SuperGroupCocycleReport rep;
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<APoint> args;
        for (int r = 0; r < p + 1; ++r) args.push_back(random_apoint(g, A, rng));
        GrassmannElement d = super_coboundary_at(f, args);
        if (!d.is_zero()) {
            rep.ok = false;
            rep.failure = "cocycle identity failed at sample " + std::to_string(s);
            return rep;
        }
        ++rep.samples;
    }
    // normalization: an identity argument kills the value
    std::vector<APoint> args;
    for (int r = 0; r < p; ++r) args.push_back(random_apoint(g, A, rng));
    for (int r = 0; r < p; ++r) {
        std::vector<APoint> degen = args;
        degen[r] = apoint_identity(g, A);
        if (!f.eval(degen).is_zero()) {
            rep.ok = false;
            rep.failure = "normalization failed in slot " + std::to_string(r);
            return rep;
        }
    }
    return rep;
}

} // namespace detail

// the supergroup 3-cocycle (pentagon) identity for int alpha over Lambda R^n
inline SuperGroupCocycleReport superstring_cocycle(const LieSuperalgebra* t, int k,
                                                   int grassmann_n, int samples,
                                                   uint64_t seed = 0x5afe) {
    Cochain alpha = make_alpha(t, k);
    return detail::verify_supergroup_cocycle(alpha, grassmann_n, samples, seed);
}

// the supergroup 4-cocycle (pentagonator) identity for int beta
inline SuperGroupCocycleReport twobrane_cocycle(const LieSuperalgebra* t, int k, int grassmann_n,
                                                int samples, uint64_t seed = 0x5afe) {
    Cochain beta = make_beta(t, k);
    return detail::verify_supergroup_cocycle(beta, grassmann_n, samples, seed);
}

// naturality square: f_0((int omega)_A(n...)) = (int omega)_B(N_f n...)
inline bool naturality_holds(const Cochain& omega, const GrassmannHom& f,
                             const std::vector<APoint>& args) {
    SuperCochain F = super_integrate(omega);
    GrassmannElement lhs = f.apply(F.eval(args));
    std::vector<APoint> mapped;
    for (const auto& a : args) mapped.push_back(apply_hom(f, a));
    GrassmannElement rhs = F.eval(mapped);
    return lhs == rhs;
}

// first-order equivariance: the coefficient of epsilon in
// (int omega)((1 + eps M) n...) vanishes for omega invariant under the even
// derivation M (the generator acting on the algebra basis)
inline bool infinitesimal_invariance_holds(const Cochain& omega, const RatMatrix& m,
                                           const std::vector<APoint>& args) {
    using REps = Poly<GrassmannElement>;
    const LieSuperalgebra* g = omega.parent_ptr();
    const int eps = kMaxTVars;   // one formal variable beyond the cube range
    std::vector<GroupElement<REps>> lifted;
    for (const auto& a : args) {
        std::vector<REps> coords(g->dim());
        for (int i = 0; i < g->dim(); ++i) {
            REps c{a.coef[i]};
            GrassmannElement shift(a.A);
            for (int j = 0; j < g->dim(); ++j)
                if (!m.at(i, j).is_zero()) shift = shift + scale(a.coef[j], m.at(i, j));
            if (!shift.is_zero()) {
                REps e = REps::variable(eps) * REps{shift};
                c = c + e;
            }
            coords[i] = std::move(c);
        }
        lifted.push_back(GroupElement<REps>(g, std::move(coords)));
    }
    REps value = integrate_cochain_at(omega, lifted);
    return value.coefficient({{eps, 1}}).is_zero();
}

} // namespace slim
