#pragma once

// Symbolic integration of Lie algebra cochains on 2-step nilpotent
// exponential groups into group cochains, and the differentiation map back.
//
// Group elements are Lie algebra elements under exp; multiplication is
// exp(X) exp(Y) = exp(X + Y + 1/2 [X,Y]). A p-tuple of group elements spans a
// p-simplex parameterized on the unit cube through
//     <g_0, ..., g_p>(t) = g_0 exp(t_1 Z(X_1, t_2 Z(X_2, ... t_p X_p))),
// exp(X_i) = g_{i-1}^{-1} g_i, and integrating a left-translated cochain over
// that cube gives the group cochain
//     (int omega)(g_1..g_p) = integral of omega on the translated partials
//     of the exponent of <1, g_1, g_1 g_2, ..., g_1...g_p>,
// each partial translated to the identity as dE_i - 1/2 [E, dE_i]. Monomials
// t^a integrate to prod 1/(a_i + 1); everything stays exact.
//
// The engine is generic over the coefficient ring R. Brackets of R-valued
// coordinates multiply coefficients in reversed order, matching the A-point
// convention on superalgebras; over commutative rings this changes nothing.
// Symbolic group cochains (polynomials in the coordinates of the arguments)
// are the R = Poly<Rat> instance and require a purely even algebra.

#include "slim/cohomology.hpp"
#include "slim/polynomial.hpp"
#include "slim/rational.hpp"
#include "slim/superalgebra.hpp"

#include <map>
#include <memory>
#include <vector>

namespace slim {

constexpr int kMaxTVars = 16;
inline int t_var(int i) { return i; }
inline int x_var(int arg, int label, int dim) { return kMaxTVars + arg * dim + label; }

// --- elements over a ring -----------------------------------------------------

// [x, y] with coefficients multiplied in reversed order: sum (y_j x_i) c_ij^k
template <class R>
std::vector<R> bracket_reversed(const LieSuperalgebra& g, const std::vector<R>& x,
                                const std::vector<R>& y) {
    std::vector<R> out(g.dim(), R(0));
    for (int i = 0; i < g.dim(); ++i) {
        using slim::is_zero;
        if (is_zero(x[i])) continue;
        for (int j = 0; j < g.dim(); ++j) {
            if (is_zero(y[j])) continue;
            R prod = y[j] * x[i];
            for (const auto& [k, c] : g.bracket_basis(i, j)) out[k] = out[k] + scale(prod, c);
        }
    }
    return out;
}

template <class R>
struct GroupElement {
    const LieSuperalgebra* g = nullptr;
    std::vector<R> x;   // exp(X) coordinates on the algebra basis

    GroupElement() = default;
    GroupElement(const LieSuperalgebra* alg, std::vector<R> coords)
        : g(alg), x(std::move(coords)) {
        if (static_cast<int>(x.size()) != g->dim()) throw error("GroupElement: coordinate count");
    }
    static GroupElement identity(const LieSuperalgebra* alg) {
        return GroupElement(alg, std::vector<R>(alg->dim(), R(0)));
    }
    GroupElement inverse() const {
        GroupElement r = *this;
        for (auto& c : r.x) c = R(0) - c;
        return r;
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.g == b.g && a.x == b.x;
    }
};

// Z(X, Y) = X + Y + 1/2 [X,Y] on coordinates
template <class R>
std::vector<R> bch2(const LieSuperalgebra& g, const std::vector<R>& x, const std::vector<R>& y) {
    std::vector<R> br = bracket_reversed(g, x, y);
    std::vector<R> out(g.dim(), R(0));
    for (int i = 0; i < g.dim(); ++i) out[i] = x[i] + y[i] + scale(br[i], Rat(1, 2));
    return out;
}

template <class R>
GroupElement<R> operator*(const GroupElement<R>& a, const GroupElement<R>& b) {
    if (a.g != b.g) throw error("group mul: parent mismatch");
    return GroupElement<R>(a.g, bch2(*a.g, a.x, b.x));
}

// exp(X + Y) = exp(X) exp(Y - 1/2 [X,Y]): returns the pair of exponents
template <class R>
std::pair<std::vector<R>, std::vector<R>> zassenhaus_split(const LieSuperalgebra& g,
                                                           const std::vector<R>& x,
                                                           const std::vector<R>& y) {
    std::vector<R> br = bracket_reversed(g, x, y);
    std::vector<R> second(g.dim(), R(0));
    for (int i = 0; i < g.dim(); ++i) second[i] = y[i] - scale(br[i], Rat(1, 2));
    return {x, second};
}

// --- Lie-algebra-valued polynomials ---------------------------------------------

template <class R>
struct LiePoly {
    const LieSuperalgebra* g = nullptr;
    std::vector<Poly<R>> comp;

    LiePoly() = default;
    explicit LiePoly(const LieSuperalgebra* alg) : g(alg), comp(alg->dim()) {}

    static LiePoly constant(const LieSuperalgebra* alg, const std::vector<R>& coords) {
        LiePoly r(alg);
        for (int i = 0; i < alg->dim(); ++i)
            if (!is_zero_coeff(coords[i])) r.comp[i] = Poly<R>(coords[i]);
        return r;
    }

    LiePoly scaled_by_var(int var) const {
        LiePoly r(g);
        Poly<R> t = Poly<R>::variable(var);
        for (int i = 0; i < g->dim(); ++i)
            if (!comp[i].is_zero()) r.comp[i] = t * comp[i];
        return r;
    }

    friend LiePoly operator+(const LiePoly& a, const LiePoly& b) {
        LiePoly r(a.g);
        for (int i = 0; i < a.g->dim(); ++i) r.comp[i] = a.comp[i] + b.comp[i];
        return r;
    }
    friend LiePoly operator-(const LiePoly& a, const LiePoly& b) {
        LiePoly r(a.g);
        for (int i = 0; i < a.g->dim(); ++i) r.comp[i] = a.comp[i] - b.comp[i];
        return r;
    }
    friend bool operator==(const LiePoly& a, const LiePoly& b) {
        return a.g == b.g && a.comp == b.comp;
    }

private:
    static bool is_zero_coeff(const R& c) {
        using slim::is_zero;
        return is_zero(c);
    }
};

// bracket with the reversed coefficient rule, componentwise over polynomials
template <class R>
LiePoly<R> lie_bracket(const LiePoly<R>& x, const LiePoly<R>& y) {
    const LieSuperalgebra& g = *x.g;
    LiePoly<R> out(x.g);
    for (int i = 0; i < g.dim(); ++i) {
        if (x.comp[i].is_zero()) continue;
        for (int j = 0; j < g.dim(); ++j) {
            if (y.comp[j].is_zero()) continue;
            Poly<R> prod = y.comp[j] * x.comp[i];
            for (const auto& [k, c] : g.bracket_basis(i, j))
                out.comp[k] = out.comp[k] + scale(prod, c);
        }
    }
    return out;
}

template <class R>
LiePoly<R> bch2(const LiePoly<R>& x, const LiePoly<R>& y) {
    LiePoly<R> br = lie_bracket(x, y);
    LiePoly<R> out = x + y;
    for (int i = 0; i < x.g->dim(); ++i)
        out.comp[i] = out.comp[i] + scale(br.comp[i], Rat(1, 2));
    return out;
}

// --- the cube parameterization ---------------------------------------------------

inline void require_two_step(const LieSuperalgebra& g, const char* who) {
    if (!g.two_step_nilpotent()) throw error(std::string(who) + ": algebra is not 2-step nilpotent");
}

// exponent E(t_1..t_p) with exp(E) = g_0 exp(t_1 Z(X_1, t_2 Z(X_2, ... t_p X_p))),
// where exp(X_i) = g_{i-1}^{-1} g_i
template <class R>
LiePoly<R> cube_exponent(const std::vector<GroupElement<R>>& vertices) {
    if (vertices.empty()) throw error("cube_exponent: empty vertex list");
    const LieSuperalgebra* g = vertices[0].g;
    require_two_step(*g, "cube_exponent");
    const int p = static_cast<int>(vertices.size()) - 1;
    if (p > kMaxTVars) throw error("cube_exponent: too many cube variables");

    LiePoly<R> inner(g);
    for (int i = p; i >= 1; --i) {
        std::vector<R> xi = bch2(*g, vertices[i - 1].inverse().x, vertices[i].x);
        LiePoly<R> Xi = LiePoly<R>::constant(g, xi);
        inner = (i == p) ? Xi : bch2(Xi, inner);
        inner = inner.scaled_by_var(t_var(i - 1));
    }
    if (!vertices[0].x.empty()) {
        LiePoly<R> X0 = LiePoly<R>::constant(g, vertices[0].x);
        inner = bch2(X0, inner);
    }
    return inner;
}

// left-translated partial derivatives dE_i - 1/2 [E, dE_i], one per variable
template <class R>
std::vector<LiePoly<R>> translated_partials(const LiePoly<R>& e, int p) {
    require_two_step(*e.g, "translated_partials");
    std::vector<LiePoly<R>> out;
    for (int v = 0; v < p; ++v) {
        LiePoly<R> de(e.g);
        for (int i = 0; i < e.g->dim(); ++i) de.comp[i] = e.comp[i].derivative(t_var(v));
        LiePoly<R> corr = lie_bracket(e, de);
        for (int i = 0; i < e.g->dim(); ++i)
            de.comp[i] = de.comp[i] - scale(corr.comp[i], Rat(1, 2));
        out.push_back(std::move(de));
    }
    return out;
}

// --- evaluating cochains on Lie-polynomial arguments ------------------------------
//
// omega_R(P_1..P_p) = sum over ordered label tuples of
//   (P_p[j_p] ... P_1[j_1]) * omega(e_{j_1}, ..., e_{j_p}),
// the A-point evaluation rule; over commutative rings the order is immaterial.

template <class R>
Poly<R> eval_cochain(const Cochain& omega, const std::vector<LiePoly<R>>& args) {
    const LieSuperalgebra& g = omega.parent();
    if (static_cast<int>(args.size()) != omega.level()) throw error("eval_cochain: arity");
    Poly<R> total;
    omega.for_each([&](const std::vector<int>& mono, const Rat& value) {
        std::vector<int> order = mono;   // sorted; iterate distinct rearrangements
        do {
            // chi sign relating omega(order) to the stored canonical value
            std::vector<int> copy = order;
            int chi = sort_labels_chi(copy, [&](int l) { return g.parity_bit(l); });
            if (chi == 0) continue;
            Poly<R> acc;
            bool dead = false;
            for (size_t r = 0; r < order.size(); ++r) {
                const Poly<R>& f = args[r].comp[order[r]];
                if (f.is_zero()) {
                    dead = true;
                    break;
                }
                acc = (r == 0) ? f : f * acc;   // reversed: later arguments on the left
            }
            if (dead) continue;
            total = total + scale(acc, chi > 0 ? value : -value);
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return total;
}

// (int omega)(g_1..g_p) evaluated over the coefficient ring R; the result is
// constant in the cube variables once they are integrated out
template <class R>
R integrate_cochain_at(const Cochain& omega, const std::vector<GroupElement<R>>& args) {
    const LieSuperalgebra* g = omega.parent_ptr();
    const int p = omega.level();
    if (static_cast<int>(args.size()) != p) throw error("integrate_cochain_at: arity");
    if (p == 0) throw error("integrate_cochain_at: level-0 cochain is constant");
    std::vector<GroupElement<R>> vertices{GroupElement<R>::identity(g)};
    for (const auto& a : args) vertices.push_back(vertices.back() * a);
    LiePoly<R> e = cube_exponent(vertices);
    Poly<R> integrand = eval_cochain(omega, translated_partials(e, p));
    Poly<R> integrated = integrand.integrate_unit([](int v) { return v < kMaxTVars; });
    if (!integrated.is_constant()) throw error("integrate_cochain_at: residual cube variables");
    return integrated.constant_term();
}

// --- symbolic group cochains -------------------------------------------------------

// A level-p group cochain stored as an exact polynomial in the coordinates
// x(arg, label) of the logarithms of its arguments. Requires an even algebra.
struct GroupCochain {
    const LieSuperalgebra* g = nullptr;
    int level = 0;
    bool homogeneous = false;   // argument blocks: level (+1 when homogeneous)
    RatPoly poly;

    int arg_count() const { return level + (homogeneous ? 1 : 0); }
};

inline void require_even(const LieSuperalgebra& g, const char* who) {
    if (g.basis.odd_dim() != 0)
        throw error(std::string(who) + ": symbolic group cochains need a purely even algebra");
}

// argument block r as a group element with variable coordinates
inline GroupElement<RatPoly> symbolic_argument(const LieSuperalgebra* g, int r) {
    std::vector<RatPoly> coords;
    for (int l = 0; l < g->dim(); ++l)
        coords.push_back(RatPoly::variable(x_var(r, l, g->dim())));
    return GroupElement<RatPoly>(g, std::move(coords));
}

// int omega as a symbolic cochain
inline GroupCochain integrate_cochain(const Cochain& omega) {
    const LieSuperalgebra* g = omega.parent_ptr();
    require_even(*g, "integrate_cochain");
    require_two_step(*g, "integrate_cochain");
    const int p = omega.level();
    GroupCochain f{g, p, false, {}};
    if (p == 0) throw error("integrate_cochain: level-0 cochains integrate to themselves");
    std::vector<GroupElement<RatPoly>> args;
    for (int r = 0; r < p; ++r) args.push_back(symbolic_argument(g, r));
    f.poly = integrate_cochain_at(omega, args);
    return f;
}

// evaluation of a symbolic cochain at group elements with coordinates in any
// commutative ring expressible as RatPoly substitution targets
inline Rat eval_group_cochain(const GroupCochain& f, const std::vector<GroupElement<Rat>>& args) {
    if (static_cast<int>(args.size()) != f.arg_count()) throw error("eval_group_cochain: arity");
    Rat total(0);
    for (const auto& [mono, coef] : f.poly.terms()) {
        Rat term = coef;
        for (const auto& [v, e] : mono) {
            int arg = (v - kMaxTVars) / f.g->dim();
            int label = (v - kMaxTVars) % f.g->dim();
            for (int rep = 0; rep < e; ++rep) term = term * args[arg].x[label];
        }
        total += term;
    }
    return total;
}

// symbolic substitution g_r -> images[r] (each image a polynomial coordinate vector)
inline RatPoly substitute_arguments(const LieSuperalgebra* g, const RatPoly& poly,
                                    const std::vector<std::vector<RatPoly>>& images) {
    std::map<int, RatPoly> map;
    for (size_t r = 0; r < images.size(); ++r)
        for (int l = 0; l < g->dim(); ++l) map[x_var(int(r), l, g->dim())] = images[r][l];
    return poly.substitute(map);
}

// the inhomogeneous group coboundary
// df(g_1..g_{p+1}) = f(g_2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{p+1} f(g_1..g_p)
inline GroupCochain group_coboundary(const GroupCochain& f) {
    if (f.homogeneous) throw error("group_coboundary: expects an inhomogeneous cochain");
    const LieSuperalgebra* g = f.g;
    const int p = f.level;
    const int dim = g->dim();
    auto arg_coords = [&](int r) {
        std::vector<RatPoly> c;
        for (int l = 0; l < dim; ++l) c.push_back(RatPoly::variable(x_var(r, l, dim)));
        return c;
    };

    GroupCochain out{g, p + 1, false, {}};
    // drop-first term
    {
        std::vector<std::vector<RatPoly>> images;
        for (int r = 0; r < p; ++r) images.push_back(arg_coords(r + 1));
        out.poly = out.poly + substitute_arguments(g, f.poly, images);
    }
    // merged terms
    for (int i = 1; i <= p; ++i) {
        std::vector<std::vector<RatPoly>> images;
        for (int r = 0; r < p; ++r) {
            if (r + 1 < i) images.push_back(arg_coords(r));
            else if (r + 1 == i) {
                // coordinates of g_i g_{i+1} by BCH
                std::vector<RatPoly> a = arg_coords(i - 1), b = arg_coords(i);
                images.push_back(bch2(*g, a, b));
            } else images.push_back(arg_coords(r + 1));
        }
        RatPoly term = substitute_arguments(g, f.poly, images);
        out.poly = (i % 2 == 0) ? out.poly + term : out.poly - term;
    }
    // drop-last term
    {
        std::vector<std::vector<RatPoly>> images;
        for (int r = 0; r < p; ++r) images.push_back(arg_coords(r));
        RatPoly term = substitute_arguments(g, f.poly, images);
        out.poly = (p % 2 == 0) ? out.poly - term : out.poly + term;
    }
    return out;
}

// homogeneous <-> inhomogeneous pictures:
// F(g_0..g_p) = f(g_0^{-1} g_1, ..., g_{p-1}^{-1} g_p) and
// f(g_1..g_p) = F(1, g_1, g_1 g_2, ..., g_1...g_p)
inline GroupCochain to_homogeneous(const GroupCochain& f) {
    if (f.homogeneous) return f;
    const LieSuperalgebra* g = f.g;
    const int dim = g->dim();
    std::vector<std::vector<RatPoly>> images;
    for (int r = 0; r < f.level; ++r) {
        std::vector<RatPoly> prev, next;
        for (int l = 0; l < dim; ++l) {
            prev.push_back(-RatPoly::variable(x_var(r, l, dim)));
            next.push_back(RatPoly::variable(x_var(r + 1, l, dim)));
        }
        images.push_back(bch2(*g, prev, next));
    }
    return GroupCochain{g, f.level, true, substitute_arguments(g, f.poly, images)};
}

inline GroupCochain to_inhomogeneous(const GroupCochain& F) {
    if (!F.homogeneous) return F;
    const LieSuperalgebra* g = F.g;
    const int dim = g->dim();
    std::vector<std::vector<RatPoly>> images;
    std::vector<RatPoly> running(dim, RatPoly());   // the identity
    images.push_back(running);
    for (int r = 1; r <= F.level; ++r) {
        std::vector<RatPoly> next;
        for (int l = 0; l < dim; ++l) next.push_back(RatPoly::variable(x_var(r - 1, l, dim)));
        running = bch2(*g, running, next);
        images.push_back(running);
    }
    return GroupCochain{g, F.level, false, substitute_arguments(g, F.poly, images)};
}

// --- the differentiation map ---------------------------------------------------
//
// DF on a basis tuple is the alternating sum over permutations of the
// coefficient of the multilinear monomial x(0, b_{s(0)}) ... x(p-1, b_{s(p-1)});
// the normalization (no 1/p!) is pinned by D(int omega) = omega.

inline Cochain differentiate_cochain(const GroupCochain& f) {
    if (f.homogeneous) throw error("differentiate_cochain: expects the inhomogeneous picture");
    const LieSuperalgebra* g = f.g;
    require_even(*g, "differentiate_cochain");
    const int p = f.level;
    Cochain out(g, p);
    enumerate_monomials(*g, p, [&](const std::vector<int>& labels) {
        std::vector<int> perm(p);
        for (int i = 0; i < p; ++i) perm[i] = i;
        Rat total(0);
        do {
            int sgn = 1;
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j)
                    if (perm[i] > perm[j]) sgn = -sgn;
            Monomial m;
            for (int slot = 0; slot < p; ++slot)
                m.push_back({x_var(slot, labels[perm[slot]], g->dim()), 1});
            std::sort(m.begin(), m.end());
            Rat c = f.poly.coefficient(m);
            if (!c.is_zero()) total += sgn > 0 ? c : -c;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!total.is_zero()) out.add_term(labels, total);
    });
    return out;
}

// --- the Heisenberg Lie 2-group ---------------------------------------------------

struct Heisenberg2Group {
    std::shared_ptr<const LieSuperalgebra> algebra;   // address-stable parent
    Cochain gamma;
    GroupCochain a;   // int gamma, the associator 3-cocycle
};

// Packages (H, R, int gamma) after verifying the pentagon identity
//   a(g2,g3,g4) - a(g1g2,g3,g4) + a(g1,g2g3,g4) - a(g1,g2,g3g4) + a(g1,g2,g3) = 0
// on seeded random quadruples, plus the normalization a(.., 1, ..) = 0.
inline Heisenberg2Group heisenberg_2group(int samples = 100, uint64_t seed = 0xbead) {
    auto h = std::make_shared<const LieSuperalgebra>(build_heisenberg());
    Cochain gamma = make_gamma(h.get());
    GroupCochain a = integrate_cochain(gamma);

    Rng rng(seed);
    auto rand_g = [&]() {
        std::vector<Rat> c(3);
        for (auto& v : c) v = rng.rat();
        return GroupElement<Rat>(h.get(), std::move(c));
    };
    auto a_at = [&](const GroupElement<Rat>& x, const GroupElement<Rat>& y,
                    const GroupElement<Rat>& z) { return eval_group_cochain(a, {x, y, z}); };
    for (int s = 0; s < samples; ++s) {
        GroupElement<Rat> g1 = rand_g(), g2 = rand_g(), g3 = rand_g(), g4 = rand_g();
        Rat lhs = a_at(g1, g2, g3 * g4) + a_at(g1 * g2, g3, g4);
        Rat rhs = a_at(g2, g3, g4) + a_at(g1, g2 * g3, g4) + a_at(g1, g2, g3);
        if (lhs != rhs)
            throw error("heisenberg_2group: pentagon identity failed at sample " +
                        std::to_string(s));
        GroupElement<Rat> one = GroupElement<Rat>::identity(h.get());
        if (a_at(one, g1, g2) != Rat(0) || a_at(g1, one, g2) != Rat(0) ||
            a_at(g1, g2, one) != Rat(0))
            throw error("heisenberg_2group: normalization failed");
    }
    return Heisenberg2Group{h, std::move(gamma), std::move(a)};
}

} // namespace slim
