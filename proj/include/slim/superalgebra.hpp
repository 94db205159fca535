#pragma once

// Finite-dimensional Lie superalgebras as parity-labeled structure constants,
// plus validated builders for the algebras the library works with: the
// supertranslation algebras T = V (+) S, the Poincare superalgebras
// so ⋉ T, the Heisenberg algebra, and so(n) with its trace form.
//
// Basis convention: even labels precede odd labels. For supertranslations the
// even block is the vector coordinates in the order (t, x, y_0, ..., [a]) and
// the odd block is the spinor real coordinates; structure constants are then
// reproducible across runs and serializations.

#include "slim/rational.hpp"
#include "slim/rng.hpp"
#include "slim/spacetime.hpp"

#include <string>
#include <utility>
#include <vector>

namespace slim {

enum class Parity : uint8_t { even = 0, odd = 1 };

struct SuperBasis {
    std::vector<std::string> labels;
    std::vector<Parity> parity;

    int dim() const { return static_cast<int>(labels.size()); }
    int even_dim() const {
        int n = 0;
        for (auto p : parity) n += (p == Parity::even);
        return n;
    }
    int odd_dim() const { return dim() - even_dim(); }

    void check() const {
        if (labels.size() != parity.size()) throw error("SuperBasis: size mismatch");
        bool seen_odd = false;
        for (auto p : parity) {
            if (p == Parity::odd) seen_odd = true;
            else if (seen_odd) throw error("SuperBasis: even labels must precede odd labels");
        }
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j]) throw error("SuperBasis: duplicate label " + labels[i]);
    }
};

using SparseVec = std::vector<std::pair<int, Rat>>;   // sorted by index

namespace detail {
inline void sparse_add(SparseVec& v, int idx, const Rat& val) {
    if (val.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) {
        it->second += val;
        if (it->second.is_zero()) v.erase(it);
    } else {
        v.insert(it, {idx, val});
    }
}
} // namespace detail

struct LieSuperalgebra {
    std::string name;
    SuperBasis basis;
    // c[i * dim + j] = components of [e_i, e_j]
    std::vector<SparseVec> c;

    explicit LieSuperalgebra(std::string nm, SuperBasis b)
        : name(std::move(nm)), basis(std::move(b)) {
        basis.check();
        c.assign(size_t(basis.dim()) * basis.dim(), {});
    }

    int dim() const { return basis.dim(); }
    Parity parity(int i) const { return basis.parity[i]; }
    int parity_bit(int i) const { return basis.parity[i] == Parity::odd ? 1 : 0; }

    const SparseVec& bracket_basis(int i, int j) const { return c[size_t(i) * dim() + j]; }

    // sets [e_i, e_j] and fills [e_j, e_i] by graded antisymmetry
    void set_bracket(int i, int j, SparseVec v) {
        const Rat sign = (parity_bit(i) && parity_bit(j)) ? Rat(1) : Rat(-1);
        SparseVec w = v;
        for (auto& p : w) p.second = sign * p.second;
        c[size_t(i) * dim() + j] = std::move(v);
        if (i != j) c[size_t(j) * dim() + i] = std::move(w);
    }

    template <class R>
    std::vector<R> bracket(const std::vector<R>& x, const std::vector<R>& y) const {
        if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
            throw error("bracket: coefficient count");
        std::vector<R> out(dim(), R(0));
        for (int i = 0; i < dim(); ++i) {
            using slim::is_zero;
            if (is_zero(x[i])) continue;
            for (int j = 0; j < dim(); ++j) {
                if (is_zero(y[j])) continue;
                for (const auto& [k, coef] : bracket_basis(i, j))
                    out[k] = out[k] + x[i] * y[j] * R(coef);
            }
        }
        return out;
    }

    bool two_step_nilpotent() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (const auto& [k, coef] : bracket_basis(i, j)) {
                    (void)coef;
                    for (int l = 0; l < dim(); ++l)
                        if (!bracket_basis(k, l).empty() || !bracket_basis(l, k).empty())
                            return false;
                }
        return true;
    }
};

// specialization used everywhere: Rat coefficients
template <>
inline std::vector<Rat> LieSuperalgebra::bracket<Rat>(const std::vector<Rat>& x,
                                                      const std::vector<Rat>& y) const {
    if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
        throw error("bracket: coefficient count");
    std::vector<Rat> out(dim(), Rat(0));
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Rat xy = x[i] * y[j];
            for (const auto& [k, coef] : bracket_basis(i, j)) out[k] += xy * coef;
        }
    }
    return out;
}

// --- validation -------------------------------------------------------------

struct ValidationReport {
    bool ok = true;
    std::string failure;   // names the failing pair/triple when !ok
    long long triples_checked = 0;
    bool exhaustive = true;
};

struct ValidateOptions {
    long long exhaustive_limit = 2'000'000;   // max triple count before sampling
    int samples = 20'000;
    uint64_t seed = 0x5eed;
};

inline ValidationReport validate(const LieSuperalgebra& g, ValidateOptions opt = {}) {
    ValidationReport rep;
    const int n = g.dim();

    // parity consistency and graded antisymmetry
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, coef] : g.bracket_basis(i, j)) {
                if ((g.parity_bit(i) + g.parity_bit(j)) % 2 != g.parity_bit(k)) {
                    rep.ok = false;
                    rep.failure = "parity violation at [" + g.basis.labels[i] + "," +
                                  g.basis.labels[j] + "] -> " + g.basis.labels[k];
                    return rep;
                }
                (void)coef;
            }
            // antisymmetry: c_ij^k = -(-1)^{|i||j|} c_ji^k
            SparseVec expect = g.bracket_basis(j, i);
            const Rat sign = (g.parity_bit(i) && g.parity_bit(j)) ? Rat(1) : Rat(-1);
            for (auto& p : expect) p.second = sign * p.second;
            if (expect != g.bracket_basis(i, j)) {
                rep.ok = false;
                rep.failure = "graded antisymmetry fails at (" + g.basis.labels[i] + "," +
                              g.basis.labels[j] + ")";
                return rep;
            }
        }

    // graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    auto jacobi_defect_zero = [&](int x, int y, int z) -> bool {
        SparseVec defect;
        for (const auto& [w, cw] : g.bracket_basis(y, z))
            for (const auto& [k, ck] : g.bracket_basis(x, w))
                detail::sparse_add(defect, k, cw * ck);
        for (const auto& [w, cw] : g.bracket_basis(x, y))
            for (const auto& [k, ck] : g.bracket_basis(w, z))
                detail::sparse_add(defect, k, -(cw * ck));
        const Rat s = (g.parity_bit(x) && g.parity_bit(y)) ? Rat(-1) : Rat(1);
        for (const auto& [w, cw] : g.bracket_basis(x, z))
            for (const auto& [k, ck] : g.bracket_basis(y, w))
                detail::sparse_add(defect, k, -(s * cw * ck));
        return defect.empty();
    };

    const long long total = 1LL * n * n * n;
    if (total <= opt.exhaustive_limit) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    ++rep.triples_checked;
                    if (!jacobi_defect_zero(x, y, z)) {
                        rep.ok = false;
                        rep.failure = "Jacobi fails at (" + g.basis.labels[x] + "," +
                                      g.basis.labels[y] + "," + g.basis.labels[z] + ")";
                        return rep;
                    }
                }
    } else {
        rep.exhaustive = false;
        Rng rng(opt.seed);
        // cover every parity pattern, then fill with uniform samples
        std::vector<int> evens, odds;
        for (int i = 0; i < n; ++i)
            (g.parity_bit(i) ? odds : evens).push_back(i);
        auto pick = [&](int bit) -> int {
            const auto& pool = bit ? odds : evens;
            return pool.empty() ? -1 : pool[rng.below(pool.size())];
        };
        for (int pattern = 0; pattern < 8; ++pattern) {
            for (int rep_i = 0; rep_i < opt.samples / 16; ++rep_i) {
                int x = pick(pattern & 1), y = pick((pattern >> 1) & 1), z = pick((pattern >> 2) & 1);
                if (x < 0 || y < 0 || z < 0) continue;
                ++rep.triples_checked;
                if (!jacobi_defect_zero(x, y, z)) {
                    rep.ok = false;
                    rep.failure = "Jacobi fails at (" + g.basis.labels[x] + "," +
                                  g.basis.labels[y] + "," + g.basis.labels[z] + ")";
                    return rep;
                }
            }
        }
        for (int s = 0; s < opt.samples / 2; ++s) {
            int x = int(rng.below(n)), y = int(rng.below(n)), z = int(rng.below(n));
            ++rep.triples_checked;
            if (!jacobi_defect_zero(x, y, z)) {
                rep.ok = false;
                rep.failure = "Jacobi fails at (" + g.basis.labels[x] + "," +
                              g.basis.labels[y] + "," + g.basis.labels[z] + ")";
                return rep;
            }
        }
    }
    return rep;
}

// --- builders ----------------------------------------------------------------

enum class Flavor : uint8_t { k2, k3 };   // spacetime dimension k+2 or k+3

inline std::vector<std::string> vector_labels(Algebra tag, Flavor f) {
    std::vector<std::string> l{"t", "x"};
    for (int i = 0; i < dim(tag); ++i) l.push_back("y" + std::to_string(i));
    if (f == Flavor::k3) l.push_back("a");
    return l;
}

// T = V (+) S with the only nonzero bracket the symmetric spinor-to-vector map.
inline LieSuperalgebra build_supertranslation(int k, Flavor flavor) {
    const Algebra tag = algebra_from_dim(k);
    const int vdim = k + (flavor == Flavor::k2 ? 2 : 3);
    const int sdim = (flavor == Flavor::k2 ? 2 : 4) * k;

    SuperBasis b;
    b.labels = vector_labels(tag, flavor);
    b.parity.assign(vdim, Parity::even);
    for (int i = 0; i < sdim; ++i) {
        b.labels.push_back("s" + std::to_string(i));
        b.parity.push_back(Parity::odd);
    }

    LieSuperalgebra g("supertranslation(" + std::to_string(vdim - 1) + ",1)", std::move(b));

    if (flavor == Flavor::k2) {
        auto sb = spinor_basis_k2(tag, Chirality::plus);
        for (int i = 0; i < sdim; ++i)
            for (int j = i; j < sdim; ++j) {
                auto v = coords(bracket_spinors(sb[i], sb[j]));
                SparseVec sv;
                for (int m = 0; m < vdim; ++m)
                    if (!v[m].is_zero()) sv.push_back({m, v[m]});
                g.set_bracket(vdim + i, vdim + j, std::move(sv));
            }
    } else {
        auto sb = spinor_basis_k3(tag);
        for (int i = 0; i < sdim; ++i)
            for (int j = i; j < sdim; ++j) {
                auto v = coords(bracket_big(sb[i], sb[j]));
                SparseVec sv;
                for (int m = 0; m < vdim; ++m)
                    if (!v[m].is_zero()) sv.push_back({m, v[m]});
                g.set_bracket(vdim + i, vdim + j, std::move(sv));
            }
    }
    return g;
}

namespace detail {

struct PoincareParts {
    std::vector<RatMatrix> rho;     // per so-generator, on vector coordinates
    std::vector<RatMatrix> sigma;   // per so-generator, on spinor coordinates
    std::vector<Rat> eta;           // metric diagonal
    std::vector<std::pair<int, int>> pairs;
};

inline PoincareParts poincare_parts(int k, Flavor flavor) {
    const Algebra tag = algebra_from_dim(k);
    PoincareParts parts;
    if (flavor == Flavor::k2) {
        auto vb = vector_basis_k2(tag);
        const int n = static_cast<int>(vb.size());
        for (int a = 0; a < n; ++a) parts.eta.push_back(minkowski_g(vb[a], vb[a]));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto gen = lorentz_generator(vb[a], vb[b]);
                parts.rho.push_back(gen.rho);
                parts.sigma.push_back(gen.sigma_plus);
                parts.pairs.push_back({a, b});
            }
    } else {
        auto vb = vector_basis_k3(tag);
        const int n = static_cast<int>(vb.size());
        for (int a = 0; a < n; ++a) parts.eta.push_back(minkowski_h(vb[a], vb[a]));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto gen = lorentz_generator(vb[a], vb[b]);
                parts.rho.push_back(gen.rho);
                parts.sigma.push_back(gen.sigma);
                parts.pairs.push_back({a, b});
            }
    }
    return parts;
}

// expand an so-algebra element given as a matrix over the disjointly-supported
// basis rho(e_a ^ e_b); throws if the matrix is not in the span
inline SparseVec expand_in_so_basis(const RatMatrix& m, const PoincareParts& parts) {
    SparseVec out;
    RatMatrix rebuilt(m.rows, m.cols);
    for (size_t g = 0; g < parts.pairs.size(); ++g) {
        auto [a, b] = parts.pairs[g];
        Rat coef = m.at(a, b) / parts.eta[b];
        if (coef.is_zero()) continue;
        out.push_back({static_cast<int>(g), coef});
        rebuilt = rebuilt + coef * parts.rho[g];
    }
    if (!(rebuilt == m)) throw error("expand_in_so_basis: matrix not in so span");
    return out;
}

} // namespace detail

// Poincare superalgebra so(k+1,1) ⋉ T (or so(k+2,1) ⋉ T): basis order is
// Lorentz generators L{a}{b}, then vector labels, then spinor labels.
inline LieSuperalgebra build_poincare(int k, Flavor flavor) {
    const LieSuperalgebra t = build_supertranslation(k, flavor);
    auto parts = detail::poincare_parts(k, flavor);
    const int vdim = t.basis.even_dim();
    const int sdim = t.basis.odd_dim();
    const int ldim = static_cast<int>(parts.pairs.size());

    SuperBasis b;
    for (auto [a, b2] : parts.pairs) {
        b.labels.push_back("L" + std::to_string(a) + "_" + std::to_string(b2));
        b.parity.push_back(Parity::even);
    }
    for (int i = 0; i < t.dim(); ++i) {
        b.labels.push_back(t.basis.labels[i]);
        b.parity.push_back(t.basis.parity[i]);
    }

    LieSuperalgebra g("siso(" + std::to_string(vdim - 1) + ",1)", std::move(b));

    // [L, L] via matrix commutators expanded in the rho basis
    for (int i = 0; i < ldim; ++i)
        for (int j = i + 1; j < ldim; ++j) {
            RatMatrix comm = parts.rho[i] * parts.rho[j] - parts.rho[j] * parts.rho[i];
            g.set_bracket(i, j, detail::expand_in_so_basis(comm, parts));
        }

    // [L, vector] and [L, spinor]
    for (int i = 0; i < ldim; ++i) {
        for (int m = 0; m < vdim; ++m) {
            SparseVec sv;
            for (int r = 0; r < vdim; ++r)
                if (!parts.rho[i].at(r, m).is_zero()) sv.push_back({ldim + r, parts.rho[i].at(r, m)});
            g.set_bracket(i, ldim + m, std::move(sv));
        }
        for (int m = 0; m < sdim; ++m) {
            SparseVec sv;
            for (int r = 0; r < sdim; ++r)
                if (!parts.sigma[i].at(r, m).is_zero())
                    sv.push_back({ldim + vdim + r, parts.sigma[i].at(r, m)});
            g.set_bracket(i, ldim + vdim + m, std::move(sv));
        }
    }

    // [spinor, spinor] from the supertranslation bracket
    for (int i = 0; i < sdim; ++i)
        for (int j = i; j < sdim; ++j) {
            SparseVec sv;
            for (const auto& [m, coef] : t.bracket_basis(vdim + i, vdim + j))
                sv.push_back({ldim + m, coef});
            g.set_bracket(ldim + vdim + i, ldim + vdim + j, std::move(sv));
        }

    return g;
}

// Heisenberg: [p,q] = z, z central, purely even.
inline LieSuperalgebra build_heisenberg() {
    SuperBasis b;
    b.labels = {"p", "q", "z"};
    b.parity = {Parity::even, Parity::even, Parity::even};
    LieSuperalgebra g("heisenberg", std::move(b));
    g.set_bracket(0, 1, {{2, Rat(1)}});
    return g;
}

// so(n) with basis E_ab (a<b), (E_ab)_{ij} = delta_ai delta_bj - delta_aj delta_bi.
struct SoAlgebra {
    LieSuperalgebra algebra;
    RatMatrix trace_form;   // <X,Y> = tr(XY) on the basis
};

inline SoAlgebra build_so(int n) {
    if (n < 3) throw error("build_so: n >= 3 required");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    const int d = static_cast<int>(pairs.size());

    auto as_matrix = [&](int g) {
        RatMatrix m(n, n);
        m.at(pairs[g].first, pairs[g].second) = Rat(1);
        m.at(pairs[g].second, pairs[g].first) = Rat(-1);
        return m;
    };
    auto expand = [&](const RatMatrix& m) {
        SparseVec out;
        for (int gi = 0; gi < d; ++gi) {
            Rat coef = m.at(pairs[gi].first, pairs[gi].second);
            if (!coef.is_zero()) out.push_back({gi, coef});
        }
        return out;
    };

    SuperBasis b;
    for (auto [a, b2] : pairs) {
        b.labels.push_back("E" + std::to_string(a) + "_" + std::to_string(b2));
        b.parity.push_back(Parity::even);
    }
    SoAlgebra so{LieSuperalgebra("so(" + std::to_string(n) + ")", std::move(b)),
                 RatMatrix(d, d)};
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            RatMatrix comm = as_matrix(i) * as_matrix(j) - as_matrix(j) * as_matrix(i);
            so.algebra.set_bracket(i, j, expand(comm));
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            RatMatrix prod = as_matrix(i) * as_matrix(j);
            Rat tr(0);
            for (int r = 0; r < n; ++r) tr += prod.at(r, r);
            so.trace_form.at(i, j) = tr;
        }
    return so;
}

} // namespace slim
