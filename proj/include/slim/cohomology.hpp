#pragma once

// The Chevalley-Eilenberg complex of a Lie superalgebra with trivial real
// coefficients. Cochains are stored on canonical monomials: label sequences
// sorted ascending, where even labels may not repeat and odd labels may
// (wedge on the even part, symmetric powers on the odd part). Evaluation on
// arbitrary tuples reproduces graded antisymmetry through chi signs.
//
// The coboundary on a p-cochain omega is
//   d omega(X_1..X_{p+1}) = sum_{i<j} (-1)^{i+j} (-1)^{|Xi||Xj|}
//        eps_1^{i-1}(i) eps_1^{j-1}(j) omega([X_i,X_j], ..^i..^j..),
// the trivial-coefficient branch of the superalgebra coboundary formula; on
// a supertranslation algebra it sends (p,q)-forms to (p-1,q+2)-forms.

#include "slim/koszul.hpp"
#include "slim/linalg.hpp"
#include "slim/rational.hpp"
#include "slim/superalgebra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace slim {

namespace detail {

// canonical monomials pack into a uint64: one byte per label, 0xFF padding
inline uint64_t pack_monomial(const std::vector<int>& labels) {
    if (labels.size() > 8) throw error("monomial: level > 8 not supported");
    uint64_t key = ~0ULL;
    for (size_t i = 0; i < labels.size(); ++i) {
        key &= ~(0xFFULL << (8 * i));
        key |= uint64_t(uint8_t(labels[i])) << (8 * i);
    }
    return key;
}

inline std::vector<int> unpack_monomial(uint64_t key, int level) {
    std::vector<int> labels(level);
    for (int i = 0; i < level; ++i) labels[i] = int((key >> (8 * i)) & 0xFF);
    return labels;
}

} // namespace detail

struct Bigrade {
    int p = 0;   // even (vector) slots
    int q = 0;   // odd (spinor) slots
    friend bool operator==(const Bigrade& a, const Bigrade& b) { return a.p == b.p && a.q == b.q; }
};

class Cochain {
public:
    Cochain(const LieSuperalgebra* parent, int level) : parent_(parent), level_(level) {
        if (!parent) throw error("Cochain: null parent");
        if (level < 0) throw error("Cochain: negative level");
        if (parent->dim() > 255) throw error("Cochain: basis too large");
    }

    const LieSuperalgebra& parent() const { return *parent_; }
    const LieSuperalgebra* parent_ptr() const { return parent_; }
    int level() const { return level_; }
    bool empty() const { return coef_.empty(); }
    size_t term_count() const { return coef_.size(); }

    // canonicalizes, so callers may pass labels in any order
    void add_term(std::vector<int> labels, const Rat& value) {
        if (static_cast<int>(labels.size()) != level_) throw error("Cochain::add_term: level");
        if (value.is_zero()) return;
        int sign = sort_labels_chi(labels, [&](int l) { return parent_->parity_bit(l); });
        if (sign == 0) return;
        uint64_t key = detail::pack_monomial(labels);
        auto it = coef_.find(key);
        Rat v = sign > 0 ? value : -value;
        if (it == coef_.end()) {
            coef_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) coef_.erase(it);
        }
    }

    // evaluation on a basis tuple (any order, graded antisymmetry applied)
    Rat eval_basis(std::vector<int> labels) const {
        if (static_cast<int>(labels.size()) != level_) throw error("Cochain::eval_basis: level");
        int sign = sort_labels_chi(labels, [&](int l) { return parent_->parity_bit(l); });
        if (sign == 0) return Rat(0);
        auto it = coef_.find(detail::pack_monomial(labels));
        if (it == coef_.end()) return Rat(0);
        return sign > 0 ? it->second : -it->second;
    }

    // parity of the cochain as a map (defined when all monomials agree)
    std::optional<Parity> parity() const {
        std::optional<Parity> p;
        for (const auto& [key, v] : coef_) {
            (void)v;
            int sum = 0;
            for (int l : detail::unpack_monomial(key, level_)) sum += parent_->parity_bit(l);
            Parity mp = (sum % 2) ? Parity::odd : Parity::even;
            if (!p) p = mp;
            else if (*p != mp) return std::nullopt;
        }
        if (!p) p = Parity::even;   // zero cochain
        return p;
    }

    // bigrades present in the support
    std::vector<Bigrade> support_bigrades() const {
        std::vector<Bigrade> out;
        for (const auto& [key, v] : coef_) {
            (void)v;
            int q = 0;
            for (int l : detail::unpack_monomial(key, level_)) q += parent_->parity_bit(l);
            Bigrade b{level_ - q, q};
            if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& [key, v] : coef_) f(detail::unpack_monomial(key, level_), v);
    }

    friend Cochain operator+(const Cochain& a, const Cochain& b) {
        a.check_compatible(b, "add");
        Cochain r = a;
        for (const auto& [k, v] : b.coef_) {
            auto it = r.coef_.find(k);
            if (it == r.coef_.end()) r.coef_.emplace(k, v);
            else {
                it->second += v;
                if (it->second.is_zero()) r.coef_.erase(it);
            }
        }
        return r;
    }
    friend Cochain operator-(const Cochain& a, const Cochain& b) { return a + (Rat(-1) * b); }
    friend Cochain operator*(const Rat& s, const Cochain& a) {
        Cochain r(a.parent_, a.level_);
        if (s.is_zero()) return r;
        r.coef_ = a.coef_;
        for (auto& [k, v] : r.coef_) v = s * v;
        return r;
    }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.parent_ == b.parent_ && a.level_ == b.level_ && a.coef_ == b.coef_;
    }

private:
    void check_compatible(const Cochain& o, const char* op) const {
        if (parent_ != o.parent_) throw error(std::string("Cochain ") + op + ": parent mismatch");
        if (level_ != o.level_) throw error(std::string("Cochain ") + op + ": level mismatch");
    }

    const LieSuperalgebra* parent_;
    int level_;
    std::unordered_map<uint64_t, Rat> coef_;
};

// visits every canonical monomial of the given level
template <class F>
void enumerate_monomials(const LieSuperalgebra& g, int level, F&& visit) {
    std::vector<int> labels(level);
    std::function<void(int, int)> rec = [&](int slot, int start) {
        if (slot == level) {
            visit(labels);
            return;
        }
        for (int l = start; l < g.dim(); ++l) {
            labels[slot] = l;
            // odd labels may repeat, even labels may not
            rec(slot + 1, g.parity_bit(l) ? l : l + 1);
        }
    };
    rec(0, 0);
    (void)rec;
}

inline long long count_monomials(const LieSuperalgebra& g, int level) {
    // choose(even_dim, p) * multichoose(odd_dim, q) summed over p+q = level
    const int ne = g.basis.even_dim(), no = g.basis.odd_dim();
    auto choose = [](long long n, long long k) -> long long {
        if (k == 0) return 1;
        if (k < 0 || k > n) return 0;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long long total = 0;
    for (int q = 0; q <= level; ++q) total += choose(ne, level - q) * choose(no + q - 1, q);
    return total;
}

// d omega evaluated on one basis tuple (labels strictly canonical or not; the
// formula itself is permutation-covariant so we evaluate verbatim).
inline Rat coboundary_on_tuple(const Cochain& omega, const std::vector<int>& labels) {
    const LieSuperalgebra& g = omega.parent();
    const int n = static_cast<int>(labels.size());
    if (n < 2) return Rat(0);
    std::vector<int> grades(n);
    for (int i = 0; i < n; ++i) grades[i] = g.parity_bit(labels[i]);

    Rat total(0);
    std::vector<int> rest(n - 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const SparseVec& br = g.bracket_basis(labels[i], labels[j]);
            if (br.empty()) continue;
            int sign = ((i + j) % 2 == 0) ? 1 : -1;   // (-1)^{(i+1)+(j+1)}
            if (grades[i] && grades[j]) sign = -sign; // (-1)^{|Xi||Xj|}
            sign *= eps_to_front(grades, i);
            sign *= eps_to_front(grades, j);
            int w = 0;
            for (int r = 0; r < n; ++r)
                if (r != i && r != j) rest[w++] = labels[r];
            for (const auto& [m, c] : br) {
                std::vector<int> args;
                args.reserve(n - 1);
                args.push_back(m);
                args.insert(args.end(), rest.begin(), rest.end());
                Rat v = omega.eval_basis(std::move(args));
                if (!v.is_zero()) total += (sign > 0 ? c : -c) * v;
            }
        }
    }
    return total;
}

// full coboundary as a stored cochain
inline Cochain coboundary(const Cochain& omega) {
    const LieSuperalgebra& g = omega.parent();
    Cochain d(omega.parent_ptr(), omega.level() + 1);
    enumerate_monomials(g, omega.level() + 1, [&](const std::vector<int>& labels) {
        Rat v = coboundary_on_tuple(omega, labels);
        if (!v.is_zero()) d.add_term(labels, v);
    });
    return d;
}

// Same values as coboundary, but support-driven: d omega can only be nonzero
// on monomials obtained from a support monomial by replacing one label with a
// bracketing pair, so only those candidates are evaluated. Preferred when the
// ambient monomial space dwarfs the support.
inline Cochain coboundary_sparse(const Cochain& omega) {
    const LieSuperalgebra& g = omega.parent();
    std::vector<std::vector<std::pair<int, int>>> by_target(g.dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i; j < g.dim(); ++j)
            for (const auto& [m, c] : g.bracket_basis(i, j)) {
                (void)c;
                by_target[m].push_back({i, j});
            }
    std::unordered_map<uint64_t, std::vector<int>> candidates;
    omega.for_each([&](const std::vector<int>& labels, const Rat& v) {
        (void)v;
        for (size_t pos = 0; pos < labels.size(); ++pos)
            for (auto [i, j] : by_target[labels[pos]]) {
                std::vector<int> cand;
                cand.reserve(labels.size() + 1);
                for (size_t r = 0; r < labels.size(); ++r)
                    if (r != pos) cand.push_back(labels[r]);
                cand.push_back(i);
                cand.push_back(j);
                int sign = sort_labels_chi(cand, [&](int l) { return g.parity_bit(l); });
                if (sign == 0) continue;
                candidates.emplace(detail::pack_monomial(cand), cand);
            }
    });
    Cochain d(omega.parent_ptr(), omega.level() + 1);
    for (const auto& [key, labels] : candidates) {
        (void)key;
        Rat v = coboundary_on_tuple(omega, labels);
        if (!v.is_zero()) d.add_term(labels, v);
    }
    return d;
}

// --- the named cocycles -----------------------------------------------------

// alpha(A, psi, phi) = g([psi,phi], A), the (1,2)-form on T = V (+) S+
inline Cochain make_alpha(const LieSuperalgebra* t, int k) {
    const Algebra tag = algebra_from_dim(k);
    const int vdim = k + 2;
    if (t->basis.even_dim() != vdim || t->basis.odd_dim() != 2 * k)
        throw error("make_alpha: expects the supertranslation algebra in dimension k+2");
    auto vb = vector_basis_k2(tag);
    auto sb = spinor_basis_k2(tag, Chirality::plus);
    Cochain a(t, 3);
    for (int m = 0; m < vdim; ++m)
        for (int i = 0; i < 2 * k; ++i)
            for (int j = i; j < 2 * k; ++j) {
                Rat v = minkowski_g(bracket_spinors(sb[i], sb[j]), vb[m]);
                a.add_term({m, vdim + i, vdim + j}, v);
            }
    return a;
}

// beta(A, B, Psi, Phi) = <Psi, (AB - BA) Phi>, the (2,2)-form on T = V (+) S
inline Cochain make_beta(const LieSuperalgebra* t, int k) {
    const Algebra tag = algebra_from_dim(k);
    const int vdim = k + 3;
    if (t->basis.even_dim() != vdim || t->basis.odd_dim() != 4 * k)
        throw error("make_beta: expects the supertranslation algebra in dimension k+3");
    auto vb = vector_basis_k3(tag);
    auto sb = spinor_basis_k3(tag);
    Cochain b(t, 4);
    for (int m = 0; m < vdim; ++m)
        for (int m2 = m + 1; m2 < vdim; ++m2)
            for (int i = 0; i < 4 * k; ++i)
                for (int j = i; j < 4 * k; ++j) {
                    Rat v = star_form(sb[i], sb[j], vb[m], vb[m2]);
                    b.add_term({m, m2, vdim + i, vdim + j}, v);
                }
    return b;
}

// gamma = p* ^ q* ^ z* on the Heisenberg algebra
inline Cochain make_gamma(const LieSuperalgebra* h) {
    if (h->dim() != 3) throw error("make_gamma: expects the Heisenberg algebra");
    Cochain c(h, 3);
    c.add_term({0, 1, 2}, Rat(1));
    return c;
}

// j = <-, [-,-]> on so(n)
inline Cochain make_j(const LieSuperalgebra* so, const RatMatrix& trace_form) {
    const int d = so->dim();
    Cochain c(so, 3);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int e = b + 1; e < d; ++e) {
                Rat v(0);
                for (const auto& [m, coef] : so->bracket_basis(b, e))
                    v += coef * trace_form.at(a, m);
                c.add_term({a, b, e}, v);
            }
    return c;
}

// --- exactness decisions ------------------------------------------------------

struct ExactnessResult {
    bool exact = false;
    std::optional<Cochain> witness;          // theta with d theta = omega
    std::optional<Certificate> certificate;  // infeasibility evidence
    int unknowns = 0;
    long long equations = 0;
};

namespace detail {

// pairs (i <= j) whose bracket hits label m, for candidate-row generation
inline std::vector<std::vector<std::pair<int, int>>> bracket_pairs_by_target(
    const LieSuperalgebra& g) {
    std::vector<std::vector<std::pair<int, int>>> by_target(g.dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i; j < g.dim(); ++j)
            for (const auto& [m, c] : g.bracket_basis(i, j)) {
                (void)c;
                by_target[m].push_back({i, j});
            }
    return by_target;
}

} // namespace detail

// Decides whether omega = d theta has a solution; `restrict_to` confines the
// unknown theta to a single bigrade (the (p-1,q+2) rule tells callers which).
// check_closed may be disabled when the caller has already verified d omega = 0.
// Full-space solving (no restriction) stays behind a monomial-count guard.
inline ExactnessResult is_exact(const Cochain& omega,
                                std::optional<Bigrade> restrict_to = std::nullopt,
                                bool check_closed = true, long long monomial_guard = 200'000) {
    const LieSuperalgebra& g = omega.parent();
    const int p = omega.level();
    if (p == 0) throw error("is_exact: level-0 cochain");
    if (!restrict_to && count_monomials(g, p - 1) > monomial_guard)
        throw error("is_exact: unrestricted preimage space exceeds the size guard");

    if (check_closed) {
        bool closed = true;
        enumerate_monomials(g, p + 1, [&](const std::vector<int>& labels) {
            if (!closed) return;
            if (!coboundary_on_tuple(omega, labels).is_zero()) closed = false;
        });
        if (!closed) throw error("is_exact: cochain is not closed");
    }

    // unknowns: level p-1 canonical monomials, possibly restricted by bigrade
    std::vector<std::vector<int>> unknowns;
    enumerate_monomials(g, p - 1, [&](const std::vector<int>& labels) {
        if (restrict_to) {
            int q = 0;
            for (int l : labels) q += g.parity_bit(l);
            if (q != restrict_to->q || (p - 1 - q) != restrict_to->p) return;
        }
        unknowns.push_back(labels);
    });
    std::unordered_map<uint64_t, int> unknown_index;
    for (size_t u = 0; u < unknowns.size(); ++u)
        unknown_index[detail::pack_monomial(unknowns[u])] = static_cast<int>(u);

    // rows: for every candidate level-p monomial M reachable from some unknown
    // (replace one label by a bracketing pair) plus the support of omega
    auto by_target = detail::bracket_pairs_by_target(g);
    std::unordered_map<uint64_t, std::vector<int>> rows;   // key -> labels
    auto add_row_key = [&](std::vector<int> labels) {
        int sign = sort_labels_chi(labels, [&](int l) { return g.parity_bit(l); });
        if (sign == 0) return;
        uint64_t key = detail::pack_monomial(labels);
        rows.emplace(key, labels);
    };
    for (const auto& u : unknowns) {
        for (size_t pos = 0; pos < u.size(); ++pos) {
            for (auto [i, j] : by_target[u[pos]]) {
                std::vector<int> m;
                m.reserve(u.size() + 1);
                for (size_t r = 0; r < u.size(); ++r)
                    if (r != pos) m.push_back(u[r]);
                m.push_back(i);
                m.push_back(j);
                add_row_key(std::move(m));
            }
        }
    }
    omega.for_each([&](const std::vector<int>& labels, const Rat& v) {
        (void)v;
        add_row_key(labels);
    });

    // assemble: coefficient of unknown u in row M is d(e_u)(M); evaluate the
    // coboundary formula on M against the unit cochain at u
    ExactnessResult res;
    res.unknowns = static_cast<int>(unknowns.size());
    Eliminator elim(res.unknowns);
    for (const auto& [key, labels] : rows) {
        ++res.equations;
        SparseRow row;
        row.id = key;
        row.rhs = omega.eval_basis(labels);

        const int n = static_cast<int>(labels.size());
        std::vector<int> grades(n);
        for (int i = 0; i < n; ++i) grades[i] = g.parity_bit(labels[i]);
        std::unordered_map<int, Rat> entries;
        std::vector<int> rest(n - 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const SparseVec& br = g.bracket_basis(labels[i], labels[j]);
                if (br.empty()) continue;
                int sign = ((i + j) % 2 == 0) ? 1 : -1;
                if (grades[i] && grades[j]) sign = -sign;
                sign *= eps_to_front(grades, i);
                sign *= eps_to_front(grades, j);
                int w = 0;
                for (int r = 0; r < n; ++r)
                    if (r != i && r != j) rest[w++] = labels[r];
                for (const auto& [m, c] : br) {
                    std::vector<int> args;
                    args.reserve(n - 1);
                    args.push_back(m);
                    args.insert(args.end(), rest.begin(), rest.end());
                    int s2 = sort_labels_chi(args, [&](int l) { return g.parity_bit(l); });
                    if (s2 == 0) continue;
                    auto it = unknown_index.find(detail::pack_monomial(args));
                    if (it == unknown_index.end()) continue;
                    Rat term = (sign * s2 > 0) ? c : -c;
                    entries[it->second] += term;
                }
            }
        for (const auto& [col, v] : entries)
            if (!v.is_zero()) row.entries.push_back({col, v});
        std::sort(row.entries.begin(), row.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (auto cert = elim.add_row(row)) {
            res.exact = false;
            res.certificate = cert;
            return res;
        }
    }

    res.exact = true;
    auto x = elim.solve();
    Cochain theta(omega.parent_ptr(), p - 1);
    for (size_t u = 0; u < unknowns.size(); ++u)
        if (!x[u].is_zero()) theta.add_term(unknowns[u], x[u]);
    res.witness = std::move(theta);
    return res;
}

// dim H^p = dim ker d_p - rank d_{p-1}, by exact elimination
inline int cohomology_dim(const LieSuperalgebra& g, int p, long long monomial_guard = 20000) {
    if (p == 0) return 1;   // constants; d of a 0-cochain is 0 with trivial coefficients
    long long np = count_monomials(g, p);
    long long nm = count_monomials(g, p - 1);
    long long nq = count_monomials(g, p + 1);
    if (np > monomial_guard || nm > monomial_guard || nq > monomial_guard)
        throw error("cohomology_dim: size guard exceeded");

    std::vector<std::vector<int>> p_monos;
    enumerate_monomials(g, p, [&](const std::vector<int>& l) { p_monos.push_back(l); });

    // rank of d_p : C^p -> C^{p+1}
    std::vector<std::vector<Rat>> rows_dp;
    for (const auto& u : p_monos) {
        Cochain unit(&g, p);
        unit.add_term(u, Rat(1));
        std::vector<Rat> row;
        enumerate_monomials(g, p + 1, [&](const std::vector<int>& m) {
            row.push_back(coboundary_on_tuple(unit, m));
        });
        rows_dp.push_back(std::move(row));
    }
    int rank_dp = rank_of_rows(std::move(rows_dp));

    // rank of d_{p-1} : C^{p-1} -> C^p
    std::vector<std::vector<Rat>> rows_dm;
    enumerate_monomials(g, p - 1, [&](const std::vector<int>& u) {
        Cochain unit(&g, p - 1);
        unit.add_term(u, Rat(1));
        std::vector<Rat> row;
        for (const auto& m : p_monos) row.push_back(coboundary_on_tuple(unit, m));
        rows_dm.push_back(std::move(row));
    });
    int rank_dm = rank_of_rows(std::move(rows_dm));

    return static_cast<int>(np) - rank_dp - rank_dm;
}

// --- extension by zero ---------------------------------------------------------

struct ExtensionResult {
    Cochain extended;      // omega~ on the ambient algebra
    Cochain d_extended;    // d omega~ = widetilde(d omega) + e omega
    Cochain defect;        // e omega: the part of d omega~ with one argument outside h
    bool closed = false;   // d omega~ == 0
};

// Lie derivative of omega along an even derivation of its parent, given as the
// matrix act (column i = coefficients of the derivation applied to e_i):
// (L omega)(X_1..X_p) = sum_i omega(X_1, ..., act X_i, ..., X_p).
// Computed on the substitution neighborhood of supp(omega) only.
inline Cochain lie_derivative(const Cochain& omega, const RatMatrix& act) {
    const LieSuperalgebra& g = omega.parent();
    if (act.rows != g.dim() || act.cols != g.dim()) throw error("lie_derivative: matrix shape");
    const int p = omega.level();

    // column sparsity and "which columns hit row n"
    std::vector<std::vector<std::pair<int, Rat>>> cols(g.dim()), rows(g.dim());
    for (int c = 0; c < g.dim(); ++c)
        for (int r = 0; r < g.dim(); ++r)
            if (!act.at(r, c).is_zero()) {
                cols[c].push_back({r, act.at(r, c)});
                rows[r].push_back({c, act.at(r, c)});
            }

    // candidate monomials: one label of a support monomial substituted backwards
    std::unordered_map<uint64_t, std::vector<int>> candidates;
    omega.for_each([&](const std::vector<int>& labels, const Rat& v) {
        (void)v;
        for (size_t j = 0; j < labels.size(); ++j)
            for (const auto& [m, c] : rows[labels[j]]) {
                (void)c;
                std::vector<int> cand(labels);
                cand[j] = m;
                int sign = sort_labels_chi(cand, [&](int l) { return g.parity_bit(l); });
                if (sign == 0) continue;
                candidates.emplace(detail::pack_monomial(cand), cand);
            }
    });

    Cochain out(omega.parent_ptr(), p);
    for (const auto& [key, labels] : candidates) {
        (void)key;
        Rat total(0);
        for (int i = 0; i < p; ++i)
            for (const auto& [m, c] : cols[labels[i]]) {
                std::vector<int> args(labels);
                args[i] = m;
                Rat v = omega.eval_basis(std::move(args));
                if (!v.is_zero()) total += c * v;
            }
        if (!total.is_zero()) out.add_term(labels, total);
    }
    return out;
}

// omega lives on h; ambient contains h as the basis range [offset, offset+h.dim)
// and must keep it an ideal. d omega~ is assembled from the decomposition
// d omega~ = widetilde(d omega) + e omega, where the defect e omega collects
// the terms with exactly one argument outside h (terms with two or more
// vanish because h is an ideal); the test suite re-derives this decomposition
// verbatim on small ambient algebras.
inline ExtensionResult extend_by_zero(const Cochain& omega, const LieSuperalgebra& ambient,
                                      int offset, const Cochain* d_omega_hint = nullptr) {
    const LieSuperalgebra& h = omega.parent();
    const int hd = h.dim();
    if (offset < 0 || offset + hd > ambient.dim()) throw error("extend_by_zero: offset range");
    for (int i = 0; i < hd; ++i) {
        if (ambient.parity(offset + i) != h.parity(i))
            throw error("extend_by_zero: parity mismatch between h and ambient block");
    }
    // ideal check: [ambient, h] subset h
    for (int a = 0; a < ambient.dim(); ++a)
        for (int i = 0; i < hd; ++i)
            for (const auto& [m, c] : ambient.bracket_basis(a, offset + i)) {
                (void)c;
                if (m < offset || m >= offset + hd)
                    throw error("extend_by_zero: h is not an ideal of the ambient algebra");
            }
    // brackets inside h must agree with h's own
    for (int i = 0; i < hd; ++i)
        for (int j = 0; j < hd; ++j) {
            SparseVec shifted;
            for (const auto& [m, c] : h.bracket_basis(i, j)) shifted.push_back({m + offset, c});
            if (shifted != ambient.bracket_basis(offset + i, offset + j))
                throw error("extend_by_zero: ambient does not restrict to h");
        }

    ExtensionResult res{Cochain(&ambient, omega.level()), Cochain(&ambient, omega.level() + 1),
                        Cochain(&ambient, omega.level() + 1), false};
    omega.for_each([&](const std::vector<int>& labels, const Rat& v) {
        std::vector<int> shifted(labels);
        for (int& l : shifted) l += offset;
        res.extended.add_term(shifted, v);
    });

    // widetilde(d omega)
    Cochain d_small = d_omega_hint ? *d_omega_hint : coboundary(omega);
    if (d_small.level() != omega.level() + 1 || d_small.parent_ptr() != omega.parent_ptr())
        throw error("extend_by_zero: bad d_omega hint");
    Cochain d_small_ext(&ambient, omega.level() + 1);
    d_small.for_each([&](const std::vector<int>& labels, const Rat& v) {
        std::vector<int> shifted(labels);
        for (int& l : shifted) l += offset;
        d_small_ext.add_term(shifted, v);
    });

    // e omega(Y, X_2..X_{p+1}) = -sum_i omega(X_2, ..., [Y,X_i], ..., X_{p+1})
    // for Y outside h: the Lie derivative along ad_Y pushed to the ambient
    for (int y = 0; y < ambient.dim(); ++y) {
        if (y >= offset && y < offset + hd) continue;
        if (ambient.parity_bit(y)) throw error("extend_by_zero: odd complement unsupported");
        RatMatrix act(hd, hd);
        for (int i = 0; i < hd; ++i)
            for (const auto& [m, c] : ambient.bracket_basis(y, offset + i))
                act.at(m - offset, i) = c;
        Cochain ld = lie_derivative(omega, act);
        ld.for_each([&](const std::vector<int>& labels, const Rat& v) {
            std::vector<int> amb{y};
            for (int l : labels) amb.push_back(l + offset);
            res.defect.add_term(amb, -v);
        });
    }

    res.d_extended = d_small_ext + res.defect;
    res.closed = res.d_extended.empty();
    return res;
}

// interior product with a central even basis element
inline Cochain interior_product(const Cochain& omega, int label) {
    const LieSuperalgebra& g = omega.parent();
    if (g.parity_bit(label)) throw error("interior_product: element must be even");
    for (int j = 0; j < g.dim(); ++j)
        if (!g.bracket_basis(label, j).empty())
            throw error("interior_product: element must be central");
    if (omega.level() == 0) throw error("interior_product: level-0 cochain");

    Cochain out(omega.parent_ptr(), omega.level() - 1);
    omega.for_each([&](const std::vector<int>& labels, const Rat& v) {
        (void)v;
        // i_X omega(rest) = omega(X, rest): collect monomials containing label
        for (size_t pos = 0; pos < labels.size(); ++pos) {
            if (labels[pos] != label) continue;
            std::vector<int> args{label};
            for (size_t r = 0; r < labels.size(); ++r)
                if (r != pos) args.push_back(labels[r]);
            std::vector<int> rest(args.begin() + 1, args.end());
            out.add_term(rest, omega.eval_basis(args));
            break;   // one extraction per monomial
        }
    });
    return out;
}

} // namespace slim
