#pragma once

// Sparse multivariate polynomials over an arbitrary ring R, in canonical
// sorted-monomial form. Variables are small integer ids. Coefficient products
// preserve operand order, so noncommutative coefficient rings (Grassmann
// elements) work; the variables themselves always commute.

#include "slim/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace slim {

using Monomial = std::vector<std::pair<int, int>>;   // sorted (var, exponent>0)

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.push_back({a[i].first, a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class R>
class Poly {
public:
    Poly() = default;
    Poly(int c) {
        R r(c);
        add_term({}, r);
    }
    explicit Poly(const R& c) { add_term({}, c); }

    static Poly variable(int var) {
        Poly p;
        p.add_term({{var, 1}}, R(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, R>& terms() const { return terms_; }

    void add_term(Monomial m, const R& c) {
        using slim::is_zero;
        if (is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    // the coefficient of a monomial (zero ring element when absent)
    R coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return R(0);
        return it->second;
    }

    R constant_term() const { return coefficient({}); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, R(0) - c);
        return r;
    }
    friend Poly operator-(const Poly& a) { return Poly() - a; }

    // coefficients multiply in operand order: (a t^m)(b t^n) = (ab) t^{m+n}
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // partial derivative
    Poly derivative(int var) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i].first != var) continue;
                Monomial dm = m;
                int e = dm[i].second;
                if (e == 1) dm.erase(dm.begin() + i);
                else dm[i].second = e - 1;
                r.add_term(std::move(dm), scale(c, Rat(e)));
                break;
            }
        }
        return r;
    }

    // definite integral over [0,1] in every variable selected by pred;
    // the selected variables disappear, each contributing 1/(e+1)
    template <class Pred>
    Poly integrate_unit(Pred&& pred) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Rat factor(1);
            Monomial keep;
            for (const auto& [v, e] : m) {
                if (pred(v)) factor = factor * Rat(1, e + 1);
                else keep.push_back({v, e});
            }
            r.add_term(std::move(keep), scale(c, factor));
        }
        return r;
    }

    // substitute variables by polynomials; vars without an image stay put
    Poly substitute(const std::map<int, Poly>& images) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly term{c};
            for (const auto& [v, e] : m) {
                auto it = images.find(v);
                Poly factor = it != images.end() ? it->second : variable(v);
                for (int rep = 0; rep < e; ++rep) term = term * factor;
            }
            r = r + term;
        }
        return r;
    }

private:
    std::map<Monomial, R> terms_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <class R>
Poly<R> ring_zero(const Poly<R>&) {
    return Poly<R>();
}

template <class R>
Poly<R> scale(const Poly<R>& p, const Rat& s) {
    Poly<R> r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, scale(c, s));
    return r;
}

using RatPoly = Poly<Rat>;

} // namespace slim
