#pragma once

// Exact arithmetic for the four normed division algebras R, C, H, O and the
// real-trace calculus on rectangular matrices over them.
//
// The multiplication tables are generated by Cayley-Dickson doubling with the
// convention (a,b)(c,d) = (ac - d*b, da + bc*), starting from R. Under this
// convention the quaternion basis built from C satisfies e1*e2 = e3, and the
// octonion basis is e1..e7 with e.g. e1*e2 = e3, e1*e4 = e5.
//
// Coordinates live in any commutative ring R (rationals by default); the
// tables themselves are integer signs so genericity is free.

#include "slim/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace slim {

enum class Algebra : uint8_t { R = 0, C = 1, H = 2, O = 3 };

constexpr int dim(Algebra a) { return 1 << static_cast<int>(a); }

inline const char* name(Algebra a) {
    switch (a) {
        case Algebra::R: return "R";
        case Algebra::C: return "C";
        case Algebra::H: return "H";
        case Algebra::O: return "O";
    }
    return "?";
}

inline Algebra algebra_from_dim(int k) {
    switch (k) {
        case 1: return Algebra::R;
        case 2: return Algebra::C;
        case 4: return Algebra::H;
        case 8: return Algebra::O;
    }
    throw error("algebra_from_dim: k must be 1, 2, 4 or 8");
}

namespace detail {

struct BasisProduct {
    int8_t sign;
    uint8_t index;
};

// e_i * e_j in the dimension-k Cayley-Dickson algebra.
inline BasisProduct cd_product(int k, int i, int j) {
    if (k == 1) return {1, 0};
    const int h = k / 2;
    auto conj_sign = [](int idx) -> int8_t { return idx == 0 ? int8_t(1) : int8_t(-1); };
    if (i < h && j < h) {                       // (a,0)(c,0) = (ac, 0)
        return cd_product(h, i, j);
    } else if (i < h) {                         // (a,0)(0,d) = (0, da)
        BasisProduct p = cd_product(h, j - h, i);
        return {p.sign, uint8_t(p.index + h)};
    } else if (j < h) {                         // (0,b)(c,0) = (0, bc*)
        BasisProduct p = cd_product(h, i - h, j);
        return {int8_t(p.sign * conj_sign(j)), uint8_t(p.index + h)};
    } else {                                    // (0,b)(0,d) = (-d*b, 0)
        BasisProduct p = cd_product(h, j - h, i - h);
        return {int8_t(-p.sign * conj_sign(j - h)), p.index};
    }
}

struct MulTable {
    int k = 0;
    std::array<BasisProduct, 64> t{};
    const BasisProduct& at(int i, int j) const { return t[i * k + j]; }
};

inline const MulTable& mul_table(Algebra a) {
    static const std::array<MulTable, 4> tables = [] {
        std::array<MulTable, 4> r{};
        for (int ai = 0; ai < 4; ++ai) {
            const int k = 1 << ai;
            r[ai].k = k;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) r[ai].t[i * k + j] = cd_product(k, i, j);
        }
        return r;
    }();
    return tables[static_cast<int>(a)];
}

} // namespace detail

template <class R = Rat>
struct DAElement {
    Algebra tag = Algebra::R;
    std::vector<R> c;   // length dim(tag), basis {1, e1, ..., e_{k-1}}

    DAElement() : c(1, R(0)) {}
    explicit DAElement(Algebra a) : tag(a), c(dim(a), R(0)) {}
    DAElement(Algebra a, std::vector<R> coords) : tag(a), c(std::move(coords)) {
        if (static_cast<int>(c.size()) != dim(a)) throw error("DAElement: coordinate count");
    }

    static DAElement one(Algebra a) {
        DAElement e(a);
        e.c[0] = R(1);
        return e;
    }
    static DAElement basis(Algebra a, int i) {
        DAElement e(a);
        e.c.at(i) = R(1);
        return e;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!is_zero_coeff(x)) return false;
        return true;
    }

    friend bool operator==(const DAElement& a, const DAElement& b) {
        return a.tag == b.tag && a.c == b.c;
    }

private:
    static bool is_zero_coeff(const R& x) {
        using slim::is_zero;
        return is_zero(x);
    }
};

namespace detail {
template <class R>
void check_same_tag(const DAElement<R>& a, const DAElement<R>& b, const char* op) {
    if (a.tag != b.tag) throw error(std::string(op) + ": algebra tag mismatch");
}
} // namespace detail

template <class R>
DAElement<R> operator+(const DAElement<R>& a, const DAElement<R>& b) {
    detail::check_same_tag(a, b, "add");
    DAElement<R> r(a.tag);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class R>
DAElement<R> operator-(const DAElement<R>& a, const DAElement<R>& b) {
    detail::check_same_tag(a, b, "sub");
    DAElement<R> r(a.tag);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class R>
DAElement<R> operator-(const DAElement<R>& a) {
    DAElement<R> r(a.tag);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = -a.c[i];
    return r;
}

template <class R>
DAElement<R> operator*(const R& s, const DAElement<R>& a) {
    DAElement<R> r(a.tag);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = s * a.c[i];
    return r;
}

template <class R>
DAElement<R> multiply(const DAElement<R>& a, const DAElement<R>& b) {
    detail::check_same_tag(a, b, "multiply");
    const auto& tab = detail::mul_table(a.tag);
    const int k = tab.k;
    DAElement<R> r(a.tag);
    for (int i = 0; i < k; ++i) {
        using slim::is_zero;
        if (is_zero(a.c[i])) continue;
        for (int j = 0; j < k; ++j) {
            if (is_zero(b.c[j])) continue;
            const auto& p = tab.at(i, j);
            R term = a.c[i] * b.c[j];
            if (p.sign < 0)
                r.c[p.index] = r.c[p.index] - term;
            else
                r.c[p.index] = r.c[p.index] + term;
        }
    }
    return r;
}

template <class R>
DAElement<R> operator*(const DAElement<R>& a, const DAElement<R>& b) {
    return multiply(a, b);
}

template <class R>
DAElement<R> conjugate(const DAElement<R>& a) {
    DAElement<R> r = a;
    for (size_t i = 1; i < r.c.size(); ++i) r.c[i] = -r.c[i];
    return r;
}

template <class R>
R re(const DAElement<R>& a) {
    return a.c[0];
}

template <class R>
DAElement<R> im(const DAElement<R>& a) {
    DAElement<R> r = a;
    r.c[0] = R(0);
    return r;
}

// |a|^2 = real part of a a*.
template <class R>
R norm_sq(const DAElement<R>& a) {
    return re(multiply(a, conjugate(a)));
}

// (a,b) = Re(a b*).
template <class R>
R inner(const DAElement<R>& a, const DAElement<R>& b) {
    return re(multiply(a, conjugate(b)));
}

// [a,b,c] = (ab)c - a(bc).
template <class R>
DAElement<R> associator(const DAElement<R>& a, const DAElement<R>& b, const DAElement<R>& c) {
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
}

template <class R = Rat>
struct DAMatrix {
    Algebra tag = Algebra::R;
    int rows = 0, cols = 0;
    std::vector<DAElement<R>> e;   // row-major

    DAMatrix() = default;
    DAMatrix(Algebra a, int r, int c)
        : tag(a), rows(r), cols(c), e(size_t(r) * size_t(c), DAElement<R>(a)) {}

    DAElement<R>& at(int r, int c) { return e[size_t(r) * cols + c]; }
    const DAElement<R>& at(int r, int c) const { return e[size_t(r) * cols + c]; }

    static DAMatrix identity(Algebra a, int n) {
        DAMatrix m(a, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = DAElement<R>::one(a);
        return m;
    }

    friend bool operator==(const DAMatrix& a, const DAMatrix& b) {
        return a.tag == b.tag && a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

template <class R>
DAMatrix<R> operator+(const DAMatrix<R>& a, const DAMatrix<R>& b) {
    if (a.tag != b.tag || a.rows != b.rows || a.cols != b.cols) throw error("matrix add: shape/tag");
    DAMatrix<R> r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

template <class R>
DAMatrix<R> operator-(const DAMatrix<R>& a, const DAMatrix<R>& b) {
    if (a.tag != b.tag || a.rows != b.rows || a.cols != b.cols) throw error("matrix sub: shape/tag");
    DAMatrix<R> r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

template <class R>
DAMatrix<R> operator*(const R& s, const DAMatrix<R>& a) {
    DAMatrix<R> r = a;
    for (auto& x : r.e) x = s * x;
    return r;
}

// Matrix product; entry products use the (nonassociative) algebra product, so
// parenthesization of chained products matters and stays explicit at call sites.
template <class R>
DAMatrix<R> operator*(const DAMatrix<R>& a, const DAMatrix<R>& b) {
    if (a.tag != b.tag) throw error("matrix mul: tag mismatch");
    if (a.cols != b.rows) throw error("matrix mul: shape mismatch");
    DAMatrix<R> r(a.tag, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            DAElement<R> s(a.tag);
            for (int l = 0; l < a.cols; ++l) s = s + multiply(a.at(i, l), b.at(l, j));
            r.at(i, j) = s;
        }
    return r;
}

// A-dagger = conjugate transpose.
template <class R>
DAMatrix<R> dagger(const DAMatrix<R>& a) {
    DAMatrix<R> r(a.tag, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = conjugate(a.at(i, j));
    return r;
}

template <class R>
DAElement<R> trace(const DAMatrix<R>& a) {
    if (a.rows != a.cols) throw error("trace: square matrix required");
    DAElement<R> s(a.tag);
    for (int i = 0; i < a.rows; ++i) s = s + a.at(i, i);
    return s;
}

// Re tr((AB)C): cyclic-invariant and association-free, since the associator
// is purely imaginary and Re(ab) = Re(ba).
template <class R>
R re_trace(const DAMatrix<R>& a, const DAMatrix<R>& b, const DAMatrix<R>& c) {
    if (a.cols != b.rows || b.cols != c.rows || c.cols != a.rows)
        throw error("re_trace: shapes must compose k*l, l*m, m*k");
    return re(trace((a * b) * c));
}

template <class R>
R re_trace(const DAMatrix<R>& a, const DAMatrix<R>& b) {
    if (a.cols != b.rows || b.cols != a.rows) throw error("re_trace: shapes must compose");
    return re(trace(a * b));
}

} // namespace slim
