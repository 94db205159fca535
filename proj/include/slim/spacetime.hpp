#pragma once

// Minkowski vectors and spinors built from a normed division algebra K of
// dimension k: vectors in k+2 dimensions are 2x2 hermitian matrices over K,
// spinors are K^2 (two chiralities S+ and S-); one dimension up, vectors are
// a (k+3)-dimensional subspace of K[4] and spinors are S = S+ (+) S- = K^4.
//
// Clifford compositions are always operator compositions (iterated left
// multiplication), never K-matrix products: the two differ when K = O.

#include "slim/division_algebra.hpp"
#include "slim/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace slim {

enum class Chirality : uint8_t { plus, minus };

// ((t+x, y), (y*, t-x)) in h_2(K)
struct VectorK2 {
    Algebra tag = Algebra::R;
    Rat t, x;
    DAElement<> y;

    VectorK2() : y(Algebra::R) {}
    explicit VectorK2(Algebra a) : tag(a), y(a) {}
    VectorK2(Algebra a, Rat t_, Rat x_, DAElement<> y_)
        : tag(a), t(std::move(t_)), x(std::move(x_)), y(std::move(y_)) {
        if (y.tag != a) throw error("VectorK2: y tag mismatch");
    }

    bool is_zero() const { return t.is_zero() && x.is_zero() && y.is_zero(); }
    friend bool operator==(const VectorK2& a, const VectorK2& b) {
        return a.tag == b.tag && a.t == b.t && a.x == b.x && a.y == b.y;
    }
};

inline VectorK2 operator+(const VectorK2& a, const VectorK2& b) {
    return {a.tag, a.t + b.t, a.x + b.x, a.y + b.y};
}
inline VectorK2 operator-(const VectorK2& a, const VectorK2& b) {
    return {a.tag, a.t - b.t, a.x - b.x, a.y - b.y};
}
inline VectorK2 operator-(const VectorK2& a) { return {a.tag, -a.t, -a.x, -a.y}; }
inline VectorK2 operator*(const Rat& s, const VectorK2& a) {
    return {a.tag, s * a.t, s * a.x, s * a.y};
}

struct SpinorK2 {
    Algebra tag = Algebra::R;
    Chirality chirality = Chirality::plus;
    DAElement<> a, b;   // the two K-entries; parity of the whole object is odd

    SpinorK2() : a(Algebra::R), b(Algebra::R) {}
    SpinorK2(Algebra t, Chirality ch) : tag(t), chirality(ch), a(t), b(t) {}
    SpinorK2(Algebra t, Chirality ch, DAElement<> a_, DAElement<> b_)
        : tag(t), chirality(ch), a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const SpinorK2& x, const SpinorK2& y) {
        return x.tag == y.tag && x.chirality == y.chirality && x.a == y.a && x.b == y.b;
    }
};

inline SpinorK2 operator+(const SpinorK2& x, const SpinorK2& y) {
    if (x.chirality != y.chirality) throw error("spinor add: chirality mismatch");
    return {x.tag, x.chirality, x.a + y.a, x.b + y.b};
}
inline SpinorK2 operator-(const SpinorK2& x, const SpinorK2& y) {
    if (x.chirality != y.chirality) throw error("spinor sub: chirality mismatch");
    return {x.tag, x.chirality, x.a - y.a, x.b - y.b};
}
inline SpinorK2 operator-(const SpinorK2& x) { return {x.tag, x.chirality, -x.a, -x.b}; }
inline SpinorK2 operator*(const Rat& s, const SpinorK2& x) {
    return {x.tag, x.chirality, s * x.a, s * x.b};
}

// ((a, A~), (A, -a)) with a real, A in h_2(K); the a-axis is the extra
// spatial dimension, so h(A,A) = g(A,A) + a^2.
struct VectorK3 {
    Rat a;
    VectorK2 inner;

    VectorK3() = default;
    explicit VectorK3(Algebra t) : inner(t) {}
    VectorK3(Rat a_, VectorK2 in) : a(std::move(a_)), inner(std::move(in)) {}

    Algebra tag() const { return inner.tag; }
    bool is_zero() const { return a.is_zero() && inner.is_zero(); }
    friend bool operator==(const VectorK3& x, const VectorK3& y) {
        return x.a == y.a && x.inner == y.inner;
    }
};

inline VectorK3 operator+(const VectorK3& x, const VectorK3& y) { return {x.a + y.a, x.inner + y.inner}; }
inline VectorK3 operator-(const VectorK3& x, const VectorK3& y) { return {x.a - y.a, x.inner - y.inner}; }
inline VectorK3 operator-(const VectorK3& x) { return {-x.a, -x.inner}; }
inline VectorK3 operator*(const Rat& s, const VectorK3& x) { return {s * x.a, s * x.inner}; }

struct SpinorK3 {
    SpinorK2 plusPart, minusPart;

    SpinorK3() = default;
    explicit SpinorK3(Algebra t)
        : plusPart(t, Chirality::plus), minusPart(t, Chirality::minus) {}
    SpinorK3(SpinorK2 p, SpinorK2 m) : plusPart(std::move(p)), minusPart(std::move(m)) {
        if (plusPart.chirality != Chirality::plus || minusPart.chirality != Chirality::minus)
            throw error("SpinorK3: chirality layout");
    }

    Algebra tag() const { return plusPart.tag; }
    bool is_zero() const { return plusPart.is_zero() && minusPart.is_zero(); }
    friend bool operator==(const SpinorK3& x, const SpinorK3& y) {
        return x.plusPart == y.plusPart && x.minusPart == y.minusPart;
    }
};

inline SpinorK3 operator+(const SpinorK3& x, const SpinorK3& y) {
    return {x.plusPart + y.plusPart, x.minusPart + y.minusPart};
}
inline SpinorK3 operator-(const SpinorK3& x, const SpinorK3& y) {
    return {x.plusPart - y.plusPart, x.minusPart - y.minusPart};
}
inline SpinorK3 operator-(const SpinorK3& x) { return {-x.plusPart, -x.minusPart}; }
inline SpinorK3 operator*(const Rat& s, const SpinorK3& x) {
    return {s * x.plusPart, s * x.minusPart};
}

// --- matrix pictures ---------------------------------------------------

inline DAMatrix<> to_matrix(const VectorK2& v) {
    DAMatrix<> m(v.tag, 2, 2);
    DAElement<> tpx(v.tag), tmx(v.tag);
    tpx.c[0] = v.t + v.x;
    tmx.c[0] = v.t - v.x;
    m.at(0, 0) = tpx;
    m.at(0, 1) = v.y;
    m.at(1, 0) = conjugate(v.y);
    m.at(1, 1) = tmx;
    return m;
}

inline DAMatrix<> to_matrix(const VectorK3& v) {
    const Algebra t = v.tag();
    DAMatrix<> m(t, 4, 4);
    VectorK2 tld{t, -v.inner.t, v.inner.x, v.inner.y};
    DAMatrix<> A = to_matrix(v.inner), At = to_matrix(tld);
    DAElement<> ar(t), nar(t);
    ar.c[0] = v.a;
    nar.c[0] = -v.a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j + 2) = At.at(i, j);
            m.at(i + 2, j) = A.at(i, j);
        }
    m.at(0, 0) = ar;
    m.at(1, 1) = ar;
    m.at(2, 2) = nar;
    m.at(3, 3) = nar;
    return m;
}

// --- metric ------------------------------------------------------------

// A~ = A - tr(A) 1: time reversal (t,x,y) -> (-t,x,y)
inline VectorK2 trace_reversal(const VectorK2& v) { return {v.tag, -v.t, v.x, v.y}; }

inline Rat det(const VectorK2& v) { return v.t * v.t - v.x * v.x - norm_sq(v.y); }

// g(A,B) = 1/2 Re tr(A B~), signature (k+1,1)
inline Rat minkowski_g(const VectorK2& a, const VectorK2& b) {
    return frac(1, 2) * re_trace(to_matrix(a), to_matrix(trace_reversal(b)));
}

// h extends g by +a^2 on the extra coordinate, signature (k+2,1)
inline Rat minkowski_h(const VectorK3& a, const VectorK3& b) {
    return minkowski_g(a.inner, b.inner) + a.a * b.a;
}

// --- Clifford actions (iterated left multiplication) --------------------

namespace detail {
inline void act2(const VectorK2& A, const DAElement<>& u, const DAElement<>& v, bool tilde,
                 DAElement<>& out0, DAElement<>& out1) {
    Rat t = tilde ? -A.t : A.t;
    DAElement<> d0(A.tag), d1(A.tag);
    d0.c[0] = t + A.x;
    d1.c[0] = t - A.x;
    out0 = multiply(d0, u) + multiply(A.y, v);
    out1 = multiply(conjugate(A.y), u) + multiply(d1, v);
}
} // namespace detail

// gamma: S+ -> S- by A psi; gamma~: S- -> S+ by A~ psi
inline SpinorK2 clifford_act(const VectorK2& A, const SpinorK2& s) {
    if (A.tag != s.tag) throw error("clifford_act: tag mismatch");
    SpinorK2 r(s.tag, s.chirality == Chirality::plus ? Chirality::minus : Chirality::plus);
    detail::act2(A, s.a, s.b, s.chirality == Chirality::minus, r.a, r.b);
    return r;
}

// Gamma(A)(psi+, psi-) = (a psi+ + A~ psi-, A psi+ - a psi-)
inline SpinorK3 clifford_act(const VectorK3& A, const SpinorK3& s) {
    SpinorK2 top = clifford_act(A.inner, s.minusPart);   // S- -> S+
    SpinorK2 bot = clifford_act(A.inner, s.plusPart);    // S+ -> S-
    return {A.a * s.plusPart + top, bot - A.a * s.minusPart};
}

// --- pairings ------------------------------------------------------------

// <psi, phi> = Re(psi^dagger phi) for psi in S+, phi in S-
inline Rat pairing(const SpinorK2& psi, const SpinorK2& phi) {
    if (psi.chirality != Chirality::plus || phi.chirality != Chirality::minus)
        throw error("pairing: expects (S+, S-)");
    return re(multiply(conjugate(psi.a), phi.a)) + re(multiply(conjugate(psi.b), phi.b));
}

inline VectorK3 time_unit(Algebra t) {
    VectorK3 e(t);
    e.inner.t = Rat(1);
    return e;
}

// <Psi, Phi> = Re(Psi^dagger Gamma^0 Phi), Gamma^0 the Clifford action of the
// unit time vector; skew-symmetric.
inline Rat pairing_big(const SpinorK3& psi, const SpinorK3& phi) {
    SpinorK3 g0phi = clifford_act(time_unit(psi.tag()), phi);
    Rat s(0);
    const SpinorK2* ps[2] = {&psi.plusPart, &psi.minusPart};
    const SpinorK2* qs[2] = {&g0phi.plusPart, &g0phi.minusPart};
    for (int i = 0; i < 2; ++i) {
        s += re(multiply(conjugate(ps[i]->a), qs[i]->a));
        s += re(multiply(conjugate(ps[i]->b), qs[i]->b));
    }
    return s;
}

// --- orthogonal vector bases --------------------------------------------

// basis order: t, x, y_0 .. y_{k-1}; metric diag(-1, +1, ..., +1)
inline std::vector<VectorK2> vector_basis_k2(Algebra tag) {
    std::vector<VectorK2> b;
    VectorK2 et(tag);
    et.t = Rat(1);
    b.push_back(et);
    VectorK2 ex(tag);
    ex.x = Rat(1);
    b.push_back(ex);
    for (int c = 0; c < dim(tag); ++c) {
        VectorK2 ey(tag);
        ey.y = DAElement<>::basis(tag, c);
        b.push_back(ey);
    }
    return b;
}

// basis order: t, x, y_0 .. y_{k-1}, a; metric diag(-1, +1, ..., +1)
inline std::vector<VectorK3> vector_basis_k3(Algebra tag) {
    std::vector<VectorK3> b;
    for (const auto& v : vector_basis_k2(tag)) b.push_back(VectorK3{Rat(0), v});
    VectorK3 ea(tag);
    ea.a = Rat(1);
    b.push_back(ea);
    return b;
}

// --- spinor-to-vector brackets -------------------------------------------
//
// Defined by their defining property and recovered by solving on the
// orthogonal basis: g([psi,phi], e) = <psi, gamma(e) phi> for S+,
// g([psi,phi], e) = <gamma~(e) psi, phi> for S-, and
// h([Psi,Phi], e) = <Psi, Gamma(e) Phi> one dimension up.

inline VectorK2 bracket_spinors(const SpinorK2& psi, const SpinorK2& phi) {
    if (psi.tag != phi.tag) throw error("bracket_spinors: tag mismatch");
    if (psi.chirality != phi.chirality) throw error("bracket_spinors: chirality mismatch");
    VectorK2 out(psi.tag);
    auto basis = vector_basis_k2(psi.tag);
    for (size_t mu = 0; mu < basis.size(); ++mu) {
        Rat comp = (psi.chirality == Chirality::plus)
                       ? pairing(psi, clifford_act(basis[mu], phi))
                       : pairing(clifford_act(basis[mu], psi), phi);
        Rat eta = minkowski_g(basis[mu], basis[mu]);   // -1 for t, +1 otherwise
        out = out + ((comp / eta) * basis[mu]);
    }
    return out;
}

inline VectorK3 bracket_big(const SpinorK3& psi, const SpinorK3& phi) {
    if (psi.tag() != phi.tag()) throw error("bracket_big: tag mismatch");
    VectorK3 out(psi.tag());
    auto basis = vector_basis_k3(psi.tag());
    for (size_t mu = 0; mu < basis.size(); ++mu) {
        Rat comp = pairing_big(psi, clifford_act(basis[mu], phi));
        Rat eta = minkowski_h(basis[mu], basis[mu]);
        out = out + ((comp / eta) * basis[mu]);
    }
    return out;
}

// hermitian-part pictures of the bracket, used as cross-checks:
// S+: (psi phi^dag + phi psi^dag)~, S-: psi phi^dag + phi psi^dag
inline VectorK2 outer_hermitian(const SpinorK2& psi, const SpinorK2& phi) {
    const Algebra t = psi.tag;
    DAMatrix<> col(t, 2, 1), row(t, 1, 2);
    col.at(0, 0) = psi.a;
    col.at(1, 0) = psi.b;
    row.at(0, 0) = conjugate(phi.a);
    row.at(0, 1) = conjugate(phi.b);
    DAMatrix<> m = col * row;
    m = m + dagger(m);
    // m is hermitian: ((t+x, y), (y*, t-x))
    VectorK2 v(t);
    v.t = (re(m.at(0, 0)) + re(m.at(1, 1))) / Rat(2);
    v.x = (re(m.at(0, 0)) - re(m.at(1, 1))) / Rat(2);
    v.y = m.at(0, 1);
    return v;
}

// --- the spinor identities ------------------------------------------------

// [psi,psi].psi, zero in dimensions 3, 4, 6, 10
inline SpinorK2 three_psi(const SpinorK2& psi) {
    return clifford_act(bracket_spinors(psi, psi), psi);
}

// [Psi, [Psi,Psi] Psi], zero in dimensions 4, 5, 7, 11
inline VectorK3 four_psi(const SpinorK3& psi) {
    return bracket_big(psi, clifford_act(bracket_big(psi, psi), psi));
}

// (Psi * Phi)(A, B) = <Psi, (AB - BA) Phi> with Clifford composition
inline Rat star_form(const SpinorK3& psi, const SpinorK3& phi, const VectorK3& a,
                     const VectorK3& b) {
    SpinorK3 ab = clifford_act(a, clifford_act(b, phi));
    SpinorK3 ba = clifford_act(b, clifford_act(a, phi));
    return pairing_big(psi, ab - ba);
}

// [psi,phi].chi + [chi,psi].phi + [phi,chi].psi — the polarized 3-psi rule
inline SpinorK2 check_trilinear_sym(const SpinorK2& psi, const SpinorK2& phi,
                                    const SpinorK2& chi) {
    return clifford_act(bracket_spinors(psi, phi), chi) +
           clifford_act(bracket_spinors(chi, psi), phi) +
           clifford_act(bracket_spinors(phi, chi), psi);
}

// --- real coordinates ------------------------------------------------------

inline std::vector<Rat> coords(const VectorK2& v) {
    std::vector<Rat> c{v.t, v.x};
    for (const auto& yc : v.y.c) c.push_back(yc);
    return c;
}

inline VectorK2 vector_k2_from_coords(Algebra tag, const std::vector<Rat>& c) {
    if (static_cast<int>(c.size()) != dim(tag) + 2) throw error("vector_k2_from_coords: size");
    VectorK2 v(tag);
    v.t = c[0];
    v.x = c[1];
    for (int i = 0; i < dim(tag); ++i) v.y.c[i] = c[2 + i];
    return v;
}

inline std::vector<Rat> coords(const VectorK3& v) {
    auto c = coords(v.inner);
    c.push_back(v.a);
    return c;
}

inline VectorK3 vector_k3_from_coords(Algebra tag, const std::vector<Rat>& c) {
    if (static_cast<int>(c.size()) != dim(tag) + 3) throw error("vector_k3_from_coords: size");
    VectorK3 v(tag);
    v.inner = vector_k2_from_coords(tag, {c.begin(), c.end() - 1});
    v.a = c.back();
    return v;
}

inline std::vector<Rat> coords(const SpinorK2& s) {
    std::vector<Rat> c;
    c.reserve(2 * dim(s.tag));
    for (const auto& x : s.a.c) c.push_back(x);
    for (const auto& x : s.b.c) c.push_back(x);
    return c;
}

inline SpinorK2 spinor_k2_from_coords(Algebra tag, Chirality ch, const std::vector<Rat>& c) {
    const int k = dim(tag);
    if (static_cast<int>(c.size()) != 2 * k) throw error("spinor_k2_from_coords: size");
    SpinorK2 s(tag, ch);
    for (int i = 0; i < k; ++i) s.a.c[i] = c[i];
    for (int i = 0; i < k; ++i) s.b.c[i] = c[k + i];
    return s;
}

inline std::vector<Rat> coords(const SpinorK3& s) {
    auto c = coords(s.plusPart);
    for (const auto& x : coords(s.minusPart)) c.push_back(x);
    return c;
}

inline SpinorK3 spinor_k3_from_coords(Algebra tag, const std::vector<Rat>& c) {
    const int k = dim(tag);
    if (static_cast<int>(c.size()) != 4 * k) throw error("spinor_k3_from_coords: size");
    std::vector<Rat> p(c.begin(), c.begin() + 2 * k), m(c.begin() + 2 * k, c.end());
    return {spinor_k2_from_coords(tag, Chirality::plus, p),
            spinor_k2_from_coords(tag, Chirality::minus, m)};
}

inline std::vector<SpinorK2> spinor_basis_k2(Algebra tag, Chirality ch) {
    const int k = dim(tag);
    std::vector<SpinorK2> b;
    for (int i = 0; i < 2 * k; ++i) {
        std::vector<Rat> c(2 * k, Rat(0));
        c[i] = Rat(1);
        b.push_back(spinor_k2_from_coords(tag, ch, c));
    }
    return b;
}

inline std::vector<SpinorK3> spinor_basis_k3(Algebra tag) {
    const int k = dim(tag);
    std::vector<SpinorK3> b;
    for (int i = 0; i < 4 * k; ++i) {
        std::vector<Rat> c(4 * k, Rat(0));
        c[i] = Rat(1);
        b.push_back(spinor_k3_from_coords(tag, c));
    }
    return b;
}

// --- linear operators on real coordinates ----------------------------------

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> m;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), m(size_t(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return m[size_t(r) * cols + c]; }
    const Rat& at(int r, int c) const { return m[size_t(r) * cols + c]; }

    static RatMatrix identity(int n) {
        RatMatrix r(n, n);
        for (int i = 0; i < n; ++i) r.at(i, i) = Rat(1);
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (static_cast<int>(v.size()) != cols) throw error("RatMatrix::apply: size");
        std::vector<Rat> out(rows, Rat(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        for (const auto& x : m)
            if (!x.is_zero()) return false;
        return true;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols != b.rows) throw error("RatMatrix mul: shape");
        RatMatrix r(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int l = 0; l < a.cols; ++l) {
                if (a.at(i, l).is_zero()) continue;
                for (int j = 0; j < b.cols; ++j)
                    if (!b.at(l, j).is_zero()) r.at(i, j) += a.at(i, l) * b.at(l, j);
            }
        return r;
    }
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw error("RatMatrix add: shape");
        RatMatrix r = a;
        for (size_t i = 0; i < r.m.size(); ++i) r.m[i] += b.m[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw error("RatMatrix sub: shape");
        RatMatrix r = a;
        for (size_t i = 0; i < r.m.size(); ++i) r.m[i] -= b.m[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& a) {
        RatMatrix r = a;
        for (auto& x : r.m) x = -x;
        return r;
    }
    friend RatMatrix operator*(const Rat& s, const RatMatrix& a) {
        RatMatrix r = a;
        for (auto& x : r.m) x = s * x;
        return r;
    }
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.m == b.m;
    }
};

using SpinorOperator = RatMatrix;

namespace detail {
template <class F>
RatMatrix matrix_of(int out_dim, int in_dim, F&& action) {
    RatMatrix m(out_dim, in_dim);
    for (int j = 0; j < in_dim; ++j) {
        std::vector<Rat> e(in_dim, Rat(0));
        e[j] = Rat(1);
        std::vector<Rat> col = action(e);
        for (int i = 0; i < out_dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}
} // namespace detail

// gamma(A) etc. as rational matrices on spinor coordinates
inline RatMatrix clifford_matrix(const VectorK2& A, Chirality source) {
    const int n = 2 * dim(A.tag);
    return detail::matrix_of(n, n, [&](const std::vector<Rat>& c) {
        return coords(clifford_act(A, spinor_k2_from_coords(A.tag, source, c)));
    });
}

inline RatMatrix clifford_matrix(const VectorK3& A) {
    const int n = 4 * dim(A.tag());
    return detail::matrix_of(n, n, [&](const std::vector<Rat>& c) {
        return coords(clifford_act(A, spinor_k3_from_coords(A.tag(), c)));
    });
}

// --- infinitesimal Lorentz generators --------------------------------------
//
// rho(u^v) A = g(v,A) u - g(u,A) v on vectors; on spinors sigma(u^v) is the
// commutator of Clifford actions scaled by a constant which is fixed once by
// solving the equivariance relation Gamma(rho(X)A) = [sigma(X), Gamma(A)] on
// a basis instance and then asserted everywhere (tests do the asserting).

struct LorentzGeneratorK2 {
    RatMatrix rho;           // (k+2) x (k+2) on vector coordinates
    RatMatrix sigma_plus;    // 2k x 2k on S+ coordinates
    RatMatrix sigma_minus;   // 2k x 2k on S- coordinates
};

struct LorentzGeneratorK3 {
    RatMatrix rho;     // (k+3) x (k+3)
    RatMatrix sigma;   // 4k x 4k on S coordinates
};

namespace detail {

// Solve lhs = c * rhs for a single rational c; all instances must agree.
inline Rat solve_scale(const RatMatrix& lhs, const RatMatrix& rhs) {
    std::optional<Rat> c;
    for (size_t i = 0; i < lhs.m.size(); ++i) {
        if (rhs.m[i].is_zero()) {
            if (!lhs.m[i].is_zero()) throw error("lorentz normalization: inconsistent");
            continue;
        }
        Rat q = lhs.m[i] / rhs.m[i];
        if (c && *c != q) throw error("lorentz normalization: inconsistent");
        c = q;
    }
    if (!c) throw error("lorentz normalization: degenerate instance");
    return *c;
}

inline RatMatrix rho_matrix_k2(const VectorK2& u, const VectorK2& v) {
    const int n = dim(u.tag) + 2;
    return matrix_of(n, n, [&](const std::vector<Rat>& c) {
        VectorK2 A = vector_k2_from_coords(u.tag, c);
        return coords(minkowski_g(v, A) * u - minkowski_g(u, A) * v);
    });
}

inline RatMatrix rho_matrix_k3(const VectorK3& u, const VectorK3& v) {
    const int n = dim(u.tag()) + 3;
    return matrix_of(n, n, [&](const std::vector<Rat>& c) {
        VectorK3 A = vector_k3_from_coords(u.tag(), c);
        return coords(minkowski_h(v, A) * u - minkowski_h(u, A) * v);
    });
}

inline Rat sigma_normalization_k2(Algebra tag) {
    // solve on X = e_t ^ e_x, A = e_t, comparing Gamma(rho(X)A) with the
    // unscaled commutator of Clifford compositions on S+
    auto basis = vector_basis_k2(tag);
    const VectorK2 &u = basis[0], &v = basis[1];
    RatMatrix rho = rho_matrix_k2(u, v);
    const int n = dim(tag) + 2;
    VectorK2 rhoA(tag);
    {
        std::vector<Rat> e(n, Rat(0));
        e[0] = Rat(1);
        rhoA = vector_k2_from_coords(tag, rho.apply(e));
    }
    // unscaled sigma on S+: gamma~(u) gamma(v) - gamma~(v) gamma(u)
    RatMatrix gu = clifford_matrix(u, Chirality::plus), gv = clifford_matrix(v, Chirality::plus);
    RatMatrix gut = clifford_matrix(u, Chirality::minus), gvt = clifford_matrix(v, Chirality::minus);
    // unscaled sigma: on S+ the composite gamma~ after gamma, on S- the reverse;
    // equivariance reads Gamma(rho(X)A) = sigma_-(X) Gamma(A) - Gamma(A) sigma_+(X)
    RatMatrix d1 = gut * gv - gvt * gu;
    RatMatrix d1m = gu * gvt - gv * gut;
    RatMatrix gA = clifford_matrix(basis[0], Chirality::plus);
    RatMatrix lhs = clifford_matrix(rhoA, Chirality::plus);
    RatMatrix rhs = d1m * gA - gA * d1;
    return solve_scale(lhs, rhs);
}

inline Rat sigma_normalization_k3(Algebra tag) {
    auto basis = vector_basis_k3(tag);
    const VectorK3 &u = basis[0], &v = basis[1];
    RatMatrix rho = rho_matrix_k3(u, v);
    const int n = dim(tag) + 3;
    std::vector<Rat> e(n, Rat(0));
    e[0] = Rat(1);
    VectorK3 rhoA = vector_k3_from_coords(tag, rho.apply(e));
    RatMatrix gu = clifford_matrix(u), gv = clifford_matrix(v);
    RatMatrix d = gu * gv - gv * gu;
    RatMatrix gA = clifford_matrix(basis[0]);
    RatMatrix lhs = clifford_matrix(rhoA);
    RatMatrix rhs = d * gA - gA * d;
    return solve_scale(lhs, rhs);
}

} // namespace detail

inline LorentzGeneratorK2 lorentz_generator(const VectorK2& u, const VectorK2& v) {
    if (u.tag != v.tag) throw error("lorentz_generator: tag mismatch");
    static const std::array<Rat, 4> cache = [] {
        std::array<Rat, 4> r;
        for (int i = 0; i < 4; ++i) r[i] = detail::sigma_normalization_k2(static_cast<Algebra>(i));
        return r;
    }();
    const Rat c = cache[static_cast<int>(u.tag)];
    LorentzGeneratorK2 g;
    g.rho = detail::rho_matrix_k2(u, v);
    RatMatrix gu = clifford_matrix(u, Chirality::plus), gv = clifford_matrix(v, Chirality::plus);
    RatMatrix gut = clifford_matrix(u, Chirality::minus), gvt = clifford_matrix(v, Chirality::minus);
    g.sigma_plus = c * (gut * gv - gvt * gu);
    g.sigma_minus = c * (gu * gvt - gv * gut);
    return g;
}

inline LorentzGeneratorK3 lorentz_generator(const VectorK3& u, const VectorK3& v) {
    if (u.tag() != v.tag()) throw error("lorentz_generator: tag mismatch");
    static const std::array<Rat, 4> cache = [] {
        std::array<Rat, 4> r;
        for (int i = 0; i < 4; ++i) r[i] = detail::sigma_normalization_k3(static_cast<Algebra>(i));
        return r;
    }();
    const Rat c = cache[static_cast<int>(u.tag())];
    LorentzGeneratorK3 g;
    g.rho = detail::rho_matrix_k3(u, v);
    RatMatrix gu = clifford_matrix(u), gv = clifford_matrix(v);
    g.sigma = c * (gu * gv - gv * gu);
    return g;
}

} // namespace slim
