#pragma once

// Grassmann algebras Lambda R^n with exact rational coefficients. Basis
// monomials are bitmasks over the generators; the product sign counts the
// transpositions needed to merge two ascending generator lists. Elements of
// odd monomial length square to zero, the even part A_0 is commutative.

#include "slim/rational.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace slim {

struct GrassmannAlgebra {
    int n = 0;   // generator count; 2^n basis monomials

    int basis_size() const { return 1 << n; }
    friend bool operator==(const GrassmannAlgebra& a, const GrassmannAlgebra& b) {
        return a.n == b.n;
    }
};

namespace detail {
// sign of merging ascending monomials S and T (disjoint): (-1)^inversions
inline int merge_sign(uint32_t s, uint32_t t) {
    int inv = 0;
    while (t) {
        uint32_t low = t & (~t + 1);   // lowest generator of t
        inv += std::popcount(s & ~(low - 1) & ~low);   // generators of s above it
        t ^= low;
    }
    return (inv & 1) ? -1 : 1;
}
} // namespace detail

class GrassmannElement {
public:
    GrassmannElement() : alg_{0}, c_(1, Rat(0)) {}
    GrassmannElement(int v) : alg_{0}, c_(1, Rat(v)) {}
    explicit GrassmannElement(GrassmannAlgebra a) : alg_(a), c_(a.basis_size(), Rat(0)) {}
    GrassmannElement(GrassmannAlgebra a, std::vector<Rat> coords)
        : alg_(a), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != alg_.basis_size())
            throw error("GrassmannElement: coordinate count");
    }

    static GrassmannElement scalar(GrassmannAlgebra a, const Rat& v) {
        GrassmannElement e(a);
        e.c_[0] = v;
        return e;
    }
    static GrassmannElement generator(GrassmannAlgebra a, int i) {
        if (i < 0 || i >= a.n) throw error("GrassmannElement: generator index");
        GrassmannElement e(a);
        e.c_[1u << i] = Rat(1);
        return e;
    }

    const GrassmannAlgebra& algebra() const { return alg_; }
    const Rat& coeff(uint32_t mask) const { return c_[mask]; }
    Rat& coeff(uint32_t mask) { return c_[mask]; }
    const Rat& body() const { return c_[0]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }
    // parity flags: 0-part and 1-part presence
    bool has_even_part() const {
        for (size_t m = 0; m < c_.size(); ++m)
            if (!(std::popcount(unsigned(m)) & 1) && !c_[m].is_zero()) return true;
        return false;
    }
    bool has_odd_part() const {
        for (size_t m = 0; m < c_.size(); ++m)
            if ((std::popcount(unsigned(m)) & 1) && !c_[m].is_zero()) return true;
        return false;
    }
    GrassmannElement even_part() const {
        GrassmannElement e(alg_);
        for (size_t m = 0; m < c_.size(); ++m)
            if (!(std::popcount(unsigned(m)) & 1)) e.c_[m] = c_[m];
        return e;
    }

    friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
        auto [x, y] = promote(a, b);
        GrassmannElement r(x.alg_);
        for (size_t m = 0; m < r.c_.size(); ++m) r.c_[m] = x.c_[m] + y.c_[m];
        return r;
    }
    friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
        auto [x, y] = promote(a, b);
        GrassmannElement r(x.alg_);
        for (size_t m = 0; m < r.c_.size(); ++m) r.c_[m] = x.c_[m] - y.c_[m];
        return r;
    }
    friend GrassmannElement operator-(const GrassmannElement& a) {
        GrassmannElement r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
        auto [x, y] = promote(a, b);
        GrassmannElement r(x.alg_);
        for (uint32_t ma = 0; ma < x.c_.size(); ++ma) {
            if (x.c_[ma].is_zero()) continue;
            for (uint32_t mb = 0; mb < y.c_.size(); ++mb) {
                if (y.c_[mb].is_zero()) continue;
                if (ma & mb) continue;   // repeated generator
                int sign = detail::merge_sign(ma, mb);
                Rat term = x.c_[ma] * y.c_[mb];
                r.c_[ma | mb] += sign > 0 ? term : -term;
            }
        }
        return r;
    }
    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        auto [x, y] = promote(a, b);
        return x.c_ == y.c_;
    }

private:
    // scalars (n = 0) silently promote into the wider algebra
    static std::pair<GrassmannElement, GrassmannElement> promote(const GrassmannElement& a,
                                                                 const GrassmannElement& b) {
        if (a.alg_ == b.alg_) return {a, b};
        if (a.alg_.n == 0) {
            GrassmannElement pa(b.alg_);
            pa.c_[0] = a.c_[0];
            return {pa, b};
        }
        if (b.alg_.n == 0) {
            GrassmannElement pb(a.alg_);
            pb.c_[0] = b.c_[0];
            return {a, pb};
        }
        throw error("GrassmannElement: algebra mismatch");
    }

    GrassmannAlgebra alg_;
    std::vector<Rat> c_;
};

inline bool is_zero(const GrassmannElement& e) { return e.is_zero(); }
inline GrassmannElement scale(const GrassmannElement& e, const Rat& s) {
    GrassmannElement r = e;
    for (uint32_t m = 0; m < uint32_t(e.algebra().basis_size()); ++m) r.coeff(m) = e.coeff(m) * s;
    return r;
}

// superalgebra homomorphism determined by odd images of the generators
class GrassmannHom {
public:
    GrassmannHom(GrassmannAlgebra src, GrassmannAlgebra dst,
                 std::vector<GrassmannElement> generator_images)
        : src_(src), dst_(dst), img_(std::move(generator_images)) {
        if (static_cast<int>(img_.size()) != src_.n) throw error("GrassmannHom: image count");
        for (const auto& e : img_) {
            if (!(e.algebra() == dst_)) throw error("GrassmannHom: image algebra");
            if (e.has_even_part()) throw error("GrassmannHom: generator images must be odd");
        }
    }

    static GrassmannHom identity(GrassmannAlgebra a) {
        std::vector<GrassmannElement> img;
        for (int i = 0; i < a.n; ++i) img.push_back(GrassmannElement::generator(a, i));
        return GrassmannHom(a, a, std::move(img));
    }

    const GrassmannAlgebra& source() const { return src_; }
    const GrassmannAlgebra& target() const { return dst_; }

    GrassmannElement apply(const GrassmannElement& e) const {
        if (e.algebra().n == 0) return GrassmannElement::scalar(dst_, e.body());
        if (!(e.algebra() == src_)) throw error("GrassmannHom: element algebra");
        GrassmannElement out(dst_);
        for (uint32_t m = 0; m < uint32_t(src_.basis_size()); ++m) {
            if (e.coeff(m).is_zero()) continue;
            GrassmannElement prod = GrassmannElement::scalar(dst_, e.coeff(m));
            for (int i = 0; i < src_.n; ++i)
                if (m & (1u << i)) prod = prod * img_[i];
            out = out + prod;
        }
        return out;
    }

    friend GrassmannHom compose(const GrassmannHom& g, const GrassmannHom& f) {
        if (!(f.target() == g.source())) throw error("GrassmannHom compose: mismatch");
        std::vector<GrassmannElement> img;
        for (const auto& e : f.img_) img.push_back(g.apply(e));
        return GrassmannHom(f.src_, g.dst_, std::move(img));
    }

private:
    GrassmannAlgebra src_, dst_;
    std::vector<GrassmannElement> img_;
};

} // namespace slim
