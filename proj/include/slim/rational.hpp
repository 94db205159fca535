#pragma once

// Exact rational scalar for the whole library. Thin value wrapper around
// GMP's mpq_class; nothing outside this header touches GMP directly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slim {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long long n) : v_(static_cast<signed long>(n)) {}
    Rat(int num, int den) : v_(num, den) {
        if (den == 0) throw error("Rat: zero denominator");
        v_.canonicalize();
    }

    // Accepts "num", "num/den"; whitespace not allowed.
    static Rat parse(const std::string& s) {
        Rat r;
        if (r.v_.set_str(s, 10) != 0) throw error("Rat: cannot parse '" + s + "'");
        if (r.v_.get_den() == 0) throw error("Rat: zero denominator in '" + s + "'");
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // Canonical "num/den" form, denominator always present and positive.
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw error("Rat: division by zero");
        return Rat(a.v_ / b.v_);
    }
    Rat operator-() const { return Rat(-v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rat frac(int num, int den) { return Rat(num, den); }

// Ring-concept helpers. Every coefficient ring R used by the library
// provides these; templates call them unqualified so ADL picks the right one.
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat ring_zero(const Rat&) { return Rat(0); }
inline Rat scale(const Rat& r, const Rat& s) { return r * s; }

} // namespace slim
