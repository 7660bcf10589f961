#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace mero {

/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Exact complex number re + im*i with rational parts, i.e. an element of Q(i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    /// |a|^2, always real and exact.
    Rat norm() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussRat operator-() const { return {-re_, -im_}; }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Lexicographic (re, im) order; only used to make outputs deterministic.
    friend bool lex_less(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    GaussRat inverse() const;

private:
    Rat re_{0};
    Rat im_{0};
};

inline GaussRat GaussRat::inverse() const {
    Rat n = norm();
    if (sgn(n) == 0) throw std::domain_error("GaussRat: division by zero");
    return {re_ / n, -im_ / n};
}

inline GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("GaussRat: division by zero");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

/// Canonical string: "p/q", "a/b*i" or "a/b+c/d*i".
inline std::string to_string(const GaussRat& a) {
    if (a.is_real()) return to_string(a.re());
    std::string im = to_string(a.im()) + "*i";
    if (sgn(a.re()) == 0) return im;
    std::string s = to_string(a.re());
    if (sgn(a.im()) > 0) s += "+";
    return s + im;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& a) { return os << to_string(a); }

} // namespace mero
