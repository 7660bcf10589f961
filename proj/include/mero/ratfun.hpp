#pragma once

#include <complex>
#include <string>
#include <utility>

#include "mero/poly.hpp"

namespace mero {

/// Reduced quotient num/den of polynomials over Q(i); den is monic and coprime to num.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFun(GaussRat c) : RatFun(Poly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    /// Exact evaluation; throws EvalAtPole where den vanishes.
    GaussRat eval(const GaussRat& x) const {
        GaussRat d = den_.eval(x);
        if (d.is_zero()) throw Error(Errc::EvalAtPole, "rational function evaluated at a pole");
        return num_.eval(x) / d;
    }

    /// Signed order at a: multiplicity in num minus multiplicity in den.
    /// The zero function has no finite order; callers must not ask.
    int valuation(const GaussRat& a) const {
        if (is_zero()) throw Error(Errc::ZeroPolynomial, "valuation of the zero function");
        return root_multiplicity(num_, a) - root_multiplicity(den_, a);
    }

    /// Signed order along a monic square-free factor f (all roots of f share it
    /// when f comes from a coprime basis).
    int valuation_along(const Poly& f) const {
        if (is_zero()) throw Error(Errc::ZeroPolynomial, "valuation of the zero function");
        return factor_multiplicity(num_, f) - factor_multiplicity(den_, f);
    }

    RatFun derivative() const {
        // (n/d)' = (n'd - nd')/d^2
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    RatFun conj() const { return {num_.conj(), den_.conj()}; }

    RatFun inverse() const {
        if (is_zero()) throw Error(Errc::DivisionByZeroPoly, "inverse of the zero function");
        return {den_, num_};
    }

    /// Degree of num minus degree of den; the pole order at infinity when positive.
    int degree_excess() const { return num_.degree() - den_.degree(); }

    RatFun operator-() const { return {-num_, den_}; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    void reduce() {
        if (den_.is_zero()) throw Error(Errc::DivisionByZeroPoly, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (!den_.is_constant()) {
            Poly g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        GaussRat lc = den_.lead();
        if (!lc.is_one()) {
            GaussRat inv = lc.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly num_;
    Poly den_;
};

inline RatFun pow(const RatFun& f, int k) {
    if (k < 0) return pow(f.inverse(), -k);
    return {pow(f.num(), k), pow(f.den(), k)};
}

/// Expression-grammar string: "p" or "(p)/(q)".
inline std::string to_string(const RatFun& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }

} // namespace mero
