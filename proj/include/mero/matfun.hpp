#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "mero/matrix.hpp"
#include "mero/ratfun.hpp"

namespace mero {

using MatPoly = Matrix<Poly>;
using MatRat = Matrix<RatFun>;
using MatGauss = Matrix<GaussRat>;
using MatComplex = Matrix<std::complex<double>>;
using PolyVec = std::vector<Poly>;
using RatVec = std::vector<RatFun>;
using GaussVec = std::vector<GaussRat>;

/// Exact determinant of a polynomial matrix. Cofactor expansion up to 4x4,
/// fraction-free (Bareiss) elimination above.
inline Poly poly_det(const MatPoly& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n <= 4) {
        Poly acc;
        for (std::size_t j = 0; j < n; ++j) {
            if (m(0, j).is_zero()) continue;
            MatPoly minor(n - 1, n - 1);
            for (std::size_t r = 1; r < n; ++r)
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != j) minor(r - 1, cc++) = m(r, c);
            Poly term = m(0, j) * poly_det(minor);
            if (j % 2 == 0) acc += term;
            else acc -= term;
        }
        return acc;
    }
    MatPoly a = m;
    Poly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return {};
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = Poly();
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

inline MatPoly poly_adjugate(const MatPoly& m) {
    const std::size_t n = m.rows();
    MatPoly adj(n, n);
    if (n == 1) {
        adj(0, 0) = Poly(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatPoly minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != j) minor(rr, cc++) = m(r, c);
                ++rr;
            }
            Poly d = poly_det(minor);
            adj(j, i) = (i + j) % 2 == 0 ? d : -d;
        }
    return adj;
}

inline MatPoly mat_identity_poly(std::size_t n) { return MatPoly::identity(n); }

/// n x n rational matrix function held as L(z)/q(z) with q the monic lcm of the
/// reduced entry denominators.
class RatMatFun {
public:
    RatMatFun() = default;

    /// Assumes the canonical form already holds; prefer ratmat_from_entries.
    RatMatFun(MatPoly numerator, Poly den) : numerator_(std::move(numerator)), den_(std::move(den)) {}

    static RatMatFun identity(std::size_t n) { return {MatPoly::identity(n), Poly(1)}; }

    std::size_t n() const { return numerator_.rows(); }
    const MatPoly& numerator() const { return numerator_; }
    const Poly& den() const { return den_; }

    RatFun entry(std::size_t i, std::size_t j) const { return {numerator_(i, j), den_}; }

    MatRat entries() const {
        MatRat m(n(), n());
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < n(); ++j) m(i, j) = entry(i, j);
        return m;
    }

    bool is_polynomial() const { return den_.is_one(); }

    friend bool operator==(const RatMatFun& a, const RatMatFun& b) {
        return a.numerator_ == b.numerator_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatMatFun& a, const RatMatFun& b) { return !(a == b); }

private:
    MatPoly numerator_;
    Poly den_{1};
};

inline RatMatFun ratmat_from_entries(const MatRat& e) {
    if (!e.is_square()) throw Error(Errc::NonSquare, "matrix function must be square");
    const std::size_t n = e.rows();
    Poly den(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!e(i, j).den().is_one()) den = poly_lcm(den, e(i, j).den());
    MatPoly num(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) num(i, j) = e(i, j).num() * exact_div(den, e(i, j).den());
    return {std::move(num), std::move(den)};
}

inline RatMatFun ratmat_from_rows(const std::vector<std::vector<RatFun>>& rows) {
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw Error(Errc::NonSquare, "matrix function must be square");
    return ratmat_from_entries(MatRat::from_rows(rows));
}

/// L(z)/q(z) for an arbitrary (not necessarily reduced) pair; re-canonicalizes.
inline RatMatFun ratmat_from_poly(const MatPoly& l, const Poly& q = Poly(1)) {
    return ratmat_from_entries(l.map([&](const Poly& p) { return RatFun(p, q); }));
}

inline RatMatFun operator*(const RatMatFun& a, const RatMatFun& b) {
    return ratmat_from_entries(a.entries() * b.entries());
}
inline RatMatFun operator+(const RatMatFun& a, const RatMatFun& b) {
    return ratmat_from_entries(a.entries() + b.entries());
}
inline RatMatFun operator-(const RatMatFun& a, const RatMatFun& b) {
    return ratmat_from_entries(a.entries() - b.entries());
}
inline RatMatFun scale(const RatMatFun& a, const RatFun& f) {
    return ratmat_from_entries(a.entries().map([&](const RatFun& x) { return x * f; }));
}

inline RatVec mat_vec(const MatRat& m, const RatVec& v) {
    RatVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}
inline RatVec mat_vec(const RatMatFun& q, const RatVec& v) { return mat_vec(q.entries(), v); }
inline RatVec mat_vec(const RatMatFun& q, const PolyVec& v) {
    RatVec rv(v.begin(), v.end());
    return mat_vec(q.entries(), rv);
}

inline RatFun determinant(const RatMatFun& q) { return {poly_det(q.numerator()), pow(q.den(), static_cast<int>(q.n()))}; }

inline RatMatFun inverse(const RatMatFun& q) {
    Poly d = poly_det(q.numerator());
    if (d.is_zero()) throw Error(Errc::SingularFunction, "determinant vanishes identically");
    MatPoly adj = poly_adjugate(q.numerator());
    // Q^{-1} = q * adj(L) / det(L)
    return ratmat_from_entries(adj.map([&](const Poly& a) { return RatFun(a * q.den(), d); }));
}

inline RatMatFun derivative(const RatMatFun& q) {
    return ratmat_from_entries(q.entries().map([](const RatFun& f) { return f.derivative(); }));
}

/// f(1/zeta) for a single entry.
inline RatFun invert_variable(const RatFun& f) {
    if (f.is_zero()) return {};
    const int p = f.num().degree();
    const int r = f.den().degree();
    Poly num = f.num().reversed(p);
    Poly den = f.den().reversed(r);
    if (r >= p) num = num * Poly::monomial(GaussRat(1), r - p);
    else den = den * Poly::monomial(GaussRat(1), p - r);
    return {num, den};
}

/// g(zeta) = Q(1/zeta).
inline RatMatFun invert_variable(const RatMatFun& q) {
    return ratmat_from_entries(q.entries().map([](const RatFun& f) { return invert_variable(f); }));
}

inline MatGauss eval(const RatMatFun& q, const GaussRat& z0) {
    GaussRat d = q.den().eval(z0);
    if (d.is_zero()) throw Error(Errc::EvalAtPole, "matrix function evaluated at a pole");
    GaussRat inv = d.inverse();
    return q.numerator().map([&](const Poly& p) { return p.eval(z0) * inv; });
}

/// Guard for numeric evaluation near poles.
inline constexpr double kPoleGuard = 1e-12;

/// Double-precision evaluator with coefficients converted once.
class NumericRatMat {
public:
    explicit NumericRatMat(const RatMatFun& q) : n_(q.n()), den_(to_complex_coeffs(q.den())) {
        num_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) num_.push_back(to_complex_coeffs(q.numerator()(i, j)));
    }

    std::size_t n() const { return n_; }

    MatComplex operator()(std::complex<double> z) const {
        std::complex<double> d = horner(den_, z);
        if (std::abs(d) <= kPoleGuard) throw Error(Errc::EvalAtPole, "numeric evaluation too close to a pole");
        MatComplex m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = horner(num_[i * n_ + j], z) / d;
        return m;
    }

private:
    std::size_t n_;
    std::vector<std::vector<std::complex<double>>> num_;
    std::vector<std::complex<double>> den_;
};

inline MatComplex eval(const RatMatFun& q, std::complex<double> z0) { return NumericRatMat(q)(z0); }

/// Exact inverse of a constant matrix by Gauss-Jordan; throws SingularFunction if singular.
inline MatGauss inverse(const MatGauss& a) {
    const std::size_t n = a.rows();
    MatGauss m = a;
    MatGauss inv = MatGauss::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) throw Error(Errc::SingularFunction, "singular constant matrix");
        m.swap_rows(k, p);
        inv.swap_rows(k, p);
        GaussRat piv = m(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) *= piv;
            inv(k, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            GaussRat f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Exact rank of a constant matrix.
inline std::size_t rank(MatGauss m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        GaussRat inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            GaussRat f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

inline GaussVec eval(const PolyVec& v, const GaussRat& z0) {
    GaussVec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.eval(z0));
    return out;
}

inline GaussVec mat_vec(const MatGauss& m, const GaussVec& v) {
    GaussVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline bool is_zero(const GaussVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace mero
