#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mero/structure.hpp"

namespace mero {

/// Circle center + radius*e^{i theta}, sampled at `nodes` equispaced angles.
struct Contour {
    std::complex<double> center;
    double radius = 0.5;
    int nodes = 1024;
};

struct LogResidue {
    std::complex<double> value;
    long nearest_int = 0;
    /// |value - nearest_int|
    double gap = 0;
    /// |value(2N) - value(N)| at the final refinement level.
    double doubling_change = 0;
    int nodes_used = 0;
};

struct LogResOptions {
    /// Evaluate tr(Q' Q^{-1}) from the exact symbolic product instead of a per-node LU solve.
    bool symbolic = false;
    int max_nodes = 1 << 16;
};

inline constexpr double kContourClearance = 1e-6;
inline constexpr double kNonConvergenceTol = 1e-6;

namespace detail {

/// tr(A^{-1} B) via LU with partial pivoting.
inline std::complex<double> trace_solve(MatComplex a, MatComplex b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) == 0) throw Error(Errc::ContourThroughSingularity, "Q singular on the contour");
        a.swap_rows(k, p);
        b.swap_rows(k, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto f = a(i, k) / a(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < n; ++j) b(i, j) -= f * b(k, j);
        }
    }
    std::complex<double> tr = 0;
    // Back substitution one column at a time; only diagonal entries of the solution are needed.
    std::vector<std::complex<double>> x(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            auto s = b(ii, c);
            for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
            x[ii] = s / a(ii, ii);
        }
        tr += x[c];
    }
    return tr;
}

inline std::vector<std::complex<double>> all_root_values(const Poly& p) {
    std::vector<std::complex<double>> out;
    if (p.degree() < 1) return out;
    RootSet rs = roots_with_multiplicity(p);
    for (const auto& r : rs.exact_roots) out.push_back(r.value.to_complex());
    for (const auto& r : rs.numeric_roots) out.push_back(r.value);
    return out;
}

} // namespace detail

/// Poles of Q and zeros of det Q's numerator: the points a contour has to avoid.
inline std::vector<std::complex<double>> contour_obstacles(const RatMatFun& q) {
    auto out = detail::all_root_values(q.den());
    for (const auto& z : detail::all_root_values(poly_det(q.numerator()))) out.push_back(z);
    return out;
}

/// (1/2 pi i) tr of the contour integral of Q'(z) Q^{-1}(z), by the periodic
/// trapezoid rule with node doubling until the value settles.
inline LogResidue log_residue(const RatMatFun& q, const Contour& c, const LogResOptions& opt = {}) {
    if (!(c.radius > 0)) throw Error(Errc::InvalidInput, "contour radius must be positive");
    if (c.nodes < 64) throw Error(Errc::InvalidInput, "contour needs at least 64 nodes");
    if (poly_det(q.numerator()).is_zero()) throw Error(Errc::SingularFunction, "determinant vanishes identically");
    for (const auto& z : contour_obstacles(q))
        if (std::abs(std::abs(z - c.center) - c.radius) < kContourClearance)
            throw Error(Errc::ContourThroughSingularity, "contour passes through a critical point");

    const RatMatFun dq = derivative(q);
    const NumericRatMat qn(q), dqn(dq);
    std::vector<std::complex<double>> sym_num, sym_den;
    if (opt.symbolic) {
        const MatRat prod = (dq * inverse(q)).entries();
        RatFun tr;
        for (std::size_t i = 0; i < q.n(); ++i) tr += prod(i, i);
        sym_num = to_complex_coeffs(tr.num());
        sym_den = to_complex_coeffs(tr.den());
    }

    // Sum of f(z_k) * (z_k - center) over nodes k = offset, offset + step, ...
    auto partial = [&](int total, int offset, int step) {
        std::complex<double> s = 0;
        for (int k = offset; k < total; k += step) {
            const double th = 2 * std::numbers::pi * k / total;
            const std::complex<double> w = std::polar(c.radius, th);
            const std::complex<double> z = c.center + w;
            std::complex<double> f;
            if (opt.symbolic) f = horner(sym_num, z) / horner(sym_den, z);
            else f = detail::trace_solve(qn(z), dqn(z));
            s += f * w;
        }
        return s;
    };

    int n = c.nodes;
    std::complex<double> sum = partial(n, 0, 1);
    std::complex<double> value = sum / static_cast<double>(n);
    double change = 0;
    while (true) {
        // Refine: the 2n-node sum reuses the n existing nodes.
        std::complex<double> odd = partial(2 * n, 1, 2);
        sum += odd;
        n *= 2;
        std::complex<double> next = sum / static_cast<double>(n);
        change = std::abs(next - value);
        value = next;
        if (change < 1e-12 || n >= opt.max_nodes) break;
    }
    if (change > kNonConvergenceTol) throw Error(Errc::NonConvergent, "node doubling did not settle");
    if (std::abs(value.imag()) > kNonConvergenceTol) throw Error(Errc::NonConvergent, "imaginary part did not vanish");

    LogResidue r;
    r.value = value;
    r.nearest_int = std::lround(value.real());
    r.gap = std::abs(value - std::complex<double>(static_cast<double>(r.nearest_int), 0));
    r.doubling_change = change;
    r.nodes_used = n;
    return r;
}

/// A circle around `center` that keeps every other obstacle at least a fixed
/// fraction of its radius away.
inline Contour isolating_contour(const RatMatFun& q, std::complex<double> center, int nodes = 1024) {
    double nearest = 1.0;
    for (const auto& z : contour_obstacles(q)) {
        const double d = std::abs(z - center);
        if (d > 1e-9) nearest = std::min(nearest, d);
    }
    return {center, nearest / 2, nodes};
}

/// The contour integral around the report's point agrees with N - P from the report.
inline bool residue_consistency(const RatMatFun& q, const StructureReport& rep) {
    if (rep.point.is_infinity()) throw Error(Errc::PreconditionViolated, "point at infinity has no finite contour");
    const LogResidue lr = log_residue(q, isolating_contour(q, rep.point.approx));
    return lr.nearest_int == rep.total_zero_mult - rep.total_pole_mult && lr.gap < kNonConvergenceTol;
}

} // namespace mero
