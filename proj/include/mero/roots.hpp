#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mero/poly.hpp"

namespace mero {

struct ExactRoot {
    GaussRat value;
    int multiplicity;
};

struct NumericRoot {
    std::complex<double> value;
    int multiplicity;
    /// |f(value)| <= residual_bound, where f is the monic square-free factor the root came from.
    double residual_bound;
    /// The monic square-free factor (with no exact linear factors left) carrying this root.
    Poly factor;
};

struct RootSet {
    std::vector<ExactRoot> exact_roots;
    std::vector<NumericRoot> numeric_roots;

    int total_multiplicity() const {
        int s = 0;
        for (const auto& r : exact_roots) s += r.multiplicity;
        for (const auto& r : numeric_roots) s += r.multiplicity;
        return s;
    }
};

/// Relative residual tolerance for accepting a numeric root.
inline constexpr double kRootResidualTol = 1e-10;

namespace detail {

using cld = std::complex<long double>;

/// Simultaneous Aberth-Ehrlich iteration for all roots of a square-free polynomial,
/// followed by a Newton polish.
inline std::vector<cld> aberth_roots(const std::vector<cld>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<cld> z;
    if (n < 1) return z;
    std::vector<cld> monic(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) monic[k] = c[k] / c.back();
    std::vector<cld> dmonic(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) dmonic[static_cast<std::size_t>(k - 1)] = monic[static_cast<std::size_t>(k)] * static_cast<long double>(k);

    // Fujiwara-style bound for the initial circle.
    long double radius = 0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::pow(std::abs(monic[static_cast<std::size_t>(k)]), 1.0L / static_cast<long double>(n - k)));
    radius = std::max(radius, 1e-3L);
    z.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        long double th = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius, th);
    }
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            cld& zk = z[static_cast<std::size_t>(k)];
            cld p = horner(monic, zk);
            cld dp = horner(dmonic, zk);
            if (std::abs(p) == 0) continue;
            cld ratio = p / dp;
            cld sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (zk - z[static_cast<std::size_t>(j)]);
            cld w = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            zk -= w;
            worst = std::max(worst, std::abs(w) / (1 + std::abs(zk)));
        }
        if (worst < 1e-17L) break;
    }
    for (auto& zk : z) {
        for (int it = 0; it < 4; ++it) {
            cld dp = horner(dmonic, zk);
            if (std::abs(dp) == 0) break;
            zk -= horner(monic, zk) / dp;
        }
    }
    return z;
}

/// Multiply through by the lcm of all denominators so every coefficient is a Gaussian integer.
inline Poly clear_denominators(const Poly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    return p * GaussRat(Rat(l));
}

/// Nearest Gaussian integer to a complex double, if it is representable.
inline bool round_gaussian(std::complex<double> x, GaussRat& out) {
    if (!(std::abs(x.real()) < 1e15 && std::abs(x.imag()) < 1e15)) return false;
    out = GaussRat(Rat(static_cast<long>(std::llround(x.real()))), Rat(static_cast<long>(std::llround(x.imag()))));
    return true;
}

} // namespace detail

/// Numeric roots of a square-free polynomial, each checked against the residual tolerance.
/// The tolerance is relative to sum |c_k| |z|^k, the rounding scale of Horner at z.
inline std::vector<std::complex<double>> numeric_roots_squarefree(const Poly& f, double* residual_bound = nullptr) {
    std::vector<detail::cld> c;
    for (const auto& x : f.coeffs())
        c.emplace_back(static_cast<long double>(x.re().get_d()), static_cast<long double>(x.im().get_d()));
    auto zs = detail::aberth_roots(c);
    double bound = 0;
    std::vector<std::complex<double>> out;
    for (const auto& zk : zs) {
        long double scale = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) scale = scale * std::abs(zk) + std::abs(*it);
        const double root_bound = kRootResidualTol * static_cast<double>(scale);
        const double res = static_cast<double>(std::abs(horner(c, zk)));
        if (res > root_bound) throw Error(Errc::NonConvergent, "numeric root residual above tolerance");
        bound = std::max(bound, root_bound);
        out.emplace_back(static_cast<double>(zk.real()), static_cast<double>(zk.imag()));
    }
    if (residual_bound) *residual_bound = bound;
    return out;
}

/// Roots of p with multiplicities. Multiplicity comes only from the square-free
/// level; within each square-free factor, Gaussian-rational roots are found by
/// candidate trial and verified exactly, the remainder is solved numerically.
inline RootSet roots_with_multiplicity(const Poly& p) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
    RootSet out;
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
        Poly g = factor;
        while (g.degree() >= 1) {
            if (g.degree() == 1) {
                out.exact_roots.push_back({-g.coeff(0) / g.coeff(1), mult});
                g = Poly(1);
                break;
            }
            auto approx = numeric_roots_squarefree(g);
            // Rational root theorem over Z[i]: for integer coefficients, a root u/v in
            // lowest terms has v | lead, so lead*root is a Gaussian integer.
            Poly gi = detail::clear_denominators(g);
            const GaussRat lead = gi.lead();
            const std::complex<double> lead_d = lead.to_complex();
            bool found = false;
            for (const auto& r : approx) {
                GaussRat w;
                if (!detail::round_gaussian(lead_d * r, w)) continue;
                GaussRat cand = w / lead;
                if (g.eval(cand).is_zero()) {
                    out.exact_roots.push_back({cand, mult});
                    g = exact_div(g, Poly::linear(cand));
                    found = true;
                }
            }
            if (found) continue;
            double bound = 0;
            auto roots = numeric_roots_squarefree(g, &bound);
            Poly gm = g.monic();
            for (const auto& r : roots) out.numeric_roots.push_back({r, mult, bound, gm});
            break;
        }
    }
    std::sort(out.exact_roots.begin(), out.exact_roots.end(),
              [](const ExactRoot& a, const ExactRoot& b) { return lex_less(a.value, b.value); });
    return out;
}

} // namespace mero
