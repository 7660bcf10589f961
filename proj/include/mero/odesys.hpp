#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mero/structure.hpp"

namespace mero {

/// A_m (1/u^{(m)}) + ... + A_1 (1/u') + A_0 (1/u) = 0, reciprocals taken componentwise.
struct OdeSystem {
    int m = 1;
    std::vector<MatGauss> A;  // A[k] multiplies the reciprocal of the k-th derivative

    std::size_t n() const { return A.empty() ? 0 : A.front().rows(); }
};

/// u(t) = u_components * e^{alpha t}, with u_components the componentwise
/// reciprocal of an eigenvector of Q at alpha.
struct OdeSolution {
    std::complex<double> alpha;
    std::optional<GaussRat> alpha_exact;
    std::vector<std::complex<double>> eigenvector;
    std::optional<GaussVec> eigenvector_exact;
    std::vector<std::complex<double>> u_components;
    std::optional<GaussVec> u_components_exact;

    bool is_exact() const { return alpha_exact.has_value() && u_components_exact.has_value(); }
};

/// An eigenvector that yields no solution by itself, with the reason.
struct ExcludedEigenvector {
    std::complex<double> alpha;
    std::optional<GaussRat> alpha_exact;
    std::size_t index;  // column of T
    std::vector<std::complex<double>> eigenvector;
    std::optional<GaussVec> eigenvector_exact;
    std::string reason;
};

struct OdeSolveResult {
    std::vector<OdeSolution> solutions;
    std::vector<ExcludedEigenvector> excluded;
    /// Geometric multiplicity of each zero alpha, in the order the zeros were visited.
    std::vector<std::pair<Location, int>> geometric_multiplicities;
};

inline std::vector<double> default_t_samples() { return {0.0, 0.5, 1.0, 2.0}; }

inline void validate(const OdeSystem& sys) {
    if (sys.m < 1) throw Error(Errc::InvalidInput, "order m must be at least 1");
    if (sys.A.size() != static_cast<std::size_t>(sys.m) + 1)
        throw Error(Errc::InvalidInput, "expected m+1 coefficient matrices");
    const std::size_t n = sys.n();
    if (n == 0) throw Error(Errc::InvalidInput, "dimension must be at least 1");
    for (const auto& a : sys.A)
        if (a.rows() != n || a.cols() != n) throw Error(Errc::NonSquare, "coefficient matrices must be n x n");
    bool lead_zero = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!sys.A.back()(i, j).is_zero()) lead_zero = false;
    if (lead_zero) throw Error(Errc::ZeroLeading, "A_m must be nonzero");
    if (sys.m == 1 && n == 1) throw Error(Errc::TrivialSystem, "m = n = 1 separates variables");
}

/// Q(z) = z^{-m} (A_m + A_{m-1} z + ... + A_0 z^m).
inline RatMatFun build_Q_from_system(const OdeSystem& sys) {
    validate(sys);
    const std::size_t n = sys.n();
    MatPoly l(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<GaussRat> c(static_cast<std::size_t>(sys.m) + 1);
            for (int k = 0; k <= sys.m; ++k) c[static_cast<std::size_t>(k)] = sys.A[static_cast<std::size_t>(sys.m - k)](i, j);
            l(i, j) = Poly(std::move(c));
        }
    return ratmat_from_poly(l, Poly::monomial(GaussRat(1), sys.m));
}

namespace detail {

inline std::vector<std::complex<double>> to_complex(const GaussVec& v) {
    std::vector<std::complex<double>> out;
    for (const auto& x : v) out.push_back(x.to_complex());
    return out;
}

inline std::vector<std::complex<double>> eval_numeric(const PolyVec& v, std::complex<double> z) {
    std::vector<std::complex<double>> out;
    for (const auto& p : v) out.push_back(horner(to_complex_coeffs(p), z));
    return out;
}

inline double norm2(const std::vector<std::complex<double>>& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

/// Solution from an eigenvector; nullopt-style failure reported through `reason`.
inline std::optional<OdeSolution> solution_from(const Location& at, const GaussVec* exact_vec,
                                                std::vector<std::complex<double>> num_vec, std::string& reason) {
    OdeSolution s;
    s.alpha = at.approx;
    if (at.is_exact()) s.alpha_exact = at.exact;
    if (std::abs(s.alpha) == 0) {
        reason = "alpha = 0: every derivative of a constant vanishes";
        return std::nullopt;
    }
    if (exact_vec) {
        for (const auto& x : *exact_vec)
            if (x.is_zero()) {
                reason = "eigenvector has a zero component";
                return std::nullopt;
            }
        GaussVec u;
        for (const auto& x : *exact_vec) u.push_back(x.inverse());
        s.eigenvector_exact = *exact_vec;
        s.eigenvector = to_complex(*exact_vec);
        s.u_components = to_complex(u);
        s.u_components_exact = std::move(u);
        return s;
    }
    for (const auto& x : num_vec)
        if (std::abs(x) < 1e-12) {
            reason = "eigenvector has a zero component";
            return std::nullopt;
        }
    s.eigenvector = num_vec;
    for (const auto& x : num_vec) s.u_components.push_back(1.0 / x);
    return s;
}

} // namespace detail

/// Exponential solutions u_j(t) = T_j(alpha)^{-1} e^{alpha t} for every zero alpha
/// of Q and every j in Omega_0(alpha). Eigenvectors are scaled so their first
/// nonzero component is 1. Eigenvectors with a zero component are reported as
/// excluded; combine_eigenvectors can often repair them.
inline OdeSolveResult solve_system(const OdeSystem& sys) {
    const RatMatFun q = build_Q_from_system(sys);
    const DiagRatForm diag = checked_diag(q);
    OdeSolveResult out;
    for (const auto& loc : critical_points(diag)) {
        StructureReport rep = zero_pole_structure(diag, loc);
        if (rep.omega0.empty()) continue;
        out.geometric_multiplicities.emplace_back(loc, rep.geometric_mult_zero);
        for (std::size_t k = 0; k < rep.omega0.size(); ++k) {
            const PolyVec& col = rep.root_functions[k];
            std::string reason;
            std::optional<OdeSolution> sol;
            GaussVec ev;
            std::vector<std::complex<double>> evn;
            if (loc.is_exact()) {
                ev = eval(col, loc.exact);
                GaussRat first;
                for (const auto& x : ev)
                    if (!x.is_zero()) {
                        first = x;
                        break;
                    }
                for (auto& x : ev) x /= first;
                if (!loc.exact.is_zero() && !is_zero(mat_vec(eval(q, loc.exact), ev)))
                    throw Error(Errc::VerificationFailed, "Q(alpha) * eigenvector != 0");
                sol = detail::solution_from(loc, &ev, {}, reason);
            } else {
                evn = detail::eval_numeric(col, loc.approx);
                std::complex<double> first = 0;
                for (const auto& x : evn)
                    if (std::abs(x) > 1e-12) {
                        first = x;
                        break;
                    }
                for (auto& x : evn) x /= first;
                sol = detail::solution_from(loc, nullptr, evn, reason);
            }
            if (sol) {
                out.solutions.push_back(std::move(*sol));
            } else {
                ExcludedEigenvector ex{loc.approx, std::nullopt, rep.omega0[k], {}, std::nullopt, reason};
                if (loc.is_exact()) {
                    ex.alpha_exact = loc.exact;
                    ex.eigenvector = detail::to_complex(ev);
                    ex.eigenvector_exact = ev;
                } else {
                    ex.eigenvector = evn;
                }
                out.excluded.push_back(std::move(ex));
            }
        }
    }
    return out;
}

/// u(t) = phi^{-1} e^{alpha t} for phi = sum_j c_j T_j(alpha), j in Omega_0(alpha).
inline OdeSolution combine_eigenvectors(const OdeSystem& sys, const GaussRat& alpha, const GaussVec& coeffs) {
    const RatMatFun q = build_Q_from_system(sys);
    const StructureReport rep = zero_pole_structure(q, alpha);
    if (coeffs.size() != rep.omega0.size())
        throw Error(Errc::PreconditionViolated, "need one coefficient per index in Omega_0(alpha)");
    GaussVec phi(sys.n());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        GaussVec t = eval(rep.root_functions[k], alpha);
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += coeffs[k] * t[i];
    }
    for (const auto& x : phi)
        if (x.is_zero()) throw Error(Errc::ZeroComponent, "combined eigenvector has a zero component");
    std::string reason;
    auto sol = detail::solution_from(Location::at(alpha), &phi, {}, reason);
    if (!sol) throw Error(Errc::ZeroComponent, reason);
    return *sol;
}

/// sum_k A_k phi alpha^{-k} with phi = 1/u: the residual of u at t = 0.
inline GaussVec exact_residual_vector(const OdeSystem& sys, const GaussRat& alpha, const GaussVec& u) {
    const std::size_t n = sys.n();
    GaussVec phi;
    for (const auto& x : u) phi.push_back(x.inverse());
    GaussVec r(n);
    GaussRat apow(1);
    const GaussRat ainv = alpha.inverse();
    for (int k = 0; k <= sys.m; ++k) {
        const MatGauss& a = sys.A[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r[i] += a(i, j) * phi[j] * apow;
        apow *= ainv;
    }
    return r;
}

/// Max over the samples of |residual(t)| after substituting u(t) = c e^{alpha t}.
/// With exact alpha and u the residual vector is computed exactly; an exact
/// solution therefore reports exactly 0.
inline double residual_check(const OdeSystem& sys, const OdeSolution& sol,
                             const std::vector<double>& t_samples = default_t_samples()) {
    validate(sys);
    std::vector<std::complex<double>> r0;
    if (sol.is_exact()) {
        GaussVec r = exact_residual_vector(sys, *sol.alpha_exact, *sol.u_components_exact);
        if (is_zero(r)) return 0.0;
        r0 = detail::to_complex(r);
    } else {
        const std::size_t n = sys.n();
        r0.assign(n, 0.0);
        std::complex<double> apow = 1.0;
        for (int k = 0; k <= sys.m; ++k) {
            const MatGauss& a = sys.A[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) r0[i] += a(i, j).to_complex() * apow / sol.u_components[j];
            apow /= sol.alpha;
        }
    }
    double worst = 0;
    const double base = detail::norm2(r0);
    for (double t : t_samples) worst = std::max(worst, base * std::abs(std::exp(-sol.alpha * t)));
    return worst;
}

/// Residual of u_a + u_b, evidencing that sums of solutions are generally not solutions.
inline double demonstrate_nonlinearity(const OdeSystem& sys, const OdeSolution& a, const OdeSolution& b,
                                       const std::vector<double>& t_samples = default_t_samples()) {
    validate(sys);
    if (a.alpha == b.alpha && a.u_components == b.u_components)
        throw Error(Errc::PreconditionViolated, "the two solutions must differ");
    const std::size_t n = sys.n();
    double worst = 0;
    for (double t : t_samples) {
        const auto ea = std::exp(a.alpha * t), eb = std::exp(b.alpha * t);
        std::vector<std::complex<double>> r(n, 0.0);
        std::complex<double> pa = 1.0, pb = 1.0;
        for (int k = 0; k <= sys.m; ++k) {
            const MatGauss& ak = sys.A[static_cast<std::size_t>(k)];
            for (std::size_t j = 0; j < n; ++j) {
                const auto uk = a.u_components[j] * pa * ea + b.u_components[j] * pb * eb;
                if (std::abs(uk) < 1e-300) throw Error(Errc::PreconditionViolated, "sum has a vanishing component");
                for (std::size_t i = 0; i < n; ++i) r[i] += ak(i, j).to_complex() / uk;
            }
            pa *= a.alpha;
            pb *= b.alpha;
        }
        worst = std::max(worst, detail::norm2(r));
    }
    return worst;
}

} // namespace mero
