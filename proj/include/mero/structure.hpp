#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <vector>

#include "mero/roots.hpp"
#include "mero/smith.hpp"

namespace mero {

/// A point of the extended plane at which structure is read off.
///
/// Exact points carry their Q(i) value; numeric points carry an approximation
/// plus the monic square-free factor whose roots all share the same local
/// orders, so every multiplicity stays exact. For the point at infinity, all
/// functions in the report are expressed in zeta = 1/z.
struct Location {
    enum class Kind { Exact, Numeric, Infinity };

    Kind kind = Kind::Exact;
    GaussRat exact;
    std::complex<double> approx;
    Poly factor;

    static Location at(const GaussRat& a) { return {Kind::Exact, a, a.to_complex(), Poly::linear(a)}; }
    static Location numeric(std::complex<double> z, Poly factor) {
        return {Kind::Numeric, {}, z, std::move(factor)};
    }
    static Location infinity() { return {Kind::Infinity, {}, {}, Poly::z()}; }

    bool is_exact() const { return kind == Kind::Exact; }
    bool is_infinity() const { return kind == Kind::Infinity; }

    /// Signed order of f here; infinity is handled by the caller via inversion.
    int valuation(const RatFun& f) const {
        if (kind == Kind::Exact) return f.valuation(exact);
        return f.valuation_along(factor);
    }
};

enum class PointKind { Regular, Zero, Pole, Both };

inline std::string_view point_kind_name(PointKind k) {
    switch (k) {
    case PointKind::Regular: return "regular";
    case PointKind::Zero: return "zero";
    case PointKind::Pole: return "pole";
    case PointKind::Both: return "both";
    }
    return "?";
}

/// Zero and pole data of Q at one point, with the functions read off the
/// unimodular diagonalization S Q T = diag(dtilde).
struct StructureReport {
    Location point;
    PointKind kind = PointKind::Regular;
    std::vector<std::size_t> omega0;  // 0-based indices i with dtilde_i vanishing here
    std::vector<std::size_t> omegaP;  // 0-based indices j with dtilde_j blowing up here
    std::vector<int> partial_zero_mults;
    std::vector<int> partial_pole_mults;
    int geometric_mult_zero = 0;
    int geometric_mult_pole = 0;
    int total_zero_mult = 0;
    int total_pole_mult = 0;
    std::vector<PolyVec> root_functions;              // T_i, i in omega0
    std::vector<RatVec> pole_cancellation_functions;  // T_j / dtilde_j, j in omegaP
    std::vector<PolyVec> pole_functions;              // columns of S^{-1}, j in omegaP
    std::vector<RatVec> inverse_pole_cancellation;    // S^{-1}_i * dtilde_i, i in omega0

    int zero_order() const {
        return partial_zero_mults.empty() ? 0 : *std::max_element(partial_zero_mults.begin(), partial_zero_mults.end());
    }
    int pole_order() const {
        return partial_pole_mults.empty() ? 0 : *std::max_element(partial_pole_mults.begin(), partial_pole_mults.end());
    }
    bool empty() const { return kind == PointKind::Regular; }
};

inline PolyVec poly_column(const MatPoly& m, std::size_t j) { return m.column(j); }

inline RatVec scale(const PolyVec& v, const RatFun& f) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(RatFun(p) * f);
    return out;
}

inline StructureReport zero_pole_structure(const DiagRatForm& diag, const Location& point) {
    StructureReport rep;
    rep.point = point;
    for (std::size_t i = 0; i < diag.n(); ++i) {
        const int v = point.valuation(diag.dtilde[i]);
        if (v > 0) {
            rep.omega0.push_back(i);
            rep.partial_zero_mults.push_back(v);
            rep.total_zero_mult += v;
            rep.root_functions.push_back(poly_column(diag.smith.T, i));
            rep.inverse_pole_cancellation.push_back(scale(poly_column(diag.smith.S_inv, i), diag.dtilde[i]));
        } else if (v < 0) {
            rep.omegaP.push_back(i);
            rep.partial_pole_mults.push_back(-v);
            rep.total_pole_mult += -v;
            rep.pole_cancellation_functions.push_back(scale(poly_column(diag.smith.T, i), diag.dtilde[i].inverse()));
            rep.pole_functions.push_back(poly_column(diag.smith.S_inv, i));
        }
    }
    rep.geometric_mult_zero = static_cast<int>(rep.omega0.size());
    rep.geometric_mult_pole = static_cast<int>(rep.omegaP.size());
    const bool z = !rep.omega0.empty(), p = !rep.omegaP.empty();
    rep.kind = z && p ? PointKind::Both : z ? PointKind::Zero : p ? PointKind::Pole : PointKind::Regular;
    return rep;
}

inline DiagRatForm checked_diag(const RatMatFun& q) {
    try {
        return diag_rational(q);
    } catch (const Error& e) {
        if (e.code() == Errc::SingularInput) throw Error(Errc::SingularFunction, "determinant vanishes identically");
        throw;
    }
}

/// Structure at a finite point; at a point that is neither a zero nor a pole the report is empty.
inline StructureReport zero_pole_structure(const RatMatFun& q, const Location& point) {
    if (point.is_infinity()) {
        StructureReport rep = zero_pole_structure(checked_diag(invert_variable(q)), Location::at(GaussRat(0)));
        rep.point = Location::infinity();
        return rep;
    }
    return zero_pole_structure(checked_diag(q), point);
}

inline StructureReport zero_pole_structure(const RatMatFun& q, const GaussRat& alpha) {
    return zero_pole_structure(q, Location::at(alpha));
}

/// Structure of g(zeta) = Q(1/zeta) at zeta = 0, labelled as the point at infinity.
inline StructureReport structure_at_infinity(const RatMatFun& q) { return zero_pole_structure(q, Location::infinity()); }

/// All finite points where some dtilde_i vanishes or blows up. Exact points
/// first (lexicographic), then numeric ones grouped by factor.
inline std::vector<Location> critical_points(const DiagRatForm& diag) {
    std::vector<Poly> parts;
    for (const auto& d : diag.dtilde) {
        parts.push_back(d.num());
        parts.push_back(d.den());
    }
    std::vector<Location> exact, numeric;
    for (const auto& b : coprime_basis(parts)) {
        RootSet rs = roots_with_multiplicity(b);
        for (const auto& r : rs.exact_roots) exact.push_back(Location::at(r.value));
        for (const auto& r : rs.numeric_roots) numeric.push_back(Location::numeric(r.value, r.factor));
    }
    std::sort(exact.begin(), exact.end(), [](const Location& a, const Location& b) { return lex_less(a.exact, b.exact); });
    exact.insert(exact.end(), numeric.begin(), numeric.end());
    return exact;
}

// --- verification of root and pole-cancellation functions -------------------

struct OrderResult {
    int order = 0;
    /// Q(z)phi(z) has a pole at alpha; phi is then not a root function.
    bool pole = false;
};

/// Minimum signed order of the nonzero components of v at alpha.
inline std::optional<int> min_valuation(const RatVec& v, const Location& at) {
    std::optional<int> m;
    for (const auto& f : v) {
        if (f.is_zero()) continue;
        int x = at.valuation(f);
        if (!m || x < *m) m = x;
    }
    return m;
}

/// Exact order of phi as a root function of Q at alpha; 0 when Q*phi does not vanish there.
inline OrderResult verify_order(const RatMatFun& q, const PolyVec& phi, const GaussRat& alpha) {
    if (is_zero(eval(phi, alpha))) throw Error(Errc::EigvecZero, "phi(alpha) = 0");
    auto m = min_valuation(mat_vec(q, phi), Location::at(alpha));
    if (!m) throw Error(Errc::SingularFunction, "Q*phi vanishes identically");
    if (*m < 0) return {0, true};
    return {*m, false};
}

struct PoleCancellationResult {
    int order = 0;
    GaussVec limit;
    bool is_pole_cancellation = false;
};

inline PoleCancellationResult verify_pole_cancellation(const RatMatFun& q, const RatVec& psi, const GaussRat& beta) {
    const Location at = Location::at(beta);
    RatVec qpsi = mat_vec(q, psi);
    auto mq = min_valuation(qpsi, at);
    if (!mq || *mq > 0) throw Error(Errc::LimitZero, "Q*psi tends to zero");
    if (*mq < 0) throw Error(Errc::LimitInfinite, "Q*psi has no finite limit");
    PoleCancellationResult r;
    for (const auto& f : qpsi) r.limit.push_back(f.is_zero() ? GaussRat() : f.eval(beta));
    auto mp = min_valuation(psi, at);
    r.order = mp && *mp > 0 ? *mp : 0;
    r.is_pole_cancellation = r.order > 0;
    return r;
}

/// At a zero that is not a pole, the root-function order of phi is the same
/// for Q and for the matrix polynomial L = q*Q.
inline bool proposition_L_equivalence(const RatMatFun& q, const PolyVec& phi, const GaussRat& alpha) {
    if (q.den().eval(alpha).is_zero()) throw Error(Errc::PremiseViolated, "alpha is a pole of Q");
    const RatMatFun l(q.numerator(), Poly(1));
    return verify_order(q, phi, alpha).order == verify_order(l, phi, alpha).order;
}

/// Coefficients phi_j(alpha) of phi(z) = sum_j (z - alpha)^j phi_j(alpha), j < count.
inline std::vector<GaussVec> taylor_jordan_vectors(const PolyVec& phi, const GaussRat& alpha, int count) {
    std::vector<GaussVec> out(static_cast<std::size_t>(std::max(count, 0)), GaussVec(phi.size()));
    for (std::size_t i = 0; i < phi.size(); ++i) {
        Poly s = phi[i].shifted(alpha);
        for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)][i] = s.coeff(j);
    }
    return out;
}

// --- whole-function analysis -------------------------------------------------

struct Analysis {
    RatMatFun q;
    DiagRatForm diag;
    RatFun det;
    std::vector<StructureReport> finite;
    StructureReport infinity;
};

/// Sum over finite points of (N - P) and the same at infinity; together they
/// must cancel because the local orders of det Q sum to zero on the sphere.
inline bool global_balance_holds(const Analysis& a) {
    long finite = 0;
    for (const auto& r : a.finite) finite += r.total_zero_mult - r.total_pole_mult;
    const long expected_finite = a.det.num().degree() - a.det.den().degree();
    const long at_inf = a.infinity.total_zero_mult - a.infinity.total_pole_mult;
    return finite == expected_finite && at_inf == -expected_finite;
}

inline Analysis analyze(const RatMatFun& q) {
    Analysis a{q, checked_diag(q), determinant(q), {}, {}};
    if (!verify_diag(q, a.diag)) throw Error(Errc::VerificationFailed, "S*Q*T != diag(dtilde)");
    for (const auto& loc : critical_points(a.diag)) a.finite.push_back(zero_pole_structure(a.diag, loc));
    a.infinity = structure_at_infinity(q);
    if (!global_balance_holds(a)) throw Error(Errc::VerificationFailed, "zero/pole totals do not balance");
    return a;
}

} // namespace mero
