#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "mero/structure.hpp"

namespace mero {

/// Q(z) = (z - beta)^m * Qtilde(z) with Qtilde holomorphic at infinity.
struct Factorization {
    GaussRat beta;
    int m = 0;
    RatMatFun Qtilde;
    MatGauss S_limit;
};

/// One rank-one term eps * weight * gamma gamma^* of a Hermitian matrix.
/// weight is 1 whenever it is a rational square (the square root is folded into gamma).
struct SignedTerm {
    GaussVec gamma;
    int sign = 1;
    Rat weight{1};
};

/// Qtilde(z) = S + Gamma^* J W (Atilde - z)^{-1} Gamma, Atilde and J diagonal.
/// Row k of Gamma is gamma_k^*; W = diag(weights) is the identity unless some
/// residue needed an irrational scale.
struct Realization {
    std::size_t dim_K = 0;
    GaussVec A_tilde;
    std::vector<int> J_signs;
    MatGauss Gamma;
    std::vector<Rat> weights;
    MatGauss S_limit;
};

struct IndexReport {
    int d_beta = 0;
    int d_inf = 0;
    int kappa_beta = 0;
    int kappa_inf = 0;
    int kappa_delta = 0;
};

inline bool is_symmetric(const RatMatFun& q) {
    for (std::size_t i = 0; i < q.n(); ++i)
        for (std::size_t j = i; j < q.n(); ++j)
            if (q.entry(i, j) != q.entry(j, i).conj()) return false;
    return true;
}

/// Largest entry pole order at infinity (0 when holomorphic there).
inline int pole_order_at_infinity(const RatMatFun& q) {
    int m = 0;
    for (std::size_t i = 0; i < q.n(); ++i)
        for (std::size_t j = 0; j < q.n(); ++j) {
            RatFun f = q.entry(i, j);
            if (!f.is_zero()) m = std::max(m, f.degree_excess());
        }
    return m;
}

inline bool is_regular_point(const RatMatFun& q, const GaussRat& b) {
    if (q.den().eval(b).is_zero()) return false;
    return !poly_det(q.numerator()).eval(b).is_zero();
}

inline MatGauss limit_at_infinity(const RatMatFun& q) {
    const std::size_t n = q.n();
    MatGauss s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFun f = q.entry(i, j);
            if (f.is_zero()) continue;
            const int e = f.degree_excess();
            if (e > 0) throw Error(Errc::PoleAtInfinity, "entry has a pole at infinity");
            if (e == 0) s(i, j) = f.num().lead() / f.den().lead();
        }
    return s;
}

inline Factorization factor_at_regular_point(const RatMatFun& q, const std::optional<GaussRat>& beta_hint = std::nullopt) {
    if (!is_symmetric(q)) throw Error(Errc::NotSymmetric, "Q(conj z)^* != Q(z)");
    if (poly_det(q.numerator()).is_zero()) throw Error(Errc::SingularFunction, "determinant vanishes identically");
    Factorization f;
    if (beta_hint) {
        if (!beta_hint->is_real() || !is_regular_point(q, *beta_hint))
            throw Error(Errc::BadHint, "beta must be a real regular point of Q");
        f.beta = *beta_hint;
    } else {
        bool found = false;
        for (long k = 0; k <= 2000 && !found; ++k) {
            const long cand = k % 2 == 0 ? -(k / 2) : (k + 1) / 2;  // 0, 1, -1, 2, -2, ...
            if (is_regular_point(q, GaussRat(cand))) {
                f.beta = GaussRat(cand);
                found = true;
            }
        }
        if (!found) throw Error(Errc::NoRegularPoint, "no regular integer point in [-1000, 1000]");
    }
    f.m = pole_order_at_infinity(q);
    f.Qtilde = f.m == 0 ? q : scale(q, RatFun(Poly(1), pow(Poly::linear(f.beta), f.m)));
    f.S_limit = limit_at_infinity(f.Qtilde);
    if (scale(f.Qtilde, RatFun(pow(Poly::linear(f.beta), f.m))) != q)
        throw Error(Errc::VerificationFailed, "(z - beta)^m Qtilde != Q");
    return f;
}

/// R = -Res_{z=lambda} Qtilde(z) at a simple pole.
inline MatGauss residue_matrix(const RatMatFun& qt, const GaussRat& lambda) {
    const std::size_t n = qt.n();
    MatGauss r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFun f = qt.entry(i, j);
            const int mult = root_multiplicity(f.den(), lambda);
            if (mult == 0) continue;
            if (mult > 1) throw Error(Errc::NotSimplePole, "entry has a pole of order > 1");
            const Poly rest = exact_div(f.den(), Poly::linear(lambda));
            r(i, j) = -(f.num().eval(lambda) / rest.eval(lambda));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j) != r(j, i).conj()) throw Error(Errc::NotHermitian, "residue matrix is not Hermitian");
    return r;
}

namespace detail {

/// sqrt of a nonnegative rational, when it is itself rational.
inline std::optional<Rat> rational_sqrt(const Rat& w) {
    if (sgn(w) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(w.get_num_mpz_t()) || !mpz_perfect_square_p(w.get_den_mpz_t())) return std::nullopt;
    BigInt a, b;
    mpz_sqrt(a.get_mpz_t(), w.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), w.get_den_mpz_t());
    Rat r(a, b);
    r.canonicalize();
    return r;
}

} // namespace detail

/// R = sum_k eps_k w_k gamma_k gamma_k^* by exact Hermitian rank-one peeling.
/// Pivot: the diagonal entry of largest norm (ties row-major); when the whole
/// diagonal is zero, the direction e_i + conj(R_ij) e_j of the first nonzero
/// off-diagonal entry. The number of terms is rank R; the signs are its inertia.
inline std::vector<SignedTerm> signed_rank_factorization(MatGauss r) {
    const std::size_t n = r.rows();
    std::vector<SignedTerm> out;
    while (true) {
        GaussVec x(n);
        std::optional<std::size_t> piv;
        for (std::size_t k = 0; k < n; ++k)
            if (!r(k, k).is_zero() && (!piv || r(k, k).norm() > r(*piv, *piv).norm())) piv = k;
        if (piv) {
            x[*piv] = GaussRat(1);
        } else {
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && !r(i, j).is_zero()) {
                        x[i] = GaussRat(1);
                        x[j] = r(i, j).conj();
                        found = true;
                        break;
                    }
            if (!found) break;
        }
        GaussVec c = mat_vec(r, x);
        GaussRat d;
        for (std::size_t i = 0; i < n; ++i) d += x[i].conj() * c[i];
        if (!d.is_real() || d.is_zero()) throw Error(Errc::NotHermitian, "pivot is not a nonzero real");
        // (1/d) c c^* = d * gamma gamma^*, gamma = c/d
        SignedTerm t;
        t.sign = sgn(d.re()) > 0 ? 1 : -1;
        t.weight = abs(d.re());
        const GaussRat dinv = d.inverse();
        for (const auto& ci : c) t.gamma.push_back(ci * dinv);
        if (auto s = detail::rational_sqrt(t.weight)) {
            for (auto& g : t.gamma) g *= GaussRat(*s);
            t.weight = 1;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) -= c[i] * c[j].conj() * dinv;
        out.push_back(std::move(t));
    }
    return out;
}

/// S + sum_k eps_k w_k gamma_k gamma_k^* / (lambda_k - z) as a canonical rational matrix function.
inline RatMatFun realization_function(const Realization& real) {
    const std::size_t n = real.S_limit.rows();
    MatRat e = real.S_limit.map([](const GaussRat& x) { return RatFun(x); });
    for (std::size_t k = 0; k < real.dim_K; ++k) {
        // 1/(lambda - z)
        const RatFun res(Poly(GaussRat(real.J_signs[k]) * GaussRat(real.weights[k])),
                         Poly{real.A_tilde[k], GaussRat(-1)});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // Gamma row k holds gamma_k^*, so gamma_k gamma_k^* has entries conj(G_ki) G_kj.
                const GaussRat g = real.Gamma(k, i).conj() * real.Gamma(k, j);
                if (!g.is_zero()) e(i, j) += res * RatFun(g);
            }
    }
    return ratmat_from_entries(e);
}

inline bool verify_realization(const Realization& real, const RatMatFun& qt) {
    return realization_function(real) == qt;
}

/// Bounded-operator realization of Qtilde in the semisimple case.
inline Realization build_realization(const Factorization& fact) {
    const RatMatFun& qt = fact.Qtilde;
    const std::size_t n = qt.n();
    RootSet poles = qt.den().degree() >= 1 ? roots_with_multiplicity(qt.den()) : RootSet{};
    if (!poles.numeric_roots.empty()) throw Error(Errc::NumericPole, "pole location is not exactly representable");
    for (const auto& p : poles.exact_roots)
        if (p.multiplicity > 1) throw Error(Errc::UnsupportedJordanStructure, "pole of order > 1 needs Jordan blocks");
    for (const auto& p : poles.exact_roots)
        if (!p.value.is_real()) throw Error(Errc::NonRealPole, "non-real pole");
    std::vector<GaussRat> lambdas;
    for (const auto& p : poles.exact_roots) lambdas.push_back(p.value);
    std::sort(lambdas.begin(), lambdas.end(), [](const GaussRat& a, const GaussRat& b) { return b.re() < a.re(); });

    Realization real;
    real.S_limit = fact.S_limit;
    std::vector<GaussVec> rows;
    for (const auto& lambda : lambdas) {
        const auto terms = signed_rank_factorization(residue_matrix(qt, lambda));
        const StructureReport rep = zero_pole_structure(qt, lambda);
        if (static_cast<int>(terms.size()) != rep.total_pole_mult)
            throw Error(Errc::VerificationFailed, "residue rank differs from pole multiplicity");
        for (const auto& t : terms) {
            real.A_tilde.push_back(lambda);
            real.J_signs.push_back(t.sign);
            real.weights.push_back(t.weight);
            GaussVec row;
            for (const auto& g : t.gamma) row.push_back(g.conj());
            rows.push_back(std::move(row));
        }
    }
    real.dim_K = rows.size();
    real.Gamma = MatGauss(real.dim_K, n);
    for (std::size_t k = 0; k < real.dim_K; ++k)
        for (std::size_t j = 0; j < n; ++j) real.Gamma(k, j) = rows[k][j];
    if (!verify_realization(real, qt)) throw Error(Errc::VerificationFailed, "realization does not reproduce Qtilde");
    return real;
}

/// sum_i psi_i(z) * conj-coefficient phihat_i(z).
inline RatFun pairing(const RatVec& psi, const RatVec& phihat) {
    RatFun s;
    for (std::size_t i = 0; i < psi.size(); ++i) s += psi[i] * phihat[i].conj();
    return s;
}

/// lim_{z -> beta} (Psi(z), phihat(z)) / (z - beta)^t.
inline GaussRat sign_limit(const RatMatFun& qt, const RatVec& psi, const PolyVec& phihat, const GaussRat& beta, int t) {
    if (!qt.den().eval(beta).is_zero()) throw Error(Errc::PreconditionViolated, "beta is not a pole");
    const RatFun inner = pairing(psi, RatVec(phihat.begin(), phihat.end()));
    if (inner.is_zero() || inner.valuation(beta) != t) throw Error(Errc::LimitUndefined, "limit is zero or infinite");
    return (inner / RatFun(pow(Poly::linear(beta), t))).eval(beta);
}

namespace detail {

/// Negative-index contribution of the pole chains of f at zeta = point.
/// Even chains of length t add t/2; odd chains add floor(t/2) plus one for
/// each negative sign among the Gram values lim (Psi_j, phihat_k)/(z-p)^t,
/// Psi_j = -psi_j (the pole cancellation functions of -f^{-1}).
inline int chain_kappa(const RatMatFun& f, const GaussRat& point) {
    const DiagRatForm diag = checked_diag(f);
    const StructureReport rep = zero_pole_structure(diag, Location::at(point));
    std::map<int, std::vector<std::size_t>> by_length;
    for (std::size_t k = 0; k < rep.omegaP.size(); ++k) by_length[rep.partial_pole_mults[k]].push_back(k);
    int kappa = 0;
    for (const auto& [t, idx] : by_length) {
        kappa += static_cast<int>(idx.size()) * (t / 2);
        if (t % 2 == 0) continue;
        const std::size_t s = idx.size();
        MatGauss h(s, s);
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b) {
                RatVec psi;
                for (const auto& x : rep.pole_cancellation_functions[idx[a]]) psi.push_back(-x);
                const PolyVec& ph = rep.pole_functions[idx[b]];
                const RatFun inner = pairing(psi, RatVec(ph.begin(), ph.end()));
                if (inner.is_zero()) continue;
                const int v = inner.valuation(point);
                if (v < t) throw Error(Errc::SignUndetermined, "chain pairing has no finite limit");
                if (v == t) h(a, b) = (inner / RatFun(pow(Poly::linear(point), t))).eval(point);
            }
        std::vector<SignedTerm> terms;
        try {
            terms = signed_rank_factorization(h);
        } catch (const Error&) {
            throw Error(Errc::SignUndetermined, "chain sign matrix is not Hermitian");
        }
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b)
                if (h(a, b) != h(b, a).conj()) throw Error(Errc::SignUndetermined, "chain sign matrix is not Hermitian");
        if (terms.size() != s) throw Error(Errc::SignUndetermined, "degenerate chain sign");
        for (const auto& term : terms)
            if (term.sign < 0) ++kappa;
    }
    return kappa;
}

} // namespace detail

/// Dimensions and negative indices of the root spaces at beta (for Qtilde)
/// and at infinity (for Q); kappa_delta = kappa_beta - kappa_inf is the shift
/// of the total negative index caused by the factorization.
inline IndexReport kappa_report(const RatMatFun& q, const GaussRat& beta) {
    const Factorization fact = factor_at_regular_point(q, beta);
    IndexReport r;
    r.d_beta = zero_pole_structure(fact.Qtilde, beta).total_pole_mult;
    r.kappa_beta = r.d_beta > 0 ? detail::chain_kappa(fact.Qtilde, beta) : 0;
    const RatMatFun g_neg = scale(invert_variable(q), RatFun(-1));
    r.d_inf = structure_at_infinity(q).total_pole_mult;
    r.kappa_inf = r.d_inf > 0 ? detail::chain_kappa(g_neg, GaussRat(0)) : 0;
    r.kappa_delta = r.kappa_beta - r.kappa_inf;
    return r;
}

} // namespace mero
