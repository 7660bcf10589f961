#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mero/mero.hpp"

namespace testing_support {

using namespace mero;

inline Poly P(const std::string& s) {
    RatFun f = parse_ratfun(s);
    if (!f.is_polynomial()) throw Error(Errc::InvalidInput, "not a polynomial: " + s);
    return f.num();
}

inline RatFun F(const std::string& s) { return parse_ratfun(s); }
inline GaussRat G(const std::string& s) { return parse_point(s).value; }

inline RatMatFun M(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<RatFun>> g;
    for (const auto& r : rows) {
        std::vector<RatFun> row;
        for (const auto& e : r) row.push_back(F(e));
        g.push_back(row);
    }
    return ratmat_from_rows(g);
}

inline MatGauss MG(const std::vector<std::vector<std::string>>& rows) {
    MatGauss m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = G(rows[i][j]);
    return m;
}

inline PolyVec PV(const std::vector<std::string>& v) {
    PolyVec out;
    for (const auto& s : v) out.push_back(P(s));
    return out;
}

inline RatVec RV(const std::vector<std::string>& v) {
    RatVec out;
    for (const auto& s : v) out.push_back(F(s));
    return out;
}

inline RatMatFun load(const std::string& name) {
    return io::matrix_function(io::parse_json(io::read_file(std::string(MERO_DATA_DIR) + "/" + name)));
}

inline MatRat as_rat(const MatPoly& m) {
    return m.map([](const Poly& p) { return RatFun(p); });
}

// ---------------------------------------------------------------------------
// Independent oracles. None of these reuse the library routine they check.

/// Leibniz expansion of the determinant over permutations.
inline RatFun leibniz_det(const MatRat& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    RatFun total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        RatFun term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Order of vanishing of f at a, counting divisions by (z - a) with remainder checks.
inline int division_count(Poly f, const GaussRat& a) {
    int k = 0;
    const Poly lin{-a, GaussRat(1)};
    while (!f.is_zero()) {
        auto [q, r] = poly_divrem(f, lin);
        if (!r.is_zero()) break;
        f = q;
        ++k;
    }
    return k;
}

inline int oracle_valuation(const RatFun& f, const GaussRat& a) {
    return division_count(f.num(), a) - division_count(f.den(), a);
}

/// Number of leading Taylor coefficients of f at a that vanish, found by
/// differentiating and evaluating; f must be holomorphic at a and nonzero.
inline int taylor_order(RatFun f, const GaussRat& a, int cap = 64) {
    for (int k = 0; k < cap; ++k) {
        if (!f.eval(a).is_zero()) return k;
        f = f.derivative();
    }
    return cap;
}

/// Order of a vector function: minimum Taylor order over its nonzero components.
inline int taylor_order(const RatVec& v, const GaussRat& a) {
    int best = 1 << 20;
    for (const auto& f : v)
        if (!f.is_zero()) best = std::min(best, taylor_order(f, a));
    return best;
}

/// Exponent of the monic square-free factor f in p, by repeated exact division.
inline int factor_power(Poly p, const Poly& f) {
    int k = 0;
    while (!p.is_zero()) {
        auto [q, r] = poly_divrem(p, f);
        if (!r.is_zero()) break;
        p = q;
        ++k;
    }
    return k;
}

/// Ratio of two rational functions if it is a nonzero constant.
inline std::optional<GaussRat> constant_ratio(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    RatFun r = a / b;
    if (!r.is_constant()) return std::nullopt;
    return r.num().coeff(0);
}

// ---------------------------------------------------------------------------
// Random instances with small integer data.

class RandomFunctions {
public:
    explicit RandomFunctions(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Poly poly(int max_deg, int c) {
        const int d = uniform(0, max_deg);
        std::vector<GaussRat> co;
        for (int k = 0; k <= d; ++k) co.emplace_back(static_cast<long>(uniform(-c, c)));
        if (co.back().is_zero()) co.back() = GaussRat(1);
        return Poly(co);
    }

    /// Denominators are products of linear factors at small integers (or 1),
    /// so poles sit at exactly representable points.
    Poly denominator() {
        Poly d(1);
        const int factors = uniform(0, 2);
        for (int k = 0; k < factors; ++k) d *= Poly::linear(GaussRat(static_cast<long>(uniform(-2, 2))));
        return d;
    }

    RatFun entry() {
        if (uniform(0, 3) == 0) return RatFun();
        return RatFun(poly(2, 3), denominator());
    }

    /// A random n x n function with det not identically zero.
    RatMatFun function(std::size_t n) {
        while (true) {
            MatRat e(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) e(i, j) = entry();
            RatMatFun q = ratmat_from_entries(e);
            if (!poly_det(q.numerator()).is_zero()) return q;
        }
    }

private:
    std::mt19937 rng_;
};

} // namespace testing_support
