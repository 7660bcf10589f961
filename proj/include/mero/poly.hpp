#pragma once

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mero/error.hpp"
#include "mero/gaussrat.hpp"

namespace mero {

/// Dense univariate polynomial over Q(i), coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(GaussRat c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    Poly(long c) : Poly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<GaussRat> coeffs) : coeffs_(coeffs) { trim(); }

    /// The polynomial z.
    static Poly z() { return Poly{GaussRat(0), GaussRat(1)}; }
    /// c * z^k
    static Poly monomial(GaussRat c, int k) {
        if (c.is_zero()) return {};
        std::vector<GaussRat> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return Poly(std::move(v));
    }
    /// z - a
    static Poly linear(const GaussRat& a) { return Poly{-a, GaussRat(1)}; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    const std::vector<GaussRat>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k, zero outside the stored range.
    GaussRat coeff(int k) const {
        if (k < 0 || k > degree()) return {};
        return coeffs_[static_cast<std::size_t>(k)];
    }
    const GaussRat& lead() const { return coeffs_.back(); }

    GaussRat eval(const GaussRat& x) const {
        GaussRat acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Poly derivative() const {
        if (degree() < 1) return {};
        std::vector<GaussRat> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussRat(static_cast<long>(k));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return {};
        GaussRat inv = lead().inverse();
        return *this * inv;
    }

    /// Polynomial with conjugated coefficients, i.e. z -> conj(p(conj z)).
    Poly conj() const {
        std::vector<GaussRat> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(c.conj());
        return Poly(std::move(v));
    }

    /// Coefficient reversal at a given formal degree: z^d p(1/z).
    Poly reversed(int d) const {
        std::vector<GaussRat> v(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(d - k)] = coeffs_[static_cast<std::size_t>(k)];
        return Poly(std::move(v));
    }

    /// p(z + a), by repeated synthetic division.
    Poly shifted(const GaussRat& a) const {
        std::vector<GaussRat> c = coeffs_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) c[k - 1] += a * c[k];
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<GaussRat> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(-c);
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const GaussRat& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GaussRat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Deterministic total order: by degree, then coefficients from the top down.
    friend bool deg_lex_less(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int k = a.degree(); k >= 0; --k) {
            const auto& x = a.coeffs_[static_cast<std::size_t>(k)];
            const auto& y = b.coeffs_[static_cast<std::size_t>(k)];
            if (x != y) return lex_less(x, y);
        }
        return false;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GaussRat> coeffs_;
};

inline Poly pow(const Poly& p, int k) {
    Poly r(1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<GaussRat> r = a.coeffs();
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<GaussRat> q(static_cast<std::size_t>(dq) + 1);
    const GaussRat inv_lead = b.lead().inverse();
    for (int k = dq; k >= 0; --k) {
        GaussRat c = r[static_cast<std::size_t>(k + db)] * inv_lead;
        if (!c.is_zero()) {
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
        }
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

/// Exact quotient; throws if b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw Error(Errc::VerificationFailed, "exact_div: nonzero remainder");
    return q;
}

inline bool divides(const Poly& b, const Poly& a) { return poly_divrem(a, b).second.is_zero(); }

/// Monic gcd by the Euclidean algorithm (remainders kept monic to limit growth).
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_div(a * b, poly_gcd(a, b)).monic();
}

/// Number of times the monic factor f divides p (p nonzero, deg f >= 1).
inline int factor_multiplicity(Poly p, const Poly& f) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "multiplicity in the zero polynomial");
    int m = 0;
    while (true) {
        auto [q, r] = poly_divrem(p, f);
        if (!r.is_zero()) return m;
        p = std::move(q);
        ++m;
    }
}

/// Multiplicity of a as a root of p.
inline int root_multiplicity(const Poly& p, const GaussRat& a) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root multiplicity in the zero polynomial");
    // Taylor shift: the multiplicity is the index of the first nonzero coefficient of p(z + a).
    Poly s = p.shifted(a);
    int m = 0;
    while (s.coeffs()[static_cast<std::size_t>(m)].is_zero()) ++m;
    return m;
}

struct SquarefreeFactor {
    Poly factor;
    int multiplicity;
};

/// Yun's algorithm: p = unit * prod factor_k^{multiplicity_k}, factors monic,
/// square-free, pairwise coprime, multiplicities strictly increasing.
inline std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "square-free decomposition of zero");
    std::vector<SquarefreeFactor> out;
    if (p.degree() < 1) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = poly_gcd(f, fp);
    Poly b = exact_div(f, a);
    Poly c = exact_div(fp, a);
    Poly d = c - b.derivative();
    int k = 1;
    while (b.degree() >= 1) {
        Poly g = poly_gcd(b, d);
        if (g.degree() >= 1) out.push_back({g, k});
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++k;
    }
    return out;
}

/// Product of the distinct monic irreducible factors of p.
inline Poly radical(const Poly& p) {
    if (p.degree() < 1) return Poly(1);
    return exact_div(p.monic(), poly_gcd(p, p.derivative()));
}

/// Pairwise-coprime monic square-free basis such that every input's radical
/// is a product of basis elements.
inline std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    for (const auto& in : inputs) {
        if (in.degree() < 1) continue;
        Poly f = radical(in);
        std::vector<Poly> next;
        for (auto& b : basis) {
            if (f.degree() < 1) {
                next.push_back(std::move(b));
                continue;
            }
            Poly g = poly_gcd(f, b);
            if (g.degree() < 1) {
                next.push_back(std::move(b));
                continue;
            }
            Poly rest = exact_div(b, g).monic();
            next.push_back(g);
            if (rest.degree() >= 1) next.push_back(std::move(rest));
            f = exact_div(f, g).monic();
        }
        if (f.degree() >= 1) next.push_back(f.monic());
        basis = std::move(next);
    }
    std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) { return deg_lex_less(a, b); });
    return basis;
}

// --- numeric helpers ---------------------------------------------------------

inline std::vector<std::complex<double>> to_complex_coeffs(const Poly& p) {
    std::vector<std::complex<double>> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.to_complex());
    return v;
}

template <typename C>
C horner(const std::vector<C>& coeffs, const C& x) {
    C acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// --- printing ----------------------------------------------------------------

/// Expression-grammar string, e.g. "z^2+4*z+5" or "(1/2+1*i)*z-3".
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const GaussRat& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        std::string term;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            Rat mag = abs(c.re());
            if (k > 0 && mag == 1) term = mono;
            else term = mag.get_str() + (k > 0 ? "*" + mono : "");
        } else {
            term = "(" + to_string(c) + ")" + (k > 0 ? "*" + mono : "");
        }
        if (s.empty()) s = negative ? "-" + term : term;
        else s += (negative ? "-" : "+") + term;
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

} // namespace mero
