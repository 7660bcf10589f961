#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mero/matfun.hpp"

namespace mero {

/// One elementary unimodular operation of the diagonalization.
struct ElemOp {
    enum class Kind { RowSwap, ColSwap, RowScale, ColScale, RowAdd, ColAdd };
    Kind kind;
    std::size_t target;
    std::size_t source;  // unused for scales
    GaussRat unit;       // scales only
    Poly multiple;       // adds only: target += multiple * source
};

inline std::string_view kind_name(ElemOp::Kind k) {
    switch (k) {
    case ElemOp::Kind::RowSwap: return "row_swap";
    case ElemOp::Kind::ColSwap: return "col_swap";
    case ElemOp::Kind::RowScale: return "row_scale";
    case ElemOp::Kind::ColScale: return "col_scale";
    case ElemOp::Kind::RowAdd: return "row_add";
    case ElemOp::Kind::ColAdd: return "col_add";
    }
    return "?";
}

/// Applies op to m in place (rows for row ops, columns for column ops).
inline void apply_op(const ElemOp& op, MatPoly& m) {
    using K = ElemOp::Kind;
    switch (op.kind) {
    case K::RowSwap: m.swap_rows(op.target, op.source); break;
    case K::ColSwap: m.swap_cols(op.target, op.source); break;
    case K::RowScale:
        for (std::size_t j = 0; j < m.cols(); ++j) m(op.target, j) *= op.unit;
        break;
    case K::ColScale:
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.target) *= op.unit;
        break;
    case K::RowAdd:
        for (std::size_t j = 0; j < m.cols(); ++j) m(op.target, j) += op.multiple * m(op.source, j);
        break;
    case K::ColAdd:
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.target) += op.multiple * m(i, op.source);
        break;
    }
}

/// D = S * L * T with S, T unimodular and D diagonal, monic, degree-sorted.
struct SmithResult {
    MatPoly S;
    MatPoly D;
    MatPoly T;
    MatPoly S_inv;
    MatPoly T_inv;
    GaussRat det_S;
    GaussRat det_T;
    std::vector<ElemOp> transcript;

    std::size_t n() const { return D.rows(); }
    const Poly& diag(std::size_t i) const { return D(i, i); }
};

namespace detail {

class SmithWorkspace {
public:
    explicit SmithWorkspace(const MatPoly& l) : n_(l.rows()) {
        r_.D = l;
        r_.S = r_.S_inv = r_.T = r_.T_inv = MatPoly::identity(n_);
        r_.det_S = r_.det_T = GaussRat(1);
    }

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        push({ElemOp::Kind::RowSwap, a, b, {}, {}});
        r_.S.swap_rows(a, b);
        r_.S_inv.swap_cols(a, b);
        r_.det_S = -r_.det_S;
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        push({ElemOp::Kind::ColSwap, a, b, {}, {}});
        r_.T.swap_cols(a, b);
        r_.T_inv.swap_rows(a, b);
        r_.det_T = -r_.det_T;
    }
    void row_scale(std::size_t t, const GaussRat& c) {
        if (c.is_one()) return;
        ElemOp op{ElemOp::Kind::RowScale, t, t, c, {}};
        push(op);
        apply_op(op, r_.S);
        const GaussRat inv = c.inverse();
        for (std::size_t i = 0; i < n_; ++i) r_.S_inv(i, t) *= inv;
        r_.det_S *= c;
    }
    void row_add(std::size_t t, std::size_t s, const Poly& p) {
        if (p.is_zero()) return;
        ElemOp op{ElemOp::Kind::RowAdd, t, s, {}, p};
        push(op);
        apply_op(op, r_.S);
        for (std::size_t i = 0; i < n_; ++i) r_.S_inv(i, s) -= p * r_.S_inv(i, t);
    }
    void col_add(std::size_t t, std::size_t s, const Poly& p) {
        if (p.is_zero()) return;
        ElemOp op{ElemOp::Kind::ColAdd, t, s, {}, p};
        push(op);
        apply_op(op, r_.T);
        for (std::size_t j = 0; j < n_; ++j) r_.T_inv(s, j) -= p * r_.T_inv(t, j);
    }

    MatPoly& a() { return r_.D; }
    SmithResult take() { return std::move(r_); }

private:
    void push(ElemOp op) {
        apply_op(op, r_.D);
        r_.transcript.push_back(std::move(op));
    }

    std::size_t n_;
    SmithResult r_;
};

} // namespace detail

/// Minimal-degree-pivot Smith diagonalization over Q(i)[z]. Pivot ties are
/// broken row-major; each diagonal entry is made monic and the diagonal is
/// sorted by (degree, coefficients).
inline SmithResult smith_diagonalize(const MatPoly& l) {
    if (!l.is_square()) throw Error(Errc::NonSquare, "matrix polynomial must be square");
    const std::size_t n = l.rows();
    detail::SmithWorkspace w(l);
    auto& a = w.a();
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            std::size_t pi = n, pj = n;
            int best = -1;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (a(i, j).is_zero()) continue;
                    if (best < 0 || a(i, j).degree() < best) {
                        best = a(i, j).degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0) throw Error(Errc::SingularInput, "determinant vanishes identically");
            w.row_swap(k, pi);
            w.col_swap(k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a(i, k).is_zero()) continue;
                auto [q, r] = poly_divrem(a(i, k), a(k, k));
                w.row_add(i, k, -q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a(k, j).is_zero()) continue;
                auto [q, r] = poly_divrem(a(k, j), a(k, k));
                w.col_add(j, k, -q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            // Divisibility: the pivot must divide the rest of the trailing block.
            bool divisible = true;
            for (std::size_t i = k + 1; i < n && divisible; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!a(i, j).is_zero() && !divides(a(k, k), a(i, j))) {
                        w.row_add(k, i, Poly(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        w.row_scale(k, a(k, k).lead().inverse());
    }
    // Selection sort of the diagonal (a no-op whenever divisibility already orders it).
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t m = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (deg_lex_less(a(i, i), a(m, m))) m = i;
        if (m != k) {
            w.row_swap(k, m);
            w.col_swap(k, m);
        }
    }
    return w.take();
}

/// Returns the constant determinant of a unimodular matrix polynomial.
inline GaussRat verify_unimodular(const MatPoly& m) {
    Poly d = poly_det(m);
    if (d.is_zero() || d.degree() > 0) throw Error(Errc::NotUnimodular, "determinant is not a nonzero constant");
    return d.coeff(0);
}

/// Unimodular diagonalization of Q = L/q: S*Q*T = diag(dtilde).
struct DiagRatForm {
    SmithResult smith;
    Poly q;
    std::vector<RatFun> dtilde;

    std::size_t n() const { return dtilde.size(); }
};

inline DiagRatForm diag_rational(const RatMatFun& q) {
    DiagRatForm out{smith_diagonalize(q.numerator()), q.den(), {}};
    for (std::size_t i = 0; i < q.n(); ++i) out.dtilde.emplace_back(out.smith.D(i, i), q.den());
    return out;
}

/// S*L*T == D, S_inv*S == I, T*T_inv == I, all exactly.
inline bool verify_smith(const MatPoly& l, const SmithResult& r) {
    const auto id = MatPoly::identity(l.rows());
    if (r.S * l * r.T != r.D) return false;
    if (r.S * r.S_inv != id || r.T * r.T_inv != id) return false;
    for (std::size_t i = 0; i < r.D.rows(); ++i)
        for (std::size_t j = 0; j < r.D.cols(); ++j)
            if (i != j && !r.D(i, j).is_zero()) return false;
    return true;
}

/// S(z) Q(z) T(z) == diag(dtilde) as rational matrix functions.
inline bool verify_diag(const RatMatFun& q, const DiagRatForm& f) {
    MatRat lhs = f.smith.S.map([](const Poly& p) { return RatFun(p); }) * q.entries() *
                 f.smith.T.map([](const Poly& p) { return RatFun(p); });
    for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = 0; j < f.n(); ++j)
            if (lhs(i, j) != (i == j ? f.dtilde[i] : RatFun())) return false;
    return true;
}

} // namespace mero
