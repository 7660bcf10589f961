// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>

#include "criteria.hpp"

using namespace mero;
using namespace testing_support;
using criteria::Outcome;

namespace {

const StructureReport* at(const Analysis& a, long x) {
    for (const auto& r : a.finite)
        if (r.point.is_exact() && r.point.exact == GaussRat(x)) return &r;
    return nullptr;
}

/// Each target matched by a distinct diagonal entry up to a nonzero constant.
bool same_up_to_units(const std::vector<RatFun>& got, const std::vector<RatFun>& want) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(want.size(), false);
    for (const auto& g : got) {
        bool hit = false;
        for (std::size_t k = 0; k < want.size() && !hit; ++k)
            if (!used[k] && constant_ratio(g, want[k])) used[k] = hit = true;
        if (!hit) return false;
    }
    return true;
}

Outcome example26() {
    Outcome o;
    const RatMatFun q = load("ex_2_6.json");
    const Analysis a = analyze(q);
    const StructureReport* z = at(a, -1);
    const StructureReport* p = at(a, 0);
    o.require(z && z->kind == PointKind::Zero && z->partial_zero_mults == std::vector<int>{4}, "zero at -1 with partial multiplicity (4)");
    o.require(p && p->kind == PointKind::Pole && p->partial_pole_mults == std::vector<int>{2, 2}, "pole at 0 with partial multiplicities (2,2)");
    o.require(same_up_to_units(a.diag.dtilde, {F("5/z^2"), F("5*(z+1)^4/(4*z^2)")}), "dtilde matches diag(5/z^2, 5(z+1)^4/(4z^2))");
    if (!z || z->root_functions.empty()) return o;
    const PolyVec& t2 = z->root_functions[0];
    o.require(verify_order(q, t2, GaussRat(-1)).order == 4, "verify_order(Q, T2, -1) = 4");
    auto chain = taylor_jordan_vectors(t2, GaussRat(-1), 3);
    const GaussRat unit = chain[0][0];
    o.require(!unit.is_zero(), "T2(-1) has a nonzero first component");
    if (unit.is_zero()) return o;
    for (auto& v : chain)
        for (auto& x : v) x /= unit;
    const std::vector<GaussVec> want{{GaussRat(1), GaussRat(Rat(2, 5))}, {GaussRat(0), GaussRat(Rat(2, 5))}, {GaussRat(0), GaussRat(Rat(1, 5))}};
    o.require(chain == want, "Taylor coefficients (1,2/5),(0,2/5),(0,1/5)");
    return o;
}

Outcome example31() {
    Outcome o;
    const RatMatFun q = load("ex_3_1.json");
    const Analysis a = analyze(q);
    const StructureReport* zero = at(a, 0);
    const StructureReport* one = at(a, 1);
    o.require(zero && zero->kind == PointKind::Both && zero->total_zero_mult == 1 && zero->total_pole_mult == 1, "0 is a zero and a pole, each of multiplicity 1");
    o.require(one && one->kind == PointKind::Zero && one->total_zero_mult == 1, "1 is a zero of multiplicity 1");
    const LogResidue r1 = log_residue(q, {{1.0, 0.0}, 0.5, 1024});
    const LogResidue r0 = log_residue(q, {{0.0, 0.0}, 0.5, 1024});
    o.require(std::abs(r1.value - 1.0) < 1e-8, "log residue on |z-1|=1/2 is 1");
    o.require(std::abs(r0.value) < 1e-8, "log residue on |z|=1/2 is 0");
    o.require(determinant(q) == F("1-z"), "det Q = 1 - z");
    return o;
}

Outcome example42() {
    Outcome o;
    const OdeSystem sys = io::ode_system(io::parse_json(io::read_file(std::string(MERO_DATA_DIR) + "/ex_4_2_ode.json")));
    const OdeSolveResult r = solve_system(sys);
    o.require(r.solutions.size() == 2, "exactly two solutions");
    bool u1 = false, u2 = false;
    for (const auto& s : r.solutions) {
        if (!s.is_exact()) continue;
        if (*s.alpha_exact == GaussRat(1) && *s.u_components_exact == GaussVec{GaussRat(1), GaussRat(-1)}) u1 = true;
        if (*s.alpha_exact == GaussRat(-2) && *s.u_components_exact == GaussVec{GaussRat(1), GaussRat(Rat(1, 2))}) u2 = true;
        o.require(residual_check(sys, s) == 0.0, "residual is exactly 0");
    }
    o.require(u1 && u2, "solutions (1,-1)e^t and (1,1/2)e^{-2t}");
    const RatMatFun q = build_Q_from_system(sys);
    const PolyVec t1 = smith_diagonalize(q.numerator()).T.column(0);
    o.require(t1 == PolyVec{Poly(), Poly(1)}, "T1 = (0,1)");
    for (long a : {1L, -2L}) o.require(verify_order(q, t1, GaussRat(a)).order == 0, "T1 is not a root function");
    return o;
}

Outcome example54() {
    Outcome o;
    const RatMatFun l = load("ex_5_4.json");
    const Factorization f = factor_at_regular_point(l, GaussRat(1));
    const StructureReport b = zero_pole_structure(f.Qtilde, GaussRat(1));
    o.require(b.pole_cancellation_functions.size() == 3 && b.partial_pole_mults == std::vector<int>{2, 2, 2} && b.total_pole_mult == 6,
              "three pole cancellation functions of order 2 at beta = 1");
    for (std::size_t k = 0; k < b.pole_cancellation_functions.size(); ++k)
        o.require(verify_pole_cancellation(f.Qtilde, b.pole_cancellation_functions[k], GaussRat(1)).order == 2, "each certified of order 2");
    o.require(structure_at_infinity(l).total_pole_mult == 3, "total pole multiplicity 3 at infinity");
    const IndexReport k = kappa_report(l, GaussRat(1));
    o.require(k.d_beta == 6 && k.kappa_beta == 3 && k.d_inf == 3 && k.kappa_inf == 1 && k.kappa_delta == 2,
              "kappa_report (6,3,3,1,2)");
    try {
        build_realization(f);
        o.require(false, "realization should be rejected");
    } catch (const Error& e) {
        o.require(e.code() == Errc::UnsupportedJordanStructure, "UnsupportedJordanStructure");
    }
    return o;
}

Outcome example55() {
    Outcome o;
    const RatMatFun q = load("ex_5_5.json");
    const Factorization f = factor_at_regular_point(q, GaussRat(-1));
    o.require(f.m == 1 && f.S_limit == MG({{"0", "1"}, {"1", "0"}}), "m = 1 and S = [[0,1],[1,0]]");
    const Realization r = build_realization(f);
    GaussVec eig = r.A_tilde;
    std::sort(eig.begin(), eig.end(), [](const GaussRat& a, const GaussRat& b) { return lex_less(a, b); });
    std::vector<int> signs = r.J_signs;
    std::sort(signs.begin(), signs.end());
    o.require(r.dim_K == 3, "dimension 3");
    o.require(eig == GaussVec{GaussRat(-1), GaussRat(-1), GaussRat(0)}, "eigenvalues {0,-1,-1}");
    o.require(signs == std::vector<int>{-1, -1, 1}, "signs {-1,+1,-1}");
    o.require(verify_realization(r, f.Qtilde), "verify_realization");
    o.require(scale(realization_function(r), F("z+1")) == q, "(z+1)(S + Gamma^* J (A-z)^{-1} Gamma) = Q");
    const RatMatFun& qt = f.Qtilde;
    const PolyVec phi1 = PV({"1", "z*(z-1)"}), phi2 = PV({"0", "1"});
    const RatVec psi1 = RV({"-z*(z+1)", "0"}), psi2 = RV({"-(z+1)/(z-1)", "(z+1)/(z*(z-1)^2)"});
    o.require(sign_limit(qt, psi1, phi1, GaussRat(0), 1) == GaussRat(-1), "sign limit -1 at 0");
    o.require(sign_limit(qt, psi1, phi1, GaussRat(-1), 1) == GaussRat(1), "sign limit 1 at -1");
    o.require(sign_limit(qt, psi2, phi2, GaussRat(-1), 1) == GaussRat(Rat(-1, 4)), "sign limit -1/4 at -1");
    return o;
}

Outcome robustness() {
    Outcome o;
    struct Golden {
        const char* file;
        double cx, radius;
    };
    const std::vector<Golden> contours{{"ex_3_1.json", 1.0, 0.5}, {"ex_3_1.json", 0.0, 0.5}, {"ex_2_6.json", -1.0, 0.5},
                                       {"ex_2_6.json", 0.0, 0.5}, {"ex_5_5.json", 1.0, 0.5}, {"ex_5_5.json", 0.0, 0.5}};
    for (const auto& g : contours) {
        const RatMatFun q = load(g.file);
        const LogResidue base = log_residue(q, {{g.cx, 0.0}, g.radius, 1024});
        o.require(base.doubling_change < 1e-8, std::string(g.file) + ": doubling gap");
        for (double rad : {0.2, 0.35, 0.65, 0.8}) {
            const LogResidue other = log_residue(q, {{g.cx, 0.0}, rad, 1024});
            o.require(std::abs(other.value - base.value) < 1e-8, std::string(g.file) + ": radius invariance");
            o.require(other.doubling_change < 1e-8, std::string(g.file) + ": doubling gap");
        }
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> checks{
        {"1 Example 2.6 zero/pole structure, diagonal form and root function", example26},
        {"2 Example 3.1 both-point, log residues and determinant", example31},
        {"3 Example 4.2 ODE solutions, exact residuals, T1 rejected", example42},
        {"4 Example 5.4 pole chains, index report, Jordan rejection", example54},
        {"5 Example 5.5 factorization, realization and sign limits", example55},
        {"6 200 random functions: S L T = D, det, root maximality, log residue", [] { return criteria::random_structure_suite(6, 200); }},
        {"7 50 random inverses: zeros of Q^-1 are poles of Q", [] { return criteria::duality_suite(7, 50); }},
        {"8 log residue doubling gap and radius invariance", robustness},
    };
    int failed = 0;
    for (const auto& [name, fn] : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", name, ms, o.ok ? "" : ": ", o.detail.c_str());
        if (!o.ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failed, checks.size());
    return failed == 0 ? 0 : 1;
}
