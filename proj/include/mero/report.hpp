#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mero/logres.hpp"
#include "mero/odesys.hpp"
#include "mero/realization.hpp"

namespace mero::report {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json exact(const GaussRat& a) { return to_string(a); }
inline json exact(const Poly& p) { return to_string(p); }
inline json exact(const RatFun& f) { return to_string(f); }

template <class T>
json exact(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

template <class T>
json exact(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(exact(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json complex_value(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json complex_vector(const std::vector<std::complex<double>>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(complex_value(z));
    return a;
}

inline json one_based(const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (auto i : idx) a.push_back(i + 1);
    return a;
}

inline json location(const Location& loc) {
    switch (loc.kind) {
    case Location::Kind::Exact: return json{{"exact", exact(loc.exact)}};
    case Location::Kind::Infinity: return json{{"infinity", true}, {"variable", "zeta = 1/z"}};
    case Location::Kind::Numeric:
        return json{{"approx", complex_value(loc.approx)}, {"factor", exact(loc.factor)}, {"tolerance", kRootResidualTol}};
    }
    return {};
}

inline json structure(const StructureReport& r) {
    return json{
        {"point", location(r.point)},
        {"kind", point_kind_name(r.kind)},
        {"omega0", one_based(r.omega0)},
        {"omegaP", one_based(r.omegaP)},
        {"partial_zero_multiplicities", r.partial_zero_mults},
        {"partial_pole_multiplicities", r.partial_pole_mults},
        {"geometric_multiplicity_zero", r.geometric_mult_zero},
        {"geometric_multiplicity_pole", r.geometric_mult_pole},
        {"total_zero_multiplicity", r.total_zero_mult},
        {"total_pole_multiplicity", r.total_pole_mult},
        {"root_functions", exact(r.root_functions)},
        {"pole_cancellation_functions", exact(r.pole_cancellation_functions)},
        {"pole_functions", exact(r.pole_functions)},
        {"inverse_pole_cancellation_functions", exact(r.inverse_pole_cancellation)},
    };
}

inline json transcript(const std::vector<ElemOp>& ops) {
    json a = json::array();
    for (const auto& op : ops) {
        json o{{"op", kind_name(op.kind)}, {"target", op.target + 1}};
        switch (op.kind) {
        case ElemOp::Kind::RowSwap:
        case ElemOp::Kind::ColSwap: o["source"] = op.source + 1; break;
        case ElemOp::Kind::RowScale:
        case ElemOp::Kind::ColScale: o["unit"] = exact(op.unit); break;
        case ElemOp::Kind::RowAdd:
        case ElemOp::Kind::ColAdd:
            o["source"] = op.source + 1;
            o["multiple"] = exact(op.multiple);
            break;
        }
        a.push_back(std::move(o));
    }
    return a;
}

inline json smith(const DiagRatForm& d, bool with_transcript) {
    json j{
        {"denominator", exact(d.q)},
        {"S", exact(d.smith.S)},
        {"D", exact(d.smith.D)},
        {"T", exact(d.smith.T)},
        {"S_inv", exact(d.smith.S_inv)},
        {"T_inv", exact(d.smith.T_inv)},
        {"det_S", exact(d.smith.det_S)},
        {"det_T", exact(d.smith.det_T)},
        {"dtilde", exact(d.dtilde)},
    };
    if (with_transcript) j["transcript"] = transcript(d.smith.transcript);
    return j;
}

inline json analysis(const Analysis& a) {
    json pts = json::array();
    for (const auto& r : a.finite) pts.push_back(structure(r));
    return json{
        {"denominator", exact(a.q.den())},
        {"numerator", exact(a.q.numerator())},
        {"determinant", exact(a.det)},
        {"dtilde", exact(a.diag.dtilde)},
        {"finite_points", std::move(pts)},
        {"infinity", structure(a.infinity)},
    };
}

inline json logres(const LogResidue& r, const Contour& c) {
    return json{
        {"center", complex_value(c.center)},
        {"radius", c.radius},
        {"value", complex_value(r.value)},
        {"nearest_integer", r.nearest_int},
        {"gap", r.gap},
        {"doubling_change", r.doubling_change},
        {"nodes_used", r.nodes_used},
        {"tolerance", kNonConvergenceTol},
    };
}

inline json ode_solution(const OdeSystem& sys, const OdeSolution& s) {
    json j{
        {"alpha", complex_value(s.alpha)},
        {"eigenvector", complex_vector(s.eigenvector)},
        {"u_coefficients", complex_vector(s.u_components)},
        {"residual", residual_check(sys, s)},
    };
    if (s.alpha_exact) j["alpha_exact"] = exact(*s.alpha_exact);
    if (s.eigenvector_exact) j["eigenvector_exact"] = exact(*s.eigenvector_exact);
    if (s.u_components_exact) j["u_coefficients_exact"] = exact(*s.u_components_exact);
    return j;
}

inline json ode(const OdeSystem& sys, const OdeSolveResult& r) {
    json sols = json::array();
    for (const auto& s : r.solutions) sols.push_back(ode_solution(sys, s));
    json ex = json::array();
    for (const auto& e : r.excluded) {
        json j{{"alpha", complex_value(e.alpha)}, {"index", e.index + 1}, {"reason", e.reason},
               {"eigenvector", complex_vector(e.eigenvector)}};
        if (e.alpha_exact) j["alpha_exact"] = exact(*e.alpha_exact);
        if (e.eigenvector_exact) j["eigenvector_exact"] = exact(*e.eigenvector_exact);
        ex.push_back(std::move(j));
    }
    json geo = json::array();
    for (const auto& [loc, g] : r.geometric_multiplicities)
        geo.push_back(json{{"point", location(loc)}, {"geometric_multiplicity", g}});
    return json{{"solutions", std::move(sols)}, {"excluded", std::move(ex)}, {"geometric_multiplicities", std::move(geo)},
                {"form", "u_j(t) = u_coefficients[j] * exp(alpha * t)"}};
}

inline json realization(const Factorization& f, const Realization& r, const IndexReport& idx) {
    std::vector<Rat> w = r.weights;
    json weights = json::array();
    for (const auto& x : w) weights.push_back(to_string(x));
    return json{
        {"beta", exact(f.beta)},
        {"m", f.m},
        {"Qtilde", json{{"numerator", exact(f.Qtilde.numerator())}, {"denominator", exact(f.Qtilde.den())}}},
        {"S", exact(f.S_limit)},
        {"dimension", r.dim_K},
        {"A_tilde", exact(r.A_tilde)},
        {"J", r.J_signs},
        {"weights", std::move(weights)},
        {"Gamma", exact(r.Gamma)},
        {"verified", true},
        {"indices",
         json{{"d_beta", idx.d_beta}, {"d_inf", idx.d_inf}, {"kappa_beta", idx.kappa_beta}, {"kappa_inf", idx.kappa_inf},
              {"kappa_delta", idx.kappa_delta}}},
    };
}

inline json document(std::string_view command, std::string_view input_bytes, json result) {
    return json{
        {"schema_version", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"command", command},
        {"input_digest", "fnv1a64:" + fnv1a_hex(input_bytes)},
        {"result", std::move(result)},
    };
}

inline json error_document(std::string_view command, std::string_view input_bytes, const Error& e) {
    return document(command, input_bytes, json{{"error", errc_name(e.code())}, {"message", e.what()}});
}

} // namespace mero::report
