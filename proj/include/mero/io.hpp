#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mero/odesys.hpp"
#include "mero/parser.hpp"

namespace mero::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, "JSON", "malformed input document");
    }
}

/// A matrix entry may be an expression string or a JSON integer.
inline RatFun entry(const json& j) {
    if (j.is_string()) return parse_ratfun(j.get<std::string>());
    if (j.is_number_integer()) return RatFun(GaussRat(Rat(j.get<long>())));
    throw Error(Errc::InvalidInput, "matrix entries must be strings or integers");
}

inline std::vector<std::vector<RatFun>> grid(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw Error(Errc::InvalidInput, "matrix must be a non-empty array of rows");
    std::vector<std::vector<RatFun>> out;
    for (const auto& r : rows) {
        if (!r.is_array()) throw Error(Errc::InvalidInput, "each matrix row must be an array");
        std::vector<RatFun> row;
        for (const auto& e : r) row.push_back(entry(e));
        out.push_back(std::move(row));
    }
    return out;
}

inline RatMatFun matrix_function(const json& doc) {
    if (!doc.is_object() || !doc.contains("matrix")) throw Error(Errc::InvalidInput, "expected {\"matrix\": [[...], ...]}");
    return ratmat_from_rows(grid(doc.at("matrix")));
}

inline MatGauss constant_matrix(const json& rows) {
    const auto g = grid(rows);
    MatGauss m(g.size(), g.front().size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].size() != g.front().size()) throw Error(Errc::NonSquare, "ragged coefficient matrix");
        for (std::size_t j = 0; j < g[i].size(); ++j) {
            if (!g[i][j].is_constant()) throw Error(Errc::InvalidInput, "ODE coefficients must be constants");
            m(i, j) = g[i][j].num().coeff(0);
        }
    }
    if (m.rows() != m.cols()) throw Error(Errc::NonSquare, "coefficient matrix is not square");
    return m;
}

/// {"ode": {"m": 2, "matrices": [A_0, ..., A_m]}} or the inner object on its own;
/// A_k multiplies the reciprocals of the k-th derivatives.
inline OdeSystem ode_system(const json& doc) {
    const json& o = doc.is_object() && doc.contains("ode") ? doc.at("ode") : doc;
    if (!o.is_object() || !o.contains("m") || !o.contains("matrices"))
        throw Error(Errc::InvalidInput, "expected {\"ode\": {\"m\": ..., \"matrices\": [...]}}");
    OdeSystem sys;
    if (!o.at("m").is_number_integer()) throw Error(Errc::InvalidInput, "m must be an integer");
    sys.m = o.at("m").get<int>();
    const json& mats = o.at("matrices");
    if (!mats.is_array() || mats.size() != static_cast<std::size_t>(sys.m) + 1)
        throw Error(Errc::InvalidInput, "need exactly m + 1 coefficient matrices");
    for (const auto& a : mats) sys.A.push_back(constant_matrix(a));
    validate(sys);
    return sys;
}

} // namespace mero::io
