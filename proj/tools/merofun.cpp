// merofun: command-line front end for the meromorphic matrix function library.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mero/mero.hpp"

namespace {

using mero::Errc;
using mero::Error;
using json = nlohmann::json;

struct Options {
    std::string input;
    std::string point;
    std::string beta;
    std::string center;
    double radius = 0.5;
    int nodes = 1024;
    bool transcript = false;
    bool compact = false;
};

int exit_code(const Error& e) {
    if (e.code() == Errc::VerificationFailed) return 3;
    return mero::is_input_error(e.code()) ? 1 : 2;
}

json run_analyze(const json& doc, const Options& o) {
    const mero::RatMatFun q = mero::io::matrix_function(doc);
    if (!o.point.empty()) {
        const auto p = mero::parse_point(o.point);
        if (p.infinity) return mero::report::structure(mero::structure_at_infinity(q));
        return mero::report::structure(mero::zero_pole_structure(q, p.value));
    }
    return mero::report::analysis(mero::analyze(q));
}

json run_smith(const json& doc, const Options& o) {
    const mero::RatMatFun q = mero::io::matrix_function(doc);
    const mero::DiagRatForm d = mero::checked_diag(q);
    if (!mero::verify_smith(q.numerator(), d.smith) || !mero::verify_diag(q, d))
        throw Error(Errc::VerificationFailed, "diagonalization identity failed");
    return mero::report::smith(d, o.transcript);
}

json run_logres(const json& doc, const Options& o) {
    const mero::RatMatFun q = mero::io::matrix_function(doc);
    mero::Contour c;
    if (!o.center.empty()) {
        const auto p = mero::parse_point(o.center);
        if (p.infinity) throw Error(Errc::InvalidInput, "contour center must be finite");
        c = {p.value.to_complex(), o.radius, o.nodes};
    } else if (!o.point.empty()) {
        const auto p = mero::parse_point(o.point);
        if (p.infinity) throw Error(Errc::InvalidInput, "contour center must be finite");
        c = mero::isolating_contour(q, p.value.to_complex(), o.nodes);
    } else {
        throw Error(Errc::InvalidInput, "logres needs --center (with --radius) or --point");
    }
    return mero::report::logres(mero::log_residue(q, c), c);
}

json run_solve_ode(const json& doc, const Options&) {
    const mero::OdeSystem sys = mero::io::ode_system(doc);
    return mero::report::ode(sys, mero::solve_system(sys));
}

json run_realize(const json& doc, const Options& o) {
    const mero::RatMatFun q = mero::io::matrix_function(doc);
    std::optional<mero::GaussRat> hint;
    if (!o.beta.empty()) {
        const auto p = mero::parse_point(o.beta);
        if (p.infinity) throw Error(Errc::BadHint, "beta must be finite");
        hint = p.value;
    }
    const mero::Factorization f = mero::factor_at_regular_point(q, hint);
    const mero::Realization r = mero::build_realization(f);
    return mero::report::realization(f, r, mero::kappa_report(q, f.beta));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero/pole structure, diagonalization and realization of rational matrix functions"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "JSON input file")->required();
        sub->add_flag("--json", o.compact, "Compact single-line JSON output");
    };
    auto* analyze = app.add_subcommand("analyze", "Zero/pole structure at all critical points, including infinity");
    add_common(analyze);
    analyze->add_option("--point", o.point, "Only this point: a+bi or inf");
    auto* smith = app.add_subcommand("smith", "Unimodular diagonalization S L T = D");
    add_common(smith);
    smith->add_flag("--emit-transcript", o.transcript, "Include the elementary operations");
    auto* logres = app.add_subcommand("logres", "Logarithmic residue over a circle");
    add_common(logres);
    logres->add_option("--center", o.center, "Circle center a+bi");
    logres->add_option("--radius", o.radius, "Circle radius");
    logres->add_option("--nodes", o.nodes, "Initial number of quadrature nodes");
    logres->add_option("--point", o.point, "Circle isolating this point");
    auto* ode = app.add_subcommand("solve-ode", "Exponential solutions of a reciprocal-derivative system");
    add_common(ode);
    auto* realize = app.add_subcommand("realize", "Bounded-operator realization after factoring out the pole at infinity");
    add_common(realize);
    realize->add_option("--beta", o.beta, "Real regular point used for the factorization");

    CLI11_PARSE(app, argc, argv);

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    std::string bytes;
    const auto emit = [&](const json& j) { std::cout << (o.compact ? j.dump() : j.dump(2)) << '\n'; };
    try {
        bytes = mero::io::read_file(o.input);
        const json doc = mero::io::parse_json(bytes);
        json result;
        if (command == "analyze") result = run_analyze(doc, o);
        else if (command == "smith") result = run_smith(doc, o);
        else if (command == "logres") result = run_logres(doc, o);
        else if (command == "solve-ode") result = run_solve_ode(doc, o);
        else result = run_realize(doc, o);
        emit(mero::report::document(command, bytes, std::move(result)));
        return 0;
    } catch (const Error& e) {
        std::cerr << "merofun " << command << ": " << e.what() << '\n';
        emit(mero::report::error_document(command, bytes, e));
        return exit_code(e);
    }
}
