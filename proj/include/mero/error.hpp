#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mero {

enum class Errc {
    // exactalg
    DivisionByZeroPoly,
    BothZero,
    ZeroPolynomial,
    // matfun
    NonSquare,
    SingularFunction,
    EvalAtPole,
    // smithform
    SingularInput,
    NotUnimodular,
    // structure
    EigvecZero,
    LimitInfinite,
    LimitZero,
    PremiseViolated,
    // logres
    ContourThroughSingularity,
    NonConvergent,
    // odesys
    TrivialSystem,
    ZeroLeading,
    ZeroComponent,
    PreconditionViolated,
    // realization
    NotSymmetric,
    NoRegularPoint,
    BadHint,
    PoleAtInfinity,
    NotSimplePole,
    NotHermitian,
    UnsupportedJordanStructure,
    NumericPole,
    NonRealPole,
    LimitUndefined,
    SignUndetermined,
    // cli
    ParseError,
    InvalidInput,
    // internal identity check failed
    VerificationFailed,
};

constexpr std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonSquare: return "NonSquare";
    case Errc::SingularFunction: return "SingularFunction";
    case Errc::EvalAtPole: return "EvalAtPole";
    case Errc::SingularInput: return "SingularInput";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::EigvecZero: return "EigvecZero";
    case Errc::LimitInfinite: return "LimitInfinite";
    case Errc::LimitZero: return "LimitZero";
    case Errc::PremiseViolated: return "PremiseViolated";
    case Errc::ContourThroughSingularity: return "ContourThroughSingularity";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::TrivialSystem: return "TrivialSystem";
    case Errc::ZeroLeading: return "ZeroLeading";
    case Errc::ZeroComponent: return "ZeroComponent";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoRegularPoint: return "NoRegularPoint";
    case Errc::BadHint: return "BadHint";
    case Errc::PoleAtInfinity: return "PoleAtInfinity";
    case Errc::NotSimplePole: return "NotSimplePole";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::UnsupportedJordanStructure: return "UnsupportedJordanStructure";
    case Errc::NumericPole: return "NumericPole";
    case Errc::NonRealPole: return "NonRealPole";
    case Errc::LimitUndefined: return "LimitUndefined";
    case Errc::SignUndetermined: return "SignUndetermined";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

/// Errors that come from malformed input rather than from the mathematics.
constexpr bool is_input_error(Errc e) {
    switch (e) {
    case Errc::ParseError:
    case Errc::InvalidInput:
    case Errc::NonSquare:
    case Errc::BadHint:
    case Errc::TrivialSystem:
    case Errc::ZeroLeading:
    case Errc::NotSymmetric:
    case Errc::PreconditionViolated:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Thrown by the expression parser; carries the byte offset and what was expected there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, const std::string& what)
        : Error(Errc::ParseError, what + " at offset " + std::to_string(offset) +
                                      " (expected " + expected + ")"),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace mero
