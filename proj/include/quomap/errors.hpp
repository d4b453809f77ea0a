#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quomap {

enum class Errc {
    // field_core
    NotPrime,
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    NotASubfield,
    // poly_core
    ZeroPolynomial,
    BothZero,
    NotCoprime,
    // poly_factor
    ConstantInput,
    BudgetExceeded,
    // pgl2
    SingularMatrix,
    CapExceeded,
    BadParams,
    IdentityInput,
    DegreeDrop,
    NotMonic,
    // quotient_map
    ZeroDenominator,
    ZeroNumerator,
    ValueAtInfinityIsRoot,
    NoGeneratorFound,
    NoRationalOrbit,
    NotAGenerator,
    // invariant_analysis
    OutsideNR,
    NotIrreducible,
    CertificateViolation,
    NotInvariant,
    MultiplicityMismatch,
    NotSeparable,
    // cli / text
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Parse failure with a position into the offending input, so the CLI can
// print a caret-annotated message.
class ParseFailure : public Error {
  public:
    ParseFailure(std::size_t pos, const std::string& msg, std::string input)
        : Error(Errc::ParseError, msg + " at position " + std::to_string(pos)),
          pos_(pos),
          input_(std::move(input)) {}

    std::size_t pos() const { return pos_; }
    const std::string& input() const { return input_; }

  private:
    std::size_t pos_;
    std::string input_;
};

}  // namespace quomap
