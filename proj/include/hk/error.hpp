#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hk {

enum class ErrorCode {
  GcdOfZeros,
  BadModulus,
  ZeroDivisorInversion,
  NotHenselCode,
  NotTrick1Shape,
  ZeroPoly,
  NotLeftmostIsolated,
  UncertifiedModulus,
  NotAUnit,
  NotIdempotent,
  BadFactorisation,
  NotSeparable,
  BadDenominator,
  DivisionByZero,
  InvalidField,
  InvalidArgument,
  ParseError,
  Internal,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::GcdOfZeros: return "GCD_OF_ZEROS";
    case ErrorCode::BadModulus: return "BAD_MODULUS";
    case ErrorCode::ZeroDivisorInversion: return "ZERO_DIVISOR_INVERSION";
    case ErrorCode::NotHenselCode: return "NOT_HENSEL_CODE";
    case ErrorCode::NotTrick1Shape: return "NOT_TRICK1_SHAPE";
    case ErrorCode::ZeroPoly: return "ZERO_POLY";
    case ErrorCode::NotLeftmostIsolated: return "NOT_LEFTMOST_ISOLATED";
    case ErrorCode::UncertifiedModulus: return "UNCERTIFIED_MODULUS";
    case ErrorCode::NotAUnit: return "NOT_A_UNIT";
    case ErrorCode::NotIdempotent: return "NOT_IDEMPOTENT";
    case ErrorCode::BadFactorisation: return "BAD_FACTORISATION";
    case ErrorCode::NotSeparable: return "NOT_SEPARABLE";
    case ErrorCode::BadDenominator: return "BAD_DENOMINATOR";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidField: return "INVALID_FIELD";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Raised by the parsers; `position` is 1-based (token index for coefficient
/// lists, column for expressions).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hk
