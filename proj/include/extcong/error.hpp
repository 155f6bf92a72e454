#pragma once

#include <stdexcept>
#include <string>

namespace extcong {

/// Machine-readable error categories. Every failure raised by the library
/// carries one of these; the C API maps them one-to-one onto `xc_status`.
enum class ErrorCode {
  InvalidArgument,
  SingularCurve,
  InvalidConductor,
  BadReduction,
  PrimeTooLarge,
  InvalidWeilPolynomial,
  MismatchedField,
  RepeatedRoot,
  EmptySweep,
  MissingPrime,
  PrecisionMismatch,
  PrecisionBelowSturm,
  MissingForm,
  NoConstraint,
  DimensionMismatch,
  ParseError,
  SchemaError,
  LengthMismatch,
  IoError,
};

/// Stable CamelCase name used in JSON error payloads.
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the 1-based line number of the offending record.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace extcong
