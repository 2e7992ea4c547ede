#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rmcode {

enum class ErrorKind {
  NonPrimeP,
  ReducibleModulus,
  NoModulusAvailable,
  InvalidParams,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  RingMismatch,
  NotHomogeneous,
  DimensionTooLarge,
  CertificationFailed,
  DuplicatePoint,
  ZeroPoint,
  TooFewPoints,
  BudgetExceeded,
  Unsupported,
  NotApplicable,
  PreconditionFailed,
  InternalInconsistency,
  NotEssential,
  ConditionFailed,
  NotGorenstein,
  NotRegular,
  NotArtinian,
  IdentityViolated,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above, so
// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rmcode
