#ifndef AKIT_ERROR_HPP
#define AKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace akit {

enum class ErrorCode {
  InvalidCharacteristic,
  MixedField,
  DivisionByZero,
  InvalidArgs,
  MixedRing,
  ZeroPolynomial,
  ZeroRelation,
  NegativeExponent,
  NotHomogeneous,
  DoesNotSplit,
  NoLaurentModel,
  ReducibleRelation,
  BoundTooSmall,
  TrivialMap,
  NonDivisibleDegree,
  RecursionNoProgress,
  ZeroDenominator,
  ZeroElement,
  UnsupportedFiltration,
  InconsistentWeights,
  HomogenizationNotExponential,
  InvalidExponents,
  NonInvariantScalars,
  ParseError,
  UnknownVariable,
  ReservedName,
  UnknownName,
};

std::string_view error_name(ErrorCode code);

/// Every failure in the library is reported through this type; `code()`
/// identifies the failure class, `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace akit

#endif  // AKIT_ERROR_HPP
