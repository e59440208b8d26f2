#include "akit/error.hpp"

namespace akit {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::MixedRing: return "MixedRing";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroRelation: return "ZeroRelation";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DoesNotSplit: return "DoesNotSplit";
    case ErrorCode::NoLaurentModel: return "NoLaurentModel";
    case ErrorCode::ReducibleRelation: return "ReducibleRelation";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::TrivialMap: return "TrivialMap";
    case ErrorCode::NonDivisibleDegree: return "NonDivisibleDegree";
    case ErrorCode::RecursionNoProgress: return "RecursionNoProgress";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::UnsupportedFiltration: return "UnsupportedFiltration";
    case ErrorCode::InconsistentWeights: return "InconsistentWeights";
    case ErrorCode::HomogenizationNotExponential: return "HomogenizationNotExponential";
    case ErrorCode::InvalidExponents: return "InvalidExponents";
    case ErrorCode::NonInvariantScalars: return "NonInvariantScalars";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ReservedName: return "ReservedName";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Error";
}

}  // namespace akit
