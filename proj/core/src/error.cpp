#include "metabel/error.hpp"

namespace metabel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::InvalidPrimeSet: return "InvalidPrimeSet";
    case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::CommutationViolation: return "CommutationViolation";
    case ErrorCode::NotConjugate: return "NotConjugate";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NoExponentVector: return "NoExponentVector";
    case ErrorCode::DegeneratePublic: return "DegeneratePublic";
    case ErrorCode::MembershipViolation: return "MembershipViolation";
    case ErrorCode::NotAComplement: return "NotAComplement";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace metabel
