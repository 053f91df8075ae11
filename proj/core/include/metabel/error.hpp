#ifndef METABEL_ERROR_HPP
#define METABEL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace metabel {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  ZeroToNegativePower,
  NonPositiveInput,
  InvalidPrimeSet,
  ModulusOutOfRange,
  InvalidElement,
  SyntaxError,
  IndexOutOfRange,
  ZeroExponent,
  CommutationViolation,
  NotConjugate,
  Inconsistent,
  NoExponentVector,
  DegeneratePublic,
  MembershipViolation,
  NotAComplement,
  SearchSpaceTooLarge,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metabel

#endif  // METABEL_ERROR_HPP
