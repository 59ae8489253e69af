#pragma once

#include <stdexcept>
#include <string>

namespace qoc {

// Every precondition or input failure in the library throws Error with one
// of these codes. A negative verification verdict is NOT an error; verify
// operations return std::optional / bool for that.
enum class ErrorCode {
  NotAGroup,
  IdentityNotFirst,
  TooLarge,
  DimensionMismatch,
  NotNormalized,
  NotNormalizedFirstRow,
  WrongOrderClass,
  WrongOrder,
  NotValidPrime,
  NotACocycle,
  NotATransversal,
  ParameterMismatch,
  NotBlockGramForm,
  TooLargeForExhaustive,
  PreconditionFailed,
  MalformedInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qoc
