#pragma once

#include <stdexcept>
#include <string>

namespace hyperoct {

enum class ErrorCode {
  InvalidArgument,
  DegreeMismatch,
  OutOfRange,
  PreconditionViolation,
  NotDivisible,
  Overflow,
  BudgetExceeded,
  Internal,
};

// Single exception type for the library; the code maps 1:1 onto the C status
// values in hyperoct.h.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hyperoct
