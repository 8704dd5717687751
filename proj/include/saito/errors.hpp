#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saito {

enum class ErrorCode {
  Syntax,
  RepeatedMonomial,
  NotInvertible,
  DegenerateLoop,
  SingularMatrix,
  NotInvariant,
  FlipSymmetry,
  NotPreserved,
  NotMember,
  BoundExceeded,
  AmbientMismatch,
  NotSubgroup,
  StructuralAssumptionViolated,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace saito
