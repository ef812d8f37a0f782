#pragma once

#include <stdexcept>
#include <string>

namespace oscent {

// Every domain failure carries a stable machine-readable code; the CLI and
// the sweep engine store these codes as per-route flags instead of aborting.
enum class ErrorCode {
  InvalidParams,
  ComplexRegime,     // discriminant < 0: z+- would be complex
  DegenerateSystem,  // Omega^2 + kappa/M = 0
  NonNormalizable,   // kernel exponent coefficients p or q <= 0
  DivisionByZeroB,
  NegativeRadicand,  // A/B < 0 in the closed-form entropy
  QuadratureFailure,
  BoundStateAbsent,  // potential matrix not positive definite
  GridTooSmall,
  InvalidSpec,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oscent
