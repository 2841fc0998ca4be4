#ifndef DIMSPEC_ERROR_HPP
#define DIMSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dimspec {

enum class ErrorCode {
  InvalidArgument,
  Pole,
  NoMinimum,
  Singular,
  NoConvergence,
  InvalidRange,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::NoMinimum: return "no-minimum";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::NoConvergence: return "no-convergence";
    case ErrorCode::InvalidRange: return "invalid-range";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

/// Numerical failures (as opposed to bad input) are NoConvergence.
constexpr bool is_numerical_failure(ErrorCode code) {
  return code == ErrorCode::NoConvergence;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dimspec

#endif  // DIMSPEC_ERROR_HPP
