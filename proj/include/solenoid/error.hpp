#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace solenoid {

enum class ErrorKind {
  kDepthExceeded,
  kNotMonotone,
  kEmptyBreakpoints,
  kDegreeMismatch,
  kAnalyticExactUnsupported,
  kBreakpointCapExceeded,
  kNoSuchOrbit,
  kNotMultiple,
  kNotHomeomorphism,
  kNotDivisorChain,
  kNotIncreasing,
  kMixedHulls,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the
/// contract violation so callers (CLI, Python) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace solenoid
