#ifndef NILALG_ERROR_HPP
#define NILALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nilalg {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  IndexOutOfRange,
  ZeroCoefficient,
  NotNilpotent,
  ElementInSquare,
  NotNaturallyGraded,
  InvalidSplit,
  InconsistentGradation,
  InvalidFamily,
  BudgetExceeded,
  Schema,
};

const char* to_string(ErrorCode code);

/// Single exception type for every recoverable failure in the library. The
/// code lets callers (and the CLI) branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nilalg

#endif  // NILALG_ERROR_HPP
