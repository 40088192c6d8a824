// Error taxonomy shared by all fflog modules.
#pragma once

#include <stdexcept>
#include <string>

namespace fflog {

// Every recoverable mathematical failure carries a stable code name so the
// CLI can report it and scripts can match on it.
class math_error : public std::runtime_error {
public:
  math_error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

namespace err {
inline constexpr const char* DIVIDE_BY_ZERO = "DIVIDE_BY_ZERO";
inline constexpr const char* INDETERMINATE = "INDETERMINATE";
inline constexpr const char* PRECISION_EXHAUSTED = "PRECISION_EXHAUSTED";
inline constexpr const char* NOT_A_POWER = "NOT_A_POWER";
inline constexpr const char* VAL_NOT_DIVISIBLE = "VAL_NOT_DIVISIBLE";
inline constexpr const char* RESIDUE_UNSOLVABLE = "RESIDUE_UNSOLVABLE";
inline constexpr const char* NO_INTEGRAL_SLOPE = "NO_INTEGRAL_SLOPE";
inline constexpr const char* NORM_NOT_CONTRACTING = "NORM_NOT_CONTRACTING";
inline constexpr const char* TAIL_NOT_CONVERGED = "TAIL_NOT_CONVERGED";
inline constexpr const char* DIMENSION_MISMATCH = "DIMENSION_MISMATCH";
inline constexpr const char* SINGULAR = "SINGULAR";
inline constexpr const char* STALL = "STALL";
inline constexpr const char* DEGENERATE = "DEGENERATE";
inline constexpr const char* FIELD_CONSTRAINT = "FIELD_CONSTRAINT";
inline constexpr const char* ITERATION_LIMIT = "ITERATION_LIMIT";
inline constexpr const char* PARSE = "PARSE";
}  // namespace err

[[noreturn]] inline void raise(const char* code, const std::string& what) {
  throw math_error(code, what);
}

}  // namespace fflog
