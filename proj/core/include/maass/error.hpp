#pragma once

#include <stdexcept>
#include <string>

namespace maass {

enum class ErrorCode {
  pole_proximity,
  degenerate_parameter,
  domain,
  missing_prime,
  region,
  window,
  non_convergence,
  crowded_zero,
  unvalidated_zero,
  denominator_vanishing,
  tolerance_unreachable,
  strip_violation,
  degenerate_scan,
  schema,
  invariant_violation,
  usage,
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported through this type; `code()` lets callers
/// (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace maass
