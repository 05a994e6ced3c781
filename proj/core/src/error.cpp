#include "maass/error.hpp"

namespace maass {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::pole_proximity: return "pole-proximity";
    case ErrorCode::degenerate_parameter: return "degenerate-parameter";
    case ErrorCode::domain: return "domain";
    case ErrorCode::missing_prime: return "missing-prime";
    case ErrorCode::region: return "region";
    case ErrorCode::window: return "window";
    case ErrorCode::non_convergence: return "non-convergence";
    case ErrorCode::crowded_zero: return "crowded-zero";
    case ErrorCode::unvalidated_zero: return "unvalidated-zero";
    case ErrorCode::denominator_vanishing: return "denominator-vanishing";
    case ErrorCode::tolerance_unreachable: return "tolerance-unreachable";
    case ErrorCode::strip_violation: return "strip-violation";
    case ErrorCode::degenerate_scan: return "degenerate-scan";
    case ErrorCode::schema: return "schema";
    case ErrorCode::invariant_violation: return "invariant-violation";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

}  // namespace maass
