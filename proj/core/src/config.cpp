#include "maass/config.hpp"

#include <cmath>

#include "maass/error.hpp"

namespace maass {

void QuadratureSpec::validate() const {
  if (abscissa_count < 16) throw Error(ErrorCode::usage, "quadrature abscissa count must be at least 16");
  if (!(target_abs_error > 0) || !(target_abs_error < 1e-6))
    throw Error(ErrorCode::usage, "quadrature target error must lie in (0, 1e-6)");
}

void EvalConfig::validate() const {
  quad_spec.validate();
  if (dirichlet_terms < 1) throw Error(ErrorCode::usage, "dirichlet_terms must be positive");
  if (!(tail_delta > 0 && tail_delta < 0.25)) throw Error(ErrorCode::usage, "tail_delta must lie in (0, 1/4)");
  if (!(derivative_radius > 0)) throw Error(ErrorCode::usage, "derivative_radius must be positive");
  if (derivative_points < 8) throw Error(ErrorCode::usage, "derivative_points must be at least 8");
  if (!(contour_abscissa > -0.5 && contour_abscissa < 0))
    throw Error(ErrorCode::usage, "contour abscissa must lie in (-1/2, 0)");
  if (!(contour_height_cap > 0)) throw Error(ErrorCode::usage, "contour_height_cap must be positive");
  if (!(zero_step > 0)) throw Error(ErrorCode::usage, "zero_step must be positive");
  if (!(rotation_margin >= 2 && rotation_margin <= 20)) throw Error(ErrorCode::usage, "rotation_margin must lie in [2, 20]");
  if (!(block_width > 0)) throw Error(ErrorCode::usage, "block_width must be positive");
  if (!(series_tol >= 1e-14)) throw Error(ErrorCode::usage, "series_tol must be at least 1e-14");
}

}  // namespace maass
