#pragma once

namespace maass {

struct QuadratureSpec {
  // Composite Gauss-Legendre panels are the only scheme implemented.
  enum class Scheme { gauss_legendre };
  Scheme scheme = Scheme::gauss_legendre;
  int abscissa_count = 20;
  double target_abs_error = 1e-12;

  void validate() const;
};

struct EvalConfig {
  long dirichlet_terms = 100000;
  double tail_delta = 0.2;
  QuadratureSpec quad_spec;
  double derivative_radius = 0.05;
  int derivative_points = 32;
  double contour_abscissa = -0.25;
  double contour_height_cap = 40.0;
  double zero_step = 0.05;
  double zero_tolerance = 1e-8;
  // The completed-L ray is rotated so that about e^{rotation_margin} of cancellation remains.
  double rotation_margin = 9.0;
  double block_width = 4.0;
  double max_height = 400.0;
  double series_tol = 1e-10;

  void validate() const;
};

}  // namespace maass
