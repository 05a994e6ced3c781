#pragma once

#include <array>
#include <complex>
#include <vector>

namespace maass {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Complex gamma. Poles are rejected within 1e-12 of a non-positive integer.
cplx gamma_cx(cplx s);
cplxl gamma_l(cplxl s);
// Some branch of log Γ; exp(log_gamma_l(s)) == gamma_l(s).
cplxl log_gamma_l(cplxl s);

struct KValue {
  double value = 0.0;
  bool underflow = false;
};

// Modified Bessel function K_{iν}(x) for real ν and x > 0.
double k_bessel_imag(double nu, double x);
KValue k_bessel_imag_flagged(double nu, double x);

// K_{1+iν}(x); K_{1-iν}(x) is its conjugate.
cplx k_bessel_one_imag(double nu, double x);

// 2K_{iν}(x) - 2Re[Γ(iν)(x/2)^{-iν}], with the leading powers cancelled analytically near 0.
double bracket_even(double nu, double x);

// 4Re K_{1+iν}(u) - 2Re[Γ(1+iν)(u/2)^{-1-iν}].  Equals -2 d/du bracket_even(ν, u).
double omega_kernel(double nu, double u);

// Regime boundaries of the real-argument evaluators.
double k_series_limit(double nu);
inline constexpr double kQuadratureLimit = 30.0;
inline constexpr double kUnderflowLimit = 700.0;
inline constexpr double kMinOrderForSeries = 0.5;
inline constexpr double kSwitchBracket = 2.0;

namespace detail {
// Ascending series for K_μ(x); μ must not be an integer.
cplxl k_order_series(cplxl mu, long double x);
// Trapezoid rule on a shifted copy of (1/2)∫ exp(-x cosh t - μt) dt.
cplxl k_order_quadrature(cplxl mu, long double x);
// Hankel expansion; sets *converged to false if the terms stop shrinking early.
cplxl k_order_asymptotic(cplxl mu, long double x, bool* converged);
cplxl k_order_asymptotic(cplxl mu, cplxl z, bool* converged, cplxl* derivative);
}  // namespace detail

/// K_{iν}(r e^{iθ}) along one ray, r ≥ r_min.  Taylor expansions of the Bessel
/// ODE are propagated inward from a Hankel-expansion start point, so a single
/// table serves every n·r needed by the completed L-function.
class KRay {
 public:
  KRay(double nu, double theta, double r_min);

  cplx operator()(double r) const;
  double r_min() const { return r_min_; }
  double r_switch() const { return r_switch_; }

 private:
  static constexpr int kStored = 20;
  double nu_;
  double theta_;
  double r_min_;
  double r_switch_;
  cplx rot_;
  std::vector<double> centers_;  // decreasing
  std::vector<std::array<cplx, kStored>> coef_;  // powers of (r - center)
};

}  // namespace maass
