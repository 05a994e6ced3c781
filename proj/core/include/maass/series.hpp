#pragma once

#include <memory>

#include "maass/lfun.hpp"

namespace maass {

enum class SeriesPath { direct, contour };
enum class SeriesKind { p_odd, p_even, q_even };

const char* to_string(SeriesPath path);
const char* to_string(SeriesKind kind);

// One term coef·y^{exponent} of a convergent expansion in powers of y.
struct PowerTerm {
  cplx coef;
  cplx exponent;
};

struct PowerExpansion {
  std::vector<PowerTerm> terms;  // series(y) = Re Σ coef·y^{exponent}
  double bound = 0.0;            // truncation bound valid for y ≤ y_max
  double y_max = 0.0;
};

struct SeriesResult {
  double value = 0.0;
  long terms_used = 0;
  double tail_bound = 0.0;
  SeriesPath path = SeriesPath::direct;
};

/// The three kernel series of a form.  Terms with kernel argument 2πy/n at or
/// above the switch are summed directly; the remaining infinite tail is
/// expanded in the ascending Bessel series and re-summed over n, with the two
/// slowly convergent Dirichlet sums taken from Λ (or summed exactly when the
/// table has finite support).
class SeriesEvaluator {
 public:
  explicit SeriesEvaluator(std::shared_ptr<const LFunction> lfun, double x_switch = 0.5);

  SeriesResult p_odd(double y, double tol) const;
  SeriesResult p_even(double y, double tol) const;
  // dP_even/dy
  SeriesResult q_even(double y, double tol) const;
  SeriesResult evaluate(SeriesKind kind, double y, double tol) const;

  // 4πy·P_odd(y) = (1/2π) ∫ L_∞^{odd}(c+it)/L(1-c-it) y^{-c-it} dt along Re s = contour_abscissa.
  SeriesResult p_odd_contour(double y) const;

  // Full ascending expansion in y, truncated for y ≤ y_max.
  PowerExpansion power_expansion(SeriesKind kind, double y_max, double tol) const;

  // Σ_n λ̃(n) n^{-s} over every n, valid for Re s > 1.
  cplx inverse_sum(cplx s) const;
  std::vector<cplx> inverse_sums(const std::vector<cplx>& s) const;

  const LFunction& lfun() const { return *lfun_; }
  double x_switch() const { return x_switch_; }

 private:
  SeriesResult run(SeriesKind kind, double y, double tol) const;

  std::shared_ptr<const LFunction> lfun_;
  double x_switch_;
  double nu_;
  cplx inv2_;  // 1/L(2 - iν)
  cplx inv3_;  // 1/L(3 - iν)
  double inv_err_;
};

}  // namespace maass
