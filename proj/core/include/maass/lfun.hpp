#pragma once

#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "maass/config.hpp"
#include "maass/hecke.hpp"
#include "maass/specfun.hpp"

namespace maass {

// π^{-s} Γ((s+ε+iν)/2) Γ((s+ε-iν)/2)
cplx l_infinity(cplx s, int parity, double nu);
cplx l_infinity(cplx s, const MaassFormData& form);

enum class DirichletKind { l, inverse };

struct DirichletValue {
  cplx value;
  double tail_bound = 0.0;
  long terms = 0;
};

// Partial Dirichlet sum with a tail bound from |coef(n)| ≤ τ(n) n^{7/64}.
DirichletValue l_dirichlet(cplx s, const CoeffTable& table, DirichletKind kind, const EvalConfig& config);
double dirichlet_tail_bound(double sigma, long terms);

struct ZeroList {
  enum class Source { ingested, scanned };
  std::vector<double> ordinates;
  Source source = Source::scanned;
  bool assume_simple = true;
  std::vector<std::string> warnings;
};

const char* to_string(ZeroList::Source source);

/// Completed L-function of one form.  Λ(s) is evaluated from the split
/// incomplete-Mellin representation, integrated along a ray rotated towards the
/// imaginary axis so that large heights do not lose all significant digits.
/// Quadrature plans depend only on the height block of s and are cached.
class LFunction {
 public:
  LFunction(MaassFormData form, std::shared_ptr<const CoeffTable> table, EvalConfig config = {});
  ~LFunction();

  const MaassFormData& form() const { return form_; }
  const CoeffTable& table() const { return *table_; }
  const EvalConfig& config() const { return config_; }

  cplx lambda_completed(cplx s) const;
  std::vector<cplx> lambda_completed(const std::vector<cplx>& s) const;
  cplx l_value(cplx s) const;
  std::vector<cplx> l_value(const std::vector<cplx>& s) const;
  cplx inverse_l(cplx s) const;

  // L'(ρ) from the Cauchy-integral mean over a circle of radius derivative_radius.
  cplx l_derivative(cplx rho, const ZeroList* zeros = nullptr) const;
  cplx l_derivative(cplx rho, double radius, int points, const ZeroList* zeros = nullptr) const;
  // Many derivatives at once; the circle points are evaluated in one batch.
  std::vector<cplx> l_derivatives(const std::vector<cplx>& rhos, const ZeroList* zeros = nullptr) const;

  // ε^{-1/2} N^{it/2} Λ(1/2 + it); real for self-dual forms.
  cplx hardy_rotated(double t) const;
  double hardy_w(double t) const;
  std::vector<cplx> hardy_rotated(const std::vector<double>& t) const;

  ZeroList find_zeros(double t_lo, double t_hi) const;

  // max |Λ(1/2+it)| over t ∈ [γ-1, γ+1]
  double local_scale(double gamma) const;
  double zero_ratio(double gamma) const;
  // Re-validates every ordinate; throws unvalidated_zero naming the first failure.
  ZeroList validate_zeros(const std::vector<double>& ordinates, ZeroList::Source source,
                          double threshold = 1e-6) const;
  bool has_central_zero(double threshold = 1e-6) const;

  int cached_plans() const;

 private:
  struct Plan;
  std::shared_ptr<const Plan> plan_for(int block) const;
  std::shared_ptr<const Plan> build_plan(int block) const;
  cplx evaluate(const Plan& plan, cplx s) const;
  std::vector<cplx> derivatives(const std::vector<cplx>& rhos, double radius, int points, const ZeroList* zeros) const;
  void check_window(cplx s) const;

  MaassFormData form_;
  std::shared_ptr<const CoeffTable> table_;
  EvalConfig config_;
  double y0_;
  mutable std::mutex cache_mutex_;
  mutable std::list<std::pair<int, std::shared_ptr<const Plan>>> cache_;
};

}  // namespace maass
