#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maass/series.hpp"

namespace maass {

struct IdentityReport {
  double alpha = 0.0;
  double beta = 0.0;
  double lhs = 0.0;
  double lhs_bound = 0.0;
  cplx rhs_zero_sum;
  // Even forms: the ν-terms of the identity that the residual is measured against.
  cplx rhs_extra_terms;
  // Even forms: the ν-terms read literally, with L(±iν) in the denominators.
  cplx literal_terms;
  bool literal_available = false;
  std::string literal_note;
  // Even forms: residues of L_∞(s)α^{-s}/L(1-s) at s = ±iν.
  cplx residue_terms;
  cplx central_term;
  int zeros_used = 0;
  double t_cap = 0.0;
  double residual = 0.0;
  double scale = 0.0;
  double relative_residual = 0.0;
  std::string pairing = "conjugate-paired";
};

// L_∞(1-ρ)/L'(ρ) for the leading zeros, shared by identity checks at several α.
struct ResidueData {
  std::vector<double> ordinates;
  std::vector<cplx> ratios;
  bool central_zero = false;
  cplx central_ratio;
  int shrunk_circles = 0;
};

// Re-validates the first `count` ordinates, then differentiates at each.
ResidueData residue_data(const LFunction& lf, const ZeroList& zeros, int count);
// The leading `count` zeros of an existing set.
ResidueData residue_prefix(const ResidueData& rd, size_t count);

IdentityReport verify_identity_odd(const SeriesEvaluator& series, double alpha, const ResidueData& residues, double tol);
IdentityReport verify_identity_even(const SeriesEvaluator& series, double alpha, const ResidueData& residues,
                                    double tol);
IdentityReport verify_identity(const SeriesEvaluator& series, double alpha, const ResidueData& residues, double tol);

// `zeros` must be validated ordinates of the form's L-function; the first `count` are used.
IdentityReport verify_identity_odd(const SeriesEvaluator& series, double alpha, const ZeroList& zeros, int count,
                                   double tol);
IdentityReport verify_identity_even(const SeriesEvaluator& series, double alpha, const ZeroList& zeros, int count,
                                    double tol);
IdentityReport verify_identity(const SeriesEvaluator& series, double alpha, const ZeroList& zeros, int count,
                               double tol);

struct MellinCheck {
  cplx numeric;
  cplx closed;
  double rel_err = 0.0;
  double numeric_bound = 0.0;
};

// ∫₀^∞ y^{-s} P_odd(y) dy against its closed form, 0 < Re s < 1/2.
MellinCheck mellin_check_odd(const SeriesEvaluator& series, cplx s, double tol);
// ∫₀^∞ y^{-s} Q_even(y) dy against its closed form, 1/2 < Re s < 3/2.
MellinCheck mellin_check_even(const SeriesEvaluator& series, cplx s, double tol);

struct ScanPoint {
  double y = 0.0;
  double value = 0.0;
  double envelope = 0.0;
};

struct ScanReport {
  std::vector<ScanPoint> grid;
  double fitted_slope = 0.0;  // least squares on log(envelope)
  double raw_slope = 0.0;     // least squares on log|value|
  double shifted_slope = 0.0; // envelope slope with the window moved by one grid point
  std::pair<double, double> slope_window;
  double reference_exponent = 0.0;
  bool flag = false;
  std::string flag_meaning;
};

std::vector<double> geometric_grid(double lo, double hi, int points);
// Sliding maximum of |v| over ±half_width neighbours.
std::vector<double> sliding_envelope(const std::vector<double>& v, int half_width = 3);
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

struct MainTerm {
  double main = 0.0;
  double full = 0.0;
  double residual = 0.0;
};

MainTerm main_term_residual(const SeriesEvaluator& series, SeriesKind kind, double y, double eps, double tol);

// kind p_odd scans P_odd; kind q_even scans the main-term residual of Q_even.  Flag: slope above -3/2 + δ.
ScanReport decay_scan(const SeriesEvaluator& series, SeriesKind kind, const std::vector<double>& grid, double eps,
                      double delta, double tol);
// |series(y)|·y^{1/2+δ} on a small-y grid.  Flag: the envelope grows as y decreases.
ScanReport small_y_scan(const SeriesEvaluator& series, SeriesKind kind, const std::vector<double>& grid, double delta,
                        double tol);
// |Σ_{n≤x} λ̃(n)|·x^{-1/2-δ}.  Flag: the envelope grows.
ScanReport summatory_scan(const CoeffTable& table, const std::vector<double>& grid, double delta);

}  // namespace maass
