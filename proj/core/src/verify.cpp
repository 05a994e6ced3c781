#include "maass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "maass/error.hpp"
#include "maass/parallel.hpp"
#include "maass/quadrature.hpp"

namespace maass {
namespace {

constexpr double kMellinLow = 0.05;
constexpr double kMellinHigh = 20.0;
constexpr double kPanelWidth = 0.25;
constexpr double kContourExtra = 50.0;

double real_root_number(const MaassFormData& form) {
  if (std::abs(form.root_number.imag()) > 1e-10)
    throw Error(ErrorCode::domain, "identity checks need a real root number");
  return form.root_number.real();
}

ZeroList leading_zeros(const LFunction& lf, const ZeroList& zeros, int count) {
  if (count < 0) throw Error(ErrorCode::usage, "zero count must be non-negative");
  if (static_cast<size_t>(count) > zeros.ordinates.size())
    throw Error(ErrorCode::usage, "requested " + std::to_string(count) + " zeros but only " +
                                      std::to_string(zeros.ordinates.size()) + " are available");
  std::vector<double> head(zeros.ordinates.begin(), zeros.ordinates.begin() + count);
  return lf.validate_zeros(head, zeros.source);
}

struct ZeroSum {
  cplx paired;
  cplx central;
  double largest = 0.0;
};

// Σ over conjugate pairs of L_∞(1-ρ)β^{ρ-1/2}/L'(ρ), plus the central zero if there is one.
ZeroSum zero_sum(const ResidueData& rd, double beta) {
  ZeroSum out;
  const double lb = std::log(beta);
  for (size_t i = 0; i < rd.ordinates.size(); ++i) {
    const cplx term = rd.ratios[i] * std::exp(cplx(0, rd.ordinates[i]) * lb);
    out.paired += term + std::conj(term);
    out.largest = std::max(out.largest, std::abs(term));
  }
  if (rd.central_zero) {
    out.central = rd.central_ratio;
    out.largest = std::max(out.largest, std::abs(out.central));
  }
  return out;
}

// ∫_{lo}^{hi} y^{1-s} f(y) d(log y) on fixed Gauss-Legendre panels.
struct PanelIntegral {
  cplx value;
  double bound = 0.0;
};

PanelIntegral log_panels(const SeriesEvaluator& series, SeriesKind kind, cplx s, double tol) {
  const double a = std::log(kMellinLow), b = std::log(kMellinHigh);
  const int panels = static_cast<int>(std::ceil((b - a) / kPanelWidth));
  const auto nodes = composite_nodes(a, b, panels, 20);
  std::vector<SeriesResult> vals(nodes.size());
  parallel_for(nodes.size(), [&](size_t j) { vals[j] = series.evaluate(kind, std::exp(nodes[j].x), tol); });
  PanelIntegral out;
  for (size_t j = 0; j < nodes.size(); ++j) {
    const cplx f = std::exp((1.0 - s) * nodes[j].x);
    out.value += nodes[j].w * f * vals[j].value;
    out.bound += nodes[j].w * std::abs(f) * vals[j].tail_bound;
  }
  return out;
}

// ∫₀^{y1} y^{-s} Re(Σ a y^e) dy, termwise.
PanelIntegral small_part(const PowerExpansion& e, cplx s) {
  PanelIntegral out;
  const double ly = std::log(e.y_max);
  for (const PowerTerm& t : e.terms) {
    for (int conj = 0; conj < 2; ++conj) {
      const cplx a = conj ? std::conj(t.coef) : t.coef;
      const cplx p = (conj ? std::conj(t.exponent) : t.exponent) + 1.0 - s;
      if (p.real() <= 0) throw Error(ErrorCode::strip_violation, "Mellin integral diverges at y = 0");
      out.value += 0.5 * a * std::exp(p * ly) / p;
    }
  }
  const double p_min = e.terms.front().exponent.real() + 1.0 - s.real();
  out.bound = e.bound * std::exp(p_min * ly) / p_min;
  return out;
}

// (1/2π) ∫ g(a+it) dt over |t| ≤ height, with a 16-point comparison for the error.
template <class G>
PanelIntegral vertical_line(const SeriesEvaluator& series, double a, double height, G integrand,
                            std::function<cplx(cplx)> inverse_arg) {
  const int panels = static_cast<int>(std::ceil(2 * height));
  cplx results[2];
  double abs_integral = 0;
  const int counts[2] = {20, 16};
  for (int r = 0; r < 2; ++r) {
    const auto nodes = composite_nodes(-height, height, panels, counts[r]);
    std::vector<cplx> args(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) args[j] = inverse_arg(cplx(a, nodes[j].x));
    const std::vector<cplx> inv = series.inverse_sums(args);
    cplx acc = 0;
    for (size_t j = 0; j < nodes.size(); ++j) {
      const cplx f = integrand(cplx(a, nodes[j].x), inv[j]);
      acc += nodes[j].w * f;
      if (r == 0) abs_integral += nodes[j].w * std::abs(f);
    }
    results[r] = acc / (2 * kPi);
  }
  PanelIntegral out;
  out.value = results[0];
  out.bound = std::abs(results[0] - results[1]) + 1e-12 * abs_integral / (2 * kPi);
  return out;
}

MellinCheck finish(cplx numeric, cplx closed, double bound) {
  MellinCheck m;
  m.numeric = numeric;
  m.closed = closed;
  m.rel_err = std::abs(numeric - closed) / std::abs(closed);
  m.numeric_bound = bound;
  return m;
}

}  // namespace

ResidueData residue_data(const LFunction& lf, const ZeroList& zeros, int count) {
  const ZeroList used = leading_zeros(lf, zeros, count);
  ResidueData rd;
  rd.ordinates = used.ordinates;
  // Circles shrink near close neighbours so that no other zero falls within twice the radius.
  const double r0 = lf.config().derivative_radius;
  const int points = lf.config().derivative_points;
  std::vector<cplx> batch;
  std::vector<size_t> batch_index;
  std::vector<cplx> d(used.ordinates.size());
  for (size_t i = 0; i < used.ordinates.size(); ++i) {
    const double g = used.ordinates[i];
    double gap = 2 * g;
    for (double h : zeros.ordinates)
      if (std::abs(h - g) > 1e-9) gap = std::min(gap, std::abs(h - g));
    if (2 * r0 < gap) {
      batch.emplace_back(0.5, g);
      batch_index.push_back(i);
    } else {
      d[i] = lf.l_derivative(cplx(0.5, g), 0.4 * gap, points, &zeros);
      ++rd.shrunk_circles;
    }
  }
  const std::vector<cplx> db = lf.l_derivatives(batch, &zeros);
  for (size_t j = 0; j < batch.size(); ++j) d[batch_index[j]] = db[j];
  for (size_t i = 0; i < d.size(); ++i) rd.ratios.push_back(l_infinity(cplx(0.5, -rd.ordinates[i]), lf.form()) / d[i]);
  if (lf.has_central_zero()) {
    rd.central_zero = true;
    rd.central_ratio = l_infinity(0.5, lf.form()) / lf.l_derivative(cplx(0.5, 0.0), &zeros);
  }
  return rd;
}

ResidueData residue_prefix(const ResidueData& rd, size_t count) {
  if (count > rd.ordinates.size()) throw Error(ErrorCode::usage, "prefix longer than the residue set");
  ResidueData out = rd;
  out.ordinates.resize(count);
  out.ratios.resize(count);
  return out;
}

IdentityReport verify_identity_odd(const SeriesEvaluator& series, double alpha, const ResidueData& residues, double tol) {
  const LFunction& lf = series.lfun();
  const MaassFormData& form = lf.form();
  if (form.parity != 1) throw Error(ErrorCode::domain, "the odd identity needs an odd form");
  if (!(alpha > 0)) throw Error(ErrorCode::domain, "α must be positive");
  const double eps = real_root_number(form);
  IdentityReport r;
  r.alpha = alpha;
  r.beta = 1.0 / (static_cast<double>(form.level) * alpha);
  const SeriesResult pa = series.p_odd(r.alpha, tol);
  const SeriesResult pb = series.p_odd(r.beta, tol);
  const double la = std::pow(r.alpha, 1.5) * pa.value;
  const double lb = std::pow(r.beta, 1.5) * pb.value;
  r.lhs = la - eps * lb;
  r.lhs_bound = std::pow(r.alpha, 1.5) * pa.tail_bound + std::pow(r.beta, 1.5) * pb.tail_bound;

  const ZeroSum zs = zero_sum(residues, r.beta);
  r.rhs_zero_sum = -eps / (4 * kPi) * zs.paired;
  r.central_term = -eps / (4 * kPi) * zs.central;
  r.zeros_used = static_cast<int>(residues.ordinates.size());
  r.t_cap = residues.ordinates.empty() ? 0.0 : residues.ordinates.back();
  const cplx rhs = r.rhs_zero_sum + r.central_term;
  r.residual = std::abs(r.lhs - rhs);
  r.scale = std::max({std::abs(la), std::abs(lb), zs.largest / (4 * kPi)});
  r.relative_residual = r.scale > 0 ? r.residual / r.scale : r.residual;
  return r;
}

IdentityReport verify_identity_even(const SeriesEvaluator& series, double alpha, const ResidueData& residues,
                                    double tol) {
  const LFunction& lf = series.lfun();
  const MaassFormData& form = lf.form();
  if (form.parity != 0) throw Error(ErrorCode::domain, "the even identity needs an even form");
  if (!(alpha > 0)) throw Error(ErrorCode::domain, "α must be positive");
  const double nu = form.nu;
  if (nu < 1e-3) throw Error(ErrorCode::degenerate_parameter, "the even identity needs ν ≥ 1e-3");
  const double eps = real_root_number(form);
  IdentityReport r;
  r.alpha = alpha;
  r.beta = 1.0 / (static_cast<double>(form.level) * alpha);
  const SeriesResult pa = series.p_even(r.alpha, tol);
  const SeriesResult pb = series.p_even(r.beta, tol);
  const double la = std::sqrt(r.alpha) * pa.value;
  const double lb = std::sqrt(r.beta) * pb.value;
  r.lhs = la - eps * lb;
  r.lhs_bound = std::sqrt(r.alpha) * pa.tail_bound + std::sqrt(r.beta) * pb.tail_bound;

  const double lpi = std::log(kPi), lal = std::log(r.alpha), lbe = std::log(r.beta);
  cplx extra = 0, pole_terms = 0;
  for (int sg = -1; sg <= 1; sg += 2) {
    const cplx inu(0, sg * nu);  // ±iν
    const cplx l_plus = lf.l_value(1.0 + inu);
    const cplx l_minus = lf.l_value(1.0 - inu);
    extra += eps * std::exp(inu * lpi) * gamma_cx(-inu) * std::exp((0.5 + inu) * lbe) / l_plus -
             std::exp(-inu * lpi) * gamma_cx(inu) * std::exp((0.5 - inu) * lal) / l_minus;
    pole_terms += 2.0 * std::exp(-inu * lpi) * gamma_cx(inu) * std::exp(-inu * lal) / l_minus;
  }
  r.rhs_extra_terms = extra;
  r.residue_terms = pole_terms;

  // The terms as printed divide by L(∓iν); the gamma factor has poles there while Λ stays finite.
  try {
    cplx literal = 0;
    double smallest = 1e300;
    for (int sg = -1; sg <= 1; sg += 2) {
      const cplx inu(0, sg * nu);
      const cplx denom = lf.l_value(-inu);
      smallest = std::min(smallest, std::abs(denom));
      literal += eps * std::exp(inu * lpi) * gamma_cx(-inu) * std::exp((0.5 + inu) * lbe) / denom;
    }
    const double local = std::abs(lf.l_value(1.0 + cplx(0, nu)));
    if (smallest < 1e-8 * local) throw Error(ErrorCode::denominator_vanishing, "|L(±iν)| below 1e-8 of the local scale");
    r.literal_terms = literal;
    r.literal_available = true;
    r.literal_note = "finite";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::pole_proximity && e.code() != ErrorCode::denominator_vanishing) throw;
    r.literal_available = false;
    r.literal_note = "denominator-vanishing: L(±iν) = 0 because L_∞ has poles at ±iν while Λ is entire";
  }

  const ZeroSum zs = zero_sum(residues, r.beta);
  r.rhs_zero_sum = -eps / 2.0 * zs.paired;
  r.central_term = -eps / 2.0 * zs.central;
  r.zeros_used = static_cast<int>(residues.ordinates.size());
  r.t_cap = residues.ordinates.empty() ? 0.0 : residues.ordinates.back();
  const cplx rhs = r.rhs_extra_terms + r.rhs_zero_sum + r.central_term;
  r.residual = std::abs(r.lhs - rhs);
  r.scale = std::max({std::abs(la), std::abs(lb), zs.largest / 2.0, std::abs(extra)});
  r.relative_residual = r.scale > 0 ? r.residual / r.scale : r.residual;
  return r;
}

IdentityReport verify_identity(const SeriesEvaluator& series, double alpha, const ResidueData& residues, double tol) {
  return series.lfun().form().parity == 1 ? verify_identity_odd(series, alpha, residues, tol)
                                          : verify_identity_even(series, alpha, residues, tol);
}

IdentityReport verify_identity_odd(const SeriesEvaluator& series, double alpha, const ZeroList& zeros, int count,
                                   double tol) {
  return verify_identity_odd(series, alpha, residue_data(series.lfun(), zeros, count), tol);
}

IdentityReport verify_identity_even(const SeriesEvaluator& series, double alpha, const ZeroList& zeros, int count,
                                    double tol) {
  return verify_identity_even(series, alpha, residue_data(series.lfun(), zeros, count), tol);
}

IdentityReport verify_identity(const SeriesEvaluator& series, double alpha, const ZeroList& zeros, int count,
                               double tol) {
  return verify_identity(series, alpha, residue_data(series.lfun(), zeros, count), tol);
}

MellinCheck mellin_check_odd(const SeriesEvaluator& series, cplx s, double tol) {
  if (!(s.real() > 0 && s.real() < 0.5)) throw Error(ErrorCode::strip_violation, "mellin_check_odd needs 0 < Re s < 1/2");
  const double nu = series.lfun().form().nu;
  const PanelIntegral low = small_part(series.power_expansion(SeriesKind::p_odd, kMellinLow, tol), s);
  const PanelIntegral mid = log_panels(series, SeriesKind::p_odd, s, tol);
  // ∫_Y^∞ y^{-s} P = (1/2πi) ∫_{(a)} M(w) Y^{1-s-w}/(s+w-1) dw,  M(w) = π^{-w}Γ((w±iν)/2)/(4 L(2-w))
  const double a = 1.0 - s.real() / 2.0;
  const double lY = std::log(kMellinHigh);
  const PanelIntegral high = vertical_line(
      series, a, std::abs(s.imag()) + nu + kContourExtra,
      [&](cplx w, cplx inv) { return l_infinity(w, 0, nu) / 4.0 * inv * std::exp((1.0 - s - w) * lY) / (s + w - 1.0); },
      [](cplx w) { return 2.0 - w; });
  const cplx closed = l_infinity(1.0 - s, 0, nu) / 4.0 * series.inverse_sum(s + 1.0);
  return finish(low.value + mid.value + high.value, closed, low.bound + mid.bound + high.bound);
}

MellinCheck mellin_check_even(const SeriesEvaluator& series, cplx s, double tol) {
  if (!(s.real() > 0.5 && s.real() < 1.5))
    throw Error(ErrorCode::strip_violation, "mellin_check_even needs 1/2 < Re s < 3/2");
  const double nu = series.lfun().form().nu;
  for (int sg = -1; sg <= 1; sg += 2) {
    const cplx g = (-s + cplx(0, sg * nu)) / 2.0;
    const double k = std::round(g.real());
    if (k <= 0 && std::abs(g - k) < 1e-6) throw Error(ErrorCode::pole_proximity, "s sits on a gamma pole");
  }
  const PanelIntegral low = small_part(series.power_expansion(SeriesKind::q_even, kMellinLow, tol), s);
  const PanelIntegral mid = log_panels(series, SeriesKind::q_even, s, tol);
  // ∫_Y^∞ y^{-s} Q = -Y^{-s} P(Y) + s (1/2πi) ∫_{(a)} M(w) Y^{-s-w}/(s+w) dw,  M(w) = π^{-w}Γ((w±iν)/2)/(2 L(1-w))
  const double a = -std::min(s.real(), 1.0) / 2.0;
  const double lY = std::log(kMellinHigh);
  const SeriesResult pY = series.p_even(kMellinHigh, tol);
  const PanelIntegral line = vertical_line(
      series, a, std::abs(s.imag()) + nu + kContourExtra,
      [&](cplx w, cplx inv) { return l_infinity(w, 0, nu) / 2.0 * inv * std::exp((-s - w) * lY) / (s + w); },
      [](cplx w) { return 1.0 - w; });
  const cplx boundary = -std::exp(-s * lY) * pY.value;
  const cplx high = boundary + s * line.value;
  const double high_bound = std::exp(-s.real() * lY) * pY.tail_bound + std::abs(s) * line.bound;
  const cplx closed = s / 2.0 * l_infinity(-s, 0, nu) * series.inverse_sum(s + 1.0);
  return finish(low.value + mid.value + high, closed, low.bound + mid.bound + high_bound);
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (!(lo > 0 && hi > lo) || points < 2) throw Error(ErrorCode::usage, "grid needs 0 < lo < hi and at least 2 points");
  std::vector<double> g(static_cast<size_t>(points));
  const double r = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[static_cast<size_t>(i)] = lo * std::exp(r * i);
  g.back() = hi;
  return g;
}

std::vector<double> sliding_envelope(const std::vector<double>& v, int half_width) {
  std::vector<double> e(v.size());
  const long n = static_cast<long>(v.size());
  for (long i = 0; i < n; ++i) {
    double m = 0;
    for (long j = std::max(0L, i - half_width); j <= std::min(n - 1, i + half_width); ++j) m = std::max(m, std::abs(v[j]));
    e[static_cast<size_t>(i)] = m;
  }
  return e;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) throw Error(ErrorCode::degenerate_scan, "slope fit needs at least two points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) throw Error(ErrorCode::degenerate_scan, "slope fit needs distinct abscissae");
  return sxy / sxx;
}

namespace {

struct Slopes {
  double envelope, raw, shifted;
};

Slopes fit(const std::vector<ScanPoint>& pts) {
  std::vector<double> lx, le, lxr, lr;
  for (const auto& p : pts) {
    if (p.envelope > 0) {
      lx.push_back(std::log(p.y));
      le.push_back(std::log(p.envelope));
    }
    if (p.value != 0) {
      lxr.push_back(std::log(p.y));
      lr.push_back(std::log(std::abs(p.value)));
    }
  }
  if (lx.size() < 3) throw Error(ErrorCode::degenerate_scan, "scan values are all zero");
  Slopes s;
  s.envelope = least_squares_slope(lx, le);
  s.raw = lr.size() >= 2 ? least_squares_slope(lxr, lr) : s.envelope;
  std::vector<double> sx(lx.begin() + 1, lx.end()), se(le.begin() + 1, le.end());
  s.shifted = least_squares_slope(sx, se);
  return s;
}

ScanReport assemble(const std::vector<double>& grid, const std::vector<double>& values, double reference) {
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw Error(ErrorCode::usage, "scan grid must be strictly increasing");
  ScanReport r;
  const std::vector<double> env = sliding_envelope(values);
  for (size_t i = 0; i < grid.size(); ++i) r.grid.push_back({grid[i], values[i], env[i]});
  const Slopes s = fit(r.grid);
  r.fitted_slope = s.envelope;
  r.raw_slope = s.raw;
  r.shifted_slope = s.shifted;
  r.slope_window = {grid.front(), grid.back()};
  r.reference_exponent = reference;
  return r;
}

}  // namespace

MainTerm main_term_residual(const SeriesEvaluator& series, SeriesKind kind, double y, double eps, double tol) {
  if (!(y >= 10)) throw Error(ErrorCode::domain, "main-term subtraction needs y ≥ 10");
  if (!(eps > 0 && eps < 0.5)) throw Error(ErrorCode::usage, "ε must lie in (0, 1/2)");
  if (kind == SeriesKind::p_odd) throw Error(ErrorCode::usage, "P_odd has no main term");
  const double nu = series.lfun().form().nu;
  const CoeffTable& tab = series.lfun().table();
  const long nmax = std::min(tab.n_max, static_cast<long>(std::floor(std::pow(y, 1.0 - eps))) - 1);
  long double acc = 0;
  const cplx g1 = gamma_cx(cplx(1.0, nu)), g0 = gamma_cx(cplx(0.0, nu));
  for (long n = 1; n <= nmax; ++n) {
    const double l = tab.lambda_tilde[static_cast<size_t>(n)];
    if (l == 0.0) continue;
    const double dn = static_cast<double>(n);
    const double lx = std::log(kPi * y / dn);
    if (kind == SeriesKind::q_even)
      acc += kPi * l / (dn * dn) * 2.0 * (g1 * std::exp(cplx(-1.0, -nu) * lx)).real();
    else
      acc -= l / dn * 2.0 * (g0 * std::exp(cplx(0.0, -nu) * lx)).real();
  }
  MainTerm m;
  m.main = static_cast<double>(acc);
  m.full = series.evaluate(kind, y, tol).value;
  m.residual = m.full - m.main;
  return m;
}

ScanReport decay_scan(const SeriesEvaluator& series, SeriesKind kind, const std::vector<double>& grid, double eps,
                      double delta, double tol) {
  if (kind == SeriesKind::p_even) throw Error(ErrorCode::usage, "decay scans take p_odd or q_even");
  std::vector<double> values(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    values[i] = kind == SeriesKind::p_odd ? series.p_odd(grid[i], tol).value
                                          : main_term_residual(series, kind, grid[i], eps, tol).residual;
  ScanReport r = assemble(grid, values, -1.5);
  r.flag = r.fitted_slope > -1.5 + delta;
  r.flag_meaning = "envelope slope above -3/2 + delta";
  return r;
}

ScanReport small_y_scan(const SeriesEvaluator& series, SeriesKind kind, const std::vector<double>& grid, double delta,
                        double tol) {
  std::vector<double> values(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    values[i] = std::abs(series.evaluate(kind, grid[i], tol).value) * std::pow(grid[i], 0.5 + delta);
  ScanReport r = assemble(grid, values, -(0.5 + delta));
  r.flag = r.fitted_slope < -0.05;
  r.flag_meaning = "normalized envelope grows as y decreases";
  return r;
}

ScanReport summatory_scan(const CoeffTable& table, const std::vector<double>& grid, double delta) {
  if (grid.empty() || grid.back() > static_cast<double>(table.n_max))
    throw Error(ErrorCode::domain, "summatory grid exceeds the coefficient table");
  std::vector<double> values(grid.size());
  long n = 0;
  long double s = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const long upto = static_cast<long>(std::floor(grid[i]));
    while (n < upto) s += table.lambda_tilde[static_cast<size_t>(++n)];
    values[i] = std::abs(static_cast<double>(s)) * std::pow(grid[i], -0.5 - delta);
  }
  ScanReport r = assemble(grid, values, 0.5 + delta);
  r.flag = r.fitted_slope > 0.05;
  r.flag_meaning = "normalized envelope grows with x";
  return r;
}

}  // namespace maass
