#include "maass/series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <string>

#include "maass/error.hpp"
#include "maass/parallel.hpp"
#include "maass/quadrature.hpp"

namespace maass {
namespace {

constexpr long kChunk = 2048;
constexpr int kMaxOrder = 200;
constexpr double kInverseRelFloor = 1e-15;

struct Partial {
  cplx sum;
  double abs_sum = 0.0;
};

// Σ_{lo < n ≤ hi} λ̃(n) n^{-s}
Partial dirichlet_range(const std::vector<double>& coef, long lo, long hi, cplx s) {
  Partial p;
  cplxl acc = 0;
  long double abs_acc = 0;
  for (long n = lo + 1; n <= hi; ++n) {
    const double c = coef[static_cast<size_t>(n)];
    if (c == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    const cplx term = c * std::exp(-s * ln);
    acc += cplxl(term.real(), term.imag());
    abs_acc += std::abs(term);
  }
  p.sum = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  p.abs_sum = static_cast<double>(abs_acc);
  return p;
}

std::string format_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

const char* to_string(SeriesPath path) { return path == SeriesPath::direct ? "direct" : "contour"; }

const char* to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::p_odd: return "p_odd";
    case SeriesKind::p_even: return "p_even";
    case SeriesKind::q_even: return "q_even";
  }
  return "unknown";
}

SeriesEvaluator::SeriesEvaluator(std::shared_ptr<const LFunction> lfun, double x_switch)
    : lfun_(std::move(lfun)), x_switch_(x_switch) {
  if (!lfun_) throw Error(ErrorCode::domain, "series evaluator needs an L-function");
  if (!(x_switch_ > 0.05 && x_switch_ <= 2.0)) throw Error(ErrorCode::usage, "kernel switch must lie in (0.05, 2]");
  nu_ = lfun_->form().nu;
  inv2_ = inverse_sum(cplx(2.0, -nu_));
  inv3_ = inverse_sum(cplx(3.0, -nu_));
  inv_err_ = 0.0;
  if (!lfun_->table().finite_support) {
    // Error of the Λ-derived values, estimated against a coarser rule on the same panels.
    EvalConfig coarse = lfun_->config();
    coarse.quad_spec.abscissa_count = 16;
    auto table = std::shared_ptr<const CoeffTable>(lfun_, &lfun_->table());
    LFunction alt(lfun_->form(), table, coarse);
    const cplx a2 = alt.inverse_l(cplx(2.0, -nu_));
    const cplx a3 = alt.inverse_l(cplx(3.0, -nu_));
    inv_err_ = std::max({std::abs(a2 - inv2_) / std::abs(inv2_), std::abs(a3 - inv3_) / std::abs(inv3_), kInverseRelFloor});
  }
}

cplx SeriesEvaluator::inverse_sum(cplx s) const {
  if (s.real() <= 1.0) throw Error(ErrorCode::region, "inverse Dirichlet sum needs Re(s) > 1");
  const CoeffTable& tab = lfun_->table();
  if (tab.finite_support) return dirichlet_range(tab.lambda_tilde, 0, tab.n_max, s).sum;
  return lfun_->inverse_l(s);
}

std::vector<cplx> SeriesEvaluator::inverse_sums(const std::vector<cplx>& s) const {
  for (cplx v : s)
    if (v.real() <= 1.0) throw Error(ErrorCode::region, "inverse Dirichlet sum needs Re(s) > 1");
  std::vector<cplx> out(s.size());
  if (lfun_->table().finite_support) {
    for (size_t i = 0; i < s.size(); ++i) out[i] = inverse_sum(s[i]);
    return out;
  }
  std::vector<cplx> lam = lfun_->lambda_completed(s);
  for (size_t i = 0; i < s.size(); ++i) out[i] = l_infinity(s[i], lfun_->form()) / lam[i];
  return out;
}

SeriesResult SeriesEvaluator::p_odd(double y, double tol) const { return run(SeriesKind::p_odd, y, tol); }
SeriesResult SeriesEvaluator::p_even(double y, double tol) const { return run(SeriesKind::p_even, y, tol); }
SeriesResult SeriesEvaluator::q_even(double y, double tol) const { return run(SeriesKind::q_even, y, tol); }
SeriesResult SeriesEvaluator::evaluate(SeriesKind kind, double y, double tol) const { return run(kind, y, tol); }

SeriesResult SeriesEvaluator::run(SeriesKind kind, double y, double tol) const {
  if (!(y > 0) || !std::isfinite(y)) throw Error(ErrorCode::domain, "series argument must be positive");
  if (!(tol >= 1e-12)) throw Error(ErrorCode::usage, "series tolerance must be at least 1e-12");
  if (kind != SeriesKind::p_odd && nu_ < 1e-3)
    throw Error(ErrorCode::degenerate_parameter, "even-form series need ν ≥ 1e-3");
  const CoeffTable& tab = lfun_->table();
  const std::vector<double>& lt = tab.lambda_tilde;
  long m = static_cast<long>(std::floor(2 * kPi * y / x_switch_));
  if (tab.finite_support) m = std::min(m, tab.n_max);
  if (m > tab.n_max)
    throw Error(ErrorCode::tolerance_unreachable,
                "coefficient table too short: the direct range needs n ≤ " + std::to_string(m));

  // Direct range, summed in fixed chunks so the reduction order never depends on threading.
  const size_t chunks = static_cast<size_t>((m + kChunk - 1) / kChunk);
  std::vector<long double> part(chunks, 0.0L), part_abs(chunks, 0.0L);
  parallel_for(chunks, [&](size_t c) {
    const long lo = static_cast<long>(c) * kChunk + 1;
    const long hi = std::min(m, lo + kChunk - 1);
    long double acc = 0, acc_abs = 0;
    for (long n = lo; n <= hi; ++n) {
      const double l = lt[static_cast<size_t>(n)];
      if (l == 0.0) continue;
      const double dn = static_cast<double>(n);
      const double x = 2 * kPi * y / dn;
      double term;
      switch (kind) {
        case SeriesKind::p_odd: term = l / (dn * dn) * k_bessel_imag(nu_, x); break;
        case SeriesKind::p_even: term = l / dn * bracket_even(nu_, x); break;
        default: term = -kPi * l / (dn * dn) * omega_kernel(nu_, x); break;
      }
      acc += term;
      acc_abs += std::abs(term);
    }
    part[c] = acc;
    part_abs[c] = acc_abs;
  });
  long double direct = 0, direct_abs = 0;
  for (size_t c = 0; c < chunks; ++c) {
    direct += part[c];
    direct_abs += part_abs[c];
  }

  // Tail n > m:  Re Σ_k w_k (πy)^{p_k - iν} Σ_{n>m} λ̃(n) n^{-(σ_k - iν)}.
  const int k0 = kind == SeriesKind::p_odd ? 0 : 1;
  const double lpy = std::log(kPi * y);
  cplx c = gamma_cx(cplx(0, nu_));
  for (int k = 1; k <= k0; ++k) c /= static_cast<double>(k) * cplx(k, -nu_);
  auto sigma_of = [&](int k) { return kind == SeriesKind::p_odd ? 2.0 + 2 * k : 1.0 + 2 * k; };
  auto power_of = [&](int k) { return kind == SeriesKind::q_even ? 2.0 * k - 1 : 2.0 * k; };
  auto weight_of = [&](int k, cplx ck) -> cplx {
    if (kind == SeriesKind::p_odd) return ck;
    if (kind == SeriesKind::p_even) return 2.0 * ck;
    return 2 * kPi * ck * cplx(2.0 * k, -nu_);
  };
  auto range_bound = [&](double sigma, long lo) {
    return lo >= 1 ? dirichlet_tail_bound(sigma, lo) : 1.0 + dirichlet_tail_bound(sigma, 1);
  };
  auto term_bound = [&](int k, cplx ck) {
    return std::abs(weight_of(k, ck)) * std::exp(power_of(k) * lpy) * range_bound(sigma_of(k), m);
  };

  long double tail = 0;
  double bound = 0.0;
  double rounding = static_cast<double>(direct_abs);
  double prev = term_bound(k0, c);
  const bool empty_tail = tab.finite_support && m >= tab.n_max;
  for (int k = k0; !empty_tail; ++k) {
    if (k - k0 > kMaxOrder) throw Error(ErrorCode::non_convergence, "ascending tail expansion did not converge");
    const double sigma = sigma_of(k);
    const cplx w = weight_of(k, c);
    const double wmag = std::abs(w) * std::exp(power_of(k) * lpy);
    const cplx s(sigma, -nu_);
    cplx t_k;
    if (sigma == 2.0 || sigma == 3.0) {
      const cplx full = sigma == 2.0 ? inv2_ : inv3_;
      Partial head = dirichlet_range(lt, 0, m, s);
      t_k = full - head.sum;
      bound += wmag * std::abs(full) * inv_err_;
      rounding += wmag * (head.abs_sum + std::abs(full));
    } else {
      long hi = std::min(tab.n_max, std::max(2 * m, 64L));
      while (hi < tab.n_max && wmag * dirichlet_tail_bound(sigma, hi) > 1e-3 * tol) hi = std::min(tab.n_max, 2 * hi);
      Partial p = dirichlet_range(lt, m, hi, s);
      t_k = p.sum;
      if (!(tab.finite_support && hi == tab.n_max)) bound += wmag * dirichlet_tail_bound(sigma, hi);
      rounding += wmag * p.abs_sum;
    }
    const cplx term = w * std::exp(cplx(power_of(k), -nu_) * lpy) * t_k;
    tail += term.real();

    const cplx c_next = c / (static_cast<double>(k + 1) * cplx(k + 1, -nu_));
    const double next = term_bound(k + 1, c_next);
    if (k >= k0 + 1 && next < 1e-3 * tol && next <= 0.5 * prev &&
        (next < 1e-17 * std::abs(static_cast<double>(direct + tail)) || next < 1e-300)) {
      bound += 2 * next;
      break;
    }
    prev = next;
    c = c_next;
  }

  SeriesResult r;
  r.value = static_cast<double>(direct + tail);
  r.terms_used = m;
  r.tail_bound = bound + 8 * DBL_EPSILON * rounding;
  r.path = SeriesPath::direct;
  if (!(r.tail_bound <= tol))
    throw Error(ErrorCode::tolerance_unreachable, std::string(to_string(kind)) + " tail bound " +
                                                      format_short(r.tail_bound) + " exceeds the tolerance");
  return r;
}

PowerExpansion SeriesEvaluator::power_expansion(SeriesKind kind, double y_max, double tol) const {
  if (!(y_max > 0)) throw Error(ErrorCode::domain, "expansion range must be positive");
  const CoeffTable& tab = lfun_->table();
  const int k0 = kind == SeriesKind::p_odd ? 0 : 1;
  PowerExpansion out;
  out.y_max = y_max;
  const double lpy = std::log(kPi * y_max);
  cplx c = gamma_cx(cplx(0, nu_));
  for (int k = 1; k <= k0; ++k) c /= static_cast<double>(k) * cplx(k, -nu_);
  double prev = 1e300;
  for (int k = k0;; ++k) {
    if (k - k0 > kMaxOrder) throw Error(ErrorCode::non_convergence, "power expansion did not converge");
    const double sigma = kind == SeriesKind::p_odd ? 2.0 + 2 * k : 1.0 + 2 * k;
    const double power = kind == SeriesKind::q_even ? 2.0 * k - 1 : 2.0 * k;
    cplx w = kind == SeriesKind::p_odd ? c : (kind == SeriesKind::p_even ? 2.0 * c : 2 * kPi * c * cplx(2.0 * k, -nu_));
    const double wmag = std::abs(w) * std::exp(power * lpy);
    const cplx s(sigma, -nu_);
    cplx full;
    if (sigma == 2.0 || sigma == 3.0) {
      full = sigma == 2.0 ? inv2_ : inv3_;
      out.bound += wmag * std::abs(full) * inv_err_;
    } else {
      full = dirichlet_range(tab.lambda_tilde, 0, tab.n_max, s).sum;
      if (!tab.finite_support) out.bound += wmag * dirichlet_tail_bound(sigma, tab.n_max);
    }
    const cplx exponent(power, -nu_);
    out.terms.push_back({w * std::exp(exponent * std::log(kPi)) * full, exponent});
    const double mag = wmag * (1.0 + dirichlet_tail_bound(sigma, 1));
    if (k > k0 && mag < 1e-3 * tol && mag <= 0.5 * prev) {
      out.bound += 2 * mag;
      break;
    }
    prev = mag;
    c /= static_cast<double>(k + 1) * cplx(k + 1, -nu_);
  }
  return out;
}

SeriesResult SeriesEvaluator::p_odd_contour(double y) const {
  if (!(y > 0) || !std::isfinite(y)) throw Error(ErrorCode::domain, "series argument must be positive");
  const EvalConfig& cfg = lfun_->config();
  const double c = cfg.contour_abscissa;
  const double height = cfg.contour_height_cap;
  if (!(c > -0.5 && c < 0.0)) throw Error(ErrorCode::strip_violation, "contour abscissa must lie in (-1/2, 0)");
  const CoeffTable& tab = lfun_->table();
  const MaassFormData& form = lfun_->form();
  const int panels = static_cast<int>(std::ceil(height));
  const auto hi = composite_nodes(0.0, height, panels, 20);
  const auto lo = composite_nodes(0.0, height, panels, 16);
  const double ly = std::log(y);

  auto integrate = [&](const std::vector<PanelNode>& nodes, double* abs_integral) {
    std::vector<cplx> reflected(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) reflected[j] = cplx(1.0 - c, -nodes[j].x);
    std::vector<cplx> inv(nodes.size());
    if (tab.finite_support) {
      for (size_t j = 0; j < nodes.size(); ++j) inv[j] = inverse_sum(reflected[j]);
    } else {
      std::vector<cplx> lam = lfun_->lambda_completed(reflected);
      for (size_t j = 0; j < nodes.size(); ++j) inv[j] = l_infinity(reflected[j], form) / lam[j];
    }
    cplx acc = 0;
    double acc_abs = 0;
    for (size_t j = 0; j < nodes.size(); ++j) {
      const cplx s(c, nodes[j].x);
      const cplx f = l_infinity(s, 1, form.nu) * inv[j] * std::exp(-s * ly);
      acc += nodes[j].w * f;
      acc_abs += nodes[j].w * std::abs(f);
    }
    if (abs_integral) *abs_integral = acc_abs;
    return acc;
  };

  double abs_integral = 0;
  const cplx i20 = integrate(hi, &abs_integral);
  const cplx i16 = integrate(lo, nullptr);
  const double envelope = std::abs(l_infinity(cplx(c, height), 1, form.nu)) * (1.0 + dirichlet_tail_bound(1.0 - c, 1)) *
                          std::exp(-c * ly) * 4.0 / kPi;
  const double scale = 1.0 / (kPi * 4 * kPi * y);
  SeriesResult r;
  r.value = i20.real() * scale;
  r.tail_bound = (std::abs(i20.real() - i16.real()) + 1e-12 * abs_integral + envelope) * scale;
  r.terms_used = static_cast<long>(hi.size());
  r.path = SeriesPath::contour;
  return r;
}

}  // namespace maass
