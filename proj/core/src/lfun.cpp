#include "maass/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "maass/error.hpp"
#include "maass/parallel.hpp"
#include "maass/quadrature.hpp"

namespace maass {
namespace {

constexpr double kKernelCut = 70.0;
constexpr double kSigmaWindow = 3.0;
constexpr size_t kPlanCacheSize = 12;

cplxl to_l(cplx z) { return {z.real(), z.imag()}; }
cplx to_d(cplxl z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

const char* to_string(ZeroList::Source source) {
  return source == ZeroList::Source::ingested ? "ingested" : "scanned";
}

cplx l_infinity(cplx s, int parity, double nu) {
  const cplxl sl = to_l(s);
  cplxl acc = -sl * std::log(kPiL);
  for (int sign = -1; sign <= 1; sign += 2) {
    cplxl w = (sl + static_cast<long double>(parity) + cplxl(0, sign * static_cast<long double>(nu))) / 2.0L;
    long double k = std::round(w.real());
    if (k <= 0 && std::abs(w - cplxl(k, 0)) < 0.5e-10L)
      throw Error(ErrorCode::pole_proximity, "gamma factor evaluated at one of its poles");
    acc += log_gamma_l(w);
  }
  return to_d(std::exp(acc));
}

cplx l_infinity(cplx s, const MaassFormData& form) { return l_infinity(s, form.parity, form.nu); }

double dirichlet_tail_bound(double sigma, long terms) {
  // Partial summation against Σ_{n≤x} τ(n) ≤ x(log x + 1).
  const double a = sigma - 7.0 / 64.0;
  if (a <= 1.0) return std::numeric_limits<double>::infinity();
  const double m = static_cast<double>(std::max(terms, 1L));
  const double lm = std::log(m);
  return a * std::pow(m, 1.0 - a) * ((lm + 1.0) / (a - 1.0) + 1.0 / ((a - 1.0) * (a - 1.0)));
}

DirichletValue l_dirichlet(cplx s, const CoeffTable& table, DirichletKind kind, const EvalConfig& config) {
  if (s.real() < 1.0 + config.tail_delta)
    throw Error(ErrorCode::region, "Dirichlet series used with Re(s) below 1 + tail_delta");
  const std::vector<double>& coef = kind == DirichletKind::l ? table.lambda : table.lambda_tilde;
  const long terms = std::min(config.dirichlet_terms, table.n_max);
  cplxl sum = 0;
  const cplxl sl = to_l(s);
  for (long n = 1; n <= terms; ++n) {
    if (coef[n] == 0.0) continue;
    sum += static_cast<long double>(coef[n]) * std::exp(-sl * std::log(static_cast<long double>(n)));
  }
  DirichletValue out;
  out.value = to_d(sum);
  out.terms = terms;
  bool exact = kind == DirichletKind::inverse && table.finite_support && terms == table.n_max;
  out.tail_bound = exact ? 0.0 : dirichlet_tail_bound(s.real(), terms);
  return out;
}

struct LFunction::Plan {
  double theta = 0.0;
  std::vector<double> log_r;
  std::vector<cplx> c;
};

LFunction::LFunction(MaassFormData form, std::shared_ptr<const CoeffTable> table, EvalConfig config)
    : form_(std::move(form)), table_(std::move(table)), config_(config) {
  config_.validate();
  if (!table_) throw Error(ErrorCode::domain, "LFunction needs a coefficient table");
  y0_ = 1.0 / std::sqrt(static_cast<double>(form_.level));
}

LFunction::~LFunction() = default;

void LFunction::check_window(cplx s) const {
  if (std::abs(s.real() - 0.5) > kSigmaWindow + 1e-9 || std::abs(s.imag()) > config_.max_height)
    throw Error(ErrorCode::window, "s = (" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) +
                                       ") lies outside the supported window");
}

std::shared_ptr<const LFunction::Plan> LFunction::build_plan(int block) const {
  auto plan = std::make_shared<Plan>();
  const double t_top = (block + 1) * config_.block_width + 0.5;
  const double theta = std::max(0.0, kPi / 2 - config_.rotation_margin / t_top);
  plan->theta = theta;
  const double ct = std::cos(theta);
  const double tt = std::tan(theta);
  const double sigma_max = kSigmaWindow + 1.5;

  double v_end = 0.0;
  while (2 * kPi * y0_ * std::exp(v_end) * ct < kKernelCut + sigma_max * v_end) v_end += 0.02;
  const double omega = t_top + kKernelCut * tt + form_.nu + 5.0;
  const int panels = std::max(4, static_cast<int>(std::ceil(v_end * omega / (1.5 * 2 * kPi))));
  const auto nodes = composite_nodes(0.0, v_end, panels, config_.quad_spec.abscissa_count);

  const double z_min = 2 * kPi * y0_;
  KRay ray(form_.nu, theta, z_min * (1 - 1e-9));
  const cplx rot = std::polar(1.0, theta);
  const CoeffTable& tab = *table_;
  const bool odd = form_.parity == 1;

  plan->log_r.resize(nodes.size());
  plan->c.resize(nodes.size());
  const long need = static_cast<long>(kKernelCut / (z_min * ct)) + 1;
  if (need > tab.n_max)
    throw Error(ErrorCode::non_convergence, "coefficient table too short for the completed L-function (needs n_max ≥ " +
                                                std::to_string(need) + ")");
  parallel_for(nodes.size(), [&](size_t j) {
    const double r = y0_ * std::exp(nodes[j].x);
    const double z1 = 2 * kPi * r;
    const long ncut = std::min(tab.n_max, static_cast<long>(kKernelCut / (z1 * ct)) + 1);
    cplx phi = 0;
    for (long n = 1; n <= ncut; ++n) {
      const double ln = tab.lambda[n];
      if (ln == 0.0) continue;
      const double x = n * z1;
      cplx k = ray(x);
      if (odd) k *= 2.0 * x * rot;
      else k *= 4.0;
      phi += ln * k;
    }
    plan->log_r[j] = std::log(r);
    plan->c[j] = nodes[j].w * phi;
  });
  return plan;
}

std::shared_ptr<const LFunction::Plan> LFunction::plan_for(int block) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    for (auto it = cache_.begin(); it != cache_.end(); ++it) {
      if (it->first == block) {
        cache_.splice(cache_.begin(), cache_, it);
        return cache_.front().second;
      }
    }
  }
  auto plan = build_plan(block);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace_front(block, plan);
  while (cache_.size() > kPlanCacheSize) cache_.pop_back();
  return plan;
}

int LFunction::cached_plans() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return static_cast<int>(cache_.size());
}

cplx LFunction::evaluate(const Plan& plan, cplx s) const {
  cplx a = 0, b = 0;
  for (size_t j = 0; j < plan.c.size(); ++j) {
    const double lr = plan.log_r[j];
    const cplx e = std::exp(s * lr);
    a += plan.c[j] * e;
    b += std::conj(plan.c[j]) * (std::exp(lr) / e);
  }
  const cplx i(0, 1);
  const cplx ea = std::exp(i * plan.theta * s);
  const cplx eb = std::exp(i * plan.theta * (s - 1.0));
  const cplx fe = form_.root_number * std::exp((0.5 - s) * std::log(static_cast<double>(form_.level)));
  return ea * a + fe * eb * b;
}

std::vector<cplx> LFunction::lambda_completed(const std::vector<cplx>& s) const {
  std::vector<cplx> out(s.size());
  std::map<int, std::vector<size_t>> groups;
  for (size_t i = 0; i < s.size(); ++i) {
    check_window(s[i]);
    groups[static_cast<int>(std::abs(s[i].imag()) / config_.block_width)].push_back(i);
  }
  for (const auto& [block, idx] : groups) {
    auto plan = plan_for(block);
    parallel_for(idx.size(), [&](size_t k) {
      const size_t i = idx[k];
      const bool neg = s[i].imag() < 0;
      const cplx v = evaluate(*plan, neg ? std::conj(s[i]) : s[i]);
      out[i] = neg ? std::conj(v) : v;
    });
  }
  return out;
}

cplx LFunction::lambda_completed(cplx s) const { return lambda_completed(std::vector<cplx>{s})[0]; }

std::vector<cplx> LFunction::l_value(const std::vector<cplx>& s) const {
  std::vector<cplx> lam = lambda_completed(s);
  for (size_t i = 0; i < s.size(); ++i) lam[i] /= l_infinity(s[i], form_);
  return lam;
}

cplx LFunction::l_value(cplx s) const { return lambda_completed(s) / l_infinity(s, form_); }

cplx LFunction::inverse_l(cplx s) const { return l_infinity(s, form_) / lambda_completed(s); }

cplx LFunction::l_derivative(cplx rho, const ZeroList* zeros) const {
  return l_derivative(rho, config_.derivative_radius, config_.derivative_points, zeros);
}

cplx LFunction::l_derivative(cplx rho, double radius, int points, const ZeroList* zeros) const {
  return derivatives({rho}, radius, points, zeros)[0];
}

std::vector<cplx> LFunction::l_derivatives(const std::vector<cplx>& rhos, const ZeroList* zeros) const {
  return derivatives(rhos, config_.derivative_radius, config_.derivative_points, zeros);
}

std::vector<cplx> LFunction::derivatives(const std::vector<cplx>& rhos, double radius, int points,
                                         const ZeroList* zeros) const {
  if (!(radius > 0) || points < 4) throw Error(ErrorCode::domain, "bad derivative circle");
  if (zeros) {
    for (cplx rho : rhos) {
      for (double g : zeros->ordinates) {
        for (double gg : {g, -g}) {
          double d = std::abs(cplx(0.5, gg) - rho);
          if (d > 1e-9 && d < 2 * radius)
            throw Error(ErrorCode::crowded_zero, "another zero lies within twice the derivative radius of ρ");
        }
      }
    }
  }
  const size_t pts = static_cast<size_t>(points);
  std::vector<cplx> s(rhos.size() * pts);
  for (size_t i = 0; i < rhos.size(); ++i)
    for (size_t m = 0; m < pts; ++m) s[i * pts + m] = rhos[i] + std::polar(radius, 2 * kPi * m / points);
  std::vector<cplx> vals = l_value(s);
  std::vector<cplx> out(rhos.size());
  for (size_t i = 0; i < rhos.size(); ++i) {
    cplx sum = 0;
    for (size_t m = 0; m < pts; ++m) sum += vals[i * pts + m] * std::polar(1.0, -2 * kPi * m / points);
    out[i] = sum / (static_cast<double>(points) * radius);
    if (!std::isfinite(out[i].real()) || !std::isfinite(out[i].imag()))
      throw Error(ErrorCode::non_convergence, "derivative quadrature produced a non-finite value");
  }
  return out;
}

std::vector<cplx> LFunction::hardy_rotated(const std::vector<double>& t) const {
  std::vector<cplx> s(t.size());
  for (size_t i = 0; i < t.size(); ++i) s[i] = cplx(0.5, t[i]);
  std::vector<cplx> lam = lambda_completed(s);
  const cplx rot = 1.0 / std::sqrt(form_.root_number);
  const double ln = std::log(static_cast<double>(form_.level));
  for (size_t i = 0; i < t.size(); ++i) lam[i] *= rot * std::polar(1.0, 0.5 * t[i] * ln);
  return lam;
}

cplx LFunction::hardy_rotated(double t) const { return hardy_rotated(std::vector<double>{t})[0]; }

double LFunction::hardy_w(double t) const { return hardy_rotated(t).real(); }

ZeroList LFunction::find_zeros(double t_lo, double t_hi) const {
  if (std::abs(form_.root_number.imag()) > 1e-10)
    throw Error(ErrorCode::domain, "zero scanning needs a real root number");
  if (!(t_hi > t_lo)) throw Error(ErrorCode::domain, "empty zero-scan interval");
  ZeroList out;
  out.source = ZeroList::Source::scanned;
  const double step = config_.zero_step;
  const size_t count = static_cast<size_t>(std::floor((t_hi - t_lo) / step)) + 1;
  std::vector<double> t(count);
  for (size_t i = 0; i < count; ++i) t[i] = t_lo + step * static_cast<double>(i);
  std::vector<cplx> wz = hardy_rotated(t);
  std::vector<double> w(count);
  for (size_t i = 0; i < count; ++i) w[i] = wz[i].real();

  auto refine = [&](double a, double fa, double b, double fb) {
    for (int it = 0; it < 200 && std::abs(b - a) > config_.zero_tolerance; ++it) {
      double c = (a * fb - b * fa) / (fb - fa);
      if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
      double fc = hardy_w(c);
      if (fc == 0.0) return c;
      if ((fc < 0) != (fb < 0)) {
        a = b;
        fa = fb;
      } else {
        fa *= 0.5;
      }
      b = c;
      fb = fc;
    }
    return 0.5 * (a + b);
  };

  for (size_t i = 0; i < count; ++i) {
    if (w[i] == 0.0) {
      if (t[i] > 0) out.ordinates.push_back(t[i]);
      continue;
    }
    if (i + 1 < count && w[i + 1] != 0.0 && ((w[i] < 0) != (w[i + 1] < 0))) {
      double z = refine(t[i], w[i], t[i + 1], w[i + 1]);
      if (z > 0) out.ordinates.push_back(z);
    }
    if (i > 0 && i + 1 < count && ((w[i - 1] < 0) == (w[i] < 0)) && ((w[i + 1] < 0) == (w[i] < 0))) {
      double m = std::min(std::abs(w[i - 1]), std::abs(w[i + 1]));
      if (std::abs(w[i]) < 0.2 * m)
        out.warnings.push_back("grid may be too coarse near t = " + std::to_string(t[i]) +
                               ": |W| dips towards zero without a sign change");
    }
  }
  std::sort(out.ordinates.begin(), out.ordinates.end());
  return out;
}

double LFunction::local_scale(double gamma) const {
  std::vector<cplx> s;
  for (int k = 0; k <= 20; ++k) s.emplace_back(0.5, gamma - 1.0 + 0.1 * k);
  double m = 0;
  for (cplx v : lambda_completed(s)) m = std::max(m, std::abs(v));
  return m;
}

double LFunction::zero_ratio(double gamma) const {
  double scale = local_scale(gamma);
  if (scale == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(lambda_completed(cplx(0.5, gamma))) / scale;
}

ZeroList LFunction::validate_zeros(const std::vector<double>& ordinates, ZeroList::Source source,
                                   double threshold) const {
  ZeroList out;
  out.source = source;
  for (size_t i = 0; i < ordinates.size(); ++i) {
    if (i > 0 && !(ordinates[i] > ordinates[i - 1]))
      throw Error(ErrorCode::unvalidated_zero, "zero ordinates are not strictly increasing");
    double r = zero_ratio(ordinates[i]);
    if (!(r < threshold))
      throw Error(ErrorCode::unvalidated_zero, "ordinate " + std::to_string(ordinates[i]) +
                                                   " fails re-validation (|Λ|/scale = " + std::to_string(r) + ")");
    out.ordinates.push_back(ordinates[i]);
  }
  return out;
}

bool LFunction::has_central_zero(double threshold) const { return zero_ratio(0.0) < threshold; }

}  // namespace maass
