#include "maass/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maass/error.hpp"

namespace maass {
namespace {

constexpr long double kLogSqrt2Pi = 0.918938533204672741780329736405617639861L;
constexpr long double kHalfPi = kPiL / 2;

// B_{2k} / (2k (2k-1))
constexpr long double kStirling[] = {
    1.0L / 12,          -1.0L / 360,           1.0L / 1260,         -1.0L / 1680,
    1.0L / 1188,        -691.0L / 360360,      1.0L / 156,          -3617.0L / 122400,
    43867.0L / 244188,  -174611.0L / 125400,   77683.0L / 5796,     -236364091.0L / 1506960,
};

void check_pole(cplxl s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw Error(ErrorCode::domain, "gamma argument is not finite");
  long double k = std::round(s.real());
  if (k <= 0 && std::abs(s - cplxl(k, 0)) < 1e-12L)
    throw Error(ErrorCode::pole_proximity, "gamma evaluated within 1e-12 of the pole at " +
                                               std::to_string(static_cast<long long>(k)));
}

cplxl log_gamma_right(cplxl z) {
  cplxl prod = 1;
  while (z.real() < 15) {
    prod *= z;
    z += 1;
  }
  cplxl zi = 1.0L / z;
  cplxl zi2 = zi * zi;
  cplxl sum = 0;
  cplxl p = zi;
  for (long double c : kStirling) {
    sum += c * p;
    p *= zi2;
  }
  return (z - 0.5L) * std::log(z) - z + kLogSqrt2Pi + sum - std::log(prod);
}

cplxl k_order(cplxl mu, long double x, bool* underflow) {
  *underflow = false;
  if (x > kUnderflowLimit) {
    *underflow = true;
    return 0;
  }
  long double nu = std::abs(mu.imag());
  if (nu >= kMinOrderForSeries && x < k_series_limit(static_cast<double>(nu)))
    return detail::k_order_series(mu, x);
  if (x <= kQuadratureLimit) return detail::k_order_quadrature(mu, x);
  bool ok = false;
  cplxl v = detail::k_order_asymptotic(mu, x, &ok);
  if (ok) return v;
  return detail::k_order_quadrature(mu, x);
}

void check_argument(double nu, double x) {
  if (!std::isfinite(nu)) throw Error(ErrorCode::domain, "Bessel order is not finite");
  if (!(x > 0) || !std::isfinite(x)) throw Error(ErrorCode::domain, "Bessel argument must be positive");
}

void check_kernel_order(double nu) {
  if (std::abs(nu) < 1e-3)
    throw Error(ErrorCode::degenerate_parameter, "spectral parameter below 1e-3: Γ(±iν) is singular");
}

}  // namespace

cplxl log_gamma_l(cplxl s) {
  check_pole(s);
  if (s.real() >= 0.5L) return log_gamma_right(s);
  return std::log(kPiL) - std::log(std::sin(kPiL * s)) - log_gamma_right(1.0L - s);
}

cplxl gamma_l(cplxl s) {
  check_pole(s);
  if (s.real() >= 0.5L) return std::exp(log_gamma_right(s));
  return kPiL / (std::sin(kPiL * s) * std::exp(log_gamma_right(1.0L - s)));
}

cplx gamma_cx(cplx s) {
  cplxl v = gamma_l(cplxl(s.real(), s.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double k_series_limit(double nu) { return std::max(0.5, std::abs(nu) / 10.0); }

namespace detail {

cplxl k_order_series(cplxl mu, long double x) {
  long double h = x / 2;
  long double q = h * h;
  long double lh = std::log(h);
  cplxl a = gamma_l(mu) * std::exp(-mu * lh);
  cplxl b = gamma_l(-mu) * std::exp(mu * lh);
  cplxl sum = a + b;
  long double scale = std::abs(a) + std::abs(b);
  for (int k = 1; k < 400; ++k) {
    a *= q / (static_cast<long double>(k) * (static_cast<long double>(k) - mu));
    b *= q / (static_cast<long double>(k) * (static_cast<long double>(k) + mu));
    sum += a + b;
    long double m = std::abs(a) + std::abs(b);
    scale = std::max(scale, m);
    if (m < 1e-24L * scale) break;
  }
  return 0.5L * sum;
}

cplxl k_order_quadrature(cplxl mu, long double x) {
  if (mu.imag() < 0) return std::conj(k_order_quadrature(std::conj(mu), x));
  long double nu = mu.imag();
  long double a = mu.real();
  long double delta = nu > 4.0L / (kPiL / 4) ? 4.0L / nu : kPiL / 4;
  long double tau = nu > 0 ? std::asin(std::min(1.0L, nu / x)) : 0.0L;
  tau = std::min(tau, kHalfPi - delta);
  long double d = 0.8L * (kHalfPi - tau);
  long double h = 2 * kPiL * d / (48 + nu * d);
  long double ct = std::cos(tau), st = std::sin(tau);
  cplxl shift = std::exp(cplxl(0, 1) * mu * tau);
  auto g = [&](long double v) {
    long double mag = -x * ct * std::cosh(v) - a * v;
    long double ph = x * st * std::sinh(v) - nu * v;
    return shift * std::exp(cplxl(mag, ph));
  };
  auto logmag = [&](long double v) { return -x * ct * std::cosh(v) - a * v; };
  long double vpeak = std::asinh(-a / (x * ct));
  long long j0 = std::llround(vpeak / h);
  long double peak = logmag(j0 * h);
  cplxl sum = g(j0 * h);
  for (int dir = -1; dir <= 1; dir += 2) {
    for (long long j = j0 + dir;; j += dir) {
      long double v = j * h;
      if (logmag(v) < peak - 62) break;
      sum += g(v);
    }
  }
  return 0.5L * h * sum;
}

cplxl k_order_asymptotic(cplxl mu, cplxl z, bool* converged, cplxl* derivative) {
  cplxl m4 = 4.0L * mu * mu;
  long double am4 = std::abs(m4);
  cplxl zi = 1.0L / z;
  long double az = std::abs(z);
  cplxl term = 1;
  cplxl s = 1;
  cplxl sd = 0;
  *converged = false;
  for (int k = 1; k < 300; ++k) {
    long double odd = 2.0L * k - 1;
    cplxl factor = (m4 - odd * odd) / (8.0L * k);
    if (odd * odd > am4 && std::abs(factor) >= az) break;
    term *= factor * zi;
    s += term;
    sd -= static_cast<long double>(k) * term * zi;
    if (std::abs(term) < 1e-20L * std::abs(s)) {
      *converged = true;
      break;
    }
  }
  cplxl pref = std::sqrt(kPiL / (2.0L * z)) * std::exp(-z);
  if (derivative) *derivative = pref * (sd - s - s / (2.0L * z));
  return pref * s;
}

cplxl k_order_asymptotic(cplxl mu, long double x, bool* converged) {
  return k_order_asymptotic(mu, cplxl(x, 0), converged, nullptr);
}

}  // namespace detail

KValue k_bessel_imag_flagged(double nu, double x) {
  check_argument(nu, x);
  bool underflow = false;
  cplxl v = k_order(cplxl(0, std::abs(nu)), x, &underflow);
  return {static_cast<double>(v.real()), underflow};
}

double k_bessel_imag(double nu, double x) { return k_bessel_imag_flagged(nu, x).value; }

cplx k_bessel_one_imag(double nu, double x) {
  check_argument(nu, x);
  bool underflow = false;
  cplxl v = k_order(cplxl(1, std::abs(nu)), x, &underflow);
  cplx r(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return nu < 0 ? std::conj(r) : r;
}

double bracket_even(double nu, double x) {
  check_argument(nu, x);
  check_kernel_order(nu);
  long double n = std::abs(nu);
  cplxl inu(0, n);
  long double h = static_cast<long double>(x) / 2;
  cplxl lead = gamma_l(inu) * std::exp(-inu * std::log(h));
  if (x <= kSwitchBracket) {
    long double q = h * h;
    cplxl term = lead;
    cplxl sum = 0;
    long double scale = 0;
    for (int k = 1; k < 400; ++k) {
      term *= q / (static_cast<long double>(k) * (static_cast<long double>(k) - inu));
      sum += term;
      scale = std::max(scale, std::abs(term));
      if (std::abs(term) < 1e-24L * scale) break;
    }
    return static_cast<double>(2 * sum.real());
  }
  bool underflow = false;
  cplxl k = k_order(inu, x, &underflow);
  return static_cast<double>(2 * k.real() - 2 * lead.real());
}

double omega_kernel(double nu, double u) {
  check_argument(nu, u);
  check_kernel_order(nu);
  long double n = std::abs(nu);
  cplxl mu(1, n);
  long double h = static_cast<long double>(u) / 2;
  long double lh = std::log(h);
  cplxl lead = gamma_l(mu) * std::exp(-mu * lh);
  if (u <= kSwitchBracket) {
    long double q = h * h;
    cplxl a = lead;
    cplxl b = gamma_l(-mu) * std::exp(mu * lh);
    cplxl sum = b;
    long double scale = std::abs(b);
    for (int k = 1; k < 400; ++k) {
      long double kk = k;
      a *= q / (kk * (kk - mu));
      b *= q / (kk * (kk + mu));
      sum += a + b;
      long double m = std::abs(a) + std::abs(b);
      scale = std::max(scale, m);
      if (m < 1e-24L * scale) break;
    }
    return static_cast<double>(2 * sum.real());
  }
  bool underflow = false;
  cplxl k = k_order(mu, u, &underflow);
  return static_cast<double>(4 * k.real() - 2 * lead.real());
}

KRay::KRay(double nu, double theta, double r_min)
    : nu_(std::abs(nu)), theta_(theta), r_min_(r_min), rot_(std::polar(1.0, theta)) {
  if (!(r_min > 0)) throw Error(ErrorCode::domain, "KRay needs a positive minimum radius");
  if (!(std::abs(theta) < kPi / 2)) throw Error(ErrorCode::domain, "KRay angle must lie in (-π/2, π/2)");
  r_switch_ = std::max(30.0, 25.0 + 2.0 * nu_);
  if (r_min_ >= r_switch_) return;

  constexpr int kTerms = 36;
  const cplxl mu(0, nu_);
  const cplxl mu2 = mu * mu;
  const cplxl e(std::cos(static_cast<long double>(theta)), std::sin(static_cast<long double>(theta)));
  long double r0 = r_switch_;
  bool ok = false;
  cplxl d0;
  cplxl k0 = detail::k_order_asymptotic(mu, r0 * e, &ok, &d0);
  if (!ok) throw Error(ErrorCode::non_convergence, "Hankel expansion failed at the KRay start point");

  std::array<cplxl, kTerms> a{};
  for (;;) {
    const cplxl z0 = r0 * e;
    const cplxl z2 = z0 * z0;
    a[0] = k0;
    a[1] = d0;
    for (int k = 0; k + 2 < kTerms; ++k) {
      long double kk = k;
      cplxl rhs = -z0 * (kk + 1) * (2 * kk + 1) * a[k + 1] + (z2 + mu2 - kk * kk) * a[k];
      if (k >= 1) rhs += 2.0L * z0 * a[k - 1];
      if (k >= 2) rhs += a[k - 2];
      a[k + 2] = rhs / (z2 * (kk + 1) * (kk + 2));
    }
    // b_k = a_k e^{ikθ} so that the table is a polynomial in the real offset r - r0
    std::array<cplx, kStored> b{};
    std::array<cplxl, kTerms> bl{};
    cplxl ep = 1;
    for (int k = 0; k < kTerms; ++k) {
      bl[k] = a[k] * ep;
      if (k < kStored) b[k] = cplx(static_cast<double>(bl[k].real()), static_cast<double>(bl[k].imag()));
      ep *= e;
    }
    centers_.push_back(static_cast<double>(r0));
    coef_.push_back(b);
    if (r0 < r_min_) break;
    long double step = std::min(0.25L, 0.15L * r0);
    long double dr = -step;
    cplxl val = 0, der = 0;
    for (int k = kTerms - 1; k >= 0; --k) val = val * dr + bl[k];
    for (int k = kTerms - 1; k >= 1; --k) der = der * dr + static_cast<long double>(k) * bl[k];
    k0 = val;
    d0 = der / e;
    r0 -= step;
  }
}

cplx KRay::operator()(double r) const {
  if (r < r_min_ * (1 - 1e-12)) throw Error(ErrorCode::domain, "KRay evaluated below its minimum radius");
  if (r >= r_switch_) {
    const cplx z = r * rot_;
    const double m4 = -4.0 * nu_ * nu_;
    const cplx zi = 1.0 / z;
    cplx term = 1, s = 1;
    for (int k = 1; k < 200; ++k) {
      double odd = 2.0 * k - 1;
      term *= (m4 - odd * odd) / (8.0 * k) * zi;
      s += term;
      if (std::abs(term) < 1e-18 * std::abs(s)) break;
    }
    return std::sqrt(kPi / (2.0 * z)) * std::exp(-z) * s;
  }
  // centers_ is decreasing; pick the nearest one
  auto it = std::lower_bound(centers_.begin(), centers_.end(), r, std::greater<double>());
  size_t idx = static_cast<size_t>(it - centers_.begin());
  if (idx == centers_.size()) idx = centers_.size() - 1;
  if (idx > 0 && std::abs(centers_[idx - 1] - r) < std::abs(centers_[idx] - r)) --idx;
  const double dr = r - centers_[idx];
  const auto& b = coef_[idx];
  cplx v = 0;
  for (int k = kStored - 1; k >= 0; --k) v = v * dr + b[k];
  return v;
}

}  // namespace maass
