#include "maass/hecke.hpp"

#include <cmath>
#include <numeric>

#include "maass/error.hpp"

namespace maass {

Sieve::Sieve(long n_max) : spf_(static_cast<size_t>(std::max(n_max, 1L)) + 1, 0) {
  const long n = limit();
  for (long i = 2; i <= n; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<int>(i);
    for (long j = i * i; j <= n; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<int>(i);
  }
}

std::vector<std::pair<long, int>> Sieve::factor(long n) const {
  std::vector<std::pair<long, int>> out;
  while (n > 1) {
    long p = spf(n);
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<long> Sieve::primes() const {
  std::vector<long> out;
  for (long i = 2; i <= limit(); ++i)
    if (spf(i) == i) out.push_back(i);
  return out;
}

int chi0(long level, long n) { return std::gcd(level, n) == 1 ? 1 : 0; }

MobiusValue mobius_and_squarefree(long n) {
  if (n < 1) throw Error(ErrorCode::domain, "Möbius function needs n ≥ 1");
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return {0, false};
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return {mu, true};
}

long divisor_count(long n) {
  long count = 1;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::vector<std::string> validate_form(const MaassFormData& form) {
  std::vector<std::string> warnings;
  if (form.level < 1) throw Error(ErrorCode::invariant_violation, "level must be a positive integer");
  if (form.parity != 0 && form.parity != 1) throw Error(ErrorCode::invariant_violation, "parity must be 0 or 1");
  if (!(form.nu > 0) || !std::isfinite(form.nu))
    throw Error(ErrorCode::invariant_violation, "spectral parameter must be a positive real");
  if (std::abs(std::abs(form.root_number) - 1.0) > 1e-10)
    throw Error(ErrorCode::invariant_violation, "|root_number| = " + std::to_string(std::abs(form.root_number)) +
                                                    " differs from 1");
  for (size_t i = 0; i < form.zeros.size(); ++i) {
    if (!(form.zeros[i] > 0)) throw Error(ErrorCode::invariant_violation, "zero ordinates must be positive");
    if (i > 0 && !(form.zeros[i] > form.zeros[i - 1]))
      throw Error(ErrorCode::invariant_violation, "zero ordinates must be strictly increasing");
  }
  for (const auto& [p, value] : form.prime_eigenvalues) {
    double bound = 2.0 * std::pow(static_cast<double>(p), 7.0 / 64.0) * 1.01;
    if (std::abs(value) > bound)
      warnings.push_back("λ(" + std::to_string(p) + ") = " + std::to_string(value) + " exceeds the 2p^{7/64} screen");
  }
  return warnings;
}

CoeffTable extend_eigenvalues(const MaassFormData& form, long n_max) {
  if (n_max < 1) throw Error(ErrorCode::domain, "n_max must be positive");
  Sieve sieve(n_max);
  for (long p : sieve.primes()) {
    if (!form.prime_eigenvalues.count(p))
      throw Error(ErrorCode::missing_prime, "no Hecke eigenvalue for the prime " + std::to_string(p));
  }
  CoeffTable t;
  t.n_max = n_max;
  t.level = form.level;
  t.lambda.assign(static_cast<size_t>(n_max) + 1, 0.0);
  t.lambda[1] = 1.0;
  for (long n = 2; n <= n_max; ++n) {
    long p = sieve.spf(n);
    long m = n;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    const double lp = form.prime_eigenvalues.at(p);
    const double c = chi0(form.level, p);
    double prev = 1.0, cur = lp;
    for (int j = 1; j < k; ++j) {
      double next = lp * cur - c * prev;
      prev = cur;
      cur = next;
    }
    t.lambda[n] = cur * t.lambda[m];
  }
  return t;
}

void lambda_tilde_table(CoeffTable& table, long level) {
  Sieve sieve(table.n_max);
  table.lambda_tilde.assign(static_cast<size_t>(table.n_max) + 1, 0.0);
  for (long n = 1; n <= table.n_max; ++n) {
    long d = 1, dd = 1;
    bool cube = false;
    for (auto [p, e] : sieve.factor(n)) {
      if (e == 1) d *= p;
      else if (e == 2) dd *= p;
      else cube = true;
    }
    if (cube) continue;
    int mu = (sieve.factor(d).size() % 2 == 0) ? 1 : -1;
    table.lambda_tilde[n] = mu * chi0(level, dd) * table.lambda[d];
  }
}

CoeffTable build_coefficients(const MaassFormData& form, long n_max) {
  CoeffTable t = extend_eigenvalues(form, n_max);
  lambda_tilde_table(t, form.level);
  return t;
}

CoeffTable synthetic_table(const std::vector<double>& lambda_tilde, long level) {
  if (lambda_tilde.empty() || lambda_tilde[0] != 1.0)
    throw Error(ErrorCode::domain, "synthetic λ̃ must start with λ̃(1) = 1");
  CoeffTable t;
  t.n_max = static_cast<long>(lambda_tilde.size());
  t.level = level;
  t.finite_support = true;
  t.lambda_tilde.assign(lambda_tilde.size() + 1, 0.0);
  for (size_t i = 0; i < lambda_tilde.size(); ++i) t.lambda_tilde[i + 1] = lambda_tilde[i];
  // Dirichlet inverse: Σ_{d|n} λ(d) λ̃(n/d) = [n = 1]
  t.lambda.assign(t.lambda_tilde.size(), 0.0);
  t.lambda[1] = 1.0;
  std::vector<double> acc(t.lambda_tilde.size(), 0.0);
  for (long d = 1; d <= t.n_max; ++d) {
    if (d > 1) t.lambda[d] = -acc[d];
    if (t.lambda[d] == 0.0) continue;
    for (long m = 2; d * m <= t.n_max; ++m) acc[d * m] += t.lambda[d] * t.lambda_tilde[m];
  }
  return t;
}

double convolution_residual(const CoeffTable& table, long n) {
  if (n < 1 || n > table.n_max) throw Error(ErrorCode::domain, "n outside the coefficient table");
  double s = 0.0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    long e = n / d;
    s += table.lambda[d] * table.lambda_tilde[e];
    if (e != d) s += table.lambda[e] * table.lambda_tilde[d];
  }
  return s - (n == 1 ? 1.0 : 0.0);
}

std::vector<double> convolution_residuals(const CoeffTable& table) {
  std::vector<double> r(static_cast<size_t>(table.n_max) + 1, 0.0);
  for (long d = 1; d <= table.n_max; ++d) {
    const double ld = table.lambda[d];
    if (ld == 0.0) continue;
    for (long m = 1; d * m <= table.n_max; ++m) r[d * m] += ld * table.lambda_tilde[m];
  }
  r[1] -= 1.0;
  return r;
}

double summatory_tilde(const CoeffTable& table, double x) {
  if (!(x >= 0) || std::floor(x) > static_cast<double>(table.n_max))
    throw Error(ErrorCode::domain, "summatory bound exceeds the coefficient table");
  long m = static_cast<long>(std::floor(x));
  double s = 0.0;
  for (long n = 1; n <= m; ++n) s += table.lambda_tilde[n];
  return s;
}

BoundScreen screen_tilde_bound(const CoeffTable& table) {
  BoundScreen out;
  Sieve sieve(table.n_max);
  for (long n = 1; n <= table.n_max; ++n) {
    long tau = 1;
    for (auto [p, e] : sieve.factor(n)) tau *= e + 1;
    double bound = tau * std::pow(static_cast<double>(n), 7.0 / 64.0) * 1.01;
    ++out.checked;
    if (std::abs(table.lambda_tilde[n]) > bound) {
      if (out.violations == 0) out.first_violation = n;
      ++out.violations;
    }
  }
  return out;
}

}  // namespace maass
