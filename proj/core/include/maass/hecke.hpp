#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace maass {

struct MaassFormData {
  std::string label;
  long level = 1;
  int parity = 0;  // 0 even, 1 odd
  double nu = 0.0;
  std::complex<double> root_number{1.0, 0.0};
  std::map<long, double> prime_eigenvalues;
  long prime_bound = 0;
  std::vector<double> zeros;
  std::string provenance;
};

// Throws invariant_violation on hard failures; returns screening warnings.
std::vector<std::string> validate_form(const MaassFormData& form);

/// Smallest-prime-factor sieve; every arithmetic table in the library is built from one.
class Sieve {
 public:
  explicit Sieve(long n_max);
  long limit() const { return static_cast<long>(spf_.size()) - 1; }
  long spf(long n) const { return spf_[static_cast<size_t>(n)]; }
  bool is_prime(long n) const { return n >= 2 && spf(n) == n; }
  std::vector<std::pair<long, int>> factor(long n) const;
  std::vector<long> primes() const;

 private:
  std::vector<int> spf_;
};

int chi0(long level, long n);

struct MobiusValue {
  int mu;
  bool squarefree;
};
MobiusValue mobius_and_squarefree(long n);

struct CoeffTable {
  long n_max = 0;
  long level = 1;
  std::vector<double> lambda;        // index 0 unused
  std::vector<double> lambda_tilde;  // index 0 unused
  // true when λ̃(n) = 0 for every n > n_max (synthetic tables)
  bool finite_support = false;
};

CoeffTable extend_eigenvalues(const MaassFormData& form, long n_max);
void lambda_tilde_table(CoeffTable& table, long level);
CoeffTable build_coefficients(const MaassFormData& form, long n_max);

// Table whose λ̃ is given (index 1..n); λ is its Dirichlet inverse.
CoeffTable synthetic_table(const std::vector<double>& lambda_tilde, long level = 1);

double convolution_residual(const CoeffTable& table, long n);
// Residuals for every n ≤ n_max at once.
std::vector<double> convolution_residuals(const CoeffTable& table);

double summatory_tilde(const CoeffTable& table, double x);

long divisor_count(long n);

struct BoundScreen {
  long checked = 0;
  long violations = 0;
  long first_violation = 0;
};
// |λ̃(n)| ≤ τ(n) n^{7/64}·1.01
BoundScreen screen_tilde_bound(const CoeffTable& table);

}  // namespace maass
