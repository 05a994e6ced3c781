#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "maass/hecke.hpp"
#include "maass/specfun.hpp"

namespace maass::fixture {

// Maass forms of level 25 induced from Hecke characters of Q(√5) with conductor (√5).
// parity 0 uses ν = π(2k+1)/(2 log φ), parity 1 uses ν = πk/log φ.
inline double dihedral_nu(int parity, int k) {
  const long double log_phi = std::log((1.0L + std::sqrt(5.0L)) / 2.0L);
  return static_cast<double>(parity == 0 ? kPiL * (2 * k + 1) / (2 * log_phi) : kPiL * k / log_phi);
}

inline int legendre5(long a) {
  a %= 5;
  if (a < 0) a += 5;
  if (a == 0) return 0;
  return (a == 1 || a == 4) ? 1 : -1;
}

inline double dihedral_prime_value(long p, int parity, double nu) {
  if (p == 5 || legendre5(p) == -1) return 0.0;
  const long limit = 3 * static_cast<long>(std::sqrt(static_cast<double>(p))) + 3;
  for (long b = 0; b <= limit; ++b) {
    for (int sgn : {1, -1}) {
      const long d = 5 * b * b + 4 * sgn * p;
      if (d < 0) continue;
      long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
      while (r * r > d) --r;
      while ((r + 1) * (r + 1) <= d) ++r;
      if (r * r != d || (r - b) % 2 != 0) continue;
      const long a = (r - b) / 2;
      // a + bφ = (r + b√5)/2 > 0 and its conjugate has absolute value p/(a + bφ).
      const long double x = (static_cast<long double>(r) + b * std::sqrt(5.0L)) / 2.0L;
      const long double log_ratio = 2.0L * std::log(x) - std::log(static_cast<long double>(p));
      const int chi = legendre5(a + 3 * b);
      const int sign = (parity == 1 && sgn < 0) ? -1 : 1;
      return 2.0 * chi * sign * static_cast<double>(std::cos(nu * log_ratio));
    }
  }
  throw std::runtime_error("no element of norm ±" + std::to_string(p));
}

inline MaassFormData dihedral_form(int parity, int k, long prime_bound) {
  MaassFormData f;
  f.level = 25;
  f.parity = parity;
  f.nu = dihedral_nu(parity, k);
  f.label = std::string("25.") + (parity == 0 ? "even" : "odd") + ".dihedral.k" + std::to_string(k);
  f.prime_bound = prime_bound;
  Sieve sieve(prime_bound);
  for (long p : sieve.primes()) f.prime_eigenvalues[p] = dihedral_prime_value(p, parity, f.nu);
  f.provenance = "dihedral form from a Hecke character of Q(sqrt5) of conductor (sqrt5)";
  return f;
}

}  // namespace maass::fixture
