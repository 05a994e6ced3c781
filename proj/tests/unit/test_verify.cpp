#include <cmath>

#include "doctest.h"
#include "maass/error.hpp"
#include "maass/verify.hpp"
#include "support.hpp"

using namespace maass;

namespace {

// Residue data for the leading odd-form zeros, shared by the identity tests.
const ResidueData& odd_residues() {
  static const ResidueData rd = [] {
    auto& fx = testing::fixture(1);
    ZeroList zl;
    zl.ordinates = fx.form.zeros;
    zl.source = ZeroList::Source::ingested;
    return residue_data(*fx.lfun, zl, 60);
  }();
  return rd;
}

}  // namespace

TEST_CASE("odd identity holds at several alpha") {
  auto& fx = testing::fixture(1);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const IdentityReport r = verify_identity_odd(*fx.series, alpha, odd_residues(), 1e-10);
    CAPTURE(alpha);
    CHECK(r.beta * r.alpha * 25 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.zeros_used == 60);
    CHECK(r.pairing == "conjugate-paired");
    CHECK(std::abs(r.rhs_zero_sum.imag()) <= 1e-12 * std::abs(r.rhs_zero_sum));
    CHECK(r.relative_residual < 1e-2);
    CHECK(r.relative_residual < 1e-9);
  }
}

TEST_CASE("odd identity at the symmetric point") {
  auto& fx = testing::fixture(1);
  const IdentityReport r = verify_identity_odd(*fx.series, 0.2, odd_residues(), 1e-10);
  CHECK(r.lhs == 0.0);
  CHECK(std::abs(r.rhs_zero_sum) < 1e-15);
}

TEST_CASE("odd identity: swapping alpha and beta and truncation stability") {
  auto& fx = testing::fixture(1);
  const IdentityReport a = verify_identity_odd(*fx.series, 0.5, odd_residues(), 1e-10);
  const IdentityReport b = verify_identity_odd(*fx.series, a.beta, odd_residues(), 1e-10);
  // with ε_f = +1 the left side is antisymmetric under α ↔ β
  CHECK(b.lhs == doctest::Approx(-a.lhs).epsilon(1e-9));
  CHECK(std::abs(a.residual - b.residual) < 1e-15);
  const IdentityReport half = verify_identity_odd(*fx.series, 1.0, residue_prefix(odd_residues(), 30), 1e-10);
  const IdentityReport full = verify_identity_odd(*fx.series, 1.0, odd_residues(), 1e-10);
  CHECK(full.t_cap > half.t_cap);
  CHECK(full.residual <= half.residual * 1.5 + 1e-16);
}

TEST_CASE("identity parity guard") {
  auto& fx = testing::fixture(0);
  CHECK_THROWS_AS(verify_identity_odd(*fx.series, 1.0, odd_residues(), 1e-10), Error);
}

TEST_CASE("even identity with both readings of the nu-terms") {
  auto& fx = testing::fixture(0);
  ZeroList zl;
  zl.ordinates = fx.form.zeros;
  zl.source = ZeroList::Source::ingested;
  const ResidueData rd = residue_data(*fx.lfun, zl, 40);
  CHECK(rd.central_zero);
  for (double alpha : {0.5, 1.0}) {
    const IdentityReport r = verify_identity_even(*fx.series, alpha, rd, 1e-10);
    CAPTURE(alpha);
    CHECK(std::isfinite(r.residue_terms.real()));
    CHECK(std::abs(r.residue_terms.imag()) <= 1e-12 * std::abs(r.residue_terms));
    CHECK_FALSE(r.literal_available);
    CHECK(r.literal_note.find("denominator-vanishing") != std::string::npos);
    CHECK(r.relative_residual < 1e-9);
  }
}

TEST_CASE("Mellin transform checks") {
  auto& odd = testing::fixture(1);
  const MellinCheck m = mellin_check_odd(*odd.series, 0.25, 1e-10);
  CHECK(m.rel_err < 1e-6);
  CHECK(std::abs(m.numeric - m.closed) <= m.numeric_bound + 1e-6 * std::abs(m.closed));
  CHECK(std::abs(m.closed.imag()) < 1e-15 * std::abs(m.closed));
  const MellinCheck a = mellin_check_odd(*odd.series, cplx(0.3, 1.5), 1e-10);
  const MellinCheck b = mellin_check_odd(*odd.series, cplx(0.3, -1.5), 1e-10);
  CHECK(std::abs(a.closed - std::conj(b.closed)) < 1e-14 * std::abs(a.closed));
  CHECK(std::abs(a.numeric - std::conj(b.numeric)) < 1e-12 * std::abs(a.numeric));
  CHECK_THROWS_AS(mellin_check_odd(*odd.series, 0.6, 1e-10), Error);

  auto& even = testing::fixture(0);
  const MellinCheck e = mellin_check_even(*even.series, 1.0, 1e-10);
  CHECK(e.rel_err < 1e-6);
  CHECK(std::abs(e.numeric.imag()) < 1e-12 * std::abs(e.numeric));
  CHECK_THROWS_AS(mellin_check_even(*even.series, 0.4, 1e-10), Error);
}

TEST_CASE("scan helpers") {
  const auto g = geometric_grid(10, 1000, 25);
  REQUIRE(g.size() == 25);
  CHECK(g.front() == doctest::Approx(10));
  CHECK(g.back() == doctest::Approx(1000));
  for (size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  std::vector<double> lx, ly;
  for (double y : g) {
    lx.push_back(std::log(y));
    ly.push_back(-1.5 * std::log(y) + 0.3);
  }
  CHECK(least_squares_slope(lx, ly) == doctest::Approx(-1.5).epsilon(1e-12));
  const auto env = sliding_envelope({1, -5, 2, 0, 0, 0, 0, 0, 3}, 1);
  CHECK(env == std::vector<double>{5, 5, 5, 2, 0, 0, 0, 3, 3});
}

TEST_CASE("decay scan calibrates on a single kernel") {
  auto one = testing::synthetic_series({1.0}, 4.0, 1);
  const auto grid = geometric_grid(1, 8, 12);
  const ScanReport r = decay_scan(*one, SeriesKind::p_odd, grid, 0.2, 0.1, 1e-12);
  std::vector<double> lx, ly;
  for (double y : grid) {
    lx.push_back(std::log(y));
    ly.push_back(std::log(std::abs(k_bessel_imag(4.0, 2 * kPi * y))));
  }
  CHECK(r.raw_slope == doctest::Approx(least_squares_slope(lx, ly)).epsilon(1e-10));
  CHECK(r.fitted_slope < -5);  // exponential decay, far below any power law
  CHECK_FALSE(r.flag);
  CHECK(r.reference_exponent == -1.5);
}

TEST_CASE("main term removes the power part of a single kernel") {
  auto one = testing::synthetic_series({1.0}, 4.0, 0);
  const MainTerm mt = main_term_residual(*one, SeriesKind::q_even, 20.0, 0.2, 1e-12);
  CHECK(std::abs(mt.main) > 1e-5);
  CHECK(std::abs(mt.residual) < 1e-14);
  CHECK_THROWS_AS(main_term_residual(*one, SeriesKind::q_even, 5.0, 0.2, 1e-12), Error);
}

TEST_CASE("summatory scan flags a constant table and not the fixture") {
  const CoeffTable ones = synthetic_table(std::vector<double>(100000, 1.0));
  const ScanReport bad = summatory_scan(ones, geometric_grid(1, 1e5, 60), 0.05);
  CHECK(bad.flag);
  CHECK(bad.grid.front().value == doctest::Approx(1.0));
  auto& fx = testing::fixture(1);
  const ScanReport good = summatory_scan(*fx.table, geometric_grid(1, 1e5, 60), 0.05);
  CHECK_FALSE(good.flag);
  CHECK(good.grid.front().value == doctest::Approx(1.0));
}
