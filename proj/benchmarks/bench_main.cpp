#include <benchmark/benchmark.h>

#include <memory>

#include "maass/io.hpp"
#include "maass/lfun.hpp"
#include "maass/series.hpp"
#include "maass/specfun.hpp"
#include "maass/verify.hpp"

using namespace maass;

namespace {

struct Odd {
  MaassFormData form;
  std::shared_ptr<CoeffTable> table;
  std::shared_ptr<LFunction> lfun;
  std::unique_ptr<SeriesEvaluator> series;
};

Odd& odd() {
  static Odd o = [] {
    Odd x;
    x.form = load_form(std::string(MAASS_RHL_TEST_DATA) + "/dihedral25_odd.json");
    x.table = std::make_shared<CoeffTable>(build_coefficients(x.form, x.form.prime_bound));
    x.lfun = std::make_shared<LFunction>(x.form, x.table);
    x.series = std::make_unique<SeriesEvaluator>(x.lfun);
    return x;
  }();
  return o;
}

void BM_gamma(benchmark::State& st) {
  cplx s(0.3, 17.0);
  for (auto _ : st) benchmark::DoNotOptimize(gamma_cx(s));
}
BENCHMARK(BM_gamma);

// Argument: x in hundredths, one point per evaluation regime.
void BM_k_bessel_imag(benchmark::State& st) {
  const double x = static_cast<double>(st.range(0)) / 100.0;
  for (auto _ : st) benchmark::DoNotOptimize(k_bessel_imag(6.5, x));
}
BENCHMARK(BM_k_bessel_imag)->Arg(5)->Arg(200)->Arg(4000);

void BM_bracket_even(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bracket_even(3.26, 1.3));
}
BENCHMARK(BM_bracket_even);

void BM_build_coefficients(benchmark::State& st) {
  const MaassFormData& f = odd().form;
  for (auto _ : st) benchmark::DoNotOptimize(build_coefficients(f, st.range(0)));
}
BENCHMARK(BM_build_coefficients)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_lambda_cached_plan(benchmark::State& st) {
  const LFunction& lf = *odd().lfun;
  lf.lambda_completed(cplx(0.5, 21.0));
  double t = 21.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(lf.lambda_completed(cplx(0.5, t)));
    t = t < 22.5 ? t + 0.01 : 21.0;
  }
}
BENCHMARK(BM_lambda_cached_plan)->Unit(benchmark::kMicrosecond);

void BM_p_odd(benchmark::State& st) {
  const double y = static_cast<double>(st.range(0));
  const SeriesEvaluator& se = *odd().series;
  for (auto _ : st) benchmark::DoNotOptimize(se.p_odd(y, 1e-10));
}
BENCHMARK(BM_p_odd)->Arg(1)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_p_odd_contour(benchmark::State& st) {
  const SeriesEvaluator& se = *odd().series;
  for (auto _ : st) benchmark::DoNotOptimize(se.p_odd_contour(1.0));
}
BENCHMARK(BM_p_odd_contour)->Unit(benchmark::kMillisecond);

void BM_summatory_scan(benchmark::State& st) {
  const CoeffTable& t = *odd().table;
  const auto grid = geometric_grid(1, 1e5, 200);
  for (auto _ : st) benchmark::DoNotOptimize(summatory_scan(t, grid, 0.05));
}
BENCHMARK(BM_summatory_scan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
