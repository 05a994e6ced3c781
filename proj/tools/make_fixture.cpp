// Writes a level-25 dihedral form record with its root number fixed by the
// Λ(2) cross-path and its zeros scanned from the Hardy function.
#include <cstdio>
#include <memory>

#include "CLI11.hpp"
#include "dihedral.hpp"
#include "maass/error.hpp"
#include "maass/io.hpp"
#include "maass/lfun.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a dihedral Maass form fixture"};
  std::string parity = "odd";
  int k = 1;
  long prime_bound = 100000;
  double zeros_to = 340.0;
  std::string out = "-";
  app.add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));
  app.add_option("--k", k)->check(CLI::NonNegativeNumber);
  app.add_option("--prime-bound", prime_bound);
  app.add_option("--zeros-to", zeros_to);
  app.add_option("--out", out);
  CLI11_PARSE(app, argc, argv);

  try {
    using namespace maass;
    MaassFormData f = fixture::dihedral_form(parity == "odd" ? 1 : 0, k, prime_bound);
    auto table = std::make_shared<CoeffTable>(build_coefficients(f, prime_bound));
    EvalConfig cfg;
    const cplx ref = l_infinity(2.0, f) * l_dirichlet(2.0, *table, DirichletKind::l, cfg).value;
    double best = 1e300;
    double eps_best = 0;
    for (double eps : {1.0, -1.0}) {
      f.root_number = eps;
      double rel = std::abs(LFunction(f, table, cfg).lambda_completed(2.0) - ref) / std::abs(ref);
      std::fprintf(stderr, "root number %+g: cross-path %.3g\n", eps, rel);
      if (rel < best) {
        best = rel;
        eps_best = eps;
      }
    }
    if (best > 1e-6) throw Error(ErrorCode::non_convergence, "neither root number reproduces Λ(2)");
    f.root_number = eps_best;
    LFunction lf(f, table, cfg);
    if (zeros_to > 0) {
      ZeroList z = lf.find_zeros(cfg.zero_step / 2, zeros_to);
      for (const auto& w : z.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
      f.zeros = lf.validate_zeros(z.ordinates, ZeroList::Source::scanned).ordinates;
    }
    std::fprintf(stderr, "%zu zeros, central zero: %s\n", f.zeros.size(), lf.has_central_zero() ? "yes" : "no");
    f.provenance += "; root number chosen by the Λ(2) cross-path; zeros scanned and re-validated";
    save_form(f, out);
  } catch (const maass::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
