#include "maass/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "maass/error.hpp"
#include "maass/io.hpp"
#include "maass/verify.hpp"

namespace maass {
namespace {

struct Options {
  std::string form;
  std::string out = "-";
  std::string format;
  long nmax = 0;
  double tol = 0;
  double alpha = 1.0;
  int zeros_count = -1;
  std::string s = "2,0";
  std::string grid;
  std::string variant;
  double eps = 0.2;
  double delta = 0.1;
  bool verify_convolution = false;
};

struct Grid {
  double lo, hi;
  int points;
};

Grid parse_grid(const std::string& text, Grid fallback) {
  if (text.empty()) return fallback;
  Grid g = fallback;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.lo >> c1 >> g.hi) || c1 != ':') throw Error(ErrorCode::usage, "--grid expects lo:hi:points");
  if (in >> c2) {
    if (c2 != ':' || !(in >> g.points)) throw Error(ErrorCode::usage, "--grid expects lo:hi:points");
  }
  if (!(g.hi > g.lo) || g.points < 2) throw Error(ErrorCode::usage, "--grid needs lo < hi and at least 2 points");
  return g;
}

cplx parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) throw Error(ErrorCode::usage, "--s expects re or re,im");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw Error(ErrorCode::usage, "--s expects re or re,im");
  }
  return {re, im};
}

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

bool wants_csv(const Options& o) {
  if (!o.format.empty()) return o.format == "csv";
  return o.out.size() > 4 && o.out.compare(o.out.size() - 4, 4, ".csv") == 0;
}

struct Context {
  MaassFormData form;
  std::vector<std::string> warnings;
  std::shared_ptr<CoeffTable> table;
  std::shared_ptr<LFunction> lfun;
  std::unique_ptr<SeriesEvaluator> series;
  EvalConfig config;
};

Context open_form(const Options& o, bool with_series = true) {
  if (o.form.empty()) throw Error(ErrorCode::usage, "--form is required");
  Context c;
  c.form = load_form(o.form, &c.warnings);
  long n_max = o.nmax > 0 ? o.nmax : c.form.prime_bound;
  if (n_max > c.form.prime_bound)
    throw Error(ErrorCode::usage, "--nmax exceeds the prime bound of the form record");
  c.table = std::make_shared<CoeffTable>(build_coefficients(c.form, n_max));
  c.config.dirichlet_terms = std::min(c.config.dirichlet_terms, n_max);
  if (o.tol > 0) c.config.series_tol = o.tol;
  c.lfun = std::make_shared<LFunction>(c.form, c.table, c.config);
  if (with_series) c.series = std::make_unique<SeriesEvaluator>(c.lfun);
  return c;
}

json form_summary(const Context& c) {
  return {{"label", c.form.label},
          {"level", c.form.level},
          {"parity", c.form.parity == 0 ? "even" : "odd"},
          {"spectral_parameter", c.form.nu},
          {"root_number", cjson(c.form.root_number)},
          {"n_max", c.table->n_max},
          {"warnings", c.warnings}};
}

void emit(const Options& o, const std::string& command, const EvalConfig& cfg, json result, const CsvTable& table) {
  json meta = report_metadata(cfg, command);
  if (wants_csv(o)) {
    write_text(csv_text(table, meta), o.out);
    return;
  }
  json doc;
  doc["metadata"] = meta;
  doc["result"] = std::move(result);
  write_text(dump_json(doc), o.out);
}

// A one-row CSV from the numeric leaves of a flat JSON object.
CsvTable flat_table(const json& obj) {
  CsvTable t;
  std::vector<double> row;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_number()) {
      t.header.push_back(it.key());
      row.push_back(it->get<double>());
    } else if (it->is_boolean()) {
      t.header.push_back(it.key());
      row.push_back(it->get<bool>() ? 1.0 : 0.0);
    } else if (it->is_object() && it->contains("re") && it->contains("im")) {
      t.header.push_back(it.key() + "_re");
      row.push_back((*it)["re"].get<double>());
      t.header.push_back(it.key() + "_im");
      row.push_back((*it)["im"].get<double>());
    }
  }
  t.rows.push_back(row);
  return t;
}

int cmd_coeffs(const Options& o, const std::string& command) {
  Context c = open_form(o, false);
  const CoeffTable& t = *c.table;
  json r = form_summary(c);
  int status = 0;
  long cube_violations = 0;
  for (long n = 2; n <= t.n_max; ++n) {
    bool cube = false;
    for (long p = 2; p * p * p <= n && !cube; ++p) cube = n % (p * p * p) == 0;
    if (cube && t.lambda_tilde[static_cast<size_t>(n)] != 0.0) ++cube_violations;
  }
  r["cube_rule_violations"] = cube_violations;
  if (cube_violations) status = 1;
  if (o.verify_convolution) {
    std::vector<double> res = convolution_residuals(t);
    double worst = 0;
    long worst_n = 1, failures = 0;
    for (long n = 1; n <= t.n_max; ++n) {
      double v = std::abs(res[static_cast<size_t>(n)]);
      if (v > worst) {
        worst = v;
        worst_n = n;
      }
      if (v > 1e-10) ++failures;
    }
    r["convolution"] = {{"max_abs_residual", worst}, {"at_n", worst_n}, {"failures", failures}, {"threshold", 1e-10}};
    if (failures) status = 1;
  }
  BoundScreen b = screen_tilde_bound(t);
  r["tilde_bound_screen"] = {{"checked", b.checked}, {"violations", b.violations}, {"first_violation", b.first_violation}};
  CsvTable table;
  table.header = {"n", "lambda", "lambda_tilde"};
  json head = json::array();
  for (long n = 1; n <= std::min(t.n_max, 50L); ++n) {
    table.rows.push_back({static_cast<double>(n), t.lambda[n], t.lambda_tilde[n]});
    head.push_back({{"n", n}, {"lambda", t.lambda[n]}, {"lambda_tilde", t.lambda_tilde[n]}});
  }
  r["first_coefficients"] = head;
  r["pass"] = status == 0;
  emit(o, command, c.config, r, table);
  return status;
}

int cmd_lcheck(const Options& o, const std::string& command) {
  const cplx s = parse_complex(o.s);
  Context c = open_form(o, false);
  const LFunction& lf = *c.lfun;
  json r = form_summary(c);
  bool ok = true;
  const cplx lam = lf.lambda_completed(s);
  r["s"] = cjson(s);
  r["lambda"] = cjson(lam);
  const cplx fe = c.form.root_number * std::pow(static_cast<double>(c.form.level), 0.5 - s) * lf.lambda_completed(1.0 - s);
  r["functional_equation_rel"] = std::abs(lam - fe) / std::abs(lam);
  if (s.real() >= 1.0 + c.config.tail_delta) {
    DirichletValue d = l_dirichlet(s, *c.table, DirichletKind::l, c.config);
    const cplx other = l_infinity(s, c.form) * d.value;
    const double rel = std::abs(lam - other) / std::abs(lam);
    r["dirichlet_path"] = cjson(other);
    r["cross_path_rel"] = rel;
    r["dirichlet_tail_bound"] = d.tail_bound;
    ok = ok && rel < 1e-8;
  }
  ZeroList zl;
  zl.source = ZeroList::Source::ingested;
  size_t count = o.zeros_count >= 0 ? std::min(c.form.zeros.size(), static_cast<size_t>(o.zeros_count)) : c.form.zeros.size();
  std::vector<double> head(c.form.zeros.begin(), c.form.zeros.begin() + static_cast<long>(count));
  CsvTable table;
  table.header = {"gamma", "ratio"};
  json zeros = json::array();
  double worst = 0;
  for (double g : head) {
    double ratio = lf.zero_ratio(g);
    worst = std::max(worst, ratio);
    zeros.push_back({{"gamma", g}, {"ratio", ratio}});
    table.rows.push_back({g, ratio});
  }
  r["zeros_checked"] = count;
  r["worst_zero_ratio"] = worst;
  r["zeros"] = zeros;
  r["central_zero"] = lf.has_central_zero();
  ok = ok && worst < 1e-6;
  r["pass"] = ok;
  emit(o, command, c.config, r, table);
  return ok ? 0 : 1;
}

SeriesKind parse_kind(const std::string& v, int parity) {
  if (v.empty()) return parity == 1 ? SeriesKind::p_odd : SeriesKind::q_even;
  if (v == "p_odd" || v == "odd") return SeriesKind::p_odd;
  if (v == "p_even") return SeriesKind::p_even;
  if (v == "q_even" || v == "even") return SeriesKind::q_even;
  throw Error(ErrorCode::usage, "--variant must be p_odd, p_even or q_even");
}

int cmd_series(const Options& o, const std::string& command) {
  const Grid g = parse_grid(o.grid, {0.5, 2.0, 4});
  Context c = open_form(o);
  const bool contour = o.variant == "p_odd_contour";
  const SeriesKind kind = contour ? SeriesKind::p_odd : parse_kind(o.variant, c.form.parity);
  json rows = json::array();
  CsvTable table;
  table.header = {"y", "value", "tail_bound", "terms_used"};
  for (double y : geometric_grid(g.lo, g.hi, g.points)) {
    SeriesResult res = contour ? c.series->p_odd_contour(y) : c.series->evaluate(kind, y, c.config.series_tol);
    rows.push_back({{"y", y},
                    {"value", res.value},
                    {"tail_bound", res.tail_bound},
                    {"terms_used", res.terms_used},
                    {"path", to_string(res.path)}});
    table.rows.push_back({y, res.value, res.tail_bound, static_cast<double>(res.terms_used)});
  }
  json r = form_summary(c);
  r["variant"] = contour ? "p_odd_contour" : to_string(kind);
  r["values"] = rows;
  emit(o, command, c.config, r, table);
  return 0;
}

json identity_json(const IdentityReport& ir) {
  return {{"alpha", ir.alpha},
          {"beta", ir.beta},
          {"lhs", ir.lhs},
          {"lhs_bound", ir.lhs_bound},
          {"rhs_zero_sum", cjson(ir.rhs_zero_sum)},
          {"rhs_extra_terms", cjson(ir.rhs_extra_terms)},
          {"literal_terms", cjson(ir.literal_terms)},
          {"literal_available", ir.literal_available},
          {"literal_note", ir.literal_note},
          {"residue_terms", cjson(ir.residue_terms)},
          {"central_term", cjson(ir.central_term)},
          {"zeros_used", ir.zeros_used},
          {"t_cap", ir.t_cap},
          {"residual", ir.residual},
          {"scale", ir.scale},
          {"relative_residual", ir.relative_residual},
          {"pairing", ir.pairing}};
}

int cmd_identity(const Options& o, const std::string& command) {
  Context c = open_form(o);
  if (!(o.alpha > 0)) throw Error(ErrorCode::usage, "--alpha must be positive");
  ZeroList zl;
  zl.ordinates = c.form.zeros;
  zl.source = ZeroList::Source::ingested;
  const int count = o.zeros_count >= 0 ? o.zeros_count : static_cast<int>(zl.ordinates.size());
  const IdentityReport ir = verify_identity(*c.series, o.alpha, zl, count, c.config.series_tol);
  json r = identity_json(ir);
  const bool ok = ir.relative_residual < 1e-2;
  r["threshold"] = 1e-2;
  r["pass"] = ok;
  emit(o, command, c.config, r, flat_table(r));
  return ok ? 0 : 1;
}

int cmd_mellin(const Options& o, const std::string& command) {
  const cplx s = parse_complex(o.s);
  Context c = open_form(o);
  std::string v = o.variant.empty() ? (c.form.parity == 1 ? "odd" : "even") : o.variant;
  MellinCheck m;
  if (v == "odd") m = mellin_check_odd(*c.series, s, c.config.series_tol);
  else if (v == "even") m = mellin_check_even(*c.series, s, c.config.series_tol);
  else throw Error(ErrorCode::usage, "--variant must be odd or even");
  json r = {{"variant", v},
            {"s", cjson(s)},
            {"numeric", cjson(m.numeric)},
            {"closed", cjson(m.closed)},
            {"rel_err", m.rel_err},
            {"numeric_bound", m.numeric_bound},
            {"threshold", 1e-6}};
  const bool ok = m.rel_err < 1e-6;
  r["pass"] = ok;
  if (o.out == "-" && !wants_csv(o)) {
    std::printf("numeric  %.17g %+.17gi\nclosed   %.17g %+.17gi\nrel_err  %.3g\n", m.numeric.real(), m.numeric.imag(),
                m.closed.real(), m.closed.imag(), m.rel_err);
  } else {
    emit(o, command, c.config, r, flat_table(r));
  }
  return ok ? 0 : 1;
}

json scan_json(const ScanReport& sr, CsvTable& table) {
  json grid = json::array();
  table.header = {"y", "value", "envelope"};
  for (const auto& p : sr.grid) {
    grid.push_back({{"y", p.y}, {"value", p.value}, {"envelope", p.envelope}});
    table.rows.push_back({p.y, p.value, p.envelope});
  }
  return {{"fitted_slope", sr.fitted_slope},
          {"raw_slope", sr.raw_slope},
          {"shifted_slope", sr.shifted_slope},
          {"slope_window", {sr.slope_window.first, sr.slope_window.second}},
          {"reference_exponent", sr.reference_exponent},
          {"flag", sr.flag},
          {"flag_meaning", sr.flag_meaning},
          {"grid", grid}};
}

int cmd_scan_decay(const Options& o, const std::string& command) {
  const Grid g = parse_grid(o.grid, {10.0, 1000.0, 25});
  Context c = open_form(o);
  const SeriesKind kind = parse_kind(o.variant, c.form.parity);
  ScanReport sr = decay_scan(*c.series, kind, geometric_grid(g.lo, g.hi, g.points), o.eps, o.delta, c.config.series_tol);
  CsvTable table;
  json r = scan_json(sr, table);
  r["variant"] = to_string(kind);
  r["eps"] = o.eps;
  r["delta"] = o.delta;
  emit(o, command, c.config, r, table);
  return sr.flag ? 1 : 0;
}

int cmd_scan_zeros(const Options& o, const std::string& command) {
  const Grid g = parse_grid(o.grid, {0.0, 30.0, 0});
  Context c = open_form(o, false);
  EvalConfig cfg = c.config;
  if (g.points >= 2) cfg.zero_step = (g.hi - g.lo) / (g.points - 1);
  LFunction lf(c.form, c.table, cfg);
  const double lo = std::max(g.lo, cfg.zero_step / 2);
  ZeroList found = lf.find_zeros(lo, g.hi);
  int unmatched = 0;
  json ingested = json::array();
  for (double z : c.form.zeros) {
    if (z < lo || z > g.hi) continue;
    double best = 1e300;
    for (double f : found.ordinates) best = std::min(best, std::abs(f - z));
    if (best > 1e-6) ++unmatched;
    ingested.push_back({{"gamma", z}, {"distance", best}});
  }
  CsvTable table;
  table.header = {"gamma"};
  for (double z : found.ordinates) table.rows.push_back({z});
  json r = form_summary(c);
  r["range"] = {lo, g.hi};
  r["step"] = cfg.zero_step;
  r["zeros"] = found.ordinates;
  r["source"] = to_string(found.source);
  r["warnings"] = found.warnings;
  r["central_zero"] = lf.has_central_zero();
  r["ingested_comparison"] = ingested;
  r["unmatched_ingested"] = unmatched;
  r["pass"] = unmatched == 0;
  emit(o, command, cfg, r, table);
  return unmatched == 0 ? 0 : 1;
}

int cmd_scan_summatory(const Options& o, const std::string& command) {
  Context c = open_form(o, false);
  const Grid g = parse_grid(o.grid, {1.0, static_cast<double>(c.table->n_max), 200});
  const double delta = o.delta;
  ScanReport sr = summatory_scan(*c.table, geometric_grid(g.lo, g.hi, g.points), delta);
  CsvTable table;
  json r = scan_json(sr, table);
  r["delta"] = delta;
  emit(o, command, c.config, r, table);
  return sr.flag ? 1 : 0;
}

// A bundle of the quick checks for one form.
int cmd_report(const Options& o, const std::string& command) {
  Context c = open_form(o);
  json checks = json::array();
  bool ok = true;
  auto add = [&](const std::string& name, bool pass, json detail) {
    ok = ok && pass;
    checks.push_back({{"check", name}, {"pass", pass}, {"detail", std::move(detail)}});
  };
  {
    std::vector<double> res = convolution_residuals(*c.table);
    double worst = 0;
    for (double v : res) worst = std::max(worst, std::abs(v));
    add("convolution", worst < 1e-10, {{"max_abs_residual", worst}});
  }
  {
    const cplx lam = c.lfun->lambda_completed(2.0);
    const cplx other = l_infinity(2.0, c.form) * l_dirichlet(2.0, *c.table, DirichletKind::l, c.config).value;
    const double rel = std::abs(lam - other) / std::abs(lam);
    add("cross_path_s2", rel < 1e-8, {{"rel", rel}});
  }
  if (!c.form.zeros.empty()) {
    const double ratio = c.lfun->zero_ratio(c.form.zeros.front());
    add("first_zero", ratio < 1e-6, {{"gamma", c.form.zeros.front()}, {"ratio", ratio}});
  }
  if (c.form.parity == 1) {
    MellinCheck m = mellin_check_odd(*c.series, 0.25, c.config.series_tol);
    add("mellin_odd_quarter", m.rel_err < 1e-6, {{"rel_err", m.rel_err}});
  } else {
    MellinCheck m = mellin_check_even(*c.series, 1.0, c.config.series_tol);
    add("mellin_even_one", m.rel_err < 1e-6, {{"rel_err", m.rel_err}});
  }
  {
    ScanReport sr = summatory_scan(*c.table, geometric_grid(1, static_cast<double>(c.table->n_max), 200), 0.05);
    add("summatory", !sr.flag, {{"fitted_slope", sr.fitted_slope}});
  }
  json r = form_summary(c);
  r["checks"] = checks;
  r["pass"] = ok;
  CsvTable table;
  table.header = {"index", "pass"};
  for (size_t i = 0; i < checks.size(); ++i) table.rows.push_back({static_cast<double>(i), checks[i]["pass"] ? 1.0 : 0.0});
  emit(o, command, c.config, r, table);
  return ok ? 0 : 1;
}

bool is_input_error(ErrorCode code) {
  return code == ErrorCode::usage || code == ErrorCode::schema || code == ErrorCode::missing_prime ||
         code == ErrorCode::invariant_violation || code == ErrorCode::window || code == ErrorCode::strip_violation;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Numerical checks for Maass form L-functions: kernel series, transformation identities and decay scans"};
  app.require_subcommand(1);
  Options o;
  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--form", o.form, "form record (JSON)")->required();
    sub->add_option("--out", o.out, "report path, '-' for stdout; a .csv suffix selects CSV");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--nmax", o.nmax, "coefficient table size (default: the record's prime bound)");
    sub->add_option("--tol", o.tol, "series tolerance");
  };
  auto* coeffs = app.add_subcommand("coeffs", "build λ and λ̃ tables and check them");
  common(coeffs);
  coeffs->add_flag("--verify-convolution", o.verify_convolution, "check Σ_{d|n} λ(d)λ̃(n/d) = [n=1]");
  auto* lcheck = app.add_subcommand("lcheck", "cross-check Λ and re-validate ingested zeros");
  common(lcheck);
  lcheck->add_option("--s", o.s, "point \"re,im\"");
  lcheck->add_option("--zeros-count", o.zeros_count, "number of ingested zeros to re-validate");
  auto* series = app.add_subcommand("series", "evaluate a kernel series on a grid");
  common(series);
  series->add_option("--variant", o.variant, "p_odd, p_even, q_even or p_odd_contour");
  series->add_option("--grid", o.grid, "lo:hi:points (geometric)");
  auto* identity = app.add_subcommand("identity", "check the transformation identity at one α");
  common(identity);
  identity->add_option("--alpha", o.alpha, "α > 0; β = 1/(Nα)");
  identity->add_option("--zeros-count", o.zeros_count, "number of zeros in the residue sum");
  auto* mellin = app.add_subcommand("mellin", "compare a numerical Mellin transform with its closed form");
  common(mellin);
  mellin->add_option("--s", o.s, "point \"re,im\"");
  mellin->add_option("--variant", o.variant, "odd or even");
  auto* decay = app.add_subcommand("scan-decay", "large-y decay scan");
  common(decay);
  decay->add_option("--variant", o.variant, "p_odd or q_even");
  decay->add_option("--grid", o.grid, "lo:hi:points (geometric)");
  decay->add_option("--eps", o.eps, "main-term cut y^{1-eps}");
  decay->add_option("--delta", o.delta, "allowed excess over the -3/2 exponent");
  auto* zeros = app.add_subcommand("scan-zeros", "locate zeros from sign changes of the Hardy function");
  common(zeros);
  zeros->add_option("--grid", o.grid, "lo:hi:points (uniform)");
  auto* summ = app.add_subcommand("scan-summatory", "growth scan of Σ_{n≤x} λ̃(n)");
  common(summ);
  summ->add_option("--grid", o.grid, "lo:hi:points (geometric)");
  summ->add_option("--delta", o.delta, "exponent excess over 1/2");
  auto* report = app.add_subcommand("report", "run the quick checks and summarise them");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (summ->parsed() && !summ->count("--delta")) o.delta = 0.05;

  try {
    if (coeffs->parsed()) return cmd_coeffs(o, command_line);
    if (lcheck->parsed()) return cmd_lcheck(o, command_line);
    if (series->parsed()) return cmd_series(o, command_line);
    if (identity->parsed()) return cmd_identity(o, command_line);
    if (mellin->parsed()) return cmd_mellin(o, command_line);
    if (decay->parsed()) return cmd_scan_decay(o, command_line);
    if (zeros->parsed()) return cmd_scan_zeros(o, command_line);
    if (summ->parsed()) return cmd_scan_summatory(o, command_line);
    if (report->parsed()) return cmd_report(o, command_line);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace maass
