#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "maass/cli.hpp"
#include "maass/error.hpp"
#include "maass/io.hpp"
#include "support.hpp"

using namespace maass;

namespace {

// The odd fixture cut down to primes ≤ 50 and five zeros.
json small_record() {
  const MaassFormData& full = testing::fixture(1).form;
  json doc = form_to_json(full);
  json primes = json::array();
  for (const auto& [p, v] : full.prime_eigenvalues)
    if (p <= 50) primes.push_back({{"n", p}, {"value", v}});
  doc["hecke_eigenvalues"] = primes;
  doc["prime_bound"] = 50;
  doc["zeros"] = std::vector<double>(full.zeros.begin(), full.zeros.begin() + 5);
  return doc;
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_form(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected the record to be rejected");
  return ErrorCode::usage;
}

std::string temp_path(const std::string& name) { return std::string(MAASS_RHL_TEST_BINARY_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "maass_rhl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("minimal record loads without warnings") {
  std::vector<std::string> warnings;
  const MaassFormData f = parse_form(dump_json(small_record()), &warnings);
  CHECK(warnings.empty());
  CHECK(f.level == 25);
  CHECK(f.parity == 1);
  CHECK(f.prime_bound == 50);
  CHECK(f.prime_eigenvalues.size() == 15);
  CHECK(f.zeros.size() == 5);
}

TEST_CASE("form records round-trip losslessly") {
  const MaassFormData& full = testing::fixture(0).form;
  const std::string once = dump_json(form_to_json(full));
  const MaassFormData back = parse_form(once);
  CHECK(dump_json(form_to_json(back)) == once);
  CHECK(back.nu == full.nu);
  CHECK(back.root_number == full.root_number);
  CHECK(back.zeros == full.zeros);
  CHECK(back.prime_eigenvalues == full.prime_eigenvalues);
  const std::string path = temp_path("roundtrip.json");
  save_form(back, path);
  CHECK(dump_json(form_to_json(load_form(path))) == once);
}

TEST_CASE("record errors") {
  json doc = small_record();
  doc["root_number"] = {{"re", 0.5}, {"im", 0.0}};
  CHECK(code_of(dump_json(doc)) == ErrorCode::invariant_violation);

  doc = small_record();
  json primes = json::array();
  for (const auto& e : doc["hecke_eigenvalues"])
    if (e["n"] != 7) primes.push_back(e);
  doc["hecke_eigenvalues"] = primes;
  try {
    parse_form(dump_json(doc));
    FAIL("expected a gap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::missing_prime);
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }

  doc = small_record();
  doc["parity"] = "sideways";
  const std::string text = dump_json(doc);
  try {
    parse_form(text);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schema);
    CHECK(std::string(e.what()).find("parity") != std::string::npos);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }

  doc = small_record();
  doc.erase("label");
  CHECK(code_of(dump_json(doc)) == ErrorCode::schema);
  doc = small_record();
  doc["hecke_eigenvalues"].push_back({{"n", 9}, {"value", 0.1}});
  CHECK(code_of(dump_json(doc)) == ErrorCode::schema);
  CHECK(code_of("{ not json") == ErrorCode::schema);
}

TEST_CASE("config and CSV round trips") {
  EvalConfig cfg;
  cfg.dirichlet_terms = 1234;
  cfg.contour_abscissa = -0.3;
  const EvalConfig back = config_from_json(config_to_json(cfg));
  CHECK(config_to_json(back) == config_to_json(cfg));

  CHECK(format17(0.1) == "0.10000000000000001");
  CsvTable t;
  t.header = {"y", "value", "envelope"};
  t.rows = {{0.1, 1.0 / 3.0, -2.5e-300}, {10.0, std::nextafter(1.0, 2.0), 7.0}};
  const std::string text = csv_text(t, report_metadata(cfg, "unit"));
  CHECK(text.rfind("# ", 0) == 0);
  const CsvTable round = parse_csv(text);
  CHECK(round.header == t.header);
  CHECK(round.rows == t.rows);
}

TEST_CASE("cli exit codes and reports") {
  const std::string form = temp_path("small_record.json");
  {
    std::ofstream out(form);
    out << dump_json(small_record());
  }
  CHECK(cli({}) == 2);
  CHECK(cli({"bogus"}) == 2);
  CHECK(cli({"coeffs"}) == 2);
  CHECK(cli({"mellin", "--form", form, "--s", "abc"}) == 2);
  CHECK(cli({"coeffs", "--form", form, "--nmax", "100"}) == 2);
  CHECK(cli({"coeffs", "--form", temp_path("does_not_exist.json")}) == 2);

  const std::string report = temp_path("coeffs.json");
  CHECK(cli({"coeffs", "--form", form, "--nmax", "50", "--verify-convolution", "--out", report}) == 0);
  const json doc = json::parse(slurp(report));
  CHECK(doc["metadata"]["config"]["dirichlet_terms"] == 50);
  CHECK(doc["metadata"]["versions"]["maass_rhl"] == kVersion);
  CHECK(doc["result"]["convolution"]["failures"] == 0);

  const std::string csv = temp_path("summatory.csv");
  CHECK(cli({"scan-summatory", "--form", form, "--grid", "1:50:10", "--out", csv}) == 0);
  const CsvTable t = parse_csv(slurp(csv));
  CHECK(t.header == std::vector<std::string>{"y", "value", "envelope"});
  CHECK(t.rows.size() == 10);
}

TEST_CASE("cli identity report on the fixture") {
  const std::string report = temp_path("identity.json");
  CHECK(cli({"identity", "--form", testing::data_path("dihedral25_odd.json"), "--alpha", "1.0", "--zeros-count", "20",
             "--out", report}) == 0);
  const json doc = json::parse(slurp(report));
  CHECK(doc["result"]["zeros_used"] == 20);
  CHECK(doc["result"]["pairing"] == "conjugate-paired");
  CHECK(doc["result"]["relative_residual"].get<double>() < 1e-2);
  CHECK(doc["metadata"].contains("config"));
}
