#include "maass/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maass/error.hpp"

namespace maass {
namespace {

// 1-based line of the first occurrence of "key" in the source text, or 0.
int line_of(const std::string& text, const std::string& key) {
  size_t pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

[[noreturn]] void schema_error(const std::string& text, const std::string& field, const std::string& what) {
  int line = line_of(text, field);
  std::string where = line > 0 ? " (line " + std::to_string(line) + ")" : "";
  throw Error(ErrorCode::schema, "field '" + field + "'" + where + ": " + what);
}

const json& require(const json& doc, const std::string& text, const std::string& field) {
  if (!doc.contains(field)) schema_error(text, field, "missing");
  return doc.at(field);
}

double number(const json& v, const std::string& text, const std::string& field) {
  if (!v.is_number()) schema_error(text, field, "expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) schema_error(text, field, "not finite");
  return d;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

MaassFormData form_from_json(const json& doc, const std::string& text, std::vector<std::string>* warnings) {
  if (!doc.is_object()) throw Error(ErrorCode::schema, "form record must be a JSON object");
  MaassFormData f;
  const json& label = require(doc, text, "label");
  if (!label.is_string()) schema_error(text, "label", "expected a string");
  f.label = label.get<std::string>();

  const json& level = require(doc, text, "level");
  if (!level.is_number_integer() || level.get<long>() < 1) schema_error(text, "level", "expected an integer ≥ 1");
  f.level = level.get<long>();

  const json& parity = require(doc, text, "parity");
  if (parity == "even") f.parity = 0;
  else if (parity == "odd") f.parity = 1;
  else schema_error(text, "parity", "expected \"even\" or \"odd\"");

  f.nu = number(require(doc, text, "spectral_parameter"), text, "spectral_parameter");

  const json& rn = require(doc, text, "root_number");
  if (!rn.is_object() || !rn.contains("re") || !rn.contains("im"))
    schema_error(text, "root_number", "expected an object {re, im}");
  f.root_number = {number(rn["re"], text, "root_number"), number(rn["im"], text, "root_number")};

  const json& ev = require(doc, text, "hecke_eigenvalues");
  if (!ev.is_array()) schema_error(text, "hecke_eigenvalues", "expected an array");
  long max_n = 0;
  for (const json& e : ev) {
    if (!e.is_object() || !e.contains("n") || !e.contains("value"))
      schema_error(text, "hecke_eigenvalues", "entries must be objects {n, value}");
    if (!e["n"].is_number_integer()) schema_error(text, "hecke_eigenvalues", "n must be an integer");
    long n = e["n"].get<long>();
    if (!is_prime(n)) schema_error(text, "hecke_eigenvalues", "n = " + std::to_string(n) + " is not prime");
    if (f.prime_eigenvalues.count(n)) schema_error(text, "hecke_eigenvalues", "duplicate entry for " + std::to_string(n));
    f.prime_eigenvalues[n] = number(e["value"], text, "hecke_eigenvalues");
    max_n = std::max(max_n, n);
  }
  if (doc.contains("prime_bound")) {
    if (!doc["prime_bound"].is_number_integer()) schema_error(text, "prime_bound", "expected an integer");
    f.prime_bound = doc["prime_bound"].get<long>();
  } else {
    f.prime_bound = max_n;
  }
  for (long p = 2; p <= f.prime_bound; ++p) {
    if (is_prime(p) && !f.prime_eigenvalues.count(p))
      throw Error(ErrorCode::missing_prime, "hecke_eigenvalues has a gap: no entry for the prime " + std::to_string(p) +
                                                " below the bound " + std::to_string(f.prime_bound));
  }

  const json& zeros = require(doc, text, "zeros");
  if (!zeros.is_array()) schema_error(text, "zeros", "expected an array");
  for (const json& z : zeros) f.zeros.push_back(number(z, text, "zeros"));

  const json& prov = require(doc, text, "provenance");
  if (!prov.is_string()) schema_error(text, "provenance", "expected a string");
  f.provenance = prov.get<std::string>();

  std::vector<std::string> w = validate_form(f);
  if (warnings) warnings->insert(warnings->end(), w.begin(), w.end());
  return f;
}

MaassFormData parse_form(const std::string& text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::schema, std::string("malformed JSON: ") + e.what());
  }
  return form_from_json(doc, text, warnings);
}

MaassFormData load_form(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::schema, "cannot open form record '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_form(ss.str(), warnings);
}

json form_to_json(const MaassFormData& f) {
  json doc;
  doc["label"] = f.label;
  doc["level"] = f.level;
  doc["parity"] = f.parity == 0 ? "even" : "odd";
  doc["spectral_parameter"] = f.nu;
  doc["root_number"] = {{"re", f.root_number.real()}, {"im", f.root_number.imag()}};
  doc["prime_bound"] = f.prime_bound;
  json ev = json::array();
  for (const auto& [p, v] : f.prime_eigenvalues) ev.push_back({{"n", p}, {"value", v}});
  doc["hecke_eigenvalues"] = ev;
  doc["zeros"] = f.zeros;
  doc["provenance"] = f.provenance;
  return doc;
}

void save_form(const MaassFormData& form, const std::string& path) { write_text(dump_json(form_to_json(form)), path); }

json config_to_json(const EvalConfig& c) {
  json q;
  q["scheme"] = "gauss-legendre-panels";
  q["abscissa_count"] = c.quad_spec.abscissa_count;
  q["target_abs_error"] = c.quad_spec.target_abs_error;
  json doc;
  doc["dirichlet_terms"] = c.dirichlet_terms;
  doc["tail_delta"] = c.tail_delta;
  doc["quad_spec"] = q;
  doc["derivative_radius"] = c.derivative_radius;
  doc["derivative_points"] = c.derivative_points;
  doc["contour_abscissa"] = c.contour_abscissa;
  doc["contour_height_cap"] = c.contour_height_cap;
  doc["zero_step"] = c.zero_step;
  doc["zero_tolerance"] = c.zero_tolerance;
  doc["rotation_margin"] = c.rotation_margin;
  doc["block_width"] = c.block_width;
  doc["max_height"] = c.max_height;
  doc["series_tol"] = c.series_tol;
  return doc;
}

EvalConfig config_from_json(const json& doc) {
  EvalConfig c;
  auto get = [&](const char* key, auto& field) {
    if (doc.contains(key)) field = doc.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("dirichlet_terms", c.dirichlet_terms);
  get("tail_delta", c.tail_delta);
  if (doc.contains("quad_spec")) {
    const json& q = doc["quad_spec"];
    if (q.contains("abscissa_count")) c.quad_spec.abscissa_count = q["abscissa_count"].get<int>();
    if (q.contains("target_abs_error")) c.quad_spec.target_abs_error = q["target_abs_error"].get<double>();
  }
  get("derivative_radius", c.derivative_radius);
  get("derivative_points", c.derivative_points);
  get("contour_abscissa", c.contour_abscissa);
  get("contour_height_cap", c.contour_height_cap);
  get("zero_step", c.zero_step);
  get("zero_tolerance", c.zero_tolerance);
  get("rotation_margin", c.rotation_margin);
  get("block_width", c.block_width);
  get("max_height", c.max_height);
  get("series_tol", c.series_tol);
  c.validate();
  return c;
}

json report_metadata(const EvalConfig& config, const std::string& command) {
  json m;
  m["command"] = command;
  m["config"] = config_to_json(config);
  m["versions"] = {{"maass_rhl", kVersion}, {"cxx", __VERSION__}, {"json", "nlohmann 3.11.3"}};
  return m;
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::usage, "cannot write '" + path + "'");
  out << text;
}

std::string csv_text(const CsvTable& table, const json& metadata) {
  std::ostringstream out;
  out << "# " << metadata.dump() << "\n";
  for (size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format17(row[i]);
    out << "\n";
  }
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header) {
      t.header = cells;
      header = false;
    } else {
      std::vector<double> row;
      for (const auto& c : cells) row.push_back(std::stod(c));
      t.rows.push_back(row);
    }
  }
  return t;
}

}  // namespace maass
