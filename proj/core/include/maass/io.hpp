#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "maass/config.hpp"
#include "maass/hecke.hpp"

namespace maass {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

MaassFormData form_from_json(const json& doc, const std::string& text, std::vector<std::string>* warnings);
MaassFormData parse_form(const std::string& text, std::vector<std::string>* warnings = nullptr);
MaassFormData load_form(const std::string& path, std::vector<std::string>* warnings = nullptr);
json form_to_json(const MaassFormData& form);
void save_form(const MaassFormData& form, const std::string& path);

json config_to_json(const EvalConfig& config);
EvalConfig config_from_json(const json& doc);
// Config echo plus version strings; every report carries one.
json report_metadata(const EvalConfig& config, const std::string& command);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string format17(double v);
std::string dump_json(const json& doc);
// Writes to `path`, or to stdout when path is "-".
void write_text(const std::string& text, const std::string& path);
std::string csv_text(const CsvTable& table, const json& metadata);
CsvTable parse_csv(const std::string& text);

}  // namespace maass
