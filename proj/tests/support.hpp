#pragma once

#include <memory>
#include <string>

#include "maass/io.hpp"
#include "maass/lfun.hpp"
#include "maass/series.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(MAASS_RHL_TEST_DATA) + "/" + name; }

struct Fixture {
  maass::MaassFormData form;
  std::shared_ptr<maass::CoeffTable> table;
  std::shared_ptr<maass::LFunction> lfun;
  std::unique_ptr<maass::SeriesEvaluator> series;
};

// Both fixture records are built once per process.
inline Fixture& fixture(int parity) {
  static std::unique_ptr<Fixture> cache[2];
  auto& slot = cache[parity];
  if (!slot) {
    slot = std::make_unique<Fixture>();
    slot->form = maass::load_form(data_path(parity == 1 ? "dihedral25_odd.json" : "dihedral25_even.json"));
    slot->table = std::make_shared<maass::CoeffTable>(maass::build_coefficients(slot->form, slot->form.prime_bound));
    slot->lfun = std::make_shared<maass::LFunction>(slot->form, slot->table);
    slot->series = std::make_unique<maass::SeriesEvaluator>(slot->lfun);
  }
  return *slot;
}

// A form whose λ̃ table is a given finite list (index 0 holds λ̃(1)).
inline std::unique_ptr<maass::SeriesEvaluator> synthetic_series(const std::vector<double>& tilde, double nu, int parity) {
  maass::MaassFormData form;
  form.label = "synthetic";
  form.parity = parity;
  form.nu = nu;
  auto table = std::make_shared<maass::CoeffTable>(maass::synthetic_table(tilde));
  form.prime_bound = table->n_max;
  auto lf = std::make_shared<maass::LFunction>(form, table);
  return std::make_unique<maass::SeriesEvaluator>(lf);
}

}  // namespace testing
