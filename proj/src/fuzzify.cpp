#include "softdx/fuzzify.hpp"

#include <cmath>
#include <set>

#include "softdx/error.hpp"
#include "softdx/kernels.hpp"

namespace softdx {

void TriangularMF::validate() const {
  if (!std::isfinite(left) || !std::isfinite(apex_lo) || !std::isfinite(apex_hi) || !std::isfinite(right))
    throw Error(ErrorKind::Config, "membership breakpoints must be finite");
  if (!(left <= apex_lo && apex_lo <= apex_hi && apex_hi <= right))
    throw Error(ErrorKind::Config, "membership breakpoints must satisfy left <= apex_lo <= apex_hi <= right");
}

double mf_eval(const TriangularMF& mf, double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "membership argument is not finite");
  if (x < mf.left || x > mf.right) return 0.0;
  // x < apex_lo implies left < apex_lo, so the divisors below are nonzero.
  if (x < mf.apex_lo) return (x - mf.left) / (mf.apex_lo - mf.left);
  if (x > mf.apex_hi) return (mf.right - x) / (mf.right - mf.apex_hi);
  return 1.0;
}

const LinguisticTerm* LinguisticVariable::find_term(std::string_view term) const {
  for (const auto& t : terms)
    if (t.name == term) return &t;
  return nullptr;
}

void validate_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] <= 1.0))
      throw Error(ErrorKind::InvalidGrid, "alpha level " + std::to_string(grid[i]) + " outside (0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw Error(ErrorKind::InvalidGrid, "alpha levels must be strictly increasing");
  }
}

void LinguisticVariable::validate() const {
  if (name.empty()) throw Error(ErrorKind::Config, "variable with empty name");
  std::set<std::string_view> seen;
  for (const auto& t : terms) {
    if (t.name.empty()) throw Error(ErrorKind::Config, "variable '" + name + "' has a term with empty name");
    if (!seen.insert(t.name).second)
      throw Error(ErrorKind::Config, "variable '" + name + "' declares term '" + t.name + "' twice");
    t.mf.validate();
    validate_grid(t.levels);
  }
}

void validate_config(const VariableConfig& config) {
  std::set<std::string_view> seen;
  for (const auto& v : config) {
    v.validate();
    if (!seen.insert(v.name).second) throw Error(ErrorKind::Config, "variable '" + v.name + "' declared twice");
  }
}

std::vector<std::pair<std::string, double>> term_memberships(const LinguisticVariable& var, double x) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(var.terms.size());
  for (const auto& t : var.terms) out.emplace_back(t.name, mf_eval(t.mf, x));
  return out;
}

FuzzyTable::FuzzyTable(UniversePtr universe, std::vector<TermColumn> columns, std::vector<double> values)
    : universe_(std::move(universe)), columns_(std::move(columns)), values_(std::move(values)) {
  SOFTDX_ENSURE(universe_ != nullptr, "fuzzy table without universe");
  if (values_.size() != universe_->size() * columns_.size())
    throw Error(ErrorKind::Validation, "fuzzy table has " + std::to_string(values_.size()) + " entries, expected " +
                                           std::to_string(universe_->size() * columns_.size()));
  for (double v : values_)
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::Validation, "fuzzy table entry outside [0, 1]");
}

std::optional<std::size_t> FuzzyTable::column_index(std::string_view variable, std::string_view term) const {
  for (std::size_t c = 0; c < columns_.size(); ++c)
    if (columns_[c].variable == variable && columns_[c].term == term) return c;
  return std::nullopt;
}

double FuzzyTable::at(std::string_view patient_id, std::string_view variable, std::string_view term) const {
  auto row = universe_->index_of(patient_id);
  if (!row) throw Error(ErrorKind::Config, "unknown patient '" + std::string(patient_id) + "'");
  auto col = column_index(variable, term);
  if (!col) throw Error(ErrorKind::Config, "unknown column " + std::string(variable) + "/" + std::string(term));
  return at(*row, *col);
}

std::vector<TermColumn> columns_of(const VariableConfig& config) {
  std::vector<TermColumn> cols;
  for (const auto& v : config)
    for (const auto& t : v.terms) cols.push_back({v.name, t.name});
  return cols;
}

FuzzyTable fuzzify_table(std::span<const PatientRecord> records, const VariableConfig& config) {
  return kernels::fuzzify_parallel(records, config);
}

VariableConfig default_dengue_config() {
  const std::vector<double> quarter{0.25, 0.5, 0.75, 1.0};
  const std::vector<double> fifth{0.2, 0.4, 0.6, 0.8, 1.0};
  const std::vector<double> platelet{0.2, 0.55, 0.7, 0.85, 1.0};
  using MF = TriangularMF;
  return {
      {"age", "years",
       {{"child", MF::triangle(2, 9, 16), quarter},
        {"young", MF::triangle(15, 30, 45), fifth},
        {"old", MF::triangle(44, 65, 90), fifth}}},
      {"tlc", "cells/uL",
       {{"low", MF::triangle(3500, 3750, 4000), fifth},
        {"medium", MF::triangle(3900, 7450, 11000), fifth},
        {"high", MF::triangle(10000, 12500, 15000), fifth}}},
      {"sgot", "U/L",
       {{"low", MF::triangle(10, 25, 40), quarter},
        {"medium", MF::triangle(35, 42, 50), quarter},
        {"high", MF::triangle(45, 50, 55), fifth}}},
      {"platelets", "platelets/uL",
       {{"low", MF::triangle(3500, 80000, 150000), platelet},
        {"medium", MF::triangle(140000, 295000, 450000), platelet},
        {"high", MF::triangle(440000, 455000, 470000), platelet}}},
      {"bp", "mmHg",
       {{"low", MF::triangle(120, 127, 134), quarter},
        {"medium", MF::triangle(127, 144, 161), quarter},
        {"high", MF::triangle(154, 163, 172), quarter}}},
  };
}

}  // namespace softdx
