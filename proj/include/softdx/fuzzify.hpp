#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softdx/universe.hpp"

namespace softdx {

/// Piecewise-linear membership curve. Rises on [left, apex_lo], is 1 on
/// [apex_lo, apex_hi], falls on [apex_hi, right] and is 0 elsewhere.
/// A plain triangle has apex_lo == apex_hi.
struct TriangularMF {
  double left = 0.0;
  double apex_lo = 0.0;
  double apex_hi = 0.0;
  double right = 0.0;

  static TriangularMF triangle(double left, double apex, double right) { return {left, apex, apex, right}; }

  // Throws Error(Config) unless left <= apex_lo <= apex_hi <= right, all finite.
  void validate() const;

  friend bool operator==(const TriangularMF&, const TriangularMF&) = default;
};

/// Exact piecewise evaluation; closed intervals, so adjacent pieces agree at
/// breakpoints. Throws Error(InvalidInput) for non-finite x.
double mf_eval(const TriangularMF& mf, double x);

struct LinguisticTerm {
  std::string name;
  TriangularMF mf;
  std::vector<double> levels;  // α-grid, strictly increasing in (0, 1]

  friend bool operator==(const LinguisticTerm&, const LinguisticTerm&) = default;
};

struct LinguisticVariable {
  std::string name;
  std::string unit;
  std::vector<LinguisticTerm> terms;

  const LinguisticTerm* find_term(std::string_view term) const;
  void validate() const;

  friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;
};

using VariableConfig = std::vector<LinguisticVariable>;

// Throws Error(InvalidGrid) when the grid is not strictly increasing in (0, 1].
void validate_grid(std::span<const double> grid);

// Validates every variable and checks that variable names are unique.
void validate_config(const VariableConfig& config);

struct PatientRecord {
  std::string id;
  std::map<std::string, double, std::less<>> values;
  std::optional<bool> label;
};

/// One membership per term, in declaration order.
std::vector<std::pair<std::string, double>> term_memberships(const LinguisticVariable& var, double x);

/// Column of a FuzzyTable.
struct TermColumn {
  std::string variable;
  std::string term;

  friend bool operator==(const TermColumn&, const TermColumn&) = default;
};

/// Per-patient memberships for every (variable, term) column of a
/// configuration. Stored row-major: one row per universe member.
class FuzzyTable {
 public:
  FuzzyTable(UniversePtr universe, std::vector<TermColumn> columns, std::vector<double> values);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<TermColumn>& columns() const noexcept { return columns_; }
  std::optional<std::size_t> column_index(std::string_view variable, std::string_view term) const;

  double at(std::size_t patient, std::size_t column) const { return values_[patient * columns_.size() + column]; }
  // Throws Error(Config) on unknown patient or column.
  double at(std::string_view patient_id, std::string_view variable, std::string_view term) const;

  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const FuzzyTable& a, const FuzzyTable& b) {
    return *a.universe_ == *b.universe_ && a.columns_ == b.columns_ && a.values_ == b.values_;
  }

 private:
  UniversePtr universe_;
  std::vector<TermColumn> columns_;
  std::vector<double> values_;
};

std::vector<TermColumn> columns_of(const VariableConfig& config);

/// Fuzzifies records against a configuration. Universe follows record order.
/// Throws Error(ConfigMismatch) naming the record and variable when a value
/// is missing; Error(Validation) on duplicate ids or empty input.
FuzzyTable fuzzify_table(std::span<const PatientRecord> records, const VariableConfig& config);

/// Age, TLC, SGOT, platelet count and blood pressure with the reference
/// dengue breakpoints and α-grids.
VariableConfig default_dengue_config();

}  // namespace softdx
