#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softdx/fuzzify.hpp"
#include "softdx/patient_set.hpp"
#include "softdx/universe.hpp"

namespace softdx {

struct SoftLevel {
  double alpha = 0.0;
  PatientSet members;

  friend bool operator==(const SoftLevel&, const SoftLevel&) = default;
};

// Parameterised family alpha -> subset of the universe, tagged with the
// (variable, term) column it was cut from.
class SoftSet {
 public:
  // Validates: alphas strictly increasing, subsets sized to the universe,
  // and nesting (a higher alpha never has more members). Throws Error(Validation).
  SoftSet(UniversePtr universe, TermColumn source, std::vector<SoftLevel> levels);

  const UniversePtr& universe() const noexcept { return universe_; }
  const TermColumn& source() const noexcept { return source_; }
  const std::vector<SoftLevel>& levels() const noexcept { return levels_; }
  std::vector<double> grid() const;
  const SoftLevel* find(double alpha) const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return same_universe(a.universe_, b.universe_) && a.source_ == b.source_ && a.levels_ == b.levels_;
  }

 private:
  UniversePtr universe_;
  TermColumn source_;
  std::vector<SoftLevel> levels_;
};

/// levels[a] = { v : table(v, variable, term) >= a } for each a in the grid.
/// Throws Error(Config) for an unknown column, Error(InvalidGrid) for a bad grid.
SoftSet alpha_cut(const FuzzyTable& table, std::string_view variable, std::string_view term,
                  std::span<const double> grid);

/// Cuts every configured term with its own grid, in configuration order.
std::vector<SoftSet> alpha_cut_all(const FuzzyTable& table, const VariableConfig& config);

enum class CellOp { Intersection, Union };

// Product of soft sets. A cell is addressed by one level index per factor and
// holds the intersection (AND) or union (OR) of the factor level sets.
// Cells are materialised up front when there are at most kEagerCellLimit of
// them; larger products compute cells on request. Both give the same results.
class ProductSoftSet {
 public:
  static constexpr std::size_t kEagerCellLimit = 1'000'000;

  ProductSoftSet(std::vector<SoftSet> factors, CellOp op);

  const UniversePtr& universe() const noexcept { return factors_.front().universe(); }
  const std::vector<SoftSet>& factors() const noexcept { return factors_; }
  CellOp op() const noexcept { return op_; }
  std::size_t cell_count() const noexcept { return cell_count_; }
  bool eager() const noexcept { return !cells_.empty() || cell_count_ == 0; }

  PatientSet cell(std::span<const std::size_t> level_indices) const;
  // Throws Error(Config) when an alpha is not on the matching factor's grid.
  PatientSet cell_at(std::span<const double> alphas) const;

 private:
  std::size_t flat_index(std::span<const std::size_t> level_indices) const;
  PatientSet compute(std::span<const std::size_t> level_indices) const;

  std::vector<SoftSet> factors_;
  CellOp op_;
  std::size_t cell_count_ = 0;
  std::vector<PatientSet> cells_;
};

/// Throws Error(Incompatible) when the universes differ.
ProductSoftSet and_op(const SoftSet& a, const SoftSet& b);
ProductSoftSet or_op(const SoftSet& a, const SoftSet& b);
/// n-ary AND over any number (>= 1) of soft sets on one universe.
ProductSoftSet and_all(std::vector<SoftSet> factors);

/// Drops levels whose set is empty or the whole universe. Survivors keep
/// their alpha, members and order.
SoftSet reduce_trivial(const SoftSet& s);

/// Collapses consecutive levels with identical sets, keeping the lowest alpha.
SoftSet merge_duplicate_levels(const SoftSet& s);

}  // namespace softdx
