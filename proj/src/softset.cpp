#include "softdx/softset.hpp"

#include <limits>

#include "softdx/error.hpp"

namespace softdx {

SoftSet::SoftSet(UniversePtr universe, TermColumn source, std::vector<SoftLevel> levels)
    : universe_(std::move(universe)), source_(std::move(source)), levels_(std::move(levels)) {
  SOFTDX_ENSURE(universe_ != nullptr, "soft set without universe");
  const std::string tag = source_.variable + "/" + source_.term;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].members.capacity() != universe_->size())
      throw Error(ErrorKind::Validation, "soft set " + tag + ": level set not sized to the universe");
    if (i == 0) continue;
    if (!(levels_[i].alpha > levels_[i - 1].alpha))
      throw Error(ErrorKind::Validation, "soft set " + tag + ": alpha levels not strictly increasing");
    if (!levels_[i].members.is_subset_of(levels_[i - 1].members))
      throw Error(ErrorKind::Validation, "soft set " + tag + ": level sets are not nested");
  }
}

std::vector<double> SoftSet::grid() const {
  std::vector<double> g;
  g.reserve(levels_.size());
  for (const auto& l : levels_) g.push_back(l.alpha);
  return g;
}

const SoftLevel* SoftSet::find(double alpha) const {
  for (const auto& l : levels_)
    if (l.alpha == alpha) return &l;
  return nullptr;
}

SoftSet alpha_cut(const FuzzyTable& table, std::string_view variable, std::string_view term,
                  std::span<const double> grid) {
  auto col = table.column_index(variable, term);
  if (!col)
    throw Error(ErrorKind::Config,
                "fuzzy table has no column " + std::string(variable) + "/" + std::string(term));
  validate_grid(grid);
  const std::size_t n = table.universe()->size();
  std::vector<SoftLevel> levels;
  levels.reserve(grid.size());
  for (double alpha : grid) {
    PatientSet members(n);
    for (std::size_t p = 0; p < n; ++p)
      if (table.at(p, *col) >= alpha) members.insert(p);
    levels.push_back({alpha, std::move(members)});
  }
  return SoftSet(table.universe(), {std::string(variable), std::string(term)}, std::move(levels));
}

std::vector<SoftSet> alpha_cut_all(const FuzzyTable& table, const VariableConfig& config) {
  std::vector<SoftSet> out;
  for (const auto& v : config)
    for (const auto& t : v.terms) out.push_back(alpha_cut(table, v.name, t.name, t.levels));
  return out;
}

ProductSoftSet::ProductSoftSet(std::vector<SoftSet> factors, CellOp op) : factors_(std::move(factors)), op_(op) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidInput, "product of zero soft sets");
  for (const auto& f : factors_)
    if (!same_universe(f.universe(), factors_.front().universe()))
      throw Error(ErrorKind::Incompatible, "soft sets " + f.source().variable + "/" + f.source().term + " and " +
                                               factors_.front().source().variable + "/" +
                                               factors_.front().source().term + " have different universes");

  cell_count_ = 1;
  for (const auto& f : factors_) {
    const std::size_t k = f.levels().size();
    if (k != 0 && cell_count_ > std::numeric_limits<std::size_t>::max() / k)
      throw Error(ErrorKind::InvalidInput, "soft set product too large to index");
    cell_count_ *= k;
  }
  if (cell_count_ == 0 || cell_count_ > kEagerCellLimit) return;

  cells_.reserve(cell_count_);
  std::vector<std::size_t> idx(factors_.size(), 0);
  for (std::size_t flat = 0; flat < cell_count_; ++flat) {
    cells_.push_back(compute(idx));
    for (std::size_t f = factors_.size(); f-- > 0;) {
      if (++idx[f] < factors_[f].levels().size()) break;
      idx[f] = 0;
    }
  }
}

std::size_t ProductSoftSet::flat_index(std::span<const std::size_t> level_indices) const {
  if (level_indices.size() != factors_.size())
    throw Error(ErrorKind::InvalidInput, "cell address needs one level index per factor");
  std::size_t flat = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const std::size_t k = factors_[f].levels().size();
    if (level_indices[f] >= k) throw Error(ErrorKind::InvalidInput, "cell level index out of range");
    flat = flat * k + level_indices[f];
  }
  return flat;
}

PatientSet ProductSoftSet::compute(std::span<const std::size_t> level_indices) const {
  PatientSet acc = factors_.front().levels()[level_indices[0]].members;
  for (std::size_t f = 1; f < factors_.size(); ++f) {
    const auto& s = factors_[f].levels()[level_indices[f]].members;
    if (op_ == CellOp::Intersection)
      acc &= s;
    else
      acc |= s;
  }
  return acc;
}

PatientSet ProductSoftSet::cell(std::span<const std::size_t> level_indices) const {
  const std::size_t flat = flat_index(level_indices);
  if (!cells_.empty()) return cells_[flat];
  return compute(level_indices);
}

PatientSet ProductSoftSet::cell_at(std::span<const double> alphas) const {
  if (alphas.size() != factors_.size())
    throw Error(ErrorKind::InvalidInput, "cell address needs one alpha per factor");
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& levels = factors_[f].levels();
    std::size_t i = 0;
    while (i < levels.size() && levels[i].alpha != alphas[f]) ++i;
    if (i == levels.size())
      throw Error(ErrorKind::Config, "alpha " + std::to_string(alphas[f]) + " not on the grid of " +
                                         factors_[f].source().variable + "/" + factors_[f].source().term);
    idx[f] = i;
  }
  return cell(idx);
}

ProductSoftSet and_op(const SoftSet& a, const SoftSet& b) { return ProductSoftSet({a, b}, CellOp::Intersection); }

ProductSoftSet or_op(const SoftSet& a, const SoftSet& b) { return ProductSoftSet({a, b}, CellOp::Union); }

ProductSoftSet and_all(std::vector<SoftSet> factors) { return ProductSoftSet(std::move(factors), CellOp::Intersection); }

SoftSet reduce_trivial(const SoftSet& s) {
  std::vector<SoftLevel> kept;
  for (const auto& l : s.levels())
    if (!l.members.empty() && !l.members.is_full()) kept.push_back(l);
  return SoftSet(s.universe(), s.source(), std::move(kept));
}

SoftSet merge_duplicate_levels(const SoftSet& s) {
  std::vector<SoftLevel> kept;
  for (const auto& l : s.levels())
    if (kept.empty() || kept.back().members != l.members) kept.push_back(l);
  return SoftSet(s.universe(), s.source(), std::move(kept));
}

}  // namespace softdx
