#include "softdx/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "softdx/error.hpp"
#include "softdx/kernels.hpp"

namespace softdx {

std::uint64_t RuleSpace::candidate_count() const {
  std::uint64_t n = 1;
  for (const auto& v : variables) {
    const std::uint64_t k = v.choices.size();
    if (k != 0 && n > std::numeric_limits<std::uint64_t>::max() / k)
      throw Error(ErrorKind::Enumeration, "rule space exceeds 2^64 candidates");
    n *= k;
  }
  return n;
}

void RuleSpace::decode(std::uint64_t candidate, std::span<std::size_t> digits) const {
  SOFTDX_ENSURE(digits.size() == variables.size(), "digit buffer does not match the rule space");
  for (std::size_t v = variables.size(); v-- > 0;) {
    const std::uint64_t k = variables[v].choices.size();
    digits[v] = static_cast<std::size_t>(candidate % k);
    candidate /= k;
  }
}

std::vector<Conjunct> RuleSpace::conjuncts(std::span<const std::size_t> digits) const {
  std::vector<Conjunct> out;
  out.reserve(variables.size());
  for (std::size_t v = 0; v < variables.size(); ++v) {
    const auto& c = variables[v].choices.at(digits[v]);
    out.push_back({variables[v].variable, c.term, c.alpha});
  }
  return out;
}

RuleSpace build_rule_space(const VariableConfig& config, std::span<const SoftSet> soft_sets) {
  if (config.empty()) throw Error(ErrorKind::Enumeration, "no variables configured");
  if (soft_sets.empty()) throw Error(ErrorKind::Enumeration, "no soft sets to combine");

  RuleSpace space{soft_sets.front().universe(), {}};
  for (const auto& s : soft_sets) {
    if (!same_universe(s.universe(), space.universe))
      throw Error(ErrorKind::Incompatible, "soft sets for rule enumeration span different universes");
    const auto var = std::find_if(config.begin(), config.end(),
                                   [&](const LinguisticVariable& v) { return v.name == s.source().variable; });
    if (var == config.end() || var->find_term(s.source().term) == nullptr)
      throw Error(ErrorKind::Config,
                  "soft set " + s.source().variable + "/" + s.source().term + " is not in the configuration");
  }

  for (const auto& var : config) {
    VariableChoices vc{var.name, {}};
    for (const auto& term : var.terms) {
      const SoftSet* found = nullptr;
      for (const auto& s : soft_sets) {
        if (s.source().variable != var.name || s.source().term != term.name) continue;
        if (found != nullptr)
          throw Error(ErrorKind::Config, "duplicate soft set for " + var.name + "/" + term.name);
        found = &s;
      }
      if (found == nullptr) continue;
      for (const auto& level : found->levels())
        if (!level.members.empty()) vc.choices.push_back({term.name, level.alpha, level.members});
    }
    if (vc.choices.empty())
      throw Error(ErrorKind::Enumeration, "variable '" + var.name + "' has no nonempty soft set level");
    space.variables.push_back(std::move(vc));
  }
  return space;
}

RuleSet enumerate_rules(const VariableConfig& config, std::span<const SoftSet> soft_sets) {
  return kernels::enumerate_parallel(build_rule_space(config, soft_sets));
}

void RiskModel::check_invariants() const {
  SOFTDX_ENSURE(universe != nullptr, "risk model without universe");
  std::unordered_set<PatientSet, PatientSetHash> seen;
  for (const auto& r : rules) {
    const std::string tag = "rule " + std::to_string(r.rule.id);
    SOFTDX_ENSURE(r.rule.matched.capacity() == universe->size(), tag + ": matched set not sized to the universe");
    SOFTDX_ENSURE(r.support >= 1, tag + ": empty matched set");
    SOFTDX_ENSURE(r.support == r.rule.matched.count(), tag + ": support does not match the matched set");
    SOFTDX_ENSURE(r.positives <= r.support, tag + ": more positives than members");
    SOFTDX_ENSURE(r.risk == risk_percent(r.positives, r.support), tag + ": risk is not 100 * positives / support");
    SOFTDX_ENSURE(seen.insert(r.rule.matched).second, tag + ": duplicate matched set");
  }
}

RiskModel score_rules(const RuleSet& rules, const LabelMap& labels, std::string config_digest) {
  RiskModel model{std::move(config_digest), rules.universe, {}};
  model.rules.reserve(rules.rules.size());
  for (const auto& rule : rules.rules) {
    std::size_t positives = 0;
    for (std::size_t p : rule.matched.indices()) {
      const std::string& id = rules.universe->id(p);
      auto it = labels.find(id);
      if (it == labels.end())
        throw Error(ErrorKind::MissingLabel,
                    "patient '" + id + "' matched by rule " + std::to_string(rule.id) + " has no label");
      positives += it->second ? 1 : 0;
    }
    const std::size_t support = rule.matched.count();
    model.rules.push_back({rule, support, positives, risk_percent(positives, support)});
  }
  model.check_invariants();
  return model;
}

Diagnosis diagnose(const RiskModel& model, const PatientRecord& record, const VariableConfig& config) {
  // membership[(variable, term)] for the record
  std::map<std::pair<std::string_view, std::string_view>, double> mu;
  for (const auto& var : config) {
    auto it = record.values.find(var.name);
    if (it == record.values.end())
      throw Error(ErrorKind::ConfigMismatch, "record '" + record.id + "' has no value for variable '" + var.name + "'");
    if (!std::isfinite(it->second))
      throw Error(ErrorKind::InvalidInput, "record '" + record.id + "' has a non-finite value for '" + var.name + "'");
    for (const auto& t : var.terms) mu[{var.name, t.name}] = mf_eval(t.mf, it->second);
  }

  Diagnosis d{record.id, {}, std::nullopt};
  for (const auto& r : model.rules) {
    bool all = true;
    for (const auto& c : r.rule.conjuncts) {
      auto it = mu.find({c.variable, c.term});
      if (it == mu.end())
        throw Error(ErrorKind::ConfigMismatch,
                    "rule " + std::to_string(r.rule.id) + " uses " + c.variable + "/" + c.term + " outside the configuration");
      if (!(it->second >= c.alpha)) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    d.matched_rules.push_back(r.rule.id);
    d.risk = d.risk ? std::max(*d.risk, r.risk) : r.risk;
  }
  std::sort(d.matched_rules.begin(), d.matched_rules.end());
  return d;
}

std::vector<std::optional<double>> best_risks(const RiskModel& model) {
  std::vector<std::optional<double>> best(model.universe->size());
  for (const auto& r : model.rules)
    for (std::size_t p : r.rule.matched.indices()) best[p] = best[p] ? std::max(*best[p], r.risk) : r.risk;
  return best;
}

std::vector<std::pair<std::string, bool>> classify_corpus(const RiskModel& model, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 100.0))
    throw Error(ErrorKind::InvalidInput, "threshold must lie in [0, 100]");
  const auto best = best_risks(model);
  std::vector<std::pair<std::string, bool>> out;
  out.reserve(best.size());
  for (std::size_t p = 0; p < best.size(); ++p)
    out.emplace_back(model.universe->id(p), best[p].has_value() && *best[p] >= threshold);
  return out;
}

}  // namespace softdx
