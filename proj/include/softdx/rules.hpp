#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softdx/fuzzify.hpp"
#include "softdx/patient_set.hpp"
#include "softdx/softset.hpp"
#include "softdx/universe.hpp"

namespace softdx {

struct Conjunct {
  std::string variable;
  std::string term;
  double alpha = 0.0;

  friend bool operator==(const Conjunct&, const Conjunct&) = default;
};

// One (variable, term, alpha) pick per configured variable, in config order.
struct Rule {
  std::uint64_t id = 0;  // 1-based position in the full candidate product
  std::vector<Conjunct> conjuncts;
  PatientSet matched;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Candidate picks for one variable: every nonempty (term, alpha) level of its
// soft sets, terms in declaration order and alphas ascending.
struct RuleChoice {
  std::string term;
  double alpha = 0.0;
  PatientSet members;
};

struct VariableChoices {
  std::string variable;
  std::vector<RuleChoice> choices;
};

struct RuleSpace {
  UniversePtr universe;
  std::vector<VariableChoices> variables;

  std::uint64_t candidate_count() const;
  // Decodes a 0-based candidate index into one choice index per variable.
  // The last variable varies fastest.
  void decode(std::uint64_t candidate, std::span<std::size_t> digits) const;
  std::vector<Conjunct> conjuncts(std::span<const std::size_t> digits) const;
};

/// Groups soft sets by configured variable. Throws Error(Enumeration) naming
/// a variable that contributes no nonempty level, Error(Config) for a soft
/// set outside the configuration, Error(Incompatible) on mixed universes.
RuleSpace build_rule_space(const VariableConfig& config, std::span<const SoftSet> soft_sets);

struct RuleSet {
  UniversePtr universe;
  std::uint64_t candidate_count = 0;
  std::vector<Rule> rules;  // ascending id; nonempty, pairwise distinct matched sets
};

/// Exhaustive conjunctive enumeration over the rule space. Candidates with an
/// empty matched set are dropped; candidates repeating an earlier matched set
/// are merged into the lowest id.
RuleSet enumerate_rules(const VariableConfig& config, std::span<const SoftSet> soft_sets);

using LabelMap = std::map<std::string, bool, std::less<>>;

struct ScoredRule {
  Rule rule;
  std::size_t support = 0;
  std::size_t positives = 0;
  double risk = 0.0;  // percent

  friend bool operator==(const ScoredRule&, const ScoredRule&) = default;
};

struct RiskModel {
  std::string config_digest;
  UniversePtr universe;
  std::vector<ScoredRule> rules;

  // Throws InvariantViolation on: empty or duplicate matched sets, support
  // mismatch, or risk != 100 * positives / support.
  void check_invariants() const;
};

inline double risk_percent(std::size_t positives, std::size_t support) {
  return 100.0 * static_cast<double>(positives) / static_cast<double>(support);
}

/// Throws Error(MissingLabel) naming the patient and rule when a matched
/// patient has no label.
RiskModel score_rules(const RuleSet& rules, const LabelMap& labels, std::string config_digest);

struct Diagnosis {
  std::string record_id;
  std::vector<std::uint64_t> matched_rules;  // ascending id
  std::optional<double> risk;                // nullopt: no rule matched
};

/// A rule matches when every conjunct's membership clears its alpha. The
/// diagnosis risk is the highest risk among matching rules.
Diagnosis diagnose(const RiskModel& model, const PatientRecord& record, const VariableConfig& config);

/// Best risk of each universe member over the rules whose matched set
/// contains it, in universe order.
std::vector<std::optional<double>> best_risks(const RiskModel& model);

/// Positive when the best risk is >= threshold; no match is negative.
/// Throws Error(InvalidInput) for a threshold outside [0, 100].
std::vector<std::pair<std::string, bool>> classify_corpus(const RiskModel& model, double threshold);

}  // namespace softdx
