#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softdx/dataset.hpp"
#include "softdx/fuzzify.hpp"
#include "softdx/reference.hpp"
#include "softdx/rules.hpp"
#include "softdx/softset.hpp"

namespace softdx {

// Fuzzification, alpha-cut soft sets, reduction, rule enumeration, scoring,
// then the report.
enum class Stage { Fuzzify, SoftSets, Reduce, Rules, Score, Report };

std::string_view stage_name(Stage s) noexcept;

struct RunOptions {
  double threshold = 50.0;
  bool merge_duplicate_levels = false;
  // Published memberships to compare against; listed in the report when set.
  std::optional<std::vector<PrintedMembership>> reference;
};

struct RunArtifacts {
  DatasetConfig config;
  std::string config_digest;
  std::optional<FuzzyTable> fuzzy_table;
  std::vector<SoftSet> soft_sets;
  std::vector<SoftSet> reduced_sets;
  std::optional<RuleSet> rule_set;
  std::optional<RiskModel> risk_model;
  std::string report;
};

namespace stage {
FuzzyTable fuzzify(std::span<const PatientRecord> records, const DatasetConfig& config);
std::vector<SoftSet> softsets(const FuzzyTable& table, const DatasetConfig& config);
std::vector<SoftSet> reduce(std::span<const SoftSet> soft_sets, bool merge_duplicate_levels);
RuleSet rules(const DatasetConfig& config, std::span<const SoftSet> reduced);
RiskModel score(const RuleSet& rules, const LabelMap& labels, const std::string& digest);
}  // namespace stage

/// All stages in order. Without labels the run stops after rule enumeration
/// and the report says scoring was skipped. Stage failures are rethrown as
/// Error with the stage name prefixed.
RunArtifacts run_pipeline(std::span<const PatientRecord> records, const DatasetConfig& config,
                          const std::optional<LabelMap>& labels, const RunOptions& options = {});

/// Re-runs `from` and every later stage on artifacts already present.
void continue_pipeline(RunArtifacts& artifacts, Stage from, const std::optional<LabelMap>& labels,
                       const RunOptions& options = {});

/// Per-rule table, per-patient best risk, the aggregate positive count at the
/// threshold, out-of-support flags and reference discrepancies.
std::string emit_report(const RunArtifacts& artifacts, const RunOptions& options = {});

namespace files {
inline constexpr const char* kConfig = "config.json";
inline constexpr const char* kFuzzyTable = "fuzzy_table.json";
inline constexpr const char* kSoftSets = "softsets.json";
inline constexpr const char* kReduced = "reduced.json";
inline constexpr const char* kRules = "rules.json";
inline constexpr const char* kRiskModel = "risk_model.json";
inline constexpr const char* kReport = "report.txt";
}  // namespace files

/// Serialized text of each present artifact, keyed by file name.
std::vector<std::pair<std::string, std::string>> render_artifacts(const RunArtifacts& artifacts);

void persist_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& dir);

/// Loads whichever artifacts exist in `dir`; config.json is required. Every
/// artifact's digest must match the config.
RunArtifacts load_artifacts(const std::filesystem::path& dir);

}  // namespace softdx
