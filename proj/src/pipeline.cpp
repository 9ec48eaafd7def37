#include "softdx/pipeline.hpp"

#include <filesystem>

#include "softdx/error.hpp"
#include "softdx/serialize.hpp"

namespace softdx {
namespace {

template <typename F>
auto in_stage(Stage s, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "stage '" + std::string(stage_name(s)) + "': " + e.message());
  }
}

}  // namespace

std::string_view stage_name(Stage s) noexcept {
  switch (s) {
    case Stage::Fuzzify: return "fuzzify";
    case Stage::SoftSets: return "softsets";
    case Stage::Reduce: return "reduce";
    case Stage::Rules: return "rules";
    case Stage::Score: return "score";
    case Stage::Report: return "report";
  }
  return "?";
}

namespace stage {

FuzzyTable fuzzify(std::span<const PatientRecord> records, const DatasetConfig& config) {
  return in_stage(Stage::Fuzzify, [&] {
    config.validate();
    return fuzzify_table(records, config.variables);
  });
}

std::vector<SoftSet> softsets(const FuzzyTable& table, const DatasetConfig& config) {
  return in_stage(Stage::SoftSets, [&] { return alpha_cut_all(table, config.variables); });
}

std::vector<SoftSet> reduce(std::span<const SoftSet> soft_sets, bool merge_duplicate_levels) {
  return in_stage(Stage::Reduce, [&] {
    std::vector<SoftSet> out;
    out.reserve(soft_sets.size());
    for (const auto& s : soft_sets) {
      SoftSet r = reduce_trivial(s);
      out.push_back(merge_duplicate_levels ? softdx::merge_duplicate_levels(r) : std::move(r));
    }
    return out;
  });
}

RuleSet rules(const DatasetConfig& config, std::span<const SoftSet> reduced) {
  return in_stage(Stage::Rules, [&] { return enumerate_rules(config.variables, reduced); });
}

RiskModel score(const RuleSet& rules, const LabelMap& labels, const std::string& digest) {
  return in_stage(Stage::Score, [&] { return score_rules(rules, labels, digest); });
}

}  // namespace stage

void continue_pipeline(RunArtifacts& a, Stage from, const std::optional<LabelMap>& labels, const RunOptions& options) {
  SOFTDX_ENSURE(from != Stage::Fuzzify, "continue_pipeline needs a fuzzy table; use run_pipeline");
  auto need = [](bool present, Stage s) {
    if (!present)
      throw Error(ErrorKind::Validation,
                  "stage '" + std::string(stage_name(s)) + "': input artifact from the previous stage is missing");
  };

  if (from <= Stage::SoftSets) {
    need(a.fuzzy_table.has_value(), Stage::SoftSets);
    a.soft_sets = stage::softsets(*a.fuzzy_table, a.config);
  }
  if (from <= Stage::Reduce) {
    need(!a.soft_sets.empty(), Stage::Reduce);
    a.reduced_sets = stage::reduce(a.soft_sets, options.merge_duplicate_levels);
  }
  if (from <= Stage::Rules) {
    need(!a.reduced_sets.empty(), Stage::Rules);
    a.rule_set = stage::rules(a.config, a.reduced_sets);
  }
  if (from <= Stage::Score) {
    need(a.rule_set.has_value(), Stage::Score);
    if (labels)
      a.risk_model = stage::score(*a.rule_set, *labels, a.config_digest);
    else
      a.risk_model.reset();
  }
  a.report = in_stage(Stage::Report, [&] { return emit_report(a, options); });
}

RunArtifacts run_pipeline(std::span<const PatientRecord> records, const DatasetConfig& config,
                          const std::optional<LabelMap>& labels, const RunOptions& options) {
  RunArtifacts a{config, config_digest(config.variables), std::nullopt, {}, {}, std::nullopt, std::nullopt, {}};
  a.fuzzy_table = stage::fuzzify(records, config);
  continue_pipeline(a, Stage::SoftSets, labels, options);
  return a;
}

std::vector<std::pair<std::string, std::string>> render_artifacts(const RunArtifacts& a) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back(files::kConfig, dump(to_json(a.config)));
  if (a.fuzzy_table) out.emplace_back(files::kFuzzyTable, dump(to_json(*a.fuzzy_table, a.config_digest)));
  if (!a.soft_sets.empty()) out.emplace_back(files::kSoftSets, dump(to_json(a.soft_sets, "alpha_cut", a.config_digest)));
  if (!a.reduced_sets.empty())
    out.emplace_back(files::kReduced, dump(to_json(a.reduced_sets, "reduced", a.config_digest)));
  if (a.rule_set) out.emplace_back(files::kRules, dump(to_json(*a.rule_set, a.config_digest)));
  if (a.risk_model) out.emplace_back(files::kRiskModel, dump(to_json(*a.risk_model)));
  if (!a.report.empty()) out.emplace_back(files::kReport, a.report);
  return out;
}

void persist_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : render_artifacts(artifacts)) write_text_file(dir / name, text);
}

RunArtifacts load_artifacts(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  RunArtifacts a;
  a.config = dataset_config_from_json(read_json_file(dir / files::kConfig));
  a.config_digest = config_digest(a.config.variables);

  auto load = [&](const char* name, auto&& decode) {
    const fs::path p = dir / name;
    if (!fs::exists(p)) return;
    Json j = read_json_file(p);
    check_digest(j, a.config_digest, p.string());
    decode(j);
  };
  load(files::kFuzzyTable, [&](const Json& j) { a.fuzzy_table = fuzzy_table_from_json(j); });
  load(files::kSoftSets, [&](const Json& j) { a.soft_sets = soft_sets_from_json(j); });
  load(files::kReduced, [&](const Json& j) { a.reduced_sets = soft_sets_from_json(j); });
  load(files::kRules, [&](const Json& j) { a.rule_set = rule_set_from_json(j); });
  load(files::kRiskModel, [&](const Json& j) { a.risk_model = risk_model_from_json(j); });
  if (fs::exists(dir / files::kReport)) a.report = read_text_file(dir / files::kReport);
  return a;
}

}  // namespace softdx
