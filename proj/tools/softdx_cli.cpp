// softdx: fuzzify tabular records, cut soft sets, enumerate and score rules.
//
//   softdx run --data corpus/dengue30.csv --labels corpus/dengue30_labels.csv --out out/
//   softdx diagnose --out out/ --set age=6 --set tlc=3600 --set sgot=46 --set platelets=50000 --set bp=125
//
// Exit codes: 0 success, 1 validation error, 2 internal invariant violation.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "softdx/error.hpp"
#include "softdx/pipeline.hpp"
#include "softdx/serialize.hpp"

namespace fs = std::filesystem;
using namespace softdx;

namespace {

struct Flags {
  std::string data;
  std::string config;
  std::string labels;
  std::string out = "softdx-out";
  std::string reference;
  double threshold = 50.0;
  bool merge_duplicate_levels = false;
  std::vector<std::string> assignments;
  std::string query_id = "query";
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--data", f.data, "dataset CSV (id,<variables...>[,label])");
  cmd->add_option("--config", f.config, "variable configuration JSON (default: built-in dengue config)");
  cmd->add_option("--labels", f.labels, "label CSV (id,label with 1/0)");
  cmd->add_option("--out", f.out, "artifact directory")->capture_default_str();
  cmd->add_option("--threshold", f.threshold, "positive threshold in percent")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 100.0));
  cmd->add_flag("--merge-duplicate-levels", f.merge_duplicate_levels, "collapse alpha levels with identical sets");
  cmd->add_option("--reference", f.reference, "published memberships CSV (id,variable,term,printed)");
}

DatasetConfig config_from_flags(const Flags& f) {
  if (f.config.empty()) return default_dataset_config();
  return dataset_config_from_json(read_json_file(f.config));
}

std::string label_column(const DatasetConfig& c) { return c.label_column.value_or(""); }

RunOptions options_from(const Flags& f) {
  RunOptions o;
  o.threshold = f.threshold;
  o.merge_duplicate_levels = f.merge_duplicate_levels;
  if (!f.reference.empty()) o.reference = load_printed_memberships(f.reference);
  return o;
}

std::optional<LabelMap> labels_from(const Flags& f, const Dataset* data) {
  if (!f.labels.empty()) return load_labels(f.labels);
  if (data != nullptr && data->has_labels) return labels_of(data->records);
  return std::nullopt;
}

RunArtifacts load_checked(const Flags& f) {
  RunArtifacts a = load_artifacts(f.out);
  if (!f.config.empty()) {
    const auto given = config_from_flags(f);
    if (config_digest(given.variables) != a.config_digest)
      throw Error(ErrorKind::Validation, "--config differs from the configuration stored in " + f.out);
  }
  return a;
}

void write_one(const Flags& f, const RunArtifacts& a, const char* name) {
  for (const auto& [file, text] : render_artifacts(a))
    if (file == name) {
      write_text_file(fs::path(f.out) / file, text);
      std::cout << "wrote " << (fs::path(f.out) / file).string() << "\n";
      return;
    }
  throw InvariantViolation(std::string("artifact ") + name + " was not produced");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Validation, what);
}

int cmd_fuzzify(const Flags& f) {
  require(!f.data.empty(), "fuzzify needs --data");
  RunArtifacts a;
  a.config = config_from_flags(f);
  a.config_digest = config_digest(a.config.variables);
  const Dataset data = load_dataset(f.data, label_column(a.config));
  a.fuzzy_table = stage::fuzzify(data.records, a.config);
  write_one(f, a, files::kConfig);
  write_one(f, a, files::kFuzzyTable);
  return 0;
}

int cmd_softsets(const Flags& f) {
  RunArtifacts a = load_checked(f);
  require(a.fuzzy_table.has_value(), "softsets needs " + std::string(files::kFuzzyTable) + " in " + f.out);
  a.soft_sets = stage::softsets(*a.fuzzy_table, a.config);
  write_one(f, a, files::kSoftSets);
  return 0;
}

int cmd_reduce(const Flags& f) {
  RunArtifacts a = load_checked(f);
  require(!a.soft_sets.empty(), "reduce needs " + std::string(files::kSoftSets) + " in " + f.out);
  a.reduced_sets = stage::reduce(a.soft_sets, f.merge_duplicate_levels);
  write_one(f, a, files::kReduced);
  return 0;
}

int cmd_rules(const Flags& f) {
  RunArtifacts a = load_checked(f);
  require(!a.reduced_sets.empty(), "rules needs " + std::string(files::kReduced) + " in " + f.out);
  a.rule_set = stage::rules(a.config, a.reduced_sets);
  write_one(f, a, files::kRules);
  std::cout << a.rule_set->rules.size() << " rules from " << a.rule_set->candidate_count << " candidates\n";
  return 0;
}

int cmd_score(const Flags& f) {
  RunArtifacts a = load_checked(f);
  require(a.rule_set.has_value(), "score needs " + std::string(files::kRules) + " in " + f.out);
  std::optional<Dataset> data;
  if (!f.data.empty()) data = load_dataset(f.data, label_column(a.config));
  auto labels = labels_from(f, data ? &*data : nullptr);
  require(labels.has_value(), "score needs --labels or a labeled --data file");
  a.risk_model = stage::score(*a.rule_set, *labels, a.config_digest);
  write_one(f, a, files::kRiskModel);
  return 0;
}

int cmd_report(const Flags& f) {
  RunArtifacts a = load_checked(f);
  a.report = emit_report(a, options_from(f));
  write_text_file(fs::path(f.out) / files::kReport, a.report);
  std::cout << a.report;
  return 0;
}

int cmd_run(const Flags& f) {
  require(!f.data.empty(), "run needs --data");
  const DatasetConfig config = config_from_flags(f);
  const Dataset data = load_dataset(f.data, label_column(config));
  const auto labels = labels_from(f, &data);
  const RunArtifacts a = run_pipeline(data.records, config, labels, options_from(f));
  persist_artifacts(a, f.out);
  if (!labels) std::cout << "notice: no labels supplied; scoring stage skipped\n";
  std::cout << "rules: " << a.rule_set->rules.size() << " of " << a.rule_set->candidate_count << " candidates\n";
  std::cout << "artifacts written to " << f.out << "\n";
  return 0;
}

int cmd_diagnose(const Flags& f) {
  RunArtifacts a = load_checked(f);
  require(a.risk_model.has_value(), "diagnose needs " + std::string(files::kRiskModel) + " in " + f.out);
  require(a.risk_model->config_digest == a.config_digest, "risk model digest differs from the configuration");
  require(f.data.empty() != f.assignments.empty(), "diagnose needs exactly one of --data or --set");

  std::vector<PatientRecord> records;
  if (!f.data.empty())
    records = load_dataset(f.data, label_column(a.config)).records;
  else
    records.push_back(record_from_assignments(f.query_id, f.assignments));

  for (const auto& r : records) {
    const Diagnosis d = diagnose(*a.risk_model, r, a.config.variables);
    Json j;
    j["id"] = d.record_id;
    j["risk"] = d.risk ? Json(round_one_decimal(*d.risk)) : Json(nullptr);
    j["status"] = d.risk ? "matched" : "no-match";
    j["matched_rules"] = d.matched_rules;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soft-set decision support: fuzzify, cut, reduce, enumerate and score rules"};
  app.require_subcommand(1);
  Flags flags;

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Flags&);
  };
  const Entry entries[] = {
      {"fuzzify", "fuzzify a dataset into fuzzy_table.json", cmd_fuzzify},
      {"softsets", "alpha-cut every term into softsets.json", cmd_softsets},
      {"reduce", "drop empty and full levels into reduced.json", cmd_reduce},
      {"rules", "enumerate conjunctive rules into rules.json", cmd_rules},
      {"score", "score rules against labels into risk_model.json", cmd_score},
      {"diagnose", "diagnose records against risk_model.json", cmd_diagnose},
      {"report", "write report.txt from persisted artifacts", cmd_report},
      {"run", "run every stage and persist all artifacts", cmd_run},
  };
  int (*selected)(const Flags&) = nullptr;
  for (const auto& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_common(cmd, flags);
    if (std::string(e.name) == "diagnose") {
      cmd->add_option("--set", flags.assignments, "inline value, e.g. --set age=6");
      cmd->add_option("--id", flags.query_id, "id for the inline record")->capture_default_str();
    }
    cmd->callback([&selected, fn = e.fn] { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return selected(flags);
  } catch (const Error& e) {
    std::cerr << "softdx: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "softdx: internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "softdx: internal error: " << e.what() << "\n";
    return 2;
  }
}
