#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "softdx/dataset.hpp"
#include "softdx/fuzzify.hpp"
#include "softdx/rules.hpp"
#include "softdx/softset.hpp"

namespace softdx {

// Insertion-ordered keys keep emitted artifacts byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const DatasetConfig& config);
DatasetConfig dataset_config_from_json(const Json& j);

/// 64-bit FNV-1a of the canonical variable configuration, as 16 hex digits.
std::string config_digest(const VariableConfig& variables);

Json to_json(const FuzzyTable& table, const std::string& digest);
FuzzyTable fuzzy_table_from_json(const Json& j);

Json to_json(std::span<const SoftSet> sets, const std::string& stage, const std::string& digest);
std::vector<SoftSet> soft_sets_from_json(const Json& j);

Json to_json(const RuleSet& rules, const std::string& digest);
RuleSet rule_set_from_json(const Json& j);

/// Risks are written with one decimal; loading recomputes them from
/// positives/support and rejects a printed value that disagrees.
Json to_json(const RiskModel& model);
RiskModel risk_model_from_json(const Json& j);

double round_one_decimal(double v);

/// Digest embedded in an artifact; Error(Validation) when it differs from `expected`.
void check_digest(const Json& artifact, const std::string& expected, const std::string& what);

std::string dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace softdx
