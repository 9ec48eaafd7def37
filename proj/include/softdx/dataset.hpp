#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softdx/fuzzify.hpp"
#include "softdx/rules.hpp"

namespace softdx {

struct DatasetConfig {
  VariableConfig variables;
  std::optional<std::string> label_column;
  std::string corpus_name;

  // Variable names unique; label column distinct from them.
  void validate() const;

  friend bool operator==(const DatasetConfig&, const DatasetConfig&) = default;
};

DatasetConfig default_dataset_config();

// Comma-separated rows under a header `id,<variables...>[,label]`.
struct Dataset {
  std::vector<std::string> value_columns;  // header order, excluding id and label
  bool has_labels = false;
  std::vector<PatientRecord> records;
};

/// Parse errors carry `source:line`. Duplicate ids raise Error(Validation).
Dataset parse_dataset(std::istream& in, std::string_view source = "<input>", std::string_view label_column = "label");
Dataset load_dataset(const std::filesystem::path& path, std::string_view label_column = "label");
void write_dataset(std::ostream& out, const Dataset& data, std::string_view label_column = "label");

/// `id,label` file with 1/0 values.
LabelMap parse_labels(std::istream& in, std::string_view source = "<input>");
LabelMap load_labels(const std::filesystem::path& path);

/// Labels carried by the records themselves; unlabeled records are skipped.
LabelMap labels_of(std::span<const PatientRecord> records);

/// Parses `name=value` assignments into a single record.
PatientRecord record_from_assignments(std::string id, std::span<const std::string> assignments);

}  // namespace softdx
