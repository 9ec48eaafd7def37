#include "softdx/dataset.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "softdx/error.hpp"

namespace softdx {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

std::optional<bool> parse_label(std::string_view s, std::string_view source, std::size_t line) {
  if (s.empty()) return std::nullopt;
  if (s == "1") return true;
  if (s == "0") return false;
  throw Error(ErrorKind::Parse, where(source, line) + ": label '" + std::string(s) + "' is not 1 or 0");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  return in;
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  SOFTDX_ENSURE(ec == std::errc(), "number formatting failed");
  return std::string(buf, ptr);
}

}  // namespace

void DatasetConfig::validate() const {
  validate_config(variables);
  if (label_column) {
    for (const auto& v : variables)
      if (v.name == *label_column)
        throw Error(ErrorKind::Config, "label column '" + *label_column + "' collides with a variable name");
  }
}

DatasetConfig default_dataset_config() { return {default_dengue_config(), std::string("label"), "dengue30"}; }

Dataset parse_dataset(std::istream& in, std::string_view source, std::string_view label_column) {
  Dataset data;
  std::string line;
  std::size_t lineno = 0;

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    for (auto f : split(line)) header.emplace_back(f);
    break;
  }
  if (header.empty()) throw Error(ErrorKind::Parse, std::string(source) + ": missing header row");

  std::optional<std::size_t> id_col, label_col;
  std::vector<std::size_t> value_cols;
  std::set<std::string_view> seen;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c].empty()) throw Error(ErrorKind::Parse, where(source, lineno) + ": empty column name");
    if (!seen.insert(header[c]).second)
      throw Error(ErrorKind::Parse, where(source, lineno) + ": duplicate column '" + header[c] + "'");
    if (header[c] == "id") {
      id_col = c;
    } else if (!label_column.empty() && header[c] == label_column) {
      label_col = c;
    } else {
      value_cols.push_back(c);
      data.value_columns.push_back(header[c]);
    }
  }
  if (!id_col) throw Error(ErrorKind::Parse, where(source, lineno) + ": header has no 'id' column");
  data.has_labels = label_col.has_value();

  std::set<std::string, std::less<>> ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (fields.size() != header.size())
      throw Error(ErrorKind::Parse, where(source, lineno) + ": expected " + std::to_string(header.size()) +
                                        " fields, found " + std::to_string(fields.size()));
    PatientRecord rec;
    rec.id = std::string(fields[*id_col]);
    if (rec.id.empty()) throw Error(ErrorKind::Parse, where(source, lineno) + ": empty id");
    for (std::size_t c : value_cols) {
      auto v = parse_number(fields[c]);
      if (!v)
        throw Error(ErrorKind::Parse, where(source, lineno) + ": column '" + header[c] + "': '" +
                                          std::string(fields[c]) + "' is not a number");
      rec.values.emplace(header[c], *v);
    }
    if (label_col) rec.label = parse_label(fields[*label_col], source, lineno);
    if (!ids.insert(rec.id).second)
      throw Error(ErrorKind::Validation, where(source, lineno) + ": duplicate id '" + rec.id + "'");
    data.records.push_back(std::move(rec));
  }
  return data;
}

Dataset load_dataset(const std::filesystem::path& path, std::string_view label_column) {
  auto in = open_input(path);
  return parse_dataset(in, path.string(), label_column);
}

void write_dataset(std::ostream& out, const Dataset& data, std::string_view label_column) {
  out << "id";
  for (const auto& c : data.value_columns) out << ',' << c;
  if (data.has_labels) out << ',' << label_column;
  out << '\n';
  for (const auto& r : data.records) {
    out << r.id;
    for (const auto& c : data.value_columns) out << ',' << format_number(r.values.at(c));
    if (data.has_labels) {
      out << ',';
      if (r.label) out << (*r.label ? '1' : '0');
    }
    out << '\n';
  }
}

LabelMap parse_labels(std::istream& in, std::string_view source) {
  Dataset d = parse_dataset(in, source, "label");
  if (!d.has_labels) throw Error(ErrorKind::Parse, std::string(source) + ": no 'label' column");
  LabelMap labels;
  for (const auto& r : d.records)
    if (r.label) labels.emplace(r.id, *r.label);
  return labels;
}

LabelMap load_labels(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_labels(in, path.string());
}

LabelMap labels_of(std::span<const PatientRecord> records) {
  LabelMap labels;
  for (const auto& r : records)
    if (r.label) labels.emplace(r.id, *r.label);
  return labels;
}

PatientRecord record_from_assignments(std::string id, std::span<const std::string> assignments) {
  PatientRecord rec{std::move(id), {}, std::nullopt};
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected name=value, got '" + a + "'");
    std::string name(trim(std::string_view(a).substr(0, eq)));
    auto v = parse_number(trim(std::string_view(a).substr(eq + 1)));
    if (name.empty() || !v) throw Error(ErrorKind::Parse, "expected name=value, got '" + a + "'");
    if (!rec.values.emplace(name, *v).second) throw Error(ErrorKind::Parse, "'" + name + "' assigned twice");
  }
  return rec;
}

}  // namespace softdx
