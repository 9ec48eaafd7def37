#include <cmath>

#include "softdx/error.hpp"
#include "softdx/kernels.hpp"

namespace softdx::kernels {
namespace {

struct Prepared {
  UniversePtr universe;
  std::vector<TermColumn> columns;
  // raw[r * variables + v]
  std::vector<double> raw;
};

// Shared validation so both kernels fail identically, before any parallel work.
Prepared prepare(std::span<const PatientRecord> records, const VariableConfig& config) {
  if (records.empty()) throw Error(ErrorKind::Validation, "no patient records to fuzzify");
  validate_config(config);

  std::vector<std::string> ids;
  ids.reserve(records.size());
  for (const auto& r : records) ids.push_back(r.id);

  Prepared p{make_universe(std::move(ids)), columns_of(config), {}};
  p.raw.reserve(records.size() * config.size());
  for (const auto& r : records) {
    for (const auto& v : config) {
      auto it = r.values.find(v.name);
      if (it == r.values.end())
        throw Error(ErrorKind::ConfigMismatch, "record '" + r.id + "' has no value for variable '" + v.name + "'");
      if (!std::isfinite(it->second))
        throw Error(ErrorKind::InvalidInput, "record '" + r.id + "' has a non-finite value for '" + v.name + "'");
      p.raw.push_back(it->second);
    }
  }
  return p;
}

inline void fuzzify_row(const VariableConfig& config, const double* raw, double* out) {
  for (std::size_t v = 0; v < config.size(); ++v)
    for (const auto& t : config[v].terms) *out++ = mf_eval(t.mf, raw[v]);
}

}  // namespace

FuzzyTable fuzzify_serial(std::span<const PatientRecord> records, const VariableConfig& config) {
  Prepared p = prepare(records, config);
  const std::size_t n = records.size();
  const std::size_t ncols = p.columns.size();
  std::vector<double> values(n * ncols);
  for (std::size_t r = 0; r < n; ++r) fuzzify_row(config, p.raw.data() + r * config.size(), values.data() + r * ncols);
  return FuzzyTable(std::move(p.universe), std::move(p.columns), std::move(values));
}

FuzzyTable fuzzify_parallel(std::span<const PatientRecord> records, const VariableConfig& config) {
  Prepared p = prepare(records, config);
  const auto n = static_cast<std::ptrdiff_t>(records.size());
  const std::size_t ncols = p.columns.size();
  const std::size_t nvars = config.size();
  std::vector<double> values(records.size() * ncols);
  const double* raw = p.raw.data();
  double* out = values.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r)
    fuzzify_row(config, raw + static_cast<std::size_t>(r) * nvars, out + static_cast<std::size_t>(r) * ncols);
  return FuzzyTable(std::move(p.universe), std::move(p.columns), std::move(values));
}

}  // namespace softdx::kernels
