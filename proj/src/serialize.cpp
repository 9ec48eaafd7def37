#include "softdx/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "softdx/error.hpp"

namespace softdx {
namespace {

template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  } catch (const InvariantViolation& e) {
    throw Error(ErrorKind::Validation, what + ": " + e.what());
  }
}

void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
    throw Error(ErrorKind::Parse, std::string("expected a '") + kind + "' artifact");
}

Json variables_json(const VariableConfig& variables) {
  Json vars = Json::array();
  for (const auto& v : variables) {
    Json terms = Json::array();
    for (const auto& t : v.terms) {
      terms.push_back({{"name", t.name},
                       {"mf", {{"left", t.mf.left}, {"apex_lo", t.mf.apex_lo}, {"apex_hi", t.mf.apex_hi}, {"right", t.mf.right}}},
                       {"levels", t.levels}});
    }
    vars.push_back({{"name", v.name}, {"unit", v.unit}, {"terms", std::move(terms)}});
  }
  return vars;
}

Json universe_json(const Universe& u) { return Json(u.members()); }

UniversePtr universe_from(const Json& j) { return make_universe(j.at("universe").get<std::vector<std::string>>()); }

Json members_json(const Universe& u, const PatientSet& s) {
  Json out = Json::array();
  for (std::size_t p : s.indices()) out.push_back(u.id(p));
  return out;
}

PatientSet members_from(const Universe& u, const Json& j) {
  PatientSet s(u.size());
  for (const auto& id : j) {
    auto p = u.index_of(id.get<std::string>());
    if (!p) throw Error(ErrorKind::Validation, "member '" + id.get<std::string>() + "' is not in the universe");
    s.insert(*p);
  }
  return s;
}

Json conjuncts_json(const std::vector<Conjunct>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"variable", c.variable}, {"term", c.term}, {"alpha", c.alpha}});
  return out;
}

std::vector<Conjunct> conjuncts_from(const Json& j) {
  std::vector<Conjunct> out;
  for (const auto& c : j)
    out.push_back({c.at("variable").get<std::string>(), c.at("term").get<std::string>(), c.at("alpha").get<double>()});
  return out;
}

Rule rule_from(const Universe& u, const Json& j) {
  return {j.at("id").get<std::uint64_t>(), conjuncts_from(j.at("conjuncts")), members_from(u, j.at("matched"))};
}

}  // namespace

Json to_json(const DatasetConfig& config) {
  Json j;
  j["corpus_name"] = config.corpus_name;
  j["label_column"] = config.label_column ? Json(*config.label_column) : Json(nullptr);
  j["variables"] = variables_json(config.variables);
  return j;
}

DatasetConfig dataset_config_from_json(const Json& j) {
  DatasetConfig c = guarded("config", [&] {
    DatasetConfig out;
    out.corpus_name = j.value("corpus_name", std::string());
    if (j.contains("label_column") && !j.at("label_column").is_null())
      out.label_column = j.at("label_column").get<std::string>();
    for (const auto& v : j.at("variables")) {
      LinguisticVariable var{v.at("name").get<std::string>(), v.value("unit", std::string()), {}};
      for (const auto& t : v.at("terms")) {
        const auto& mf = t.at("mf");
        var.terms.push_back({t.at("name").get<std::string>(),
                             {mf.at("left").get<double>(), mf.at("apex_lo").get<double>(),
                              mf.at("apex_hi").get<double>(), mf.at("right").get<double>()},
                             t.at("levels").get<std::vector<double>>()});
      }
      out.variables.push_back(std::move(var));
    }
    return out;
  });
  c.validate();
  return c;
}

std::string config_digest(const VariableConfig& variables) {
  const std::string canonical = variables_json(variables).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const FuzzyTable& table, const std::string& digest) {
  Json j;
  j["kind"] = "fuzzy_table";
  j["config_digest"] = digest;
  j["universe"] = universe_json(*table.universe());
  Json cols = Json::array();
  for (const auto& c : table.columns()) cols.push_back({{"variable", c.variable}, {"term", c.term}});
  j["columns"] = std::move(cols);
  Json rows = Json::array();
  const std::size_t ncols = table.columns().size();
  for (std::size_t p = 0; p < table.universe()->size(); ++p) {
    Json values = Json::array();
    for (std::size_t c = 0; c < ncols; ++c) values.push_back(table.at(p, c));
    rows.push_back({{"id", table.universe()->id(p)}, {"values", std::move(values)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

FuzzyTable fuzzy_table_from_json(const Json& j) {
  expect_kind(j, "fuzzy_table");
  return guarded("fuzzy_table", [&] {
    auto universe = universe_from(j);
    std::vector<TermColumn> cols;
    for (const auto& c : j.at("columns")) cols.push_back({c.at("variable").get<std::string>(), c.at("term").get<std::string>()});
    const auto& rows = j.at("rows");
    if (rows.size() != universe->size()) throw Error(ErrorKind::Validation, "fuzzy_table: row count differs from universe");
    std::vector<double> values;
    for (std::size_t p = 0; p < rows.size(); ++p) {
      if (rows[p].at("id").get<std::string>() != universe->id(p))
        throw Error(ErrorKind::Validation, "fuzzy_table: rows out of universe order");
      const auto& vs = rows[p].at("values");
      if (vs.size() != cols.size()) throw Error(ErrorKind::Validation, "fuzzy_table: row width differs from columns");
      for (const auto& v : vs) values.push_back(v.get<double>());
    }
    return FuzzyTable(std::move(universe), std::move(cols), std::move(values));
  });
}

Json to_json(std::span<const SoftSet> sets, const std::string& stage, const std::string& digest) {
  Json j;
  j["kind"] = "soft_sets";
  j["stage"] = stage;
  j["config_digest"] = digest;
  j["universe"] = sets.empty() ? Json::array() : universe_json(*sets.front().universe());
  Json arr = Json::array();
  for (const auto& s : sets) {
    Json levels = Json::array();
    for (const auto& l : s.levels())
      levels.push_back({{"alpha", l.alpha}, {"members", members_json(*s.universe(), l.members)}});
    arr.push_back({{"variable", s.source().variable}, {"term", s.source().term}, {"levels", std::move(levels)}});
  }
  j["soft_sets"] = std::move(arr);
  return j;
}

std::vector<SoftSet> soft_sets_from_json(const Json& j) {
  expect_kind(j, "soft_sets");
  return guarded("soft_sets", [&] {
    auto universe = universe_from(j);
    std::vector<SoftSet> out;
    for (const auto& s : j.at("soft_sets")) {
      std::vector<SoftLevel> levels;
      for (const auto& l : s.at("levels"))
        levels.push_back({l.at("alpha").get<double>(), members_from(*universe, l.at("members"))});
      out.emplace_back(universe, TermColumn{s.at("variable").get<std::string>(), s.at("term").get<std::string>()},
                       std::move(levels));
    }
    return out;
  });
}

Json to_json(const RuleSet& rules, const std::string& digest) {
  Json j;
  j["kind"] = "rules";
  j["config_digest"] = digest;
  j["universe"] = universe_json(*rules.universe);
  j["candidate_count"] = rules.candidate_count;
  Json arr = Json::array();
  for (const auto& r : rules.rules)
    arr.push_back({{"id", r.id}, {"conjuncts", conjuncts_json(r.conjuncts)}, {"matched", members_json(*rules.universe, r.matched)}});
  j["rules"] = std::move(arr);
  return j;
}

RuleSet rule_set_from_json(const Json& j) {
  expect_kind(j, "rules");
  return guarded("rules", [&] {
    RuleSet out{universe_from(j), j.at("candidate_count").get<std::uint64_t>(), {}};
    for (const auto& r : j.at("rules")) out.rules.push_back(rule_from(*out.universe, r));
    return out;
  });
}

double round_one_decimal(double v) { return std::round(v * 10.0) / 10.0; }

Json to_json(const RiskModel& model) {
  Json j;
  j["kind"] = "risk_model";
  j["config_digest"] = model.config_digest;
  j["universe"] = universe_json(*model.universe);
  Json arr = Json::array();
  for (const auto& r : model.rules) {
    arr.push_back({{"id", r.rule.id},
                   {"conjuncts", conjuncts_json(r.rule.conjuncts)},
                   {"matched", members_json(*model.universe, r.rule.matched)},
                   {"support", r.support},
                   {"positives", r.positives},
                   {"risk", round_one_decimal(r.risk)}});
  }
  j["rules"] = std::move(arr);
  return j;
}

RiskModel risk_model_from_json(const Json& j) {
  expect_kind(j, "risk_model");
  return guarded("risk_model", [&] {
    RiskModel m{j.at("config_digest").get<std::string>(), universe_from(j), {}};
    for (const auto& r : j.at("rules")) {
      ScoredRule s{rule_from(*m.universe, r), r.at("support").get<std::size_t>(), r.at("positives").get<std::size_t>(), 0.0};
      if (s.support == 0) throw Error(ErrorKind::Validation, "risk_model: rule with zero support");
      s.risk = risk_percent(s.positives, s.support);
      if (round_one_decimal(s.risk) != r.at("risk").get<double>())
        throw Error(ErrorKind::Validation, "risk_model: rule " + std::to_string(s.rule.id) +
                                               " risk disagrees with positives/support");
      m.rules.push_back(std::move(s));
    }
    m.check_invariants();
    return m;
  });
}

void check_digest(const Json& artifact, const std::string& expected, const std::string& what) {
  const std::string found = artifact.value("config_digest", std::string());
  if (found != expected)
    throw Error(ErrorKind::Validation, what + " was produced with configuration " + found + ", expected " + expected);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

}  // namespace softdx
