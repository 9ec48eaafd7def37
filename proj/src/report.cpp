#include <iomanip>
#include <sstream>

#include "softdx/pipeline.hpp"
#include "softdx/serialize.hpp"

namespace softdx {
namespace {

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

std::string alpha_text(double a) {
  std::ostringstream ss;
  ss << a;  // shortest form of the configured level, e.g. 0.25
  return ss.str();
}

std::string set_text(const Universe& u, const PatientSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : s.indices()) {
    if (!first) out += ',';
    out += u.id(p);
    first = false;
  }
  return out + "}";
}

std::string rule_text(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.conjuncts.size(); ++i) {
    if (i) out += " & ";
    const auto& c = r.conjuncts[i];
    out += c.variable + "=" + c.term + "@" + alpha_text(c.alpha);
  }
  return out;
}

}  // namespace

std::string emit_report(const RunArtifacts& a, const RunOptions& options) {
  std::ostringstream out;
  out << "soft-set risk report\n";
  out << "corpus: " << (a.config.corpus_name.empty() ? "(unnamed)" : a.config.corpus_name) << "\n";
  out << "config digest: " << a.config_digest << "\n";
  const UniversePtr universe = a.fuzzy_table ? a.fuzzy_table->universe() : nullptr;
  out << "patients: " << (universe ? universe->size() : 0) << "\n";
  out << "threshold: " << fixed(options.threshold, 1) << "%\n";

  out << "\n== rules ==\n";
  if (!a.rule_set) {
    out << "rule enumeration not run\n";
  } else {
    out << "candidates: " << a.rule_set->candidate_count << "\n";
    out << "surviving: " << a.rule_set->rules.size() << "\n";
    if (a.rule_set->rules.empty()) out << "no rules survived pruning\n";
    const Universe& u = *a.rule_set->universe;
    if (a.risk_model) {
      for (const auto& r : a.risk_model->rules)
        out << "rule " << r.rule.id << ": " << rule_text(r.rule) << " | matched " << set_text(u, r.rule.matched)
            << " support=" << r.support << " risk=" << fixed(r.risk, 1) << " positives=" << r.positives << "\n";
    } else {
      for (const auto& r : a.rule_set->rules)
        out << "rule " << r.id << ": " << rule_text(r) << " | matched " << set_text(u, r.matched)
            << " support=" << r.matched.count() << "\n";
    }
  }

  out << "\n== patients ==\n";
  if (!a.risk_model) {
    out << "scoring skipped: no labels supplied\n";
  } else {
    const auto best = best_risks(*a.risk_model);
    const auto cls = classify_corpus(*a.risk_model, options.threshold);
    std::size_t positives = 0;
    for (std::size_t p = 0; p < best.size(); ++p) {
      out << a.risk_model->universe->id(p) << ": ";
      if (best[p])
        out << "best_risk=" << fixed(*best[p], 1) << (cls[p].second ? " positive" : " negative") << "\n";
      else
        out << "no-match negative\n";
      positives += cls[p].second ? 1 : 0;
    }
    out << "\n== aggregate ==\n";
    out << "positive at threshold " << fixed(options.threshold, 1) << ": " << positives << " of " << best.size() << "\n";
  }

  out << "\n== out-of-support values ==\n";
  if (a.fuzzy_table) {
    const auto& t = *a.fuzzy_table;
    std::size_t flagged = 0;
    for (std::size_t p = 0; p < t.universe()->size(); ++p) {
      for (const auto& var : a.config.variables) {
        bool any = false;
        for (const auto& term : var.terms) {
          auto c = t.column_index(var.name, term.name);
          if (c && t.at(p, *c) > 0.0) any = true;
        }
        if (!any && !var.terms.empty()) {
          out << t.universe()->id(p) << ": " << var.name << " has zero membership in every term\n";
          ++flagged;
        }
      }
    }
    if (flagged == 0) out << "none\n";
  } else {
    out << "fuzzification not run\n";
  }

  out << "\n== reference membership discrepancies ==\n";
  if (!options.reference) {
    out << "no reference memberships supplied\n";
  } else if (!a.fuzzy_table) {
    out << "fuzzification not run\n";
  } else {
    const auto list = compare_printed(*a.fuzzy_table, *options.reference);
    out << list.size() << " of " << options.reference->size() << " printed entries differ by more than "
        << fixed(kPrintedTolerance, 2) << "\n";
    for (const auto& d : list)
      out << d.entry.id << " " << d.entry.variable << "/" << d.entry.term << " printed=" << d.entry.printed
          << " computed=" << fixed(d.computed, 4) << "\n";
  }
  return out.str();
}

}  // namespace softdx
