#include <algorithm>
#include <unordered_set>

#include "softdx/error.hpp"
#include "softdx/kernels.hpp"

namespace softdx::kernels {
namespace {

using Word = PatientSet::Word;

class Deduper {
 public:
  Deduper(const RuleSpace& space, RuleSet& out) : space_(space), out_(out), digits_(space.variables.size()) {}

  void offer(std::uint64_t candidate, const PatientSet& matched) {
    if (matched.empty()) return;
    if (!seen_.insert(matched).second) return;
    space_.decode(candidate, digits_);
    out_.rules.push_back({candidate + 1, space_.conjuncts(digits_), matched});
  }

 private:
  const RuleSpace& space_;
  RuleSet& out_;
  std::vector<std::size_t> digits_;
  std::unordered_set<PatientSet, PatientSetHash> seen_;
};

RuleSet start(const RuleSpace& space) {
  SOFTDX_ENSURE(space.universe != nullptr, "rule space without universe");
  SOFTDX_ENSURE(!space.variables.empty(), "rule space without variables");
  return RuleSet{space.universe, space.candidate_count(), {}};
}

void walk(const RuleSpace& space, std::size_t var, std::vector<PatientSet>& prefix, std::uint64_t& candidate,
          Deduper& dedup) {
  const auto& choices = space.variables[var].choices;
  const bool last = var + 1 == space.variables.size();
  for (const auto& c : choices) {
    prefix[var] = var == 0 ? c.members : (prefix[var - 1] & c.members);
    if (last) {
      dedup.offer(candidate++, prefix[var]);
    } else if (prefix[var].empty()) {
      // Every completion is empty too; skip the subtree but keep ids aligned.
      std::uint64_t subtree = 1;
      for (std::size_t v = var + 1; v < space.variables.size(); ++v) subtree *= space.variables[v].choices.size();
      candidate += subtree;
    } else {
      walk(space, var + 1, prefix, candidate, dedup);
    }
  }
}

}  // namespace

RuleSet enumerate_serial(const RuleSpace& space) {
  RuleSet out = start(space);
  Deduper dedup(space, out);
  std::vector<PatientSet> prefix(space.variables.size());
  std::uint64_t candidate = 0;
  walk(space, 0, prefix, candidate, dedup);
  SOFTDX_ENSURE(candidate == out.candidate_count, "serial enumeration visited a wrong number of candidates");
  return out;
}

RuleSet enumerate_parallel(const RuleSpace& space, std::size_t block_size) {
  RuleSet out = start(space);
  block_size = std::max<std::size_t>(block_size, 1);

  const std::size_t nvars = space.variables.size();
  const std::size_t capacity = space.universe->size();
  const std::size_t nwords = PatientSet::words_for(capacity);

  // Contiguous word table: choice_words[offset[v] + c * nwords + w].
  std::vector<std::size_t> offset(nvars), radix(nvars);
  std::vector<Word> choice_words;
  for (std::size_t v = 0; v < nvars; ++v) {
    offset[v] = choice_words.size();
    radix[v] = space.variables[v].choices.size();
    for (const auto& c : space.variables[v].choices) {
      auto w = c.members.words();
      choice_words.insert(choice_words.end(), w.begin(), w.end());
    }
  }

  Deduper dedup(space, out);
  std::vector<Word> block(std::min<std::uint64_t>(block_size, out.candidate_count) * nwords);
  PatientSet matched(capacity);

  for (std::uint64_t base = 0; base < out.candidate_count; base += block_size) {
    const auto len = static_cast<std::ptrdiff_t>(std::min<std::uint64_t>(block_size, out.candidate_count - base));
    Word* dst = block.data();
    const Word* src = choice_words.data();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < len; ++i) {
      Word* cell = dst + static_cast<std::size_t>(i) * nwords;
      std::fill(cell, cell + nwords, ~Word{0});
      std::uint64_t rest = base + static_cast<std::uint64_t>(i);
      for (std::size_t v = nvars; v-- > 0;) {
        const std::size_t digit = rest % radix[v];
        rest /= radix[v];
        const Word* choice = src + offset[v] + digit * nwords;
        for (std::size_t w = 0; w < nwords; ++w) cell[w] &= choice[w];
      }
    }

    for (std::ptrdiff_t i = 0; i < len; ++i) {
      const Word* cell = dst + static_cast<std::size_t>(i) * nwords;
      std::copy(cell, cell + nwords, matched.words().begin());
      dedup.offer(base + static_cast<std::uint64_t>(i), matched);
    }
  }
  return out;
}

}  // namespace softdx::kernels
