#include "softdx/universe.hpp"

#include "softdx/error.hpp"

namespace softdx {

Universe::Universe(std::vector<std::string> members) : members_(std::move(members)) {
  index_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!index_.emplace(members_[i], i).second)
      throw Error(ErrorKind::Validation, "duplicate patient id '" + members_[i] + "'");
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UniversePtr make_universe(std::vector<std::string> members) {
  return std::make_shared<const Universe>(std::move(members));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace softdx
