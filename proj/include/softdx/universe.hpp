#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace softdx {

// Ordered set of patient ids. The order is fixed at construction and drives
// every emitted ordering downstream.
class Universe {
 public:
  explicit Universe(std::vector<std::string> members);

  std::size_t size() const noexcept { return members_.size(); }
  const std::string& id(std::size_t index) const { return members_.at(index); }
  const std::vector<std::string>& members() const noexcept { return members_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.members_ == b.members_; }

 private:
  std::vector<std::string> members_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> members);

// Same object, or equal member lists.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

}  // namespace softdx
