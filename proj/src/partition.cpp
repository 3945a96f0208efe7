#include "lgi/partition.hpp"

#include <numeric>

namespace lgi {

Partition Partition::singletons(std::size_t n) {
  std::vector<std::uint32_t> raw(n);
  std::iota(raw.begin(), raw.end(), 0U);
  return Partition(raw);
}

Partition Partition::single_community(std::size_t n) {
  return Partition(std::vector<std::uint32_t>(n, 0U));
}

std::vector<std::size_t> Partition::community_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (CommunityId c : labels_) ++sizes[c];
  return sizes;
}

Partition Partition::restrict_to(std::span<const std::uint32_t> nodes) const {
  std::vector<CommunityId> raw;
  raw.reserve(nodes.size());
  for (std::uint32_t u : nodes) raw.push_back(labels_.at(u));
  return Partition(raw);
}

}  // namespace lgi
