#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace lgi {

using CommunityId = std::uint32_t;

/// Hard assignment of nodes to communities.
///
/// Community ids are always dense 0..k-1, renumbered in order of first
/// appearance, so two partitions that group nodes identically compare equal
/// regardless of the raw ids they were built from.
class Partition {
 public:
  Partition() = default;

  /// Builds from arbitrary integer labels (one per node).
  template <typename Label>
  explicit Partition(std::span<const Label> raw) {
    assign(raw);
  }
  template <typename Label>
  explicit Partition(const std::vector<Label>& raw) : Partition(std::span<const Label>(raw)) {}

  /// Every node in its own community.
  static Partition singletons(std::size_t n);
  /// All nodes in community 0.
  static Partition single_community(std::size_t n);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t community_count() const noexcept { return k_; }
  CommunityId operator[](std::size_t node) const { return labels_[node]; }
  std::span<const CommunityId> labels() const noexcept { return labels_; }

  /// Node count per community, indexed by community id.
  std::vector<std::size_t> community_sizes() const;

  /// Labels of the nodes listed in `nodes` (in that order), renumbered.
  Partition restrict_to(std::span<const std::uint32_t> nodes) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  template <typename Label>
  void assign(std::span<const Label> raw);

  std::vector<CommunityId> labels_;
  std::size_t k_ = 0;
};

template <typename Label>
void Partition::assign(std::span<const Label> raw) {
  labels_.resize(raw.size());
  std::unordered_map<Label, CommunityId> mapped;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = mapped.try_emplace(raw[i], static_cast<CommunityId>(mapped.size()));
    labels_[i] = it->second;
  }
  k_ = mapped.size();
}

}  // namespace lgi
