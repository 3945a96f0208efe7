#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lgi {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected, simple, unweighted graph on dense node indices 0..n-1.
///
/// Storage is CSR: the neighbors of u are sorted ascending, and every
/// adjacency slot remembers the id of the edge it came from, so per-edge
/// attributes (weights, betweenness) can live in plain vectors indexed by
/// EdgeId. Edges are sorted lexicographically by (u, v).
///
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph. Self-loops and duplicate pairs are dropped.
  /// Throws std::invalid_argument when an endpoint is >= n.
  Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs,
        std::vector<std::string> names = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  /// Edge ids parallel to neighbors(u).
  std::span<const EdgeId> incident_edges(NodeId u) const noexcept {
    return {slot_edge_.data() + offsets_[u], slot_edge_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(NodeId u, NodeId v) const noexcept;
  /// Id of edge {u, v}, if present.
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const noexcept;

  /// Original identifiers, empty when the graph was built without names.
  std::span<const std::string> names() const noexcept { return names_; }
  std::string name(NodeId u) const;

  /// Subgraph induced by `keep` (any order, no duplicates), reindexed so that
  /// keep[i] becomes node i. Names follow their nodes.
  Graph induced_subgraph(std::span<const NodeId> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<EdgeId> slot_edge_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
};

/// Connected-component id of every node; components are numbered in order of
/// their lowest node index.
std::vector<std::uint32_t> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Common neighbours of u and v (merge of the two sorted neighbor lists).
std::size_t common_neighbor_count(const Graph& g, NodeId u, NodeId v);

}  // namespace lgi
