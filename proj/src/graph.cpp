#include "lgi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lgi {

Graph::Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs,
             std::vector<std::string> names)
    : names_(std::move(names)) {
  if (!names_.empty() && names_.size() != n) {
    throw std::invalid_argument("name map size does not match node count");
  }
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) continue;
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());

  targets_.resize(2 * edges_.size());
  slot_edge_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every
  // neighbor list sorted: for node x, lower neighbors arrive (as the v side)
  // before higher ones (as the u side).
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    targets_[cursor[e.u]] = e.v;
    slot_edge_[cursor[e.u]++] = id;
    targets_[cursor[e.v]] = e.u;
    slot_edge_[cursor[e.v]++] = id;
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept { return find_edge(u, v).has_value(); }

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::string Graph::name(NodeId u) const {
  return names_.empty() ? std::to_string(u) : names_[u];
}

Graph Graph::induced_subgraph(std::span<const NodeId> keep) const {
  constexpr NodeId kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(node_count(), kDropped);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= node_count()) throw std::invalid_argument("induced_subgraph: node out of range");
    remap[keep[i]] = static_cast<NodeId>(i);
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const Edge& e : edges_) {
    if (remap[e.u] != kDropped && remap[e.v] != kDropped) pairs.emplace_back(remap[e.u], remap[e.v]);
  }
  std::vector<std::string> names;
  if (!names_.empty()) {
    names.reserve(keep.size());
    for (NodeId u : keep) names.push_back(names_[u]);
  }
  return Graph(keep.size(), pairs, std::move(names));
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> comp(n, kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == kUnset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

std::size_t common_neighbor_count(const Graph& g, NodeId u, NodeId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace lgi
