#include "lgi/louvain.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "lgi/mutual_information.hpp"

namespace lgi {
namespace {

/// Weighted graph used between aggregation rounds. `self` holds the weight of
/// each node's self-loop (intra-community weight of the collapsed community).
struct WeightedGraph {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;  // no self entries
  std::vector<double> self;
  double total_weight = 0.0;  // sum of all edge weights, self-loops included once

  std::size_t size() const { return adj.size(); }

  /// Weighted degree; a self-loop counts twice.
  double strength(std::size_t u) const {
    double s = 2.0 * self[u];
    for (const auto& [v, w] : adj[u]) s += w;
    return s;
  }
};

WeightedGraph from_graph(const Graph& g) {
  WeightedGraph wg;
  wg.adj.resize(g.node_count());
  wg.self.assign(g.node_count(), 0.0);
  for (const Edge& e : g.edges()) {
    wg.adj[e.u].emplace_back(e.v, 1.0);
    wg.adj[e.v].emplace_back(e.u, 1.0);
  }
  wg.total_weight = static_cast<double>(g.edge_count());
  return wg;
}

/// Local-move phase. Returns true if any node changed community.
bool move_nodes(const WeightedGraph& wg, std::vector<std::uint32_t>& community, Engine& rng) {
  const std::size_t n = wg.size();
  const double m2 = 2.0 * wg.total_weight;
  std::vector<double> strength(n);
  std::vector<double> tot(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    strength[u] = wg.strength(u);
    tot[community[u]] += strength[u];
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;
  constexpr double kMinGain = 1e-12;

  for (bool moved = true; moved;) {
    moved = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t u : order) {
      const std::uint32_t own = community[u];
      touched.clear();
      for (const auto& [v, w] : wg.adj[u]) {
        const std::uint32_t c = community[v];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += w;
      }
      tot[own] -= strength[u];
      // Gain of joining c (up to a positive constant factor): k_{u,c} - tot_c k_u / 2m.
      const double own_gain = link[own] - tot[own] * strength[u] / m2;
      std::sort(touched.begin(), touched.end());
      // Ascending ids with a strict comparison: the lowest id wins ties.
      std::uint32_t best = own;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (std::uint32_t c : touched) {
        if (c == own) continue;
        const double gain = link[c] - tot[c] * strength[u] / m2;
        if (gain > best_gain) {
          best = c;
          best_gain = gain;
        }
      }
      if (best_gain <= own_gain + kMinGain) best = own;
      tot[best] += strength[u];
      if (best != own) {
        community[u] = best;
        moved = true;
        any_move = true;
      }
      for (std::uint32_t c : touched) link[c] = 0.0;
    }
  }
  return any_move;
}

/// Renumbers communities densely in order of first appearance.
std::size_t compact(std::vector<std::uint32_t>& community) {
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  for (auto& c : community) {
    auto [it, inserted] = remap.try_emplace(c, static_cast<std::uint32_t>(remap.size()));
    c = it->second;
  }
  return remap.size();
}

WeightedGraph aggregate(const WeightedGraph& wg, const std::vector<std::uint32_t>& community, std::size_t k) {
  WeightedGraph next;
  next.adj.resize(k);
  next.self.assign(k, 0.0);
  next.total_weight = wg.total_weight;
  std::vector<std::unordered_map<std::uint32_t, double>> links(k);
  for (std::size_t u = 0; u < wg.size(); ++u) {
    const auto cu = community[u];
    next.self[cu] += wg.self[u];
    for (const auto& [v, w] : wg.adj[u]) {
      const auto cv = community[v];
      if (cu == cv) {
        // Each internal edge is seen from both endpoints.
        next.self[cu] += 0.5 * w;
      } else {
        links[cu][cv] += w;
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    next.adj[c].assign(links[c].begin(), links[c].end());
    std::sort(next.adj[c].begin(), next.adj[c].end());
  }
  return next;
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw std::invalid_argument("partition does not cover the graph's nodes");
  const double e = static_cast<double>(g.edge_count());
  if (e == 0.0) return 0.0;
  std::vector<double> internal(p.community_count(), 0.0);
  std::vector<double> degree(p.community_count(), 0.0);
  for (const Edge& edge : g.edges()) {
    if (p[edge.u] == p[edge.v]) internal[p[edge.u]] += 1.0;
  }
  for (NodeId u = 0; u < g.node_count(); ++u) degree[p[u]] += static_cast<double>(g.degree(u));
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    const double frac = degree[c] / (2.0 * e);
    q += internal[c] / e - frac * frac;
  }
  return q;
}

LouvainHierarchy louvain(const Graph& g, RngSeed seed) {
  Engine rng = make_engine(seed);
  LouvainHierarchy h;
  WeightedGraph wg = from_graph(g);
  std::vector<std::uint32_t> node_to_comm(g.node_count());
  std::iota(node_to_comm.begin(), node_to_comm.end(), 0U);

  while (true) {
    std::vector<std::uint32_t> community(wg.size());
    std::iota(community.begin(), community.end(), 0U);
    if (!move_nodes(wg, community, rng)) break;
    const std::size_t k = compact(community);
    for (auto& c : node_to_comm) c = community[c];
    Partition level(node_to_comm);
    h.modularity.push_back(modularity(g, level));
    h.levels.push_back(std::move(level));
    if (k == wg.size()) break;
    wg = aggregate(wg, community, k);
  }
  if (h.levels.empty()) {
    // Nothing to merge: the singleton partition is the only level.
    Partition level = Partition::singletons(g.node_count());
    h.modularity.push_back(modularity(g, level));
    h.levels.push_back(std::move(level));
  }
  return h;
}

BestLevel best_level(const LouvainHierarchy& h, const Partition& truth) {
  if (h.levels.empty()) throw std::invalid_argument("empty hierarchy");
  BestLevel best;
  for (std::size_t l = 0; l < h.levels.size(); ++l) {
    const double score = score_partition(h.levels[l], truth).value;
    if (l == 0 || score > best.score) best = {h.levels[l], score, l};
  }
  return best;
}

}  // namespace lgi
