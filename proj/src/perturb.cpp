#include "lgi/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace lgi {
namespace {

std::vector<std::pair<NodeId, NodeId>> edge_pairs(const Graph& g) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return pairs;
}

std::vector<std::string> copy_names(const Graph& g) { return {g.names().begin(), g.names().end()}; }

}  // namespace

std::size_t perturbation_count(double fraction, std::size_t edges) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(edges) + 0.5));
}

Graph perturb_remove(const Graph& g, double fraction, RngSeed seed) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("perturb_remove: fraction must lie in [0, 1)");
  }
  const std::size_t e = g.edge_count();
  const std::size_t k = perturbation_count(fraction, e);
  if (k >= e && e > 0) throw std::invalid_argument("perturb_remove: would remove every edge");

  // Partial Fisher-Yates: the first k slots hold the removed edges.
  std::vector<EdgeId> order(e);
  std::iota(order.begin(), order.end(), 0U);
  Engine rng = make_engine(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, e - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  std::vector<char> removed(e, 0);
  for (std::size_t i = 0; i < k; ++i) removed[order[i]] = 1;

  std::vector<std::pair<NodeId, NodeId>> kept;
  kept.reserve(e - k);
  for (EdgeId id = 0; id < e; ++id) {
    if (!removed[id]) kept.emplace_back(g.edge(id).u, g.edge(id).v);
  }
  return Graph(g.node_count(), kept, copy_names(g));
}

Graph perturb_add(const Graph& g, double fraction, RngSeed seed) {
  if (!(fraction >= 0.0) || !std::isfinite(fraction)) {
    throw std::invalid_argument("perturb_add: fraction must be >= 0");
  }
  const std::size_t n = g.node_count();
  const std::size_t e = g.edge_count();
  const std::size_t k = perturbation_count(fraction, e);
  const std::size_t all_pairs = n * (n - 1) / 2;
  if (k > all_pairs - e) {
    throw std::invalid_argument("perturb_add: only " + std::to_string(all_pairs - e) +
                                " non-adjacent pairs available, " + std::to_string(k) + " requested");
  }
  auto pairs = edge_pairs(g);
  Engine rng = make_engine(seed);
  if (k == 0) return Graph(n, pairs, copy_names(g));

  const auto key = [n](NodeId u, NodeId v) { return static_cast<std::uint64_t>(u) * n + v; };
  if (2 * k < all_pairs - e) {
    // Sparse regime: rejection sampling of uniform pairs.
    std::unordered_set<std::uint64_t> chosen;
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    while (chosen.size() < k) {
      NodeId u = pick(rng);
      NodeId v = pick(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (g.has_edge(u, v)) continue;
      if (chosen.insert(key(u, v)).second) pairs.emplace_back(u, v);
    }
  } else {
    // Dense regime: enumerate non-edges and take a uniform k-subset.
    std::vector<std::pair<NodeId, NodeId>> candidates;
    candidates.reserve(all_pairs - e);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) candidates.emplace_back(u, v);
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
      pairs.push_back(candidates[i]);
    }
  }
  return Graph(n, pairs, copy_names(g));
}

}  // namespace lgi
