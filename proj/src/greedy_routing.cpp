#include "lgi/greedy_routing.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "lgi/errors.hpp"
#include "lgi/shortest_paths.hpp"

namespace lgi {
namespace {

NodeId next_hop(const Graph& g, const DissimilarityMatrix& d, NodeId at, NodeId dst) {
  auto nb = g.neighbors(at);
  NodeId best = nb.front();
  double best_d = d(best, dst);
  for (std::size_t i = 1; i < nb.size(); ++i) {
    const double x = d(nb[i], dst);
    if (x < best_d) {
      best_d = x;
      best = nb[i];
    }
  }
  return best;
}

void validate(const Graph& g, const DissimilarityMatrix& d, const GrOptions& opts) {
  if (d.size() != g.node_count()) throw std::invalid_argument("dissimilarity size does not match graph");
  if (!is_connected(g)) {
    auto comp = connected_components(g);
    for (NodeId u = 0; u < comp.size(); ++u)
      if (comp[u] != 0) throw DisconnectedGraphError(0, u);
  }
  if (opts.geometry) {
    if (opts.geometry->size() != g.edge_count()) {
      throw std::invalid_argument("geometric length count does not match edge count");
    }
    for (double x : *opts.geometry) {
      if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("geometric lengths must be positive");
    }
  }
}

/// Optimal path lengths from dst (graph is undirected, so also towards dst).
std::vector<double> optimal_lengths(const Graph& g, const GrOptions& opts, const WeightedAdjacency* geo,
                                    NodeId dst) {
  if (opts.geometry) return dijkstra_distances(*geo, dst);
  auto hops = bfs_distances(g, dst);
  return {hops.begin(), hops.end()};
}

double step_length(const Graph& g, const GrOptions& opts, NodeId a, NodeId b) {
  if (!opts.geometry) return 1.0;
  return (*opts.geometry)[*g.find_edge(a, b)];
}

struct DestinationTotals {
  double ratio_sum = 0.0;
  std::size_t delivered = 0;
};

/// Resolves every route towards dst on the next-hop forest.
DestinationTotals route_to(const Graph& g, const DissimilarityMatrix& d, const GrOptions& opts,
                           const WeightedAdjacency* geo, NodeId dst, DissimilarityMatrix* ratios) {
  const std::size_t n = g.node_count();
  const auto sp = optimal_lengths(g, opts, geo, dst);

  std::vector<NodeId> next(n);
  std::vector<double> hop_len(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    if (u == dst) continue;
    next[u] = next_hop(g, d, u, dst);
    hop_len[u] = step_length(g, opts, u, next[u]);
  }

  // state: 0 unknown, 1 on the current walk, 2 delivered, 3 loops.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<double> length(n, 0.0);
  state[dst] = 2;
  std::vector<NodeId> walk;
  for (NodeId s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    walk.clear();
    NodeId u = s;
    while (state[u] == 0) {
      state[u] = 1;
      walk.push_back(u);
      u = next[u];
    }
    const bool ok = state[u] == 2;
    double tail = ok ? length[u] : 0.0;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      if (ok) {
        tail += hop_len[*it];
        length[*it] = tail;
        state[*it] = 2;
      } else {
        state[*it] = 3;
      }
    }
  }

  DestinationTotals totals;
  for (NodeId s = 0; s < n; ++s) {
    if (s == dst || state[s] != 2) continue;
    const double r = sp[s] / length[s];
    totals.ratio_sum += r;
    ++totals.delivered;
    if (ratios) (*ratios)(s, dst) = r;
  }
  return totals;
}

GrOutcome finish(std::span<const DestinationTotals> per_dst, std::size_t n, std::optional<DissimilarityMatrix> ratios) {
  GrOutcome out;
  double sum = 0.0;
  std::size_t delivered = 0;
  for (const auto& t : per_dst) {
    sum += t.ratio_sum;
    delivered += t.delivered;
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  out.score = n < 2 ? 1.0 : sum / pairs;
  out.success_rate = n < 2 ? 1.0 : static_cast<double>(delivered) / pairs;
  out.ratios = std::move(ratios);
  return out;
}

}  // namespace

std::optional<std::vector<NodeId>> greedy_route(const Graph& g, const DissimilarityMatrix& d, NodeId src,
                                                NodeId dst) {
  std::vector<char> visited(g.node_count(), 0);
  std::vector<NodeId> path{src};
  visited[src] = 1;
  NodeId at = src;
  while (at != dst) {
    if (g.degree(at) == 0) return std::nullopt;
    at = next_hop(g, d, at, dst);
    if (visited[at]) return std::nullopt;
    visited[at] = 1;
    path.push_back(at);
  }
  return path;
}

GrOutcome gr_score(const Graph& g, const DissimilarityMatrix& d, const GrOptions& opts) {
  validate(g, d, opts);
  const std::size_t n = g.node_count();
  std::optional<WeightedAdjacency> geo;
  if (opts.geometry) geo = WeightedAdjacency::from_graph(g, *opts.geometry);
  std::optional<DissimilarityMatrix> ratios;
  if (opts.keep_ratios) ratios.emplace(n);

  std::vector<DestinationTotals> per_dst(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t t = 0; t < count; ++t) {
    // Distinct destinations write distinct columns of `ratios`.
    per_dst[static_cast<std::size_t>(t)] =
        route_to(g, d, opts, geo ? &*geo : nullptr, static_cast<NodeId>(t), ratios ? &*ratios : nullptr);
  }
  return finish(per_dst, n, std::move(ratios));
}

namespace serial {

GrOutcome gr_score(const Graph& g, const DissimilarityMatrix& d, const GrOptions& opts) {
  validate(g, d, opts);
  const std::size_t n = g.node_count();
  std::optional<WeightedAdjacency> geo;
  if (opts.geometry) geo = WeightedAdjacency::from_graph(g, *opts.geometry);
  std::optional<DissimilarityMatrix> ratios;
  if (opts.keep_ratios) ratios.emplace(n);

  std::vector<DestinationTotals> per_dst(n);
  for (NodeId t = 0; t < n; ++t) {
    const auto sp = optimal_lengths(g, opts, geo ? &*geo : nullptr, t);
    for (NodeId s = 0; s < n; ++s) {
      if (s == t) continue;
      auto route = greedy_route(g, d, s, t);
      if (!route) continue;
      double p = 0.0;
      for (std::size_t i = 1; i < route->size(); ++i) p += step_length(g, opts, (*route)[i - 1], (*route)[i]);
      const double r = sp[s] / p;
      per_dst[t].ratio_sum += r;
      ++per_dst[t].delivered;
      if (ratios) (*ratios)(s, t) = r;
    }
  }
  return finish(per_dst, n, std::move(ratios));
}

}  // namespace serial
}  // namespace lgi
