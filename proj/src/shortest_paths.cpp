#include "lgi/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "lgi/errors.hpp"

namespace lgi {
namespace {

void require_connected(const Graph& g) {
  auto comp = connected_components(g);
  for (NodeId u = 0; u < comp.size(); ++u) {
    if (comp[u] != 0) throw DisconnectedGraphError(0, u);
  }
}

void require_connected(const WeightedAdjacency& adj) {
  auto dist = dijkstra_distances(adj, 0);
  for (NodeId u = 0; u < dist.size(); ++u) {
    if (!std::isfinite(dist[u])) throw DisconnectedGraphError(0, u);
  }
}

void check_weights(const Graph& g, std::span<const double> w) {
  if (w.size() != g.edge_count()) throw std::invalid_argument("edge weight count does not match edge count");
  for (double x : w) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("edge weights must be finite and positive");
  }
}

void fill_hop_row(const Graph& g, NodeId s, std::span<double> row) {
  auto dist = bfs_distances(g, s);
  for (std::size_t j = 0; j < dist.size(); ++j) row[j] = static_cast<double>(dist[j]);
}

void fill_weighted_row(const WeightedAdjacency& adj, NodeId s, std::span<double> row) {
  auto dist = dijkstra_distances(adj, s);
  std::copy(dist.begin(), dist.end(), row.begin());
}

void symmetrise(DissimilarityMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    d(i, i) = 0.0;
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double m = std::min(d(i, j), d(j, i));
      d(i, j) = m;
      d(j, i) = m;
    }
  }
}

template <typename RowFn>
DissimilarityMatrix all_sources_parallel(std::size_t n, RowFn&& fill_row) {
  DissimilarityMatrix d(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t s = 0; s < count; ++s) {
    fill_row(static_cast<NodeId>(s), d.row(static_cast<std::size_t>(s)));
  }
  return d;
}

template <typename RowFn>
DissimilarityMatrix all_sources_serial(std::size_t n, RowFn&& fill_row) {
  DissimilarityMatrix d(n);
  for (NodeId s = 0; s < n; ++s) fill_row(s, d.row(s));
  return d;
}

}  // namespace

WeightedAdjacency WeightedAdjacency::from_graph(const Graph& g, std::span<const double> edge_weights) {
  WeightedAdjacency adj;
  const std::size_t n = g.node_count();
  adj.offsets.resize(n + 1, 0);
  adj.targets.reserve(2 * g.edge_count());
  adj.weights.reserve(2 * g.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto ids = g.incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj.targets.push_back(nb[i]);
      adj.weights.push_back(edge_weights[ids[i]]);
    }
    adj.offsets[u + 1] = adj.targets.size();
  }
  return adj;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<double> dijkstra_distances(const WeightedAdjacency& adj, NodeId source) {
  const std::size_t n = adj.node_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    for (std::size_t s = adj.offsets[u]; s < adj.offsets[u + 1]; ++s) {
      const NodeId v = adj.targets[s];
      const double alt = du + adj.weights[s];
      if (alt < dist[v]) {
        dist[v] = alt;
        heap.emplace(alt, v);
      }
    }
  }
  return dist;
}

DissimilarityMatrix apsp(const Graph& g) {
  require_connected(g);
  return all_sources_parallel(g.node_count(), [&](NodeId s, std::span<double> row) { fill_hop_row(g, s, row); });
}

DissimilarityMatrix apsp(const Graph& g, std::span<const double> edge_weights) {
  check_weights(g, edge_weights);
  return apsp(WeightedAdjacency::from_graph(g, edge_weights));
}

DissimilarityMatrix apsp(const WeightedAdjacency& adj) {
  require_connected(adj);
  auto d = all_sources_parallel(adj.node_count(),
                                [&](NodeId s, std::span<double> row) { fill_weighted_row(adj, s, row); });
  symmetrise(d);
  return d;
}

namespace serial {

DissimilarityMatrix apsp(const Graph& g) {
  require_connected(g);
  return all_sources_serial(g.node_count(), [&](NodeId s, std::span<double> row) { fill_hop_row(g, s, row); });
}

DissimilarityMatrix apsp(const Graph& g, std::span<const double> edge_weights) {
  check_weights(g, edge_weights);
  return serial::apsp(WeightedAdjacency::from_graph(g, edge_weights));
}

DissimilarityMatrix apsp(const WeightedAdjacency& adj) {
  require_connected(adj);
  auto d = all_sources_serial(adj.node_count(),
                              [&](NodeId s, std::span<double> row) { fill_weighted_row(adj, s, row); });
  symmetrise(d);
  return d;
}

}  // namespace serial
}  // namespace lgi
