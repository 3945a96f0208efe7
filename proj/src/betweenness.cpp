#include "lgi/betweenness.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace lgi {
namespace {

constexpr std::size_t kSourceBlocks = 64;

/// Scratch buffers for one Brandes sweep.
struct BrandesWorkspace {
  explicit BrandesWorkspace(std::size_t n) : dist(n), sigma(n), delta(n) { order.reserve(n); }

  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;
};

/// Adds the dependencies of source s onto every edge (ordered-pair count).
void accumulate_source(const Graph& g, NodeId s, BrandesWorkspace& ws, std::vector<double>& ebc) {
  std::fill(ws.dist.begin(), ws.dist.end(), kUnreachable);
  std::fill(ws.sigma.begin(), ws.sigma.end(), 0.0);
  std::fill(ws.delta.begin(), ws.delta.end(), 0.0);
  ws.order.clear();

  ws.dist[s] = 0;
  ws.sigma[s] = 1.0;
  ws.order.push_back(s);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    const NodeId u = ws.order[head];
    for (NodeId v : g.neighbors(u)) {
      if (ws.dist[v] == kUnreachable) {
        ws.dist[v] = ws.dist[u] + 1;
        ws.order.push_back(v);
      }
      if (ws.dist[v] == ws.dist[u] + 1) ws.sigma[v] += ws.sigma[u];
    }
  }
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    const NodeId w = *it;
    auto nb = g.neighbors(w);
    auto ids = g.incident_edges(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const NodeId v = nb[i];
      if (ws.dist[v] + 1 != ws.dist[w]) continue;
      const double c = ws.sigma[v] / ws.sigma[w] * (1.0 + ws.delta[w]);
      ebc[ids[i]] += c;
      ws.delta[v] += c;
    }
  }
}

}  // namespace

EdgeWeights edge_betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t blocks = std::min(kSourceBlocks, std::max<std::size_t>(n, 1));
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(g.edge_count(), 0.0));
  const auto block_count = static_cast<std::int64_t>(blocks);
#pragma omp parallel
  {
    BrandesWorkspace ws(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < block_count; ++b) {
      const std::size_t first = n * static_cast<std::size_t>(b) / blocks;
      const std::size_t last = n * static_cast<std::size_t>(b + 1) / blocks;
      for (std::size_t s = first; s < last; ++s) {
        accumulate_source(g, static_cast<NodeId>(s), ws, partial[static_cast<std::size_t>(b)]);
      }
    }
  }
  EdgeWeights ebc(g.edge_count(), 0.0);
  for (const auto& p : partial) {
    for (std::size_t e = 0; e < ebc.size(); ++e) ebc[e] += p[e];
  }
  for (double& x : ebc) x *= 0.5;
  return ebc;
}

namespace serial {

EdgeWeights edge_betweenness(const Graph& g) {
  EdgeWeights ebc(g.edge_count(), 0.0);
  BrandesWorkspace ws(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) accumulate_source(g, s, ws, ebc);
  for (double& x : ebc) x *= 0.5;
  return ebc;
}

}  // namespace serial
}  // namespace lgi
