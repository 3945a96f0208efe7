#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lgi/dissimilarity_matrix.hpp"
#include "lgi/graph.hpp"

namespace lgi {

/// Per-edge positive weights, indexed by EdgeId.
using EdgeWeights = std::vector<double>;

/// Weighted undirected adjacency in CSR form. Used for support graphs whose
/// link set differs from the input topology (CN and Jaccard kernels).
struct WeightedAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;
  std::vector<double> weights;

  std::size_t node_count() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }

  static WeightedAdjacency from_graph(const Graph& g, std::span<const double> edge_weights);
};

inline constexpr std::uint32_t kUnreachable = static_cast<std::uint32_t>(-1);

/// Hop distances from `source`; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// Weighted distances from `source` (binary-heap Dijkstra); +inf when unreachable.
std::vector<double> dijkstra_distances(const WeightedAdjacency& adj, NodeId source);

/// All-pairs hop distances. Sources are processed in parallel.
/// Throws DisconnectedGraphError when g is not connected.
DissimilarityMatrix apsp(const Graph& g);

/// All-pairs weighted shortest-path lengths over g's edges. Direct edge
/// weights are replaced by shorter multi-hop paths where those exist. The
/// result is symmetrised with min(d_ij, d_ji) so rounding differences between
/// the two sweep directions cannot break symmetry.
DissimilarityMatrix apsp(const Graph& g, std::span<const double> edge_weights);

DissimilarityMatrix apsp(const WeightedAdjacency& adj);

namespace serial {

DissimilarityMatrix apsp(const Graph& g);
DissimilarityMatrix apsp(const Graph& g, std::span<const double> edge_weights);
DissimilarityMatrix apsp(const WeightedAdjacency& adj);

}  // namespace serial
}  // namespace lgi
