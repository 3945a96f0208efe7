#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lgi/dissimilarity_matrix.hpp"
#include "lgi/graph.hpp"

namespace lgi {

/// Greedy forwarding from src to dst: every hop goes to the neighbour with
/// the lowest d[neighbour][dst] (ties: lowest index). Returns the visited
/// nodes, src first and dst last, or nullopt once a node would be visited a
/// second time (the route is deterministic, so a revisit is a loop).
std::optional<std::vector<NodeId>> greedy_route(const Graph& g, const DissimilarityMatrix& d, NodeId src,
                                                NodeId dst);

struct GrOutcome {
  double score = 0.0;         ///< mean of sp/p over ordered pairs, 0 for failures
  double success_rate = 0.0;  ///< fraction of ordered pairs delivered
  /// ratio(src, dst) when requested; diagonal is 0.
  std::optional<DissimilarityMatrix> ratios;
};

struct GrOptions {
  /// Per-edge geometric lengths (aligned with g.edges()). When present, both
  /// the optimal and the greedy path lengths are sums of these lengths;
  /// otherwise both are hop counts.
  std::optional<std::vector<double>> geometry;
  bool keep_ratios = false;
};

/// Greedy-routing score of dissimilarity `d` on connected graph g.
///
/// For a fixed destination the greedy next hop of every node is fixed, so all
/// routes towards it are resolved at once on that next-hop forest; destinations
/// run in parallel and are reduced in index order.
GrOutcome gr_score(const Graph& g, const DissimilarityMatrix& d, const GrOptions& opts = {});

namespace serial {

/// Routes every ordered pair independently with greedy_route.
GrOutcome gr_score(const Graph& g, const DissimilarityMatrix& d, const GrOptions& opts = {});

}  // namespace serial
}  // namespace lgi
