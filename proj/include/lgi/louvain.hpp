#pragma once

#include <cstddef>
#include <vector>

#include "lgi/graph.hpp"
#include "lgi/partition.hpp"
#include "lgi/rng.hpp"

namespace lgi {

/// Partitions found by successive Louvain aggregation rounds, finest first.
struct LouvainHierarchy {
  std::vector<Partition> levels;
  std::vector<double> modularity;  ///< Q of each level on the input graph
};

/// Newman-Girvan modularity at resolution 1:
/// Q = sum_c [ e_c / E - (deg_c / 2E)^2 ].
/// Throws std::invalid_argument when p does not cover exactly g's nodes.
double modularity(const Graph& g, const Partition& p);

/// Louvain modularity optimisation.
///
/// Phase one moves single nodes to the neighbouring community with the
/// largest modularity gain (only if it beats staying; ties go to the lowest
/// community id), visiting nodes in a seeded random order each pass until a
/// pass moves nothing. Phase two collapses communities into weighted nodes
/// with self-loops. Rounds repeat until phase one moves nothing.
LouvainHierarchy louvain(const Graph& g, RngSeed seed);

struct BestLevel {
  Partition partition;
  double score = 0.0;
  std::size_t level = 0;
};

/// Level with the highest score_partition value against truth (ties: the
/// finer level).
BestLevel best_level(const LouvainHierarchy& h, const Partition& truth);

}  // namespace lgi
