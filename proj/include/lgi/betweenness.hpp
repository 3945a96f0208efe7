#pragma once

#include "lgi/graph.hpp"
#include "lgi/shortest_paths.hpp"

namespace lgi {

/// Edge betweenness centrality by Brandes accumulation on hop distances.
///
/// EBC(e) = sum over unordered pairs {s, t}, s != t, of sigma(s,t | e) / sigma(s,t).
/// Sources are swept in parallel; partial sums are kept per fixed block of
/// sources and reduced in block order, so the result does not depend on the
/// number of worker threads.
EdgeWeights edge_betweenness(const Graph& g);

namespace serial {

/// Single accumulator, sources in ascending order.
EdgeWeights edge_betweenness(const Graph& g);

}  // namespace serial
}  // namespace lgi
