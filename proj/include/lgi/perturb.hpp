#pragma once

#include <cstddef>

#include "lgi/graph.hpp"
#include "lgi/rng.hpp"

namespace lgi {

/// round(fraction * edges), half-up.
std::size_t perturbation_count(double fraction, std::size_t edges);

/// Removes round(fraction * e) edges chosen uniformly without replacement.
/// fraction must lie in [0, 1); the result may be disconnected.
Graph perturb_remove(const Graph& g, double fraction, RngSeed seed);

/// Adds round(fraction * e) edges chosen uniformly without replacement among
/// the non-adjacent node pairs. Throws std::invalid_argument when there are
/// not enough non-edges or fraction < 0.
Graph perturb_add(const Graph& g, double fraction, RngSeed seed);

}  // namespace lgi
