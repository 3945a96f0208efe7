#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgi/dissimilarity_matrix.hpp"
#include "lgi/graph.hpp"
#include "lgi/shortest_paths.hpp"

namespace lgi {

/// Topology-to-dissimilarity kernels.
enum class Kernel { kSP, kESP, kCN, kJaccard, kRA, kEBC };

inline constexpr Kernel kAllKernels[] = {Kernel::kSP, Kernel::kESP,     Kernel::kCN,
                                         Kernel::kJaccard, Kernel::kRA, Kernel::kEBC};

/// Short name: SP, ESP, CN, J, RA, EBC.
std::string_view kernel_name(Kernel k);
/// Inverse of kernel_name (case-insensitive; "JACCARD" also accepted).
std::optional<Kernel> parse_kernel(std::string_view name);

/// How the support-graph distances are completed.
enum class Completion {
  kFullShortestPaths,  ///< every entry is a shortest-path length (metric)
  kFillMissing,        ///< directly linked pairs keep their link weight
};

/// Which nodes count towards |N(i) u N(j)| in the Jaccard index.
enum class JaccardUnion {
  kExcludeEndpoints,  ///< i and j themselves are left out of the union
  kIncludeEndpoints,  ///< plain union of the two open neighbourhoods
};

struct KernelOptions {
  Completion completion = Completion::kFullShortestPaths;
  JaccardUnion jaccard_union = JaccardUnion::kExcludeEndpoints;
};

/// Hop-count shortest paths.
DissimilarityMatrix kernel_sp(const Graph& g);

/// Euclidean distance between rows of the hop-distance matrix.
DissimilarityMatrix kernel_esp(const Graph& g);

/// Common neighbours: links between all pairs with cn > 0 plus every original
/// edge, weighted 1 / (1 + cn), completed by shortest paths.
DissimilarityMatrix kernel_cn(const Graph& g, const KernelOptions& opts = {});

/// As kernel_cn with cn replaced by cn / |N(i) u N(j)|.
DissimilarityMatrix kernel_jaccard(const Graph& g, const KernelOptions& opts = {});

/// Repulsion-attraction rule on the original edges,
/// RA_ij = (1 + e_i + e_j) / (1 + cn_ij) with e_i = deg(i) - cn_ij - 1,
/// completed by shortest paths.
DissimilarityMatrix kernel_ra(const Graph& g, const KernelOptions& opts = {});

/// Edge betweenness rescaled to EBC / (EBC + mean EBC) on the original edges,
/// completed by shortest paths.
DissimilarityMatrix kernel_ebc(const Graph& g, const KernelOptions& opts = {});

DissimilarityMatrix build_kernel(Kernel k, const Graph& g, const KernelOptions& opts = {});

/// Per-edge RA weights (aligned with g.edges()).
EdgeWeights ra_weights(const Graph& g);

/// EBC / (EBC + mean(EBC)) for every edge.
EdgeWeights rescale_betweenness(std::span<const double> ebc);

/// Common-neighbour count for every node pair with cn > 0, as a support
/// adjacency: node pairs with cn > 0 or an original edge, weighted by
/// 1 / (1 + score) where score is cn (jaccard = false) or the Jaccard index.
WeightedAdjacency neighbourhood_support(const Graph& g, bool jaccard,
                                        JaccardUnion union_rule = JaccardUnion::kExcludeEndpoints);

namespace serial {

DissimilarityMatrix kernel_esp(const Graph& g);

}  // namespace serial
}  // namespace lgi
