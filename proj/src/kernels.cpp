#include "lgi/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "lgi/betweenness.hpp"

namespace lgi {
namespace {

/// Overwrites entries of directly linked pairs with their link weight.
void keep_direct_links(DissimilarityMatrix& d, const WeightedAdjacency& adj) {
  for (NodeId u = 0; u < adj.node_count(); ++u) {
    for (std::size_t s = adj.offsets[u]; s < adj.offsets[u + 1]; ++s) d(u, adj.targets[s]) = adj.weights[s];
  }
}

DissimilarityMatrix complete(const WeightedAdjacency& adj, const KernelOptions& opts) {
  auto d = apsp(adj);
  if (opts.completion == Completion::kFillMissing) keep_direct_links(d, adj);
  return d;
}

double row_distance(std::span<const double> a, std::span<const double> b) {
  // Hop distances are integers, so the squared sum is exact.
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kSP: return "SP";
    case Kernel::kESP: return "ESP";
    case Kernel::kCN: return "CN";
    case Kernel::kJaccard: return "J";
    case Kernel::kRA: return "RA";
    case Kernel::kEBC: return "EBC";
  }
  return "?";
}

std::optional<Kernel> parse_kernel(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "JACCARD") return Kernel::kJaccard;
  for (Kernel k : kAllKernels) {
    if (upper == kernel_name(k)) return k;
  }
  return std::nullopt;
}

DissimilarityMatrix kernel_sp(const Graph& g) { return apsp(g); }

DissimilarityMatrix kernel_esp(const Graph& g) {
  const auto sp = apsp(g);
  const std::size_t n = g.node_count();
  DissimilarityMatrix d(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t j = ui + 1; j < n; ++j) d(ui, j) = row_distance(sp.row(ui), sp.row(j));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) d(i, j) = d(j, i);
  return d;
}

WeightedAdjacency neighbourhood_support(const Graph& g, bool jaccard, JaccardUnion union_rule) {
  const std::size_t n = g.node_count();
  WeightedAdjacency adj;
  adj.offsets.assign(n + 1, 0);
  std::vector<std::uint32_t> cn(n, 0);
  std::vector<char> adjacent(n, 0);
  std::vector<NodeId> touched;
  for (NodeId i = 0; i < n; ++i) {
    touched.clear();
    for (NodeId j : g.neighbors(i)) adjacent[j] = 1;
    for (NodeId k : g.neighbors(i)) {
      for (NodeId j : g.neighbors(k)) {
        if (j == i) continue;
        if (cn[j]++ == 0) touched.push_back(j);
      }
    }
    for (NodeId j : g.neighbors(i)) {
      if (cn[j] == 0) touched.push_back(j);
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId j : touched) {
      double score = cn[j];
      if (jaccard && cn[j] > 0) {
        // Adjacent nodes sit in each other's neighbourhood.
        const std::size_t endpoints =
            union_rule == JaccardUnion::kExcludeEndpoints && adjacent[j] ? 2 : 0;
        const double union_size = static_cast<double>(g.degree(i) + g.degree(j) - cn[j] - endpoints);
        score = cn[j] / union_size;
      }
      adj.targets.push_back(j);
      adj.weights.push_back(1.0 / (1.0 + score));
      cn[j] = 0;
    }
    for (NodeId j : g.neighbors(i)) adjacent[j] = 0;
    adj.offsets[i + 1] = adj.targets.size();
  }
  return adj;
}

DissimilarityMatrix kernel_cn(const Graph& g, const KernelOptions& opts) {
  return complete(neighbourhood_support(g, false), opts);
}

DissimilarityMatrix kernel_jaccard(const Graph& g, const KernelOptions& opts) {
  return complete(neighbourhood_support(g, true, opts.jaccard_union), opts);
}

EdgeWeights ra_weights(const Graph& g) {
  EdgeWeights w(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const auto cn = static_cast<double>(common_neighbor_count(g, e.u, e.v));
    const double ext_u = static_cast<double>(g.degree(e.u)) - cn - 1.0;
    const double ext_v = static_cast<double>(g.degree(e.v)) - cn - 1.0;
    w[id] = (1.0 + ext_u + ext_v) / (1.0 + cn);
  }
  return w;
}

DissimilarityMatrix kernel_ra(const Graph& g, const KernelOptions& opts) {
  return complete(WeightedAdjacency::from_graph(g, ra_weights(g)), opts);
}

EdgeWeights rescale_betweenness(std::span<const double> ebc) {
  if (ebc.empty()) return {};
  const double mean = std::accumulate(ebc.begin(), ebc.end(), 0.0) / static_cast<double>(ebc.size());
  EdgeWeights w(ebc.size());
  for (std::size_t e = 0; e < ebc.size(); ++e) w[e] = ebc[e] / (ebc[e] + mean);
  return w;
}

DissimilarityMatrix kernel_ebc(const Graph& g, const KernelOptions& opts) {
  const auto ebc = edge_betweenness(g);
  return complete(WeightedAdjacency::from_graph(g, rescale_betweenness(ebc)), opts);
}

DissimilarityMatrix build_kernel(Kernel k, const Graph& g, const KernelOptions& opts) {
  switch (k) {
    case Kernel::kSP: return kernel_sp(g);
    case Kernel::kESP: return kernel_esp(g);
    case Kernel::kCN: return kernel_cn(g, opts);
    case Kernel::kJaccard: return kernel_jaccard(g, opts);
    case Kernel::kRA: return kernel_ra(g, opts);
    case Kernel::kEBC: return kernel_ebc(g, opts);
  }
  throw std::invalid_argument("unknown kernel");
}

namespace serial {

DissimilarityMatrix kernel_esp(const Graph& g) {
  const auto sp = serial::apsp(g);
  const std::size_t n = g.node_count();
  DissimilarityMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d(i, j) = row_distance(sp.row(i), sp.row(j));
  return d;
}

}  // namespace serial
}  // namespace lgi
