#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "lgi/graph.hpp"

namespace lgi {

/// Discrete power-law fit of a degree sequence.
struct PowerLawFit {
  double gamma;          ///< exponent of P(k) ~ k^-gamma
  std::size_t kmin;      ///< lower cutoff selected by Kolmogorov-Smirnov minimisation
  std::size_t tail_size; ///< number of observations >= kmin
  double ks_distance;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t e = 0;
  double m_half_degree = 0.0;  ///< e / n
  double clustering = 0.0;     ///< average local clustering coefficient
  std::optional<PowerLawFit> power_law;  ///< empty when the fit is unavailable
};

/// Average of the local clustering coefficient over nodes of degree >= 2;
/// 0 when the graph has no such node.
double average_clustering(const Graph& g);

/// Local clustering coefficient of one node (0 for degree < 2).
double local_clustering(const Graph& g, NodeId u);

/// Hurwitz zeta function zeta(s, q) = sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// Fits a discrete power law to positive integer samples.
///
/// For every candidate cutoff the exponent is the discrete maximum-likelihood
/// approximation gamma = 1 + n_tail / sum ln(k_i / (kmin - 0.5)); the cutoff
/// with the smallest KS distance between the empirical tail CDF and the
/// fitted discrete CDF wins (ties: smaller kmin). Candidates need at least two
/// distinct values in the tail. Returns nullopt if no candidate qualifies.
std::optional<PowerLawFit> fit_power_law(std::span<const std::size_t> samples);

/// Requires a connected graph with n >= 3 (std::invalid_argument otherwise).
GraphStats graph_stats(const Graph& g);

}  // namespace lgi
