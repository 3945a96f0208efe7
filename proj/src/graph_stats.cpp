#include "lgi/graph_stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lgi {

double local_clustering(const Graph& g, NodeId u) {
  const std::size_t k = g.degree(u);
  if (k < 2) return 0.0;
  std::size_t links = 0;
  auto nb = g.neighbors(u);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    // Neighbours of u that are also neighbours of nb[i] and come after it.
    auto other = g.neighbors(nb[i]);
    auto a = nb.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    auto b = std::upper_bound(other.begin(), other.end(), nb[i]);
    while (a != nb.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

double average_clustering(const Graph& g) {
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) < 2) continue;
    sum += local_clustering(g, u);
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw std::invalid_argument("hurwitz_zeta requires s > 1, q > 0");
  // Euler-Maclaurin: direct sum of the first terms, then the integral tail and
  // Bernoulli corrections evaluated at q + N.
  constexpr int kDirect = 12;
  constexpr std::array<double, 8> kBernoulli = {1.0 / 6,         -1.0 / 30,  1.0 / 42,
                                                -1.0 / 30,       5.0 / 66,   -691.0 / 2730,
                                                7.0 / 6,         -3617.0 / 510};
  double sum = 0.0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(q + k, -s);
  const double a = q + kDirect;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  // term_j = B_{2j} / (2j)! * s (s+1) ... (s+2j-2) * a^{-s-2j+1}
  double rising = s;
  double factorial = 2.0;
  double power = std::pow(a, -s - 1.0);
  for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
    double term = kBernoulli[j - 1] / factorial * rising * power;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= a * a;
  }
  return sum;
}

std::optional<PowerLawFit> fit_power_law(std::span<const std::size_t> samples) {
  std::vector<std::size_t> x(samples.begin(), samples.end());
  std::erase(x, 0U);
  std::sort(x.begin(), x.end());
  if (x.size() < 2) return std::nullopt;

  std::vector<std::size_t> candidates(x.begin(), x.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  candidates.pop_back();  // the largest value leaves a single-valued tail

  std::optional<PowerLawFit> best;
  for (std::size_t kmin : candidates) {
    auto first = std::lower_bound(x.begin(), x.end(), kmin);
    const auto n_tail = static_cast<std::size_t>(x.end() - first);
    double log_sum = 0.0;
    for (auto it = first; it != x.end(); ++it) {
      log_sum += std::log(static_cast<double>(*it) / (static_cast<double>(kmin) - 0.5));
    }
    if (!(log_sum > 0.0)) continue;
    const double gamma = 1.0 + static_cast<double>(n_tail) / log_sum;

    // KS distance between the empirical CDF of the tail and
    // P(K <= k) = 1 - zeta(gamma, k + 1) / zeta(gamma, kmin).
    const double norm = hurwitz_zeta(gamma, static_cast<double>(kmin));
    double ks = 0.0;
    auto it = first;
    for (std::size_t k = kmin; k <= x.back(); ++k) {
      while (it != x.end() && *it <= k) ++it;
      const double empirical = static_cast<double>(it - first) / static_cast<double>(n_tail);
      const double model = 1.0 - hurwitz_zeta(gamma, static_cast<double>(k + 1)) / norm;
      ks = std::max(ks, std::abs(empirical - model));
    }
    if (!best || ks < best->ks_distance) best = PowerLawFit{gamma, kmin, n_tail, ks};
  }
  return best;
}

GraphStats graph_stats(const Graph& g) {
  if (g.node_count() < 3) throw std::invalid_argument("graph_stats requires n >= 3");
  if (!is_connected(g)) throw std::invalid_argument("graph_stats requires a connected graph");
  GraphStats s;
  s.n = g.node_count();
  s.e = g.edge_count();
  s.m_half_degree = static_cast<double>(s.e) / static_cast<double>(s.n);
  s.clustering = average_clustering(g);
  std::vector<std::size_t> degrees(s.n);
  for (NodeId u = 0; u < s.n; ++u) degrees[u] = g.degree(u);
  s.power_law = fit_power_law(degrees);
  return s;
}

}  // namespace lgi
