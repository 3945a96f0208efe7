#include "lgi/npso.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace lgi {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxAttempts = 10;

double wrap_angle(double theta) {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2 pi.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

/// Picks `count` distinct indices of `weights` by successive weighted draws.
/// Entries with zero weight are only taken, nearest first, when the positive
/// ones run out.
std::vector<std::size_t> weighted_sample_without_replacement(std::vector<double> weights, std::size_t count,
                                                             const std::vector<double>& distances, Engine& rng) {
  std::vector<std::size_t> picked;
  picked.reserve(count);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t draw = 0; draw < count; ++draw) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) break;
    const double target = unit(rng) * total;
    double acc = 0.0;
    std::size_t chosen = weights.size();
    std::size_t last_positive = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      last_positive = i;
      acc += weights[i];
      if (acc > target) {
        chosen = i;
        break;
      }
    }
    if (chosen == weights.size()) chosen = last_positive;
    picked.push_back(chosen);
    weights[chosen] = 0.0;
  }
  if (picked.size() < count) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (std::find(picked.begin(), picked.end(), i) == picked.end()) rest.push_back(i);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return distances[a] < distances[b]; });
    for (std::size_t i = 0; picked.size() < count; ++i) picked.push_back(rest[i]);
  }
  return picked;
}

NpsoNetwork grow(const NpsoParams& p, const AngularMixture& mix, RngSeed seed) {
  Engine rng = make_engine(seed);
  const double beta = 1.0 / (p.gamma - 1.0);
  const std::size_t n = p.n;

  std::vector<double> angle(n);
  for (auto& a : angle) a = sample_angle(mix, rng);

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(p.m * n);
  std::vector<double> dist;
  std::vector<double> weight;
  for (std::size_t t = 1; t <= n; ++t) {
    const std::size_t older = t - 1;
    if (older == 0) continue;
    const double r_t = 2.0 * std::log(static_cast<double>(t));
    dist.assign(older, 0.0);
    for (std::size_t s = 1; s <= older; ++s) {
      const double r_s = beta * 2.0 * std::log(static_cast<double>(s)) + (1.0 - beta) * r_t;
      dist[s - 1] = hyperbolic_distance(r_s, angle[s - 1], r_t, angle[t - 1]);
    }
    const auto newcomer = static_cast<NodeId>(t - 1);
    if (older <= p.m) {
      for (std::size_t s = 0; s < older; ++s) edges.emplace_back(static_cast<NodeId>(s), newcomer);
      continue;
    }
    std::vector<std::size_t> targets;
    if (p.temperature == 0.0) {
      targets.resize(older);
      std::iota(targets.begin(), targets.end(), 0U);
      std::stable_sort(targets.begin(), targets.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
      targets.resize(p.m);
    } else {
      const double radius = npso_radius(t, p);
      weight.resize(older);
      for (std::size_t s = 0; s < older; ++s) {
        weight[s] = 1.0 / (1.0 + std::exp((dist[s] - radius) / (2.0 * p.temperature)));
      }
      targets = weighted_sample_without_replacement(weight, p.m, dist, rng);
    }
    for (std::size_t s : targets) edges.emplace_back(static_cast<NodeId>(s), newcomer);
  }

  NpsoNetwork net;
  net.graph = Graph(n, edges);
  net.angular = angle;
  net.radial.resize(n);
  const double r_final = 2.0 * std::log(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    net.radial[i] = beta * 2.0 * std::log(static_cast<double>(i + 1)) + (1.0 - beta) * r_final;
  }
  std::vector<CommunityId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = assign_community(angle[i], mix);
  net.truth = Partition(labels);
  return net;
}

}  // namespace

void NpsoParams::validate() const {
  if (m < 1) throw std::invalid_argument("nPSO: m must be >= 1");
  if (n <= m + 1) throw std::invalid_argument("nPSO: n must exceed m + 1");
  if (!(gamma > 2.0)) throw std::invalid_argument("nPSO: gamma must be > 2");
  if (communities < 1) throw std::invalid_argument("nPSO: at least one community is required");
  if (!(temperature >= 0.0 && temperature < 1.0)) {
    throw std::invalid_argument("nPSO: temperature must lie in [0, 1)");
  }
}

AngularMixture mixture_params(std::size_t c) {
  if (c < 1) throw std::invalid_argument("mixture needs at least one component");
  AngularMixture mix;
  const double spacing = kTwoPi / static_cast<double>(c);
  for (std::size_t i = 0; i < c; ++i) {
    mix.means.push_back(spacing * static_cast<double>(i));
    mix.sigmas.push_back(spacing / 6.0);
    mix.weights.push_back(1.0 / static_cast<double>(c));
  }
  return mix;
}

double sample_angle(const AngularMixture& mix, Engine& rng) {
  std::discrete_distribution<std::size_t> component(mix.weights.begin(), mix.weights.end());
  const std::size_t i = component(rng);
  if (mix.sigmas[i] == 0.0) return wrap_angle(mix.means[i]);
  std::normal_distribution<double> gauss(mix.means[i], mix.sigmas[i]);
  return wrap_angle(gauss(rng));
}

double angular_distance(double a, double b) {
  const double diff = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(diff, kTwoPi - diff);
}

CommunityId assign_community(double theta, const AngularMixture& mix) {
  CommunityId best = 0;
  double best_d = angular_distance(theta, mix.means[0]);
  for (std::size_t i = 1; i < mix.size(); ++i) {
    const double d = angular_distance(theta, mix.means[i]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<CommunityId>(i);
    }
  }
  return best;
}

double hyperbolic_distance(double r1, double theta1, double r2, double theta2) {
  const double dtheta = angular_distance(theta1, theta2);
  if (dtheta == 0.0) return std::abs(r1 - r2);
  // cosh r1 cosh r2 - sinh r1 sinh r2 cos dtheta
  //   = cosh(r1 - r2) + sinh r1 sinh r2 (1 - cos dtheta),
  // which avoids cancellation between two huge terms.
  const double one_minus_cos = 2.0 * std::sin(0.5 * dtheta) * std::sin(0.5 * dtheta);
  const double arg = std::cosh(r1 - r2) + std::sinh(r1) * std::sinh(r2) * one_minus_cos;
  return std::acosh(std::max(1.0, arg));
}

double npso_radius(std::size_t t, const NpsoParams& p) {
  const double beta = 1.0 / (p.gamma - 1.0);
  const double ln_t = std::log(static_cast<double>(t));
  const double r_t = 2.0 * ln_t;
  const double sin_term = std::sin(p.temperature * std::numbers::pi);
  if (!(sin_term > 0.0)) throw std::invalid_argument("nPSO: sin(T pi) must be positive");
  const double growth = beta == 1.0 ? ln_t : (1.0 - std::exp(-(1.0 - beta) * ln_t)) / (1.0 - beta);
  return r_t - 2.0 * std::log(2.0 * p.temperature * growth / (sin_term * static_cast<double>(p.m)));
}

NpsoNetwork npso_generate(const NpsoParams& p, RngSeed seed) {
  p.validate();
  const auto mix = mixture_params(p.communities);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const RngSeed s = attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt));
    NpsoNetwork net = grow(p, mix, s);
    if (is_connected(net.graph)) {
      net.attempts = static_cast<std::size_t>(attempt) + 1;
      return net;
    }
  }
  throw std::runtime_error("nPSO: no connected network after 10 attempts");
}

std::vector<double> hyperbolic_edge_lengths(const NpsoNetwork& net) {
  std::vector<double> len;
  len.reserve(net.graph.edge_count());
  for (const Edge& e : net.graph.edges()) {
    len.push_back(hyperbolic_distance(net.radial[e.u], net.angular[e.u], net.radial[e.v], net.angular[e.v]));
  }
  return len;
}

void write_coordinates(std::ostream& out, const NpsoNetwork& net) {
  const auto old_precision = out.precision(17);
  for (NodeId u = 0; u < net.graph.node_count(); ++u) {
    out << net.graph.name(u) << ' ' << net.radial[u] << ' ' << net.angular[u] << ' ' << net.truth[u] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace lgi
