#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "lgi/graph.hpp"
#include "lgi/partition.hpp"
#include "lgi/rng.hpp"

namespace lgi {

/// Parameters of the nonuniform popularity-similarity (nPSO) growth model.
struct NpsoParams {
  std::size_t n = 100;   ///< nodes
  std::size_t m = 7;     ///< half of the average degree
  double temperature = 0.1;
  double gamma = 3.0;    ///< target power-law exponent, > 2
  std::size_t communities = 3;

  /// Throws std::invalid_argument unless n > m + 1, m >= 1, gamma > 2,
  /// communities >= 1 and 0 <= temperature < 1.
  void validate() const;
};

/// Equal-weight Gaussian mixture on the circle.
struct AngularMixture {
  std::vector<double> means;
  std::vector<double> sigmas;
  std::vector<double> weights;

  std::size_t size() const noexcept { return means.size(); }
};

/// C components with means 2 pi (i-1) / C, sigma = (2 pi / C) / 6, weight 1/C.
AngularMixture mixture_params(std::size_t c);

/// Draws a component by weight, then a Gaussian angle wrapped into [0, 2 pi).
double sample_angle(const AngularMixture& mix, Engine& rng);

/// Smallest angular difference, in [0, pi].
double angular_distance(double a, double b);

/// Component whose mean is angularly closest (ties: lowest id).
CommunityId assign_community(double theta, const AngularMixture& mix);

/// Distance in the hyperbolic plane of curvature -1 between polar points.
double hyperbolic_distance(double r1, double theta1, double r2, double theta2);

struct NpsoNetwork {
  Graph graph;
  std::vector<double> radial;   ///< faded radius at the end of growth
  std::vector<double> angular;  ///< in [0, 2 pi)
  Partition truth;
  std::size_t attempts = 1;     ///< generations needed to obtain a connected graph
};

/// Grows an nPSO network.
///
/// Node t = 1..n is born at radius 2 ln t with an angle from the mixture; at
/// that time every older node s sits at the faded radius
/// beta * 2 ln s + (1 - beta) * 2 ln t with beta = 1 / (gamma - 1). The
/// newcomer links to all older nodes while t <= m + 1 and to m of them
/// afterwards: the m hyperbolically closest when T = 0, otherwise m distinct
/// nodes drawn without replacement with weights 1 / (1 + exp((x - R_t) / 2T)).
///
/// Node i of the graph is node t = i + 1. Disconnected draws are regenerated
/// from derived seeds (at most 10 attempts; std::runtime_error after that).
NpsoNetwork npso_generate(const NpsoParams& p, RngSeed seed);

/// Connection radius R_t that makes the expected number of links of node t
/// equal to m.
double npso_radius(std::size_t t, const NpsoParams& p);

/// Hyperbolic length of every edge, aligned with net.graph.edges().
std::vector<double> hyperbolic_edge_lengths(const NpsoNetwork& net);

/// "nodeId r theta communityId" per line.
void write_coordinates(std::ostream& out, const NpsoNetwork& net);

}  // namespace lgi
