// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lgi/affinity_propagation.hpp"
#include "lgi/betweenness.hpp"
#include "lgi/graph_stats.hpp"
#include "lgi/greedy_routing.hpp"
#include "lgi/kernels.hpp"
#include "lgi/louvain.hpp"
#include "lgi/mutual_information.hpp"
#include "lgi/npso.hpp"
#include "lgi/pipeline.hpp"
#include "lgi/shortest_paths.hpp"
#include "test_support.hpp"

namespace {

using namespace lgi;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) {
      pass = false;
      detail += " [x]";
    }
  }
};

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int failures = 0;

void criterion(int id, double budget_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0.0) v.check(secs < budget_s, "time " + fmt(secs, 2) + "s < " + fmt(budget_s, 0) + "s");
  std::printf("%s criterion %d: %s\n", v.pass ? "PASS" : "FAIL", id, v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

double detect_score(const Graph& g, const Partition& truth, const Method& m, RngSeed seed = RngSeed{1}) {
  return *detect_one("", g, truth, m, ApSettings{}, seed).value;
}

NpsoParams npso(std::size_t n, double t, std::size_t c) {
  NpsoParams p;
  p.n = n;
  p.m = 7;
  p.temperature = t;
  p.gamma = 3.0;
  p.communities = c;
  return p;
}

Verdict gr_identity() {
  Verdict v;
  std::mt19937_64 rng(101);
  std::size_t graphs = 0, exact = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t n = 20 + static_cast<std::size_t>(trial) * 7;
    const Graph g = testing::random_connected(n, 1.5 / static_cast<double>(n), rng);
    ++graphs;
    if (gr_score(g, kernel_sp(g)).score == 1.0) ++exact;
  }
  v.check(exact == graphs, std::to_string(exact) + "/" + std::to_string(graphs) + " graphs with GR(SP) == 1");
  return v;
}

Verdict karate_gr() {
  Verdict v;
  const Graph g = testing::karate().graph;
  const std::pair<Kernel, double> expected[] = {
      {Kernel::kEBC, 0.99}, {Kernel::kRA, 0.97}, {Kernel::kESP, 0.79}, {Kernel::kJaccard, 0.57}, {Kernel::kCN, 0.56}};
  for (const auto& [k, target] : expected) {
    const double s = gr_score(g, build_kernel(k, g)).score;
    v.check(std::abs(s - target) <= 0.03, std::string(kernel_name(k)) + "=" + fmt(s) + " vs " + fmt(target, 2));
  }
  return v;
}

Verdict karate_stats() {
  Verdict v;
  const auto s = graph_stats(testing::karate().graph);
  v.check(s.n == 34 && s.e == 78, "N=" + std::to_string(s.n) + " E=" + std::to_string(s.e));
  v.check(std::abs(s.clustering - 0.59) <= 0.01, "C=" + fmt(s.clustering));
  v.check(std::abs(s.m_half_degree - 2.29) <= 0.01, "m=" + fmt(s.m_half_degree));
  v.check(s.power_law && std::abs(s.power_law->gamma - 2.12) <= 0.15,
          "gamma=" + (s.power_law ? fmt(s.power_law->gamma) : std::string("NA")));
  return v;
}

Verdict karate_detect() {
  Verdict v;
  const auto lg = testing::karate();
  const double ebc = detect_score(lg.graph, *lg.truth, Method::ap(Kernel::kEBC));
  const double sp = detect_score(lg.graph, *lg.truth, Method::ap(Kernel::kSP));
  v.check(std::abs(ebc - 0.73) <= 0.10, "LGI-AP-EBC=" + fmt(ebc) + " vs 0.73");
  v.check(std::abs(sp - 0.83) <= 0.10, "SP-AP=" + fmt(sp) + " vs 0.83");
  return v;
}

Verdict ordering() {
  Verdict v;
  struct Case {
    std::string name;
    Graph g;
    Partition truth;
  };
  std::vector<Case> cases;
  const auto lg = testing::karate();
  cases.push_back({"karate", lg.graph, *lg.truth});
  for (const auto& [p, seed] : {std::pair{npso(500, 0.1, 6), 7ULL}, std::pair{npso(300, 0.3, 4), 8ULL}}) {
    auto net = npso_generate(p, RngSeed{seed});
    cases.push_back({npso_label(p), net.graph, net.truth});
  }
  double ra = 0.0, ebc = 0.0, sp = 0.0;
  for (const auto& c : cases) {
    const double a = detect_score(c.g, c.truth, Method::ap(Kernel::kRA));
    const double b = detect_score(c.g, c.truth, Method::ap(Kernel::kEBC));
    const double s = detect_score(c.g, c.truth, Method::ap(Kernel::kSP));
    v.check(true, c.name + " RA/EBC/SP=" + fmt(a) + "/" + fmt(b) + "/" + fmt(s));
    ra += a;
    ebc += b;
    sp += s;
  }
  const double n = static_cast<double>(cases.size());
  ra /= n;
  ebc /= n;
  sp /= n;
  v.check(ra - sp >= 0.10, "mean RA-SP=" + fmt(ra - sp));
  v.check(ebc - sp >= 0.10, "mean EBC-SP=" + fmt(ebc - sp));
  return v;
}

Verdict perturbation() {
  Verdict v;
  ExperimentConfig cfg;
  cfg.data_dir = LGI_DATA_DIR;
  cfg.datasets.push_back(*find_dataset(cfg.data_dir, "karate"));
  cfg.methods = {Method::ap(Kernel::kEBC)};
  cfg.perturbation = Perturbation::kRemove;
  cfg.fraction = 0.1;
  cfg.repetitions = 20;
  const auto rows = cmd_perturb(cfg);
  std::size_t runs = 0, exact = 0;
  double mean = std::nan("");
  for (const auto& r : rows) {
    if (r.kind == ResultRow::Kind::kRun) {
      ++runs;
      if (r.extra.find(";edges=70;") != std::string::npos) ++exact;
    }
    if (r.kind == ResultRow::Kind::kMean) mean = *r.value;
  }
  v.check(runs == 20 && exact == 20, std::to_string(exact) + "/" + std::to_string(runs) + " reps with E'=70");
  v.check(std::abs(mean - 0.75) <= 0.12, "mean LGI-AP-EBC=" + fmt(mean) + " vs 0.75");
  return v;
}

Verdict npso_structure() {
  Verdict v;
  const auto p = npso(500, 0.1, 6);
  std::size_t exact = 0, six = 0;
  double gamma = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto net = npso_generate(p, RngSeed{seed});
    if (net.graph.edge_count() == 3472) ++exact;
    const auto sizes = net.truth.community_sizes();
    if (sizes.size() == 6) ++six;
    gamma += graph_stats(net.graph).power_law.value().gamma;
  }
  gamma /= 10.0;
  v.check(exact == 10, std::to_string(exact) + "/10 with E=3472");
  v.check(six == 10, std::to_string(six) + "/10 with 6 communities");
  v.check(std::abs(gamma - 3.0) <= 0.4, "mean gamma=" + fmt(gamma));
  return v;
}

Verdict npso_trend() {
  Verdict v;
  const auto p = npso(500, 0.1, 6);
  double ra = 0.0, j = 0.0, sp = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto net = npso_generate(p, RngSeed{seed});
    ra += detect_score(net.graph, net.truth, Method::ap(Kernel::kRA));
    j += detect_score(net.graph, net.truth, Method::ap(Kernel::kJaccard));
    sp += detect_score(net.graph, net.truth, Method::ap(Kernel::kSP));
  }
  ra /= 10.0;
  j /= 10.0;
  sp /= 10.0;
  v.check(ra >= j && j >= sp, "RA/J/SP=" + fmt(ra) + "/" + fmt(j) + "/" + fmt(sp));
  v.check(ra >= 0.8, "RA mean >= 0.8");
  return v;
}

Verdict properties() {
  Verdict v;
  std::mt19937_64 rng(202);

  bool metric = true;
  for (int trial = 0; trial < 50 && metric; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 49);
    const Graph g = testing::random_connected(n, 2.5 / static_cast<double>(n), rng);
    for (Kernel k : kAllKernels) metric = metric && !find_invariant_violation(build_kernel(k, g), true);
  }
  v.check(metric, "metric axioms");

  bool scores = true;
  for (int trial = 0; trial < 50; ++trial) {
    const auto la = testing::random_labels(60, 4, rng);
    auto lb = testing::random_labels(60, 3, rng);
    const Partition a(la), b(lb);
    for (auto& x : lb) x = 17 - x;
    const Partition b2(lb);
    const double n1 = nmi(a, b), a1 = ami(a, b);
    scores = scores && n1 >= 0.0 && n1 <= 1.0 && a1 >= -1.0 && a1 <= 1.0;
    scores = scores && std::abs(n1 - nmi(b, a)) < 1e-12 && std::abs(a1 - ami(b, a)) < 1e-12;
    scores = scores && std::abs(n1 - nmi(a, b2)) < 1e-12 && std::abs(a1 - ami(a, b2)) < 1e-12;
  }
  v.check(scores, "NMI/AMI bounds, symmetry, relabelling");

  bool shift = true;
  ApSettings plain;
  plain.tie_noise = false;
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  for (int trial = 0; trial < 10; ++trial) {
    DissimilarityMatrix d(20), shifted(20);
    std::vector<double> x(20), y(20);
    for (std::size_t i = 0; i < 20; ++i) x[i] = coord(rng), y[i] = coord(rng);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t k = 0; k < 20; ++k) {
        d(i, k) = std::hypot(x[i] - x[k], y[i] - y[k]);
        shifted(i, k) = i == k ? 0.0 : d(i, k) + 2.0;
      }
    shift = shift && ap_run(d, -10.0, plain).labels == ap_run(shifted, -12.0, plain).labels;
  }
  v.check(shift, "AP shift invariance");

  bool louv = true;
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected(60, 0.06, rng);
    const auto h = louvain(g, RngSeed{static_cast<std::uint64_t>(trial)});
    for (std::size_t l = 1; l < h.levels.size(); ++l) {
      louv = louv && h.modularity[l] >= h.modularity[l - 1] - 1e-12;
      louv = louv && h.levels[l].community_count() < h.levels[l - 1].community_count();
      for (std::size_t u = 0; u < 60; ++u)
        for (std::size_t w = 0; w < 60; ++w)
          if (h.levels[l - 1][u] == h.levels[l - 1][w]) louv = louv && h.levels[l][u] == h.levels[l][w];
    }
  }
  v.check(louv, "Louvain coarsening and monotone Q");

  bool oracles = true;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
    const Graph g = testing::random_connected(n, 0.4, rng);
    const auto d = kernel_sp(g);
    for (NodeId s = 0; s < n; ++s) {
      const auto bfs = bfs_distances(g, s);
      for (NodeId t = 0; t < n; ++t) oracles = oracles && d(s, t) == static_cast<double>(bfs[t]);
    }
    const auto ebc = edge_betweenness(g);
    const auto brute = testing::betweenness_by_enumeration(g);
    for (std::size_t e = 0; e < ebc.size(); ++e) oracles = oracles && std::abs(ebc[e] - brute[e]) < 1e-12;
    const auto labels = testing::random_labels(n, 2, rng);
    oracles = oracles && std::abs(modularity(g, Partition(labels)) - testing::modularity_by_definition(g, labels)) < 1e-12;
  }
  v.check(oracles, "SP vs BFS, EBC vs enumeration, modularity vs definition");

  const Graph cliques = testing::two_cliques(5);
  const Partition halves(std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  const bool ap_ok = preference_search(kernel_ra(cliques), 2).labels == halves;
  const bool louvain_ok = louvain(cliques, RngSeed{1}).levels.back() == halves;
  v.check(ap_ok && louvain_ok, "two-clique recovery by AP and Louvain");
  return v;
}

}  // namespace

int main() {
  criterion(1, 10.0, gr_identity);
  criterion(2, 5.0, karate_gr);
  criterion(3, 1.0, karate_stats);
  criterion(4, 30.0, karate_detect);
  criterion(5, 0.0, ordering);
  criterion(6, 180.0, perturbation);
  criterion(7, 60.0, npso_structure);
  criterion(8, 600.0, npso_trend);
  criterion(9, 0.0, properties);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
