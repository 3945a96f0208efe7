#include "lgi/affinity_propagation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

namespace lgi {

void ApSettings::validate() const {
  if (!(damping >= 0.5 && damping < 1.0)) throw std::invalid_argument("damping must lie in [0.5, 1)");
  if (convergence_window < 1) throw std::invalid_argument("convergence_window must be >= 1");
  if (max_iterations < convergence_window) {
    throw std::invalid_argument("max_iterations must be >= convergence_window");
  }
  if (preference_search_steps < 1) throw std::invalid_argument("preference_search_steps must be >= 1");
}

namespace {

constexpr std::uint64_t kNoiseSeed = 0x41ff1a17e5eedULL;
constexpr int kOscillationSpan = 100;
constexpr double kDampingStep = 0.05;
constexpr double kMaxDamping = 0.99;

/// Row-major similarity matrices: `clean` for assignment, `messages` for the
/// sweep (equal to clean unless tie noise is on).
struct Similarities {
  std::size_t n = 0;
  std::vector<double> clean;
  std::vector<double> messages;

  double s(std::size_t i, std::size_t k) const { return clean[i * n + k]; }
};

Similarities make_similarities(const DissimilarityMatrix& d, double preference, bool tie_noise) {
  Similarities sim;
  sim.n = d.size();
  sim.clean.resize(sim.n * sim.n);
  for (std::size_t i = 0; i < sim.n; ++i) {
    for (std::size_t k = 0; k < sim.n; ++k) {
      const double x = d(i, k);
      if (!std::isfinite(x)) throw std::invalid_argument("dissimilarity matrix has non-finite entries");
      sim.clean[i * sim.n + k] = i == k ? preference : -x;
    }
  }
  sim.messages = sim.clean;
  if (tie_noise) {
    std::mt19937_64 rng(kNoiseSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    constexpr double kFloor = std::numeric_limits<double>::min() * 100.0;
    for (double& x : sim.messages) x += (kEps * std::abs(x) + kFloor) * unit(rng);
  }
  return sim;
}

struct Messages {
  explicit Messages(std::size_t n) : r(n * n, 0.0), a(n * n, 0.0), colsum(n, 0.0) {}
  std::vector<double> r;
  std::vector<double> a;
  std::vector<double> colsum;
};

// The parallel and serial sweeps evaluate identical expressions in identical
// order, so they agree bit for bit.

void responsibilities_parallel(const std::vector<double>& s, Messages& m, std::size_t n, double lambda) {
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < rows; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    const double* srow = s.data() + i * n;
    const double* arow = m.a.data() + i * n;
    double* rrow = m.r.data() + i * n;
    double max1 = -std::numeric_limits<double>::infinity();
    double max2 = max1;
    std::size_t arg1 = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = arow[k] + srow[k];
      if (v > max1) {
        max2 = max1;
        max1 = v;
        arg1 = k;
      } else if (v > max2) {
        max2 = v;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double fresh = srow[k] - (k == arg1 ? max2 : max1);
      rrow[k] = lambda * rrow[k] + (1.0 - lambda) * fresh;
    }
  }
}

void availabilities_parallel(Messages& m, std::size_t n, double lambda) {
  constexpr std::size_t kBlock = 64;
  const auto blocks = static_cast<std::int64_t>((n + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t k0 = static_cast<std::size_t>(b) * kBlock;
    const std::size_t k1 = std::min(n, k0 + kBlock);
    double* colsum = m.colsum.data();
    for (std::size_t k = k0; k < k1; ++k) colsum[k] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* rrow = m.r.data() + i * n;
      for (std::size_t k = k0; k < k1; ++k) colsum[k] += i == k ? rrow[k] : std::max(0.0, rrow[k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double* rrow = m.r.data() + i * n;
      double* arow = m.a.data() + i * n;
      for (std::size_t k = k0; k < k1; ++k) {
        const double fresh = i == k ? colsum[k] - rrow[k] : std::min(0.0, colsum[k] - std::max(0.0, rrow[k]));
        arow[k] = lambda * arow[k] + (1.0 - lambda) * fresh;
      }
    }
  }
}

void responsibilities_serial(const std::vector<double>& s, Messages& m, std::size_t n, double lambda) {
  for (std::size_t i = 0; i < n; ++i) {
    double max1 = -std::numeric_limits<double>::infinity();
    double max2 = max1;
    std::size_t arg1 = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = m.a[i * n + k] + s[i * n + k];
      if (v > max1) {
        max2 = max1;
        max1 = v;
        arg1 = k;
      } else if (v > max2) {
        max2 = v;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double fresh = s[i * n + k] - (k == arg1 ? max2 : max1);
      m.r[i * n + k] = lambda * m.r[i * n + k] + (1.0 - lambda) * fresh;
    }
  }
}

void availabilities_serial(Messages& m, std::size_t n, double lambda) {
  for (std::size_t k = 0; k < n; ++k) {
    double colsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = m.r[i * n + k];
      colsum += i == k ? r : std::max(0.0, r);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double r = m.r[i * n + k];
      const double fresh = i == k ? colsum - r : std::min(0.0, colsum - std::max(0.0, r));
      m.a[i * n + k] = lambda * m.a[i * n + k] + (1.0 - lambda) * fresh;
    }
  }
}

struct Sweep {
  void (*responsibilities)(const std::vector<double>&, Messages&, std::size_t, double);
  void (*availabilities)(Messages&, std::size_t, double);
};

constexpr Sweep kParallelSweep{responsibilities_parallel, availabilities_parallel};
constexpr Sweep kSerialSweep{responsibilities_serial, availabilities_serial};

struct RunOutcome {
  std::vector<std::uint32_t> exemplars;
  int iterations = 0;
  bool converged = false;
  bool oscillating = false;
};

RunOutcome iterate(const Similarities& sim, const ApSettings& settings, double damping, const Sweep& sweep,
                   bool oscillation_guard) {
  const std::size_t n = sim.n;
  Messages m(n);
  std::vector<char> current(n, 0);
  std::vector<char> previous(n, 0);
  std::vector<std::size_t> counts;
  int stable = 0;
  int alternating = 0;
  RunOutcome out;
  for (int it = 1; it <= settings.max_iterations; ++it) {
    sweep.responsibilities(sim.messages, m, n, damping);
    sweep.availabilities(m, n, damping);

    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      current[j] = m.r[j * n + j] + m.a[j * n + j] > 0.0;
      k += static_cast<std::size_t>(current[j]);
    }
    stable = (it > 1 && current == previous) ? stable + 1 : 1;
    std::swap(current, previous);
    counts.push_back(k);
    out.iterations = it;

    if (k > 0 && stable >= settings.convergence_window) {
      out.converged = true;
      break;
    }
    if (oscillation_guard && counts.size() >= 3) {
      const std::size_t t = counts.size() - 1;
      const bool period_two = counts[t] == counts[t - 2] && counts[t] != counts[t - 1];
      alternating = period_two ? alternating + 1 : 0;
      if (alternating >= kOscillationSpan) {
        out.oscillating = true;
        break;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (previous[j]) out.exemplars.push_back(static_cast<std::uint32_t>(j));
  }
  return out;
}

/// Nearest exemplar of every node (exemplars map to themselves).
std::vector<std::uint32_t> assign(const Similarities& sim, const std::vector<std::uint32_t>& exemplars) {
  const std::size_t n = sim.n;
  std::vector<std::uint32_t> owner(n);
  std::vector<char> is_exemplar(n, 0);
  for (auto e : exemplars) is_exemplar[e] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_exemplar[i]) {
      owner[i] = static_cast<std::uint32_t>(i);
      continue;
    }
    std::uint32_t best = exemplars.front();
    double best_s = sim.s(i, best);
    for (auto e : exemplars) {
      if (sim.s(i, e) > best_s) {
        best_s = sim.s(i, e);
        best = e;
      }
    }
    owner[i] = best;
  }
  return owner;
}

/// Re-elects, within each cluster, the member maximising the summed
/// similarity of the cluster to it.
std::vector<std::uint32_t> refine(const Similarities& sim, const std::vector<std::uint32_t>& exemplars,
                                  const std::vector<std::uint32_t>& owner) {
  std::vector<std::uint32_t> refined;
  refined.reserve(exemplars.size());
  for (auto e : exemplars) {
    std::vector<std::uint32_t> members;
    for (std::size_t i = 0; i < owner.size(); ++i) {
      if (owner[i] == e) members.push_back(static_cast<std::uint32_t>(i));
    }
    std::uint32_t best = members.front();
    double best_sum = -std::numeric_limits<double>::infinity();
    for (auto j : members) {
      double sum = 0.0;
      for (auto i : members) sum += sim.s(i, j);
      if (sum > best_sum) {
        best_sum = sum;
        best = j;
      }
    }
    refined.push_back(best);
  }
  std::sort(refined.begin(), refined.end());
  return refined;
}

ApResult run(const DissimilarityMatrix& d, double preference, const ApSettings& settings, const Sweep& sweep) {
  settings.validate();
  if (!std::isfinite(preference)) throw std::invalid_argument("preference must be finite");
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("empty dissimilarity matrix");
  const auto sim = make_similarities(d, preference, settings.tie_noise);

  ApResult result;
  result.preference = preference;
  result.damping = settings.damping;
  if (n == 1) {
    result.exemplars = {0};
    result.labels = Partition::single_community(1);
    result.converged = true;
    return result;
  }

  RunOutcome outcome = iterate(sim, settings, settings.damping, sweep, true);
  if (outcome.oscillating) {
    result.damping = std::min(kMaxDamping, settings.damping + kDampingStep);
    outcome = iterate(sim, settings, result.damping, sweep, false);
  }
  result.iterations = outcome.iterations;
  result.converged = outcome.converged;
  if (outcome.exemplars.empty()) {
    result.degenerate = true;
    return result;
  }
  auto owner = assign(sim, outcome.exemplars);
  result.exemplars = refine(sim, outcome.exemplars, owner);
  owner = assign(sim, result.exemplars);
  result.labels = Partition(owner);
  return result;
}

}  // namespace

ApResult ap_run(const DissimilarityMatrix& d, double preference, const ApSettings& settings) {
  return run(d, preference, settings, kParallelSweep);
}

ApResult preference_search(const DissimilarityMatrix& d, std::size_t target_k, const ApSettings& settings) {
  settings.validate();
  const std::size_t n = d.size();
  if (target_k < 1 || target_k > n) throw std::invalid_argument("target_k must lie in [1, n]");
  if (n == 1) return ap_run(d, 0.0, settings);

  const double min_d = d.min_off_diagonal();
  const double max_d = d.max_off_diagonal();
  // Similarities span [-max_d, -min_d]; preferences far below that range make
  // the messages degenerate, so the bracket grows in steps of the range.
  const double width = std::max(max_d - min_d, 1e-12);
  double hi = -min_d;
  double lo = -max_d - width;

  std::vector<ApProbe> probes;
  std::optional<ApResult> best;
  auto better = [target_k](std::size_t k, std::size_t best_k) {
    const auto dist = [target_k](std::size_t x) { return x > target_k ? x - target_k : target_k - x; };
    return dist(k) < dist(best_k) || (dist(k) == dist(best_k) && k < best_k);
  };
  // Returns the community count, 0 for degenerate runs.
  auto probe = [&](double preference) -> std::size_t {
    ApResult r = ap_run(d, preference, settings);
    const std::size_t k = r.degenerate ? 0 : r.community_count();
    probes.push_back({preference, k, r.converged, r.iterations});
    if (!r.degenerate && (!best || better(k, best->community_count()))) best = std::move(r);
    return k;
  };
  auto done = [&] { return best && best->community_count() == target_k; };

  constexpr int kMaxWidening = 16;
  std::size_t k_hi = probe(hi);
  for (int w = 0; w < kMaxWidening && !done() && k_hi < target_k; ++w) {
    hi += width * std::ldexp(1.0, w);
    k_hi = probe(hi);
  }
  if (!done()) {
    std::size_t k_lo = probe(lo);
    for (int w = 0; w < kMaxWidening && !done() && k_lo > target_k; ++w) {
      lo -= width * std::ldexp(1.0, w);
      k_lo = probe(lo);
    }
  }
  for (int step = 0; step < settings.preference_search_steps && !done(); ++step) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t k = probe(mid);
    if (k > target_k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (!best) {
    std::ostringstream msg;
    msg << "preference search found no exemplars in " << probes.size() << " probes";
    throw PreferenceSearchError(msg.str(), std::move(probes));
  }
  best->probes = std::move(probes);
  return std::move(*best);
}

namespace serial {

ApResult ap_run(const DissimilarityMatrix& d, double preference, const ApSettings& settings) {
  return run(d, preference, settings, kSerialSweep);
}

}  // namespace serial
}  // namespace lgi
