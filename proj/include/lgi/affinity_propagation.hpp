#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgi/dissimilarity_matrix.hpp"
#include "lgi/errors.hpp"
#include "lgi/partition.hpp"

namespace lgi {

struct ApSettings {
  double damping = 0.9;             ///< weight of the previous message, in [0.5, 1)
  int max_iterations = 2000;
  int convergence_window = 50;      ///< iterations with an unchanged exemplar set
  int preference_search_steps = 30; ///< bisection steps of preference_search
  /// Adds a tiny deterministic perturbation to the similarities used for
  /// message passing, which breaks exact ties (e.g. integer hop distances).
  /// Final assignment always uses the unperturbed similarities.
  bool tie_noise = true;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// One evaluation of ap_run inside preference_search.
struct ApProbe {
  double preference = 0.0;
  std::size_t communities = 0;
  bool converged = false;
  int iterations = 0;
};

struct ApResult {
  Partition labels;
  std::vector<std::uint32_t> exemplars;  ///< ascending node indices
  int iterations = 0;
  bool converged = false;
  bool degenerate = false;  ///< no exemplar emerged; labels are empty
  double preference = 0.0;
  double damping = 0.0;     ///< damping of the run that produced the result
  std::vector<ApProbe> probes;  ///< filled by preference_search only

  std::size_t community_count() const noexcept { return exemplars.size(); }
};

/// Thrown by preference_search when every probe was degenerate.
class PreferenceSearchError : public DegenerateResultError {
 public:
  PreferenceSearchError(const std::string& what, std::vector<ApProbe> probes)
      : DegenerateResultError(what), probes_(std::move(probes)) {}
  const std::vector<ApProbe>& probes() const noexcept { return probes_; }

 private:
  std::vector<ApProbe> probes_;
};

/// Affinity propagation on similarities s(i,k) = -d(i,k), s(k,k) = preference.
///
/// Responsibilities and availabilities follow the Frey-Dueck updates with
/// damping. Exemplars are {k : r(k,k) + a(k,k) > 0} after the last
/// iteration; the run has converged once that set stayed unchanged (and
/// non-empty) for convergence_window iterations. Each cluster then re-elects
/// the member with the largest summed similarity to the others, and every
/// node joins the exemplar of highest similarity (ties: lower index).
///
/// If the exemplar count keeps alternating with period two for 100
/// iterations, the run restarts once with damping raised by 0.05 (at most
/// 0.99). Rows of the message sweep run in parallel; results do not depend on
/// the thread count.
///
/// Throws std::invalid_argument for non-finite entries of d or a non-finite
/// preference.
ApResult ap_run(const DissimilarityMatrix& d, double preference, const ApSettings& settings = {});

/// Bisection on the shared preference for a community count close to
/// target_k (ties: fewer communities). The bracket starts at
/// [min s - range, max s] over off-diagonal similarities and each end is moved
/// outwards by range * 2^w (w = 0, 1, ...) while it fails to bracket target_k.
/// Stops early on an exact hit.
/// Throws PreferenceSearchError when every probe is degenerate.
ApResult preference_search(const DissimilarityMatrix& d, std::size_t target_k, const ApSettings& settings = {});

namespace serial {

/// Plain single-threaded transcription of the same message updates.
ApResult ap_run(const DissimilarityMatrix& d, double preference, const ApSettings& settings = {});

}  // namespace serial
}  // namespace lgi
