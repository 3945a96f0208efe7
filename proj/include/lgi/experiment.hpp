#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgi/affinity_propagation.hpp"
#include "lgi/edge_list.hpp"
#include "lgi/kernels.hpp"
#include "lgi/npso.hpp"
#include "lgi/rng.hpp"

namespace lgi {

/// A community detection method: affinity propagation over a kernel, or
/// Louvain when `kernel` is empty.
struct Method {
  std::optional<Kernel> kernel;

  static Method louvain() { return {}; }
  static Method ap(Kernel k) { return {k}; }
  friend bool operator==(const Method&, const Method&) = default;
};

/// LGI-AP-RA, LGI-AP-EBC, J-AP, CN-AP, ESP-AP, SP-AP or Louvain.
std::string method_name(const Method& m);
/// Accepts the names above (case-insensitive) and bare kernel names.
std::optional<Method> parse_method(std::string_view name);

struct DatasetSpec {
  std::string name;
  std::filesystem::path edges;
  std::optional<std::filesystem::path> labels;
  /// When set, the edge file holds "from to weight" lines and only pairs with
  /// weight >= min_weight become links.
  std::optional<double> min_weight;
};

/// The eight networks used in the experiments, expected under `data_dir` as
/// <name>.edges / <name>.labels (weighted survey files: <name>.weights).
std::vector<DatasetSpec> known_datasets(const std::filesystem::path& data_dir);
std::optional<DatasetSpec> find_dataset(const std::filesystem::path& data_dir, std::string_view name);

/// Reads, parses and reduces to the largest connected component.
/// Throws IoError for unreadable files and ParseError for malformed ones.
LabeledGraph load_dataset(const DatasetSpec& spec);

enum class Perturbation { kNone, kRemove, kAdd };

struct ExperimentConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<Kernel> kernels{std::begin(kAllKernels), std::end(kAllKernels)};
  std::vector<Method> methods;  ///< empty means every AP kernel plus Louvain
  Perturbation perturbation = Perturbation::kRemove;
  double fraction = 0.1;
  std::size_t repetitions = 20;
  std::vector<NpsoParams> npso_grid;  ///< empty means the default grid
  RngSeed seed{1};
  ApSettings ap;
  std::filesystem::path output_dir;  ///< empty: CSV to stdout, nPSO files to ./npso
  std::filesystem::path data_dir{"data"};
  bool full = false;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
  std::vector<Method> effective_methods() const;
  std::vector<NpsoParams> effective_npso_grid() const;
};

/// Desk grid: N {100, 500} x T {0.1, 0.3, 0.5} x C {3, 6, 9} with m = 7,
/// gamma = 3; the full grid adds N = 1000.
std::vector<NpsoParams> default_npso_grid(bool full);

/// Parses "key = value" lines ('#' starts a comment) on top of `base`.
///
///   datasets = karate, polbooks          registry names under data_dir
///   dataset.<name>.edges = path          ad-hoc dataset
///   dataset.<name>.labels = path
///   dataset.<name>.min_weight = 2
///   kernels = SP, RA                     methods = LGI-AP-RA, Louvain
///   perturbation = none | remove | add   fraction = 0.1
///   repetitions = 20                     seed = 1
///   npso = 100:7:0.1:3:3, 500:7:0.3:3:6  (N:m:T:gamma:C)
///   ap.damping / ap.max_iterations / ap.convergence_window /
///   ap.preference_search_steps / ap.tie_noise
///   output_dir, data_dir, full = true | false
///
/// Relative paths are resolved against `base_dir`. Throws ParseError with the
/// line number on unknown keys or bad values.
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {},
                              ExperimentConfig base = {});

/// "N:m:T:gamma:C".
NpsoParams parse_npso_params(std::string_view text);

std::vector<std::string> split_list(std::string_view text);

}  // namespace lgi
