#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgi/experiment.hpp"
#include "lgi/graph_stats.hpp"

namespace lgi {

/// One line of a results CSV.
struct ResultRow {
  enum class Kind { kRun, kMean, kStderr };

  std::string dataset;
  std::string method;
  std::string metric;  ///< "NMI" or "GR"
  Kind kind = Kind::kRun;
  std::size_t repetition = 0;  ///< meaningful for kRun only
  std::optional<double> value;  ///< empty for failed runs ("NA")
  std::string extra;            ///< "key=value;key=value"
};

/// Sorts by (dataset, method, metric, kind, repetition).
void sort_rows(std::vector<ResultRow>& rows);

/// Appends mean and standard-error rows for every (dataset, method, metric)
/// group of kRun rows. Failed runs are left out of both.
void add_summaries(std::vector<ResultRow>& rows);

/// Header "dataset,method,metric,repetition,value,extra"; the repetition
/// column holds the run index, "mean" or "stderr".
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct StatsRow {
  std::string dataset;
  GraphStats stats;
};

/// Header "dataset,N,E,C,gamma,m,kmin"; "NA" where the power-law fit is
/// unavailable.
void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows);

/// Network statistics of every dataset.
std::vector<StatsRow> cmd_stats(const ExperimentConfig& cfg);

/// Topological GR-score per (dataset, kernel). With `include_npso`, also the
/// geometric GR-score of generated networks per (grid entry, kernel), one row
/// per repetition plus mean and standard error.
std::vector<ResultRow> cmd_grscore(const ExperimentConfig& cfg, bool include_npso = false);

/// Detection score per (dataset, method). Throws DataError when a dataset has
/// no labels.
std::vector<ResultRow> cmd_detect(const ExperimentConfig& cfg);

/// Perturb, keep the largest component, detect; per repetition plus summaries.
std::vector<ResultRow> cmd_perturb(const ExperimentConfig& cfg);

/// Generates the nPSO grid, writes every network to `network_dir` (unless
/// empty) and scores every method. Generation failures yield NA rows.
std::vector<ResultRow> cmd_npso(const ExperimentConfig& cfg, const std::filesystem::path& network_dir);

/// Name of a grid entry, e.g. "npso_N100_m7_T0.1_g3_C3".
std::string npso_label(const NpsoParams& p);

/// Detection score of one method on one labelled graph. AP methods search
/// the preference for truth's community count; Louvain picks its best level.
ResultRow detect_one(const std::string& dataset, const Graph& g, const Partition& truth, const Method& method,
                     const ApSettings& ap, RngSeed seed);

}  // namespace lgi
