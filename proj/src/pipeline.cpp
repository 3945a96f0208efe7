#include "lgi/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include "lgi/errors.hpp"
#include "lgi/greedy_routing.hpp"
#include "lgi/louvain.hpp"
#include "lgi/mutual_information.hpp"
#include "lgi/perturb.hpp"

namespace lgi {
namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of repetition `rep` of the stream named `label`.
RngSeed stream_seed(RngSeed master, const std::string& label, std::size_t rep) {
  return derive_seed(derive_seed(master, fnv1a(label)), rep);
}

constexpr std::uint64_t kPerturbStream = 0;
constexpr std::uint64_t kLouvainStream = 1;

/// Runs fn(i) for i in [0, count) in parallel; the first exception (by index)
/// is rethrown once every item has finished.
template <typename Fn>
void parallel_items(std::size_t count, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<ResultRow> flatten(std::vector<std::vector<ResultRow>>& parts) {
  std::vector<ResultRow> rows;
  for (auto& p : parts) {
    for (auto& r : p) rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<LabeledGraph> load_all(const ExperimentConfig& cfg, bool need_labels) {
  std::vector<LabeledGraph> graphs;
  graphs.reserve(cfg.datasets.size());
  for (const auto& spec : cfg.datasets) {
    graphs.push_back(load_dataset(spec));
    if (need_labels && !graphs.back().truth) throw DataError(spec.name + ": ground-truth labels are required");
  }
  return graphs;
}

std::string kind_name(ResultRow::Kind k) {
  switch (k) {
    case ResultRow::Kind::kMean: return "mean";
    case ResultRow::Kind::kStderr: return "stderr";
    default: return "";
  }
}

}  // namespace

void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.dataset, a.method, a.metric, a.kind, a.repetition) <
           std::tie(b.dataset, b.method, b.metric, b.kind, b.repetition);
  });
}

void add_summaries(std::vector<ResultRow>& rows) {
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<double>> groups;
  for (const auto& r : rows) {
    if (r.kind != ResultRow::Kind::kRun) continue;
    auto& g = groups[{r.dataset, r.method, r.metric}];
    if (r.value) g.push_back(*r.value);
  }
  for (const auto& [key, values] : groups) {
    const auto& [dataset, method, metric] = key;
    ResultRow mean{dataset, method, metric, ResultRow::Kind::kMean, 0, std::nullopt, ""};
    ResultRow err{dataset, method, metric, ResultRow::Kind::kStderr, 0, std::nullopt, ""};
    mean.extra = err.extra = "n=" + std::to_string(values.size());
    if (!values.empty()) {
      double sum = 0.0;
      for (double v : values) sum += v;
      const double mu = sum / static_cast<double>(values.size());
      double ss = 0.0;
      for (double v : values) ss += (v - mu) * (v - mu);
      const double n = static_cast<double>(values.size());
      mean.value = mu;
      err.value = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;
    }
    rows.push_back(std::move(mean));
    rows.push_back(std::move(err));
  }
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "dataset,method,metric,repetition,value,extra\n";
  for (const auto& r : rows) {
    out << r.dataset << ',' << r.method << ',' << r.metric << ','
        << (r.kind == ResultRow::Kind::kRun ? std::to_string(r.repetition) : kind_name(r.kind)) << ','
        << (r.value ? fixed(*r.value) : "NA") << ',' << r.extra << '\n';
  }
}

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
  out << "dataset,N,E,C,gamma,m,kmin\n";
  for (const auto& r : rows) {
    const auto& s = r.stats;
    out << r.dataset << ',' << s.n << ',' << s.e << ',' << fixed(s.clustering, 4) << ','
        << (s.power_law ? fixed(s.power_law->gamma, 4) : "NA") << ',' << fixed(s.m_half_degree, 4) << ','
        << (s.power_law ? std::to_string(s.power_law->kmin) : "NA") << '\n';
  }
}

std::string npso_label(const NpsoParams& p) {
  return "npso_N" + std::to_string(p.n) + "_m" + std::to_string(p.m) + "_T" + general(p.temperature) + "_g" +
         general(p.gamma) + "_C" + std::to_string(p.communities);
}

std::vector<StatsRow> cmd_stats(const ExperimentConfig& cfg) {
  std::vector<StatsRow> rows;
  for (const auto& spec : cfg.datasets) {
    const LabeledGraph lg = load_dataset(spec);
    try {
      rows.push_back({spec.name, graph_stats(lg.graph)});
    } catch (const std::invalid_argument& e) {
      throw DataError(spec.name + ": " + e.what());
    }
  }
  return rows;
}

ResultRow detect_one(const std::string& dataset, const Graph& g, const Partition& truth, const Method& method,
                     const ApSettings& ap, RngSeed seed) {
  ResultRow row{dataset, method_name(method), "NMI", ResultRow::Kind::kRun, 0, std::nullopt, ""};
  if (method.kernel) {
    const auto d = build_kernel(*method.kernel, g);
    const ApResult r = preference_search(d, truth.community_count(), ap);
    const PartitionScore score = score_partition(r.labels, truth);
    row.value = score.value;
    row.extra = "k=" + std::to_string(r.community_count()) + ";preference=" + general(r.preference) +
                ";iterations=" + std::to_string(r.iterations) + ";converged=" + (r.converged ? "1" : "0") +
                ";score=" + (score.adjusted ? "AMI" : "NMI");
  } else {
    const LouvainHierarchy h = louvain(g, seed);
    const BestLevel best = best_level(h, truth);
    const PartitionScore score = score_partition(best.partition, truth);
    row.value = score.value;
    row.extra = "k=" + std::to_string(best.partition.community_count()) + ";level=" + std::to_string(best.level) +
                ";modularity=" + general(h.modularity[best.level]) + ";score=" + (score.adjusted ? "AMI" : "NMI");
  }
  return row;
}

std::vector<ResultRow> cmd_grscore(const ExperimentConfig& cfg, bool include_npso) {
  cfg.validate();
  const auto graphs = load_all(cfg, false);
  const std::size_t nk = cfg.kernels.size();
  std::vector<std::vector<ResultRow>> parts(graphs.size() * nk);
  parallel_items(parts.size(), [&](std::size_t item) {
    const std::size_t di = item / nk;
    const Kernel k = cfg.kernels[item % nk];
    const Graph& g = graphs[di].graph;
    const GrOutcome o = gr_score(g, build_kernel(k, g));
    parts[item].push_back({cfg.datasets[di].name, std::string(kernel_name(k)), "GR", ResultRow::Kind::kRun, 0,
                           o.score, "success_rate=" + fixed(o.success_rate)});
  });
  std::vector<ResultRow> rows = flatten(parts);

  if (include_npso) {
    const auto grid = cfg.effective_npso_grid();
    std::vector<std::vector<ResultRow>> npso_parts(grid.size() * cfg.repetitions);
    parallel_items(npso_parts.size(), [&](std::size_t item) {
      const NpsoParams& p = grid[item / cfg.repetitions];
      const std::size_t rep = item % cfg.repetitions;
      const std::string label = npso_label(p);
      auto& out = npso_parts[item];
      std::optional<NpsoNetwork> net;
      try {
        net = npso_generate(p, stream_seed(cfg.seed, label, rep));
      } catch (const std::runtime_error& e) {
        for (Kernel k : cfg.kernels) {
          out.push_back({label, std::string(kernel_name(k)), "GR", ResultRow::Kind::kRun, rep, std::nullopt,
                         "failed=generation"});
        }
        return;
      }
      GrOptions opts;
      opts.geometry = hyperbolic_edge_lengths(*net);
      for (Kernel k : cfg.kernels) {
        const GrOutcome o = gr_score(net->graph, build_kernel(k, net->graph), opts);
        out.push_back({label, std::string(kernel_name(k)), "GR", ResultRow::Kind::kRun, rep, o.score,
                       "success_rate=" + fixed(o.success_rate)});
      }
    });
    std::vector<ResultRow> npso_rows = flatten(npso_parts);
    add_summaries(npso_rows);
    for (auto& r : npso_rows) rows.push_back(std::move(r));
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> cmd_detect(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto graphs = load_all(cfg, true);
  const auto methods = cfg.effective_methods();
  std::vector<std::vector<ResultRow>> parts(graphs.size() * methods.size());
  parallel_items(parts.size(), [&](std::size_t item) {
    const std::size_t di = item / methods.size();
    const Method& m = methods[item % methods.size()];
    const auto& name = cfg.datasets[di].name;
    const RngSeed seed = derive_seed(stream_seed(cfg.seed, name, 0), kLouvainStream);
    parts[item].push_back(detect_one(name, graphs[di].graph, *graphs[di].truth, m, cfg.ap, seed));
  });
  auto rows = flatten(parts);
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> cmd_perturb(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto graphs = load_all(cfg, true);
  const auto methods = cfg.effective_methods();
  const std::size_t reps = cfg.repetitions;
  std::vector<std::vector<ResultRow>> parts(graphs.size() * reps);
  parallel_items(parts.size(), [&](std::size_t item) {
    const std::size_t di = item / reps;
    const std::size_t rep = item % reps;
    const auto& name = cfg.datasets[di].name;
    const RngSeed rep_seed = stream_seed(cfg.seed, name, rep);
    const Graph& original = graphs[di].graph;
    Graph perturbed = original;
    const RngSeed perturb_seed = derive_seed(rep_seed, kPerturbStream);
    if (cfg.perturbation == Perturbation::kRemove) perturbed = perturb_remove(original, cfg.fraction, perturb_seed);
    if (cfg.perturbation == Perturbation::kAdd) perturbed = perturb_add(original, cfg.fraction, perturb_seed);
    const LabeledGraph lcc = largest_connected_component(perturbed, graphs[di].truth);
    const std::string info =
        ";edges=" + std::to_string(perturbed.edge_count()) + ";lcc_nodes=" + std::to_string(lcc.graph.node_count());
    for (const Method& m : methods) {
      ResultRow row = detect_one(name, lcc.graph, *lcc.truth, m, cfg.ap, derive_seed(rep_seed, kLouvainStream));
      row.repetition = rep;
      row.extra += info;
      parts[item].push_back(std::move(row));
    }
  });
  auto rows = flatten(parts);
  add_summaries(rows);
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> cmd_npso(const ExperimentConfig& cfg, const std::filesystem::path& network_dir) {
  cfg.validate();
  const auto grid = cfg.effective_npso_grid();
  const auto methods = cfg.effective_methods();
  const std::size_t reps = cfg.repetitions;
  if (!network_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(network_dir, ec);
    if (ec) throw IoError("cannot create " + network_dir.string());
  }
  std::vector<std::vector<ResultRow>> parts(grid.size() * reps);
  parallel_items(parts.size(), [&](std::size_t item) {
    const NpsoParams& p = grid[item / reps];
    const std::size_t rep = item % reps;
    const std::string label = npso_label(p);
    const RngSeed seed = stream_seed(cfg.seed, label, rep);
    auto& out = parts[item];
    std::optional<NpsoNetwork> net;
    try {
      net = npso_generate(p, seed);
    } catch (const std::runtime_error& e) {
      for (const Method& m : methods) {
        out.push_back({label, method_name(m), "NMI", ResultRow::Kind::kRun, rep, std::nullopt, "failed=generation"});
      }
      return;
    }
    if (!network_dir.empty()) {
      const auto stem = network_dir / (label + "_rep" + std::to_string(rep));
      std::ofstream edges(stem.string() + ".edges");
      std::ofstream labels(stem.string() + ".labels");
      std::ofstream coords(stem.string() + ".coords");
      if (!edges || !labels || !coords) throw IoError("cannot write " + stem.string() + ".*");
      write_edge_list(edges, net->graph);
      write_labels(labels, net->graph, net->truth);
      write_coordinates(coords, *net);
    }
    for (const Method& m : methods) {
      ResultRow row = detect_one(label, net->graph, net->truth, m, cfg.ap, derive_seed(seed, kLouvainStream));
      row.repetition = rep;
      row.extra += ";attempts=" + std::to_string(net->attempts);
      out.push_back(std::move(row));
    }
  });
  auto rows = flatten(parts);
  add_summaries(rows);
  sort_rows(rows);
  return rows;
}

}  // namespace lgi
