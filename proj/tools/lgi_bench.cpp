// lgi-bench: command-line front end for the experiment pipelines.
//
// Exit codes: 0 success, 2 I/O error, 3 data error, 4 degenerate result.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lgi/errors.hpp"
#include "lgi/pipeline.hpp"

namespace {

constexpr int kExitIo = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string data_dir;
  std::vector<std::string> datasets;
  std::string kernels;
  std::string methods;
  std::optional<std::size_t> reps;
  std::optional<double> fraction;
  std::string mode;
  std::vector<std::string> npso;
  bool full = false;
  bool grscore_npso = false;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lgi::IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

lgi::ExperimentConfig build_config(const Flags& f) {
  lgi::ExperimentConfig cfg;
  if (!f.data_dir.empty()) cfg.data_dir = f.data_dir;
  if (!f.config.empty()) {
    const std::filesystem::path path(f.config);
    cfg = lgi::parse_config(read_text(f.config), path.parent_path(), cfg);
  }
  // Flags win over the configuration file.
  if (f.full) {
    cfg.full = true;
    if (!f.reps) cfg.repetitions = 100;
  }
  if (f.seed) cfg.seed = lgi::RngSeed{*f.seed};
  if (!f.out.empty()) cfg.output_dir = f.out;
  if (!f.data_dir.empty()) cfg.data_dir = f.data_dir;
  if (f.reps) cfg.repetitions = *f.reps;
  if (f.fraction) cfg.fraction = *f.fraction;
  if (!f.mode.empty()) {
    if (f.mode == "remove") cfg.perturbation = lgi::Perturbation::kRemove;
    else if (f.mode == "add") cfg.perturbation = lgi::Perturbation::kAdd;
    else if (f.mode == "none") cfg.perturbation = lgi::Perturbation::kNone;
    else throw std::invalid_argument("--mode must be remove, add or none");
  }
  if (!f.kernels.empty()) {
    cfg.kernels.clear();
    for (const auto& name : lgi::split_list(f.kernels)) {
      auto k = lgi::parse_kernel(name);
      if (!k) throw std::invalid_argument("unknown kernel '" + name + "'");
      cfg.kernels.push_back(*k);
    }
  }
  if (!f.methods.empty()) {
    cfg.methods.clear();
    for (const auto& name : lgi::split_list(f.methods)) {
      auto m = lgi::parse_method(name);
      if (!m) throw std::invalid_argument("unknown method '" + name + "'");
      cfg.methods.push_back(*m);
    }
  }
  if (!f.npso.empty()) {
    cfg.npso_grid.clear();
    for (const auto& entry : f.npso) cfg.npso_grid.push_back(lgi::parse_npso_params(entry));
  }
  for (const auto& name : f.datasets) {
    auto spec = lgi::find_dataset(cfg.data_dir, name);
    if (!spec) throw std::invalid_argument("unknown dataset '" + name + "'");
    cfg.datasets.push_back(std::move(*spec));
  }
  cfg.validate();
  return cfg;
}

/// Writes to <out>/<name>.csv, or stdout when no output directory is set.
template <typename Writer>
void emit(const lgi::ExperimentConfig& cfg, const std::string& name, Writer&& write) {
  if (cfg.output_dir.empty()) {
    write(std::cout);
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  const auto path = cfg.output_dir / (name + ".csv");
  std::ofstream out(path);
  if (ec || !out) throw lgi::IoError("cannot write " + path.string());
  write(out);
  std::cerr << "wrote " << path.string() << '\n';
}

int run(const std::string& command, const Flags& flags) {
  const lgi::ExperimentConfig cfg = build_config(flags);
  if (command == "stats") {
    const auto rows = lgi::cmd_stats(cfg);
    emit(cfg, "stats", [&](std::ostream& o) { lgi::write_stats_csv(o, rows); });
  } else if (command == "grscore") {
    const auto rows = lgi::cmd_grscore(cfg, flags.grscore_npso);
    emit(cfg, "grscore", [&](std::ostream& o) { lgi::write_results_csv(o, rows); });
  } else if (command == "detect") {
    const auto rows = lgi::cmd_detect(cfg);
    emit(cfg, "detect", [&](std::ostream& o) { lgi::write_results_csv(o, rows); });
  } else if (command == "perturb") {
    const auto rows = lgi::cmd_perturb(cfg);
    emit(cfg, "perturb", [&](std::ostream& o) { lgi::write_results_csv(o, rows); });
  } else if (command == "npso") {
    const auto dir = (cfg.output_dir.empty() ? std::filesystem::path(".") : cfg.output_dir) / "npso";
    const auto rows = lgi::cmd_npso(cfg, dir);
    emit(cfg, "npso", [&](std::ostream& o) { lgi::write_results_csv(o, rows); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latent-geometry dissimilarities for affinity-propagation community detection"};
  app.require_subcommand(1);
  Flags flags;

  auto shared = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config, "key = value configuration file");
    sub->add_option("--seed", flags.seed, "master seed");
    sub->add_option("--out", flags.out, "output directory (default: CSV to stdout)");
    sub->add_option("--data-dir", flags.data_dir, "directory holding the registered datasets");
    sub->add_option("--dataset", flags.datasets, "registered dataset name (repeatable)");
    sub->add_option("--kernels", flags.kernels, "comma-separated kernels: SP,ESP,CN,J,RA,EBC");
    sub->add_option("--methods", flags.methods, "comma-separated methods, e.g. LGI-AP-RA,SP-AP,Louvain");
    sub->add_option("--reps", flags.reps, "repetitions")->check(CLI::PositiveNumber);
    sub->add_option("--fraction", flags.fraction, "perturbation fraction in [0,1)");
    sub->add_option("--npso", flags.npso, "nPSO grid entry N:m:T:gamma:C (repeatable)");
    sub->add_flag("--full", flags.full, "paper-scale repetitions and grid");
  };
  auto* stats = app.add_subcommand("stats", "network statistics (N, E, C, gamma, m)");
  auto* gr = app.add_subcommand("grscore", "greedy-routing score per dataset and kernel");
  auto* detect = app.add_subcommand("detect", "community detection against ground truth");
  auto* perturb = app.add_subcommand("perturb", "detection on randomly perturbed networks");
  auto* npso = app.add_subcommand("npso", "detection on generated nPSO networks");
  for (auto* sub : {stats, gr, detect, perturb, npso}) shared(sub);
  gr->add_flag("--with-npso", flags.grscore_npso, "also score generated nPSO networks geometrically");
  perturb->add_option("--mode", flags.mode, "remove, add or none")->check(CLI::IsMember({"remove", "add", "none"}));

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    return run(command, flags);
  } catch (const lgi::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const lgi::DegenerateResultError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    // Parse errors, missing labels, disconnected inputs, bad configuration.
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
