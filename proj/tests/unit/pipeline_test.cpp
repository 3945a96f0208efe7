#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "lgi/errors.hpp"
#include "lgi/pipeline.hpp"
#include "test_support.hpp"

namespace lgi {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lgi_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

ExperimentConfig karate_config() {
  ExperimentConfig cfg;
  cfg.data_dir = LGI_DATA_DIR;
  cfg.datasets.push_back(*find_dataset(cfg.data_dir, "karate"));
  return cfg;
}

TEST(Methods, NamesRoundTrip) {
  for (Kernel k : kAllKernels) EXPECT_EQ(parse_method(method_name(Method::ap(k))), Method::ap(k));
  EXPECT_EQ(method_name(Method::ap(Kernel::kRA)), "LGI-AP-RA");
  EXPECT_EQ(method_name(Method::ap(Kernel::kSP)), "SP-AP");
  EXPECT_EQ(parse_method("louvain"), Method::louvain());
  EXPECT_EQ(parse_method("ra"), Method::ap(Kernel::kRA));
  EXPECT_FALSE(parse_method("kmeans").has_value());
}

TEST(Config, ParsesKeys) {
  const auto cfg = parse_config(
      "# comment\n"
      "datasets = karate\n"
      "kernels = SP, RA\n"
      "methods = LGI-AP-RA, Louvain\n"
      "perturbation = add\n"
      "fraction = 0.2\n"
      "repetitions = 5\n"
      "seed = 42\n"
      "npso = 100:7:0.1:3:3, 200:5:0.3:2.5:4\n"
      "ap.damping = 0.8\n"
      "ap.tie_noise = false\n"
      "full = true\n"
      "dataset.toy.edges = toy.edges\n",
      "/base", [] {
        ExperimentConfig c;
        c.data_dir = LGI_DATA_DIR;
        return c;
      }());
  ASSERT_EQ(cfg.datasets.size(), 2U);
  EXPECT_EQ(cfg.datasets[0].name, "karate");
  EXPECT_EQ(cfg.datasets[1].edges, fs::path("/base/toy.edges"));
  EXPECT_EQ(cfg.kernels, (std::vector<Kernel>{Kernel::kSP, Kernel::kRA}));
  EXPECT_EQ(cfg.methods.size(), 2U);
  EXPECT_EQ(cfg.perturbation, Perturbation::kAdd);
  EXPECT_DOUBLE_EQ(cfg.fraction, 0.2);
  EXPECT_EQ(cfg.repetitions, 5U);
  EXPECT_EQ(cfg.seed, RngSeed{42});
  ASSERT_EQ(cfg.npso_grid.size(), 2U);
  EXPECT_EQ(cfg.npso_grid[1].n, 200U);
  EXPECT_DOUBLE_EQ(cfg.npso_grid[1].gamma, 2.5);
  EXPECT_EQ(cfg.npso_grid[1].communities, 4U);
  EXPECT_DOUBLE_EQ(cfg.ap.damping, 0.8);
  EXPECT_FALSE(cfg.ap.tie_noise);
  EXPECT_TRUE(cfg.full);
}

TEST(Config, ErrorsCarryLineNumbers) {
  try {
    parse_config("seed = 1\nbogus = 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW(parse_config("repetitions = many\n"), ParseError);
  EXPECT_THROW(parse_config("kernels = SP, XYZ\n"), ParseError);
  EXPECT_THROW(parse_config("no equals sign\n"), ParseError);
  EXPECT_THROW(parse_npso_params("100:7:0.1"), std::invalid_argument);
}

TEST(Config, DefaultsAndGrid) {
  ExperimentConfig cfg;
  EXPECT_EQ(cfg.effective_methods().size(), 7U);
  EXPECT_EQ(default_npso_grid(false).size(), 18U);
  EXPECT_EQ(default_npso_grid(true).size(), 27U);
  cfg.fraction = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Registry, KnownDatasets) {
  const auto all = known_datasets("d");
  EXPECT_EQ(all.size(), 8U);
  const auto op = find_dataset("d", "opsahl_8");
  ASSERT_TRUE(op);
  EXPECT_EQ(op->min_weight, 2.0);
  EXPECT_FALSE(find_dataset("d", "nothing").has_value());
  DatasetSpec missing{"x", "/nonexistent/x.edges", std::nullopt, std::nullopt};
  EXPECT_THROW(load_dataset(missing), IoError);
}

TEST(Csv, ResultRowsSortAndSummarise) {
  std::vector<ResultRow> rows{
      {"b", "SP", "GR", ResultRow::Kind::kRun, 1, 0.5, ""},
      {"a", "RA", "GR", ResultRow::Kind::kRun, 0, 1.0, ""},
      {"b", "SP", "GR", ResultRow::Kind::kRun, 0, 0.7, ""},
      {"b", "SP", "GR", ResultRow::Kind::kRun, 2, std::nullopt, "failed=generation"},
  };
  add_summaries(rows);
  sort_rows(rows);
  std::ostringstream out;
  write_results_csv(out, rows);
  EXPECT_EQ(out.str(),
            "dataset,method,metric,repetition,value,extra\n"
            "a,RA,GR,0,1.000000,\n"
            "a,RA,GR,mean,1.000000,n=1\n"
            "a,RA,GR,stderr,0.000000,n=1\n"
            "b,SP,GR,0,0.700000,\n"
            "b,SP,GR,1,0.500000,\n"
            "b,SP,GR,2,NA,failed=generation\n"
            "b,SP,GR,mean,0.600000,n=2\n"
            "b,SP,GR,stderr,0.100000,n=2\n");
}

TEST(Commands, StatsOnKarateAndTriangle) {
  auto cfg = karate_config();
  const fs::path dir = scratch_dir("stats");
  write_file(dir / "tri.edges", "a b\nb c\nc a\n");
  cfg.datasets.push_back({"tri", dir / "tri.edges", std::nullopt, std::nullopt});
  std::ostringstream out;
  write_stats_csv(out, cmd_stats(cfg));
  EXPECT_EQ(out.str(),
            "dataset,N,E,C,gamma,m,kmin\n"
            "karate,34,78,0.5879,2.0943,2.2941,2\n"
            "tri,3,3,1.0000,NA,1.0000,NA\n");
}

TEST(Commands, EmptyDatasetListGivesHeaderOnly) {
  ExperimentConfig cfg;
  std::ostringstream out;
  write_results_csv(out, cmd_detect(cfg));
  EXPECT_EQ(out.str(), "dataset,method,metric,repetition,value,extra\n");
}

TEST(Commands, DetectNeedsLabels) {
  ExperimentConfig cfg;
  const fs::path dir = scratch_dir("nolabels");
  write_file(dir / "x.edges", "a b\nb c\n");
  cfg.datasets.push_back({"x", dir / "x.edges", std::nullopt, std::nullopt});
  EXPECT_THROW(cmd_detect(cfg), DataError);
}

TEST(Commands, GrscoreOnKarate) {
  auto cfg = karate_config();
  const auto rows = cmd_grscore(cfg);
  ASSERT_EQ(rows.size(), 6U);
  for (const auto& r : rows) {
    if (r.method == "SP") EXPECT_DOUBLE_EQ(*r.value, 1.0);
    if (r.method == "RA") EXPECT_NEAR(*r.value, 0.971479500891, 1e-11);
  }
}

TEST(Commands, UnperturbedRunsMatchDetect) {
  auto cfg = karate_config();
  cfg.methods = {Method::ap(Kernel::kEBC), Method::louvain()};
  cfg.perturbation = Perturbation::kNone;
  cfg.repetitions = 2;
  const auto detect = cmd_detect(cfg);
  const auto perturb = cmd_perturb(cfg);
  for (const auto& d : detect) {
    for (const auto& p : perturb) {
      if (p.method == d.method && p.kind == ResultRow::Kind::kRun && d.method != "Louvain") {
        EXPECT_EQ(p.value, d.value);
      }
    }
  }
  cfg.fraction = 0.0;
  cfg.perturbation = Perturbation::kRemove;
  const auto zero = cmd_perturb(cfg);
  for (const auto& p : zero)
    if (p.method == "LGI-AP-EBC" && p.kind == ResultRow::Kind::kRun) EXPECT_EQ(p.value, detect[0].value);
}

TEST(Commands, PerturbIsDeterministic) {
  auto cfg = karate_config();
  cfg.methods = {Method::ap(Kernel::kRA)};
  cfg.repetitions = 3;
  std::ostringstream a, b;
  write_results_csv(a, cmd_perturb(cfg));
  write_results_csv(b, cmd_perturb(cfg));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("edges=70"), std::string::npos);
}

TEST(Commands, NpsoWritesNetworksAndIsDeterministic) {
  ExperimentConfig cfg;
  cfg.methods = {Method::ap(Kernel::kRA)};
  cfg.repetitions = 2;
  cfg.npso_grid = {parse_npso_params("60:3:0.2:3:2")};
  const fs::path dir = scratch_dir("npso");
  const auto first = cmd_npso(cfg, dir);
  const auto second = cmd_npso(cfg, {});
  std::ostringstream a, b;
  write_results_csv(a, first);
  write_results_csv(b, second);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_TRUE(fs::exists(dir / "npso_N60_m3_T0.2_g3_C2_rep0.edges"));
  EXPECT_TRUE(fs::exists(dir / "npso_N60_m3_T0.2_g3_C2_rep1.coords"));
  const auto lg = load_edge_list(testing::read_text((dir / "npso_N60_m3_T0.2_g3_C2_rep0.edges").string()),
                                 testing::read_text((dir / "npso_N60_m3_T0.2_g3_C2_rep0.labels").string()));
  EXPECT_EQ(lg.graph.node_count(), 60U);
  EXPECT_EQ(lg.truth->community_count(), 2U);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LGI_BENCH_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  const std::string data = std::string("--data-dir ") + LGI_DATA_DIR;
  EXPECT_EQ(run_cli("stats --dataset karate " + data), 0);
  EXPECT_EQ(run_cli("stats --config /nonexistent/run.cfg"), 2);
  EXPECT_EQ(run_cli("stats --dataset polblogs --data-dir /nonexistent"), 2);
  const fs::path dir = scratch_dir("cli");
  write_file(dir / "bad.cfg", "datasets = karate\nwhat = 1\n");
  EXPECT_EQ(run_cli("stats --config " + (dir / "bad.cfg").string()), 3);
  write_file(dir / "nolabels.cfg", "dataset.x.edges = x.edges\n");
  write_file(dir / "x.edges", "a b\nb c\n");
  EXPECT_EQ(run_cli("detect --config " + (dir / "nolabels.cfg").string()), 3);
  EXPECT_EQ(run_cli("grscore --dataset karate --kernels SP,RA --out " + (dir / "out").string() + " " + data), 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "grscore.csv"));
}

}  // namespace
}  // namespace lgi
