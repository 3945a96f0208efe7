#include "lgi/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lgi/errors.hpp"

namespace lgi {
namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return buf.str();
}

struct Registered {
  const char* name;
  std::optional<double> min_weight;
};

// Survey weights: Opsahl_8 links from "seldom" (2) up, the others from 4 up.
constexpr Registered kRegistry[] = {
    {"karate", std::nullopt},   {"opsahl_8", 2.0},        {"opsahl_9", 4.0},  {"opsahl_10", 4.0},
    {"opsahl_11", 4.0},         {"polbooks", std::nullopt}, {"football", std::nullopt},
    {"polblogs", std::nullopt},
};

}  // namespace

std::string method_name(const Method& m) {
  if (!m.kernel) return "Louvain";
  switch (*m.kernel) {
    case Kernel::kRA: return "LGI-AP-RA";
    case Kernel::kEBC: return "LGI-AP-EBC";
    default: return std::string(kernel_name(*m.kernel)) + "-AP";
  }
}

std::optional<Method> parse_method(std::string_view name) {
  std::string key = upper(trim(name));
  if (key == "LOUVAIN") return Method::louvain();
  if (key.rfind("LGI-AP-", 0) == 0) key = key.substr(7);
  if (key.size() > 3 && key.compare(key.size() - 3, 3, "-AP") == 0) key.resize(key.size() - 3);
  if (auto k = parse_kernel(key)) return Method::ap(*k);
  return std::nullopt;
}

std::vector<DatasetSpec> known_datasets(const std::filesystem::path& data_dir) {
  std::vector<DatasetSpec> out;
  for (const auto& r : kRegistry) {
    DatasetSpec spec;
    spec.name = r.name;
    spec.edges = data_dir / (spec.name + (r.min_weight ? ".weights" : ".edges"));
    spec.labels = data_dir / (spec.name + ".labels");
    spec.min_weight = r.min_weight;
    out.push_back(std::move(spec));
  }
  return out;
}

std::optional<DatasetSpec> find_dataset(const std::filesystem::path& data_dir, std::string_view name) {
  const std::string key = upper(trim(name));
  for (auto& spec : known_datasets(data_dir)) {
    if (upper(spec.name) == key) return spec;
  }
  return std::nullopt;
}

LabeledGraph load_dataset(const DatasetSpec& spec) {
  const std::string edges = read_file(spec.edges);
  std::optional<std::string> labels;
  if (spec.labels) labels = read_file(*spec.labels);
  std::optional<std::string_view> label_view;
  if (labels) label_view = *labels;
  try {
    LabeledGraph raw = spec.min_weight ? load_thresholded_edge_list(edges, *spec.min_weight, label_view)
                                       : load_edge_list(edges, label_view);
    return largest_connected_component(raw.graph, raw.truth);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), spec.name + ": " + e.what());
  }
}

void ExperimentConfig::validate() const {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (!(fraction >= 0.0 && fraction < 1.0)) throw std::invalid_argument("fraction must lie in [0, 1)");
  if (kernels.empty()) throw std::invalid_argument("no kernels selected");
  ap.validate();
  for (const auto& p : npso_grid) p.validate();
}

std::vector<Method> ExperimentConfig::effective_methods() const {
  if (!methods.empty()) return methods;
  std::vector<Method> all;
  for (Kernel k : {Kernel::kRA, Kernel::kEBC, Kernel::kJaccard, Kernel::kCN, Kernel::kESP, Kernel::kSP}) {
    all.push_back(Method::ap(k));
  }
  all.push_back(Method::louvain());
  return all;
}

std::vector<NpsoParams> ExperimentConfig::effective_npso_grid() const {
  return npso_grid.empty() ? default_npso_grid(full) : npso_grid;
}

std::vector<NpsoParams> default_npso_grid(bool full) {
  std::vector<std::size_t> sizes{100, 500};
  if (full) sizes.push_back(1000);
  std::vector<NpsoParams> grid;
  for (std::size_t n : sizes) {
    for (double t : {0.1, 0.3, 0.5}) {
      for (std::size_t c : {3, 6, 9}) {
        NpsoParams p;
        p.n = n;
        p.m = 7;
        p.temperature = t;
        p.gamma = 3.0;
        p.communities = c;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = trim(text.substr(pos, end - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = end + 1;
  }
  return out;
}

NpsoParams parse_npso_params(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(':', pos);
    parts.push_back(trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (parts.size() != 5) throw std::invalid_argument("nPSO entry must be N:m:T:gamma:C");
  auto n = parse_number<std::size_t>(parts[0]);
  auto m = parse_number<std::size_t>(parts[1]);
  auto t = parse_number<double>(parts[2]);
  auto g = parse_number<double>(parts[3]);
  auto c = parse_number<std::size_t>(parts[4]);
  if (!n || !m || !t || !g || !c) throw std::invalid_argument("nPSO entry must be N:m:T:gamma:C");
  NpsoParams p;
  p.n = *n;
  p.m = *m;
  p.temperature = *t;
  p.gamma = *g;
  p.communities = *c;
  p.validate();
  return p;
}

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir, ExperimentConfig cfg) {
  auto resolve = [&](std::string_view p) {
    std::filesystem::path path{std::string(p)};
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };
  std::map<std::string, DatasetSpec> adhoc;
  std::vector<std::string> adhoc_order;
  std::vector<std::string> registry_names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    auto bad = [&](const std::string& why) { return ParseError(line_no, key + ": " + why); };
    try {
      if (key == "datasets") {
        for (auto& n : split_list(value)) registry_names.push_back(n);
      } else if (key.rfind("dataset.", 0) == 0) {
        const auto dot = key.rfind('.');
        if (dot <= 8) throw bad("expected dataset.<name>.<field>");
        const std::string name = key.substr(8, dot - 8);
        const std::string field = key.substr(dot + 1);
        if (!adhoc.count(name)) adhoc_order.push_back(name);
        DatasetSpec& spec = adhoc[name];
        spec.name = name;
        if (field == "edges") {
          spec.edges = resolve(value);
        } else if (field == "labels") {
          spec.labels = resolve(value);
        } else if (field == "min_weight") {
          auto w = parse_number<double>(value);
          if (!w) throw bad("not a number");
          spec.min_weight = *w;
        } else {
          throw bad("unknown dataset field");
        }
      } else if (key == "kernels") {
        cfg.kernels.clear();
        for (auto& n : split_list(value)) {
          auto k = parse_kernel(n);
          if (!k) throw bad("unknown kernel '" + n + "'");
          cfg.kernels.push_back(*k);
        }
      } else if (key == "methods") {
        cfg.methods.clear();
        for (auto& n : split_list(value)) {
          auto m = parse_method(n);
          if (!m) throw bad("unknown method '" + n + "'");
          cfg.methods.push_back(*m);
        }
      } else if (key == "perturbation") {
        const std::string v = upper(value);
        if (v == "NONE") {
          cfg.perturbation = Perturbation::kNone;
        } else if (v == "REMOVE") {
          cfg.perturbation = Perturbation::kRemove;
        } else if (v == "ADD") {
          cfg.perturbation = Perturbation::kAdd;
        } else {
          throw bad("expected none, remove or add");
        }
      } else if (key == "fraction") {
        auto f = parse_number<double>(value);
        if (!f) throw bad("not a number");
        cfg.fraction = *f;
      } else if (key == "repetitions") {
        auto r = parse_number<std::size_t>(value);
        if (!r) throw bad("not a non-negative integer");
        cfg.repetitions = *r;
      } else if (key == "seed") {
        auto s = parse_number<std::uint64_t>(value);
        if (!s) throw bad("not an unsigned integer");
        cfg.seed = RngSeed{*s};
      } else if (key == "npso") {
        cfg.npso_grid.clear();
        for (auto& entry : split_list(value)) cfg.npso_grid.push_back(parse_npso_params(entry));
      } else if (key == "ap.damping") {
        auto v = parse_number<double>(value);
        if (!v) throw bad("not a number");
        cfg.ap.damping = *v;
      } else if (key == "ap.max_iterations" || key == "ap.convergence_window" ||
                 key == "ap.preference_search_steps") {
        auto v = parse_number<int>(value);
        if (!v) throw bad("not an integer");
        if (key == "ap.max_iterations") cfg.ap.max_iterations = *v;
        if (key == "ap.convergence_window") cfg.ap.convergence_window = *v;
        if (key == "ap.preference_search_steps") cfg.ap.preference_search_steps = *v;
      } else if (key == "ap.tie_noise" || key == "full") {
        const std::string v = upper(value);
        if (v != "TRUE" && v != "FALSE") throw bad("expected true or false");
        (key == "full" ? cfg.full : cfg.ap.tie_noise) = v == "TRUE";
      } else if (key == "output_dir") {
        cfg.output_dir = resolve(value);
      } else if (key == "data_dir") {
        cfg.data_dir = resolve(value);
      } else {
        throw bad("unknown key");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, key + ": " + e.what());
    }
    if (end == text.size()) break;
  }

  for (const auto& name : registry_names) {
    auto spec = find_dataset(cfg.data_dir, name);
    if (!spec) throw ParseError(0, "unknown dataset '" + name + "'");
    cfg.datasets.push_back(std::move(*spec));
  }
  for (const auto& name : adhoc_order) {
    const DatasetSpec& spec = adhoc[name];
    if (spec.edges.empty()) throw ParseError(0, "dataset '" + name + "' has no edges file");
    cfg.datasets.push_back(spec);
  }
  return cfg;
}

}  // namespace lgi
