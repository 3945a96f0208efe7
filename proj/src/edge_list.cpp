#include "lgi/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgi/errors.hpp"

namespace lgi {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_comment_or_blank(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#' || tokens.front().front() == '%';
}

/// Calls fn(line_number, tokens) for every content line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!is_comment_or_blank(tokens)) fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

class NodeIndex {
 public:
  NodeId intern(std::string_view id) {
    auto [it, inserted] = index_.try_emplace(std::string(id), static_cast<NodeId>(names_.size()));
    if (inserted) names_.emplace_back(id);
    return it->second;
  }
  std::size_t size() const { return names_.size(); }
  std::vector<std::string> take_names() { return std::move(names_); }

 private:
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::string> names_;
};

LabeledGraph finish(NodeIndex& index, std::vector<std::pair<NodeId, NodeId>>& pairs,
                    std::optional<std::string_view> label_text) {
  if (pairs.empty()) throw ParseError(0, "edge list contains no edges");

  std::optional<Partition> truth;
  if (label_text) {
    std::vector<std::optional<std::string>> raw(index.size());
    for_each_line(*label_text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'nodeId communityId'");
      NodeId u = index.intern(tok[0]);
      if (u >= raw.size()) raw.resize(u + 1);
      if (raw[u] && *raw[u] != tok[1]) {
        throw ParseError(line_no, "conflicting labels for node '" + std::string(tok[0]) + "'");
      }
      raw[u] = std::string(tok[1]);
    });
    std::vector<std::string> labels;
    labels.reserve(raw.size());
    for (std::size_t u = 0; u < raw.size(); ++u) {
      if (!raw[u]) throw ParseError(0, "node index " + std::to_string(u) + " has no label");
      labels.push_back(*raw[u]);
    }
    truth = Partition(labels);
  }
  const std::size_t n = index.size();
  return {Graph(n, pairs, index.take_names()), std::move(truth)};
}

}  // namespace

LabeledGraph load_edge_list(std::string_view text, std::optional<std::string_view> label_text) {
  NodeIndex index;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    if (tok.size() != 2) throw ParseError(line_no, "expected two node identifiers");
    NodeId a = index.intern(tok[0]);
    NodeId b = index.intern(tok[1]);
    pairs.emplace_back(a, b);
  });
  return finish(index, pairs, label_text);
}

LabeledGraph load_thresholded_edge_list(std::string_view text, double min_weight,
                                        std::optional<std::string_view> label_text) {
  NodeIndex index;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    if (tok.size() != 3) throw ParseError(line_no, "expected 'from to weight'");
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), w);
    if (ec != std::errc{} || ptr != tok[2].data() + tok[2].size()) {
      throw ParseError(line_no, "weight is not a number");
    }
    // Nodes below threshold still exist in the network.
    NodeId a = index.intern(tok[0]);
    NodeId b = index.intern(tok[1]);
    if (w >= min_weight) pairs.emplace_back(a, b);
  });
  return finish(index, pairs, label_text);
}

LabeledGraph largest_connected_component(const Graph& g, const std::optional<Partition>& truth) {
  auto comp = connected_components(g);
  std::map<std::uint32_t, std::size_t> sizes;
  for (auto c : comp) ++sizes[c];
  // Components are numbered by lowest member, so the first maximum wins ties.
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  for (auto [c, s] : sizes) {
    if (s > best_size) {
      best = c;
      best_size = s;
    }
  }
  std::vector<NodeId> keep;
  keep.reserve(best_size);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (comp[u] == best) keep.push_back(u);
  }
  LabeledGraph out{g.induced_subgraph(keep), std::nullopt};
  if (truth) out.truth = truth->restrict_to(keep);
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.name(e.u) << ' ' << g.name(e.v) << '\n';
}

void write_labels(std::ostream& out, const Graph& g, const Partition& p) {
  for (NodeId u = 0; u < g.node_count(); ++u) out << g.name(u) << '\t' << p[u] << '\n';
}

}  // namespace lgi
