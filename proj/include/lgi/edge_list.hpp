#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "lgi/graph.hpp"
#include "lgi/partition.hpp"

namespace lgi {

struct LabeledGraph {
  Graph graph;
  std::optional<Partition> truth;
};

/// Parses an edge-list document and an optional label document.
///
/// Edge list: one edge per line, two whitespace-separated node identifiers.
/// Blank lines and lines whose first non-blank character is '#' or '%' are
/// ignored. Identifiers are arbitrary strings and are mapped to dense indices
/// in order of first appearance. Self-loops and repeated pairs (in either
/// direction) are dropped.
///
/// Labels: one "nodeId communityId" line per node (tab or spaces). Nodes that
/// appear only in the label document are added as isolated nodes. When a
/// label document is given, every node must receive exactly one label.
///
/// Throws ParseError on malformed lines, on an empty edge set and on missing
/// or conflicting labels.
LabeledGraph load_edge_list(std::string_view text,
                            std::optional<std::string_view> label_text = std::nullopt);

/// Weighted variant for survey-style datasets: lines are "from to weight",
/// direction is ignored and an undirected edge is kept when the weight in
/// either direction is >= min_weight.
LabeledGraph load_thresholded_edge_list(std::string_view text, double min_weight,
                                        std::optional<std::string_view> label_text = std::nullopt);

/// Restricts to the largest connected component (ties: the component holding
/// the lowest node index), reindexed in ascending original order. Labels are
/// restricted to the surviving nodes.
LabeledGraph largest_connected_component(const Graph& g,
                                         const std::optional<Partition>& truth = std::nullopt);

void write_edge_list(std::ostream& out, const Graph& g);
void write_labels(std::ostream& out, const Graph& g, const Partition& p);

}  // namespace lgi
