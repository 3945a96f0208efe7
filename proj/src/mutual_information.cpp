#include "lgi/mutual_information.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lgi {
namespace {

void require_same_nodes(const Partition& a, const Partition& b) {
  if (a.node_count() != b.node_count()) {
    throw std::invalid_argument("partitions cover different node counts");
  }
  if (a.node_count() == 0) throw std::invalid_argument("partitions are empty");
}

/// Non-zero cells of the contingency table.
std::vector<std::size_t> contingency_cells(const Partition& a, const Partition& b,
                                           std::vector<std::pair<CommunityId, CommunityId>>* keys = nullptr) {
  std::unordered_map<std::uint64_t, std::size_t> cells;
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    ++cells[(static_cast<std::uint64_t>(a[i]) << 32) | b[i]];
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> counts;
  counts.reserve(sorted.size());
  for (auto [key, count] : sorted) {
    counts.push_back(count);
    if (keys) keys->emplace_back(static_cast<CommunityId>(key >> 32), static_cast<CommunityId>(key & 0xffffffffU));
  }
  return counts;
}

double entropy_of_sizes(const std::vector<std::size_t>& sizes, double n) {
  double h = 0.0;
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / n;
    h -= p * std::log(p);
  }
  return std::max(h, 0.0);
}

}  // namespace

double entropy(const Partition& p) {
  return entropy_of_sizes(p.community_sizes(), static_cast<double>(p.node_count()));
}

double mutual_information(const Partition& a, const Partition& b) {
  require_same_nodes(a, b);
  const double n = static_cast<double>(a.node_count());
  std::vector<std::pair<CommunityId, CommunityId>> keys;
  const auto cells = contingency_cells(a, b, &keys);
  const auto size_a = a.community_sizes();
  const auto size_b = b.community_sizes();
  double mi = 0.0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const double nij = static_cast<double>(cells[c]);
    const double ai = static_cast<double>(size_a[keys[c].first]);
    const double bj = static_cast<double>(size_b[keys[c].second]);
    mi += nij / n * std::log(n * nij / (ai * bj));
  }
  return std::max(mi, 0.0);
}

double nmi(const Partition& a, const Partition& b) {
  require_same_nodes(a, b);
  if (a == b) return 1.0;
  const double ha = entropy(a);
  const double hb = entropy(b);
  if (ha <= 0.0 || hb <= 0.0) return 0.0;
  return std::clamp(mutual_information(a, b) / std::sqrt(ha * hb), 0.0, 1.0);
}

double expected_mutual_information(const Partition& a, const Partition& b) {
  require_same_nodes(a, b);
  const auto total = static_cast<std::int64_t>(a.node_count());
  const double n = static_cast<double>(total);
  const auto size_a = a.community_sizes();
  const auto size_b = b.community_sizes();
  const double lg_n = std::lgamma(n + 1.0);
  double emi = 0.0;
  for (std::size_t ai_raw : size_a) {
    const auto ai = static_cast<std::int64_t>(ai_raw);
    for (std::size_t bj_raw : size_b) {
      const auto bj = static_cast<std::int64_t>(bj_raw);
      const double lg_fixed = std::lgamma(ai + 1.0) + std::lgamma(bj + 1.0) + std::lgamma(n - ai + 1.0) +
                              std::lgamma(n - bj + 1.0) - lg_n;
      const std::int64_t lo = std::max<std::int64_t>(1, ai + bj - total);
      const std::int64_t hi = std::min(ai, bj);
      for (std::int64_t nij = lo; nij <= hi; ++nij) {
        const double x = static_cast<double>(nij);
        const double log_p = lg_fixed - std::lgamma(x + 1.0) - std::lgamma(ai - x + 1.0) -
                             std::lgamma(bj - x + 1.0) - std::lgamma(n - ai - bj + x + 1.0);
        emi += x / n * std::log(n * x / (static_cast<double>(ai) * static_cast<double>(bj))) * std::exp(log_p);
      }
    }
  }
  return emi;
}

double ami(const Partition& a, const Partition& b) {
  require_same_nodes(a, b);
  if (a == b) return 1.0;
  const double ha = entropy(a);
  const double hb = entropy(b);
  if (ha <= 0.0 || hb <= 0.0) return 0.0;
  const double mi = mutual_information(a, b);
  const double emi = expected_mutual_information(a, b);
  const double denom = std::sqrt(ha * hb) - emi;
  if (std::abs(denom) < 1e-15) return 0.0;
  return std::clamp((mi - emi) / denom, -1.0, 1.0);
}

PartitionScore score_partition(const Partition& detected, const Partition& truth) {
  require_same_nodes(detected, truth);
  const auto k = std::max(detected.community_count(), truth.community_count());
  const bool adjusted = static_cast<double>(detected.node_count()) / static_cast<double>(k) <= 100.0;
  return {adjusted ? ami(detected, truth) : nmi(detected, truth), adjusted};
}

}  // namespace lgi
