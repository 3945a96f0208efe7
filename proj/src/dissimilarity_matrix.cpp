#include "lgi/dissimilarity_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "lgi/graph.hpp"

namespace lgi {

double DissimilarityMatrix::max_off_diagonal() const {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) best = std::max(best, (*this)(i, j));
  return best;
}

double DissimilarityMatrix::min_off_diagonal() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) best = std::min(best, (*this)(i, j));
  return best;
}

std::optional<std::string> find_invariant_violation(const DissimilarityMatrix& d, bool check_triangle,
                                                    double tol) {
  const std::size_t n = d.size();
  auto at = [](std::size_t i, std::size_t j) {
    std::ostringstream s;
    s << "(" << i << "," << j << ")";
    return s.str();
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) return "non-zero diagonal at " + at(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!std::isfinite(d(i, j))) return "non-finite entry at " + at(i, j);
      if (!(d(i, j) > 0.0)) return "non-positive entry at " + at(i, j);
      if (d(i, j) != d(j, i)) return "asymmetric entry at " + at(i, j);
    }
  }
  if (check_triangle) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          const double bound = d(i, k) + d(k, j);
          if (d(i, j) > bound * (1.0 + tol)) return "triangle inequality fails for " + at(i, j) + " via " + std::to_string(k);
        }
  }
  return std::nullopt;
}

void write_csv(std::ostream& out, const DissimilarityMatrix& d, const Graph& g) {
  const auto old_precision = out.precision(17);
  for (NodeId u = 0; u < d.size(); ++u) out << (u ? "," : "") << g.name(u);
  out << '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out << (j ? "," : "") << d(i, j);
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace lgi
