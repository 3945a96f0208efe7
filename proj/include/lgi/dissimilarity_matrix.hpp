#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgi {

class Graph;

/// Dense symmetric N x N node dissimilarity matrix, row-major.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  explicit DissimilarityMatrix(std::size_t n, double fill = 0.0) : n_(n), d_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  std::span<double> row(std::size_t i) { return {d_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {d_.data() + i * n_, n_}; }

  std::span<const double> values() const noexcept { return d_; }

  double max_off_diagonal() const;
  double min_off_diagonal() const;

  friend bool operator==(const DissimilarityMatrix&, const DissimilarityMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

/// First violated invariant (symmetry, zero diagonal, finite positive
/// off-diagonal, and, when `check_triangle`, the triangle inequality within
/// relative tolerance `tol`), or nullopt if the matrix is valid.
std::optional<std::string> find_invariant_violation(const DissimilarityMatrix& d,
                                                    bool check_triangle = false,
                                                    double tol = 1e-9);

/// CSV export: header row of node names, then one row per node.
void write_csv(std::ostream& out, const DissimilarityMatrix& d, const Graph& g);

}  // namespace lgi
