#pragma once

#include "lgi/partition.hpp"

namespace lgi {

/// Normalized mutual information I(a,b) / sqrt(H(a) H(b)) with natural logs.
/// Identical groupings score 1 (including the single-community case); if the
/// partitions differ and either entropy is 0 the score is 0.
/// Throws std::invalid_argument when the node counts differ.
double nmi(const Partition& a, const Partition& b);

/// Mutual information I(a,b) in nats.
double mutual_information(const Partition& a, const Partition& b);

/// Entropy H(p) in nats.
double entropy(const Partition& p);

/// Expected mutual information under the permutation (hypergeometric) model
/// with the observed community sizes held fixed; exact sum.
double expected_mutual_information(const Partition& a, const Partition& b);

/// Adjusted mutual information (I - E[I]) / (sqrt(H(a) H(b)) - E[I]), clipped
/// to [-1, 1]. Identical groupings score 1; a single-community partition
/// against a different one scores 0.
double ami(const Partition& a, const Partition& b);

struct PartitionScore {
  double value = 0.0;
  bool adjusted = false;  ///< true when the chance-corrected score was used
};

/// Chance-corrected score when n / max(k_a, k_b) <= 100, plain NMI otherwise.
PartitionScore score_partition(const Partition& detected, const Partition& truth);

}  // namespace lgi
