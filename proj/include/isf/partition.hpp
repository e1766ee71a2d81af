#pragma once

#include "isf/qpoly.hpp"

#include <set>
#include <vector>

namespace isf {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;    // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
};

/// Fixed iteration order for partitions of equal size: reverse lexicographic,
/// so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). Partitions of smaller size
/// come first. Used as the map comparator everywhere so serialized output is
/// byte-stable.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// Composition: ordered sequence of positive parts.
using Composition = std::vector<int>;

Partition conjugate(const Partition& lambda);
Partition sort_to_partition(const Composition& alpha);

/// Conjugate of the partition of the composition (i_1, i_2-i_1, ..., n-i_k)
/// for I = {i_1 < ... < i_k} subset of [n-1].
Partition lambda_of_subset(const std::set<int>& I, int n);

/// All partitions of n in the fixed order above.
std::vector<Partition> enumerate_partitions(int n);

/// Sorted concatenation of two partitions.
Partition merge_partitions(const Partition& a, const Partition& b);

/// w_{lambda,mu}: sum over domino tabloids of the given shape and type of
/// prod_rows [length of leftmost domino in the row]_q. Dominoes of equal
/// length are indistinguishable; a tabloid is an assignment of an ordered
/// length sequence to each row.
QPoly domino_weight_sum(const Partition& shape, const Partition& type);

}  // namespace isf
