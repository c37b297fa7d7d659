#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entangle/errors.hpp"

namespace entangle {

/// A partition of {1..m} into k classes: a surjective label map, kept in
/// canonical form (classes numbered by first occurrence, labels 1-based).
class Partition {
  public:
    enum class Role { First, Later };

    explicit Partition(const std::vector<int>& labels);
    static Partition parse(std::string_view literal);

    int positions() const { return static_cast<int>(labels_.size()); }  // m
    int classes() const { return k_; }                                  // k
    const std::vector<int>& labels() const { return labels_; }
    /// 1-based positions of class j (j in 1..k), in increasing order.
    const std::vector<int>& classMembers(int j) const;
    int classOf(int position) const;        // position in 1..m
    int firstOccurrence(int j) const;       // class j in 1..k
    Role occurrenceRole(int position) const;

    bool isPairPartition() const;
    std::string literal() const;  // "1,2,1,2"

    bool operator==(const Partition& other) const { return labels_ == other.labels_; }

  private:
    std::vector<int> labels_;                 // canonical, values in 1..k
    std::vector<std::vector<int>> classes_;   // classes_[j-1] = positions of class j
    int k_ = 0;
};

/// All canonical pair partitions of {1..2k}; (2k-1)!! of them. k in 1..6.
std::vector<Partition> enumeratePairPartitions(int k);

}  // namespace entangle
