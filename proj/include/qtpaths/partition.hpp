#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qtpaths/integer.hpp"

namespace qtp {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts and drops zero parts; negative parts are an error.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part (0-based), 0 beyond the length.
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  std::vector<int> multiplicities() const;  // index i holds m_i, i >= 1
  Integer z() const;
  Partition transpose() const;
  // Union of parts (the partition for the product p_a p_b).
  Partition join(const Partition& o) const;
  // Remove one occurrence of part k; requires k to be a part.
  Partition remove_part(int k) const;
  int count_part(int k) const;

  // Order: by size, then larger parts first (so (2) precedes (1,1)).
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return b.parts_ < a.parts_;
  }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// lambda >= mu in dominance order; requires equal sizes.
bool dominates(const Partition& lambda, const Partition& mu);

// All partitions of n in decreasing lexicographic order; cached.
const std::vector<Partition>& partitions(int n);
int partition_count(int n);
// Position of lambda within partitions(|lambda|).
int partition_index(const Partition& lambda);

// Compositions of n into exactly k non-negative parts.
std::vector<std::vector<int>> weak_compositions(int n, int k);

}  // namespace qtp
