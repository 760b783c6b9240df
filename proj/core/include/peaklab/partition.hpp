#pragma once

#include <compare>
#include <string>
#include <vector>

#include "peaklab/rational.hpp"

namespace peaklab {

// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are weakly decreasing and >= 1.
  explicit Partition(std::vector<int> parts);
  // Sorts the given positive parts into weakly decreasing order.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;              // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int odd_count() const;           // number of odd parts
  int even_count() const;          // number of even parts
  Partition odd_parts() const;     // subsequence of odd parts
  Partition even_parts() const;    // subsequence of even parts
  bool all_parts_odd() const;
  bool all_parts_even() const;
  int multiplicity(int part) const;

  // z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the class.
  Int centralizer_order() const;

  // Disjoint union of parts, re-sorted.
  Partition merged_with(const Partition& other) const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& other) const;

  // "3,1,1"; the empty partition serializes as "".
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
};

// All partitions of n, each once, in reverse-lexicographic order:
// (n), (n-1,1), ..., (1,1,...,1).  partitions_of(0) = { empty }.
std::vector<Partition> partitions_of(int n);

// n!/z_lambda, the number of permutations of cycle type lambda.
Int class_size(const Partition& lambda);

// Ordered pair of partitions with |plus| + |minus| = n when attached to a
// degree-n object (not enforced here; callers check the ambient weight).
struct DoublePartition {
  Partition plus;
  Partition minus;

  int weight() const { return plus.weight() + minus.weight(); }
  bool operator==(const DoublePartition&) const = default;
  auto operator<=>(const DoublePartition&) const = default;
  std::string to_string() const;  // "(3,1|2)" style: plus then minus
};

}  // namespace peaklab
