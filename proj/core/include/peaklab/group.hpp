#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "peaklab/partition.hpp"
#include "peaklab/permutation.hpp"

namespace peaklab {

enum class GroupKind : uint8_t { SymmetricA, HyperoctahedralB };

struct GroupId {
  GroupKind kind;
  int n;

  bool operator==(const GroupId&) const = default;
  std::string to_string() const;  // "S_3", "B_2"
  const char* tag() const { return kind == GroupKind::SymmetricA ? "S" : "B"; }
};

// Shared immutable element table for one (kind, n).  Elements are indexed by
// their position in the lexicographic window enumeration, so indices are a
// canonical serialization order.
class GroupTable {
 public:
  static std::shared_ptr<const GroupTable> get(GroupId id);

  GroupId id() const { return id_; }
  uint32_t order() const { return static_cast<uint32_t>(windows_.size()); }
  uint32_t identity_index() const { return identity_; }

  const std::vector<int>& window(uint32_t idx) const { return windows_[idx]; }
  uint32_t index_of(const std::vector<int>& window) const;
  std::string window_string(uint32_t idx) const;
  uint32_t index_of_string(const std::string& text) const;

  // Index of the composition (a then b applied as (a o b)(i) = a(b(i))).
  uint32_t compose(uint32_t a, uint32_t b) const;
  uint32_t inverse(uint32_t a) const;

  int descent_count(uint32_t idx) const { return descent_count_[idx]; }
  std::vector<int> descent_set(uint32_t idx) const;
  std::vector<int> peak_set(uint32_t idx) const;  // SymmetricA only

  // Conjugacy classes of S_n, indexed by cycle type in partitions_of(n)
  // order.  Only available for SymmetricA.
  uint32_t class_count() const;
  uint32_t class_of(uint32_t idx) const;
  const Partition& class_partition(uint32_t class_idx) const;
  uint32_t class_representative(uint32_t class_idx) const;

  // Index of hat(w) in the S_n table (HyperoctahedralB only).
  uint32_t forgotten_index(uint32_t idx,
                           const GroupTable& target_table) const;

 private:
  explicit GroupTable(GroupId id);

  std::vector<int> compose_windows(const std::vector<int>& a,
                                   const std::vector<int>& b) const;

  GroupId id_;
  std::vector<std::vector<int>> windows_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<uint32_t> inverse_;
  std::vector<int> descent_count_;
  uint32_t identity_ = 0;

  // Dense composition table, built only when order() is small enough.
  std::vector<uint16_t> compose_table_;
  bool has_table_ = false;

  // S_n class data.
  std::vector<uint32_t> class_of_;
  std::vector<Partition> class_partitions_;
  std::vector<uint32_t> class_reps_;
};

}  // namespace peaklab
