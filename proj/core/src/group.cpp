#include "peaklab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace peaklab {

namespace {

// Dense composition tables are worthwhile up to S_6/B_5 scale.
constexpr uint64_t kMaxTableEntries = 32u * 1024u * 1024u;

struct GroupIdLess {
  bool operator()(const GroupId& a, const GroupId& b) const {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.n < b.n;
  }
};

}  // namespace

std::string GroupId::to_string() const {
  return std::string(tag()) + "_" + std::to_string(n);
}

std::shared_ptr<const GroupTable> GroupTable::get(GroupId id) {
  static std::mutex mu;
  static std::map<GroupId, std::shared_ptr<const GroupTable>, GroupIdLess>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  auto table = std::shared_ptr<const GroupTable>(new GroupTable(id));
  cache.emplace(id, table);
  return table;
}

GroupTable::GroupTable(GroupId id) : id_(id) {
  if (id.n < 0) throw std::invalid_argument("group rank must be >= 0");
  if (id.kind == GroupKind::SymmetricA) {
    for (const auto& p : all_permutations(id.n)) windows_.push_back(p.window());
  } else {
    for (const auto& w : all_signed_permutations(id.n))
      windows_.push_back(w.window());
  }
  index_.reserve(windows_.size() * 2);
  for (uint32_t i = 0; i < windows_.size(); ++i) {
    std::string key;
    for (int v : windows_[i]) {
      key += std::to_string(v);
      key += ',';
    }
    index_.emplace(std::move(key), i);
  }

  std::vector<int> id_window(id.n);
  for (int i = 0; i < id.n; ++i) id_window[i] = i + 1;
  identity_ = index_of(id_window);

  descent_count_.resize(windows_.size());
  inverse_.resize(windows_.size());
  for (uint32_t i = 0; i < windows_.size(); ++i) {
    if (id.kind == GroupKind::SymmetricA) {
      Permutation p(windows_[i]);
      descent_count_[i] = p.descent_count();
      inverse_[i] = index_of(p.inverse().window());
    } else {
      SignedPermutation w(windows_[i]);
      descent_count_[i] = w.descent_count();
      inverse_[i] = index_of(w.inverse().window());
    }
  }

  uint64_t entries = static_cast<uint64_t>(order()) * order();
  if (entries > 0 && entries <= kMaxTableEntries && order() <= UINT16_MAX) {
    compose_table_.resize(entries);
    for (uint32_t a = 0; a < order(); ++a)
      for (uint32_t b = 0; b < order(); ++b)
        compose_table_[static_cast<uint64_t>(a) * order() + b] =
            static_cast<uint16_t>(
                index_of(compose_windows(windows_[a], windows_[b])));
    has_table_ = true;
  }

  if (id.kind == GroupKind::SymmetricA) {
    class_partitions_ = partitions_of(id.n);
    std::map<Partition, uint32_t> class_index;
    for (uint32_t c = 0; c < class_partitions_.size(); ++c)
      class_index.emplace(class_partitions_[c], c);
    class_of_.resize(order());
    class_reps_.assign(class_partitions_.size(), UINT32_MAX);
    for (uint32_t i = 0; i < order(); ++i) {
      uint32_t c = class_index.at(Permutation(windows_[i]).cycle_type());
      class_of_[i] = c;
      if (class_reps_[c] == UINT32_MAX) class_reps_[c] = i;
    }
  }
}

std::vector<int> GroupTable::compose_windows(const std::vector<int>& a,
                                             const std::vector<int>& b) const {
  std::vector<int> w(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    int v = b[i];
    w[i] = v > 0 ? a[v - 1] : -a[-v - 1];
  }
  return w;
}

uint32_t GroupTable::index_of(const std::vector<int>& window) const {
  std::string key;
  for (int v : window) {
    key += std::to_string(v);
    key += ',';
  }
  auto it = index_.find(key);
  if (it == index_.end())
    throw std::invalid_argument("window not in group table");
  return it->second;
}

std::string GroupTable::window_string(uint32_t idx) const {
  if (id_.kind == GroupKind::SymmetricA)
    return Permutation(windows_[idx]).to_string();
  return SignedPermutation(windows_[idx]).to_string();
}

uint32_t GroupTable::index_of_string(const std::string& text) const {
  if (id_.kind == GroupKind::SymmetricA)
    return index_of(Permutation::parse(text).window());
  return index_of(SignedPermutation::parse(text).window());
}

uint32_t GroupTable::compose(uint32_t a, uint32_t b) const {
  if (has_table_)
    return compose_table_[static_cast<uint64_t>(a) * order() + b];
  return index_of(compose_windows(windows_[a], windows_[b]));
}

uint32_t GroupTable::inverse(uint32_t a) const { return inverse_[a]; }

std::vector<int> GroupTable::descent_set(uint32_t idx) const {
  if (id_.kind == GroupKind::SymmetricA)
    return Permutation(windows_[idx]).descent_set();
  return SignedPermutation(windows_[idx]).descent_set();
}

std::vector<int> GroupTable::peak_set(uint32_t idx) const {
  if (id_.kind != GroupKind::SymmetricA)
    throw std::logic_error("peak sets are defined for S_n elements");
  return Permutation(windows_[idx]).peak_set();
}

uint32_t GroupTable::class_count() const {
  return static_cast<uint32_t>(class_partitions_.size());
}

uint32_t GroupTable::class_of(uint32_t idx) const {
  if (id_.kind != GroupKind::SymmetricA)
    throw std::logic_error("class data is stored for S_n only");
  return class_of_[idx];
}

const Partition& GroupTable::class_partition(uint32_t class_idx) const {
  return class_partitions_.at(class_idx);
}

uint32_t GroupTable::class_representative(uint32_t class_idx) const {
  return class_reps_.at(class_idx);
}

uint32_t GroupTable::forgotten_index(uint32_t idx,
                                     const GroupTable& target) const {
  if (id_.kind != GroupKind::HyperoctahedralB ||
      target.id_.kind != GroupKind::SymmetricA || target.id_.n != id_.n)
    throw std::invalid_argument("forgotten_index maps B_n onto S_n");
  return target.index_of(
      SignedPermutation(windows_[idx]).forget_signs().window());
}

}  // namespace peaklab
