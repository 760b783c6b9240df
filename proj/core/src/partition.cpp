#include "peaklab/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peaklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition part < 1");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts not weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::odd_count() const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2; }));
}

int Partition::even_count() const { return length() - odd_count(); }

Partition Partition::odd_parts() const {
  std::vector<int> out;
  for (int p : parts_)
    if (p % 2) out.push_back(p);
  return Partition(std::move(out));
}

Partition Partition::even_parts() const {
  std::vector<int> out;
  for (int p : parts_)
    if (p % 2 == 0) out.push_back(p);
  return Partition(std::move(out));
}

bool Partition::all_parts_odd() const { return even_count() == 0; }
bool Partition::all_parts_even() const { return odd_count() == 0; }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Int Partition::centralizer_order() const {
  Int z = 1;
  size_t i = 0;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    int mult = static_cast<int>(j - i);
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts_[i]),
                  static_cast<unsigned long>(mult));
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

Partition Partition::merged_with(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition::from_unsorted(std::move(all));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  return std::lexicographical_compare_three_way(
      parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad partition: " + text);
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Reverse-lexicographic enumeration: extend with parts bounded by the last.
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Int class_size(const Partition& lambda) {
  return factorial(lambda.weight()) / lambda.centralizer_order();
}

std::string DoublePartition::to_string() const {
  return "(" + plus.to_string() + "|" + minus.to_string() + ")";
}

}  // namespace peaklab
