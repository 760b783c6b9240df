#pragma once

#include <string>
#include <vector>

#include "peaklab/partition.hpp"

namespace peaklab {

// Element of S_n in one-line notation; window values are 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window);  // validates bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }
  // 1-based application: image of i under the permutation.
  int operator()(int i) const { return window_[i - 1]; }
  const std::vector<int>& window() const { return window_; }

  // (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  Partition cycle_type() const;
  int cycle_count() const;
  int odd_cycle_count() const;  // cycles of odd length

  // {i in 1..n-1 : w_i > w_{i+1}}, sorted.
  std::vector<int> descent_set() const;
  int descent_count() const;
  // {i in 1..n-1 : w_{i-1} < w_i > w_{i+1}} with the convention w_0 = 0.
  std::vector<int> peak_set() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;  // "2,1,3"
  static Permutation parse(const std::string& text);

 private:
  std::vector<int> window_;
};

// Element of B_n: window of nonzero integers whose absolute values are a
// permutation of 1..n.  Entry w(i) < 0 means the i-th coordinate picks up a
// sign flip.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int n);
  // The sign change in coordinate i (the reflection through x_i = 0).
  static SignedPermutation tau(int n, int i);
  // Embeds sigma in S_n with all positive signs.
  static SignedPermutation from_permutation(const Permutation& sigma);

  int size() const { return static_cast<int>(window_.size()); }
  // Signed application, extended by w(-i) = -w(i).
  int operator()(int i) const;
  const std::vector<int>& window() const { return window_; }

  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  // hat(w)(i) = |w(i)|; a group homomorphism onto S_n.
  Permutation forget_signs() const;

  // Coxeter descent set with generators s_0 = sign change in position 1 and
  // s_i = (i,i+1): index 0 present iff w(1) < 0; index i >= 1 present iff
  // w(i) > w(i+1) as integers.  Indices in 0..n-1, sorted.
  std::vector<int> descent_set() const;
  int descent_count() const;

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

  std::string to_string() const;  // "+4,+3,-5,-1,+2"
  static SignedPermutation parse(const std::string& text);

 private:
  std::vector<int> window_;
};

// All elements in lexicographic order on windows (integer comparison).
std::vector<Permutation> all_permutations(int n);
std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace peaklab
