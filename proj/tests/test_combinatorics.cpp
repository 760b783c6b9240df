#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "peaklab/partition.hpp"
#include "peaklab/permutation.hpp"

using namespace peaklab;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

}  // namespace

TEST_CASE("partitions_of small values") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));

  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(9).size() == 30);
}

TEST_CASE("partitions are reverse-lex ordered and unique") {
  for (int n = 1; n <= 9; ++n) {
    auto parts = partitions_of(n);
    std::set<Partition> seen;
    for (size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].weight() == n);
      CHECK(seen.insert(parts[i]).second);
      if (i > 0) CHECK(parts[i] < parts[i - 1]);
    }
  }
}

TEST_CASE("partition statistics") {
  Partition lam({4, 3, 3, 1});
  CHECK(lam.weight() == 11);
  CHECK(lam.length() == 4);
  CHECK(lam.odd_count() == 3);
  CHECK(lam.even_count() == 1);
  CHECK(lam.odd_parts() == Partition({3, 3, 1}));
  CHECK(lam.even_parts() == Partition({4}));
  // z = 4 * 3^2*2! * 1 = 72
  CHECK(lam.centralizer_order() == 72);
  CHECK(lam.to_string() == "4,3,3,1");
  CHECK(Partition::parse("4,3,3,1") == lam);
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({0}));
}

TEST_CASE("odd part count has the weight parity") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(lam.odd_count() % 2 == lam.weight() % 2);
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition({1, 1, 1})) == 1);
  CHECK(class_size(Partition({2, 1})) == 3);
  CHECK(class_size(Partition({3, 1})) == 8);
  for (int n = 1; n <= 9; ++n) {
    Int total = 0;
    for (const auto& lam : partitions_of(n)) total += class_size(lam);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("cycle types") {
  CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
  CHECK(Permutation(v({2, 1, 3})).cycle_type() == Partition({2, 1}));
  CHECK(Permutation(v({2, 3, 1})).cycle_type() == Partition({3}));
  CHECK(Permutation(v({2, 3, 1})).odd_cycle_count() == 1);
  CHECK(Permutation(v({2, 1, 4, 3})).odd_cycle_count() == 0);
}

TEST_CASE("descents and peaks in type A") {
  CHECK(Permutation::identity(4).descent_set().empty());
  CHECK(Permutation(v({2, 1, 3})).descent_set() == v({1}));
  CHECK(Permutation(v({3, 2, 1})).descent_set() == v({1, 2}));

  CHECK(Permutation::identity(4).peak_set().empty());
  CHECK(Permutation(v({1, 3, 2})).peak_set() == v({2}));
  CHECK(Permutation(v({2, 1, 3})).peak_set() == v({1}));
}

TEST_CASE("peaks at i >= 2 are descents; position 1 matches the descent") {
  for (const auto& sigma : all_permutations(5)) {
    auto des = sigma.descent_set();
    auto peaks = sigma.peak_set();
    for (int p : peaks)
      CHECK(std::binary_search(des.begin(), des.end(), p));
    bool peak_at_1 = std::find(peaks.begin(), peaks.end(), 1) != peaks.end();
    bool descent_at_1 = !des.empty() && des.front() == 1;
    CHECK(peak_at_1 == descent_at_1);
  }
}

TEST_CASE("type-B descents") {
  CHECK(SignedPermutation(v({1, 2})).descent_set().empty());
  CHECK(SignedPermutation(v({-1})).descent_set() == v({0}));
  CHECK(SignedPermutation(v({2, 1})).descent_set() == v({1}));
  CHECK(SignedPermutation(v({-2, 1})).descent_set() == v({0}));
  CHECK(SignedPermutation(v({1, -2})).descent_set() == v({1}));
}

TEST_CASE("composition") {
  Permutation s(v({2, 1}));
  CHECK(s.compose(s) == Permutation::identity(2));
  SignedPermutation tau1 = SignedPermutation::tau(3, 1);
  CHECK(tau1.compose(tau1) == SignedPermutation::identity(3));
  // (+2,+1) o (-1,+2) = (-2,+1)
  SignedPermutation a(v({2, 1})), b(v({-1, 2}));
  CHECK(a.compose(b) == SignedPermutation(v({-2, 1})));
  CHECK_THROWS(a.compose(SignedPermutation::identity(3)));
}

TEST_CASE("inverse is two-sided") {
  std::mt19937 rng(7);
  auto elements = all_signed_permutations(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& w = elements[rng() % elements.size()];
    CHECK(w.compose(w.inverse()) == SignedPermutation::identity(4));
    CHECK(w.inverse().compose(w) == SignedPermutation::identity(4));
  }
}

TEST_CASE("forgetting signs") {
  CHECK(SignedPermutation(v({-1, 2})).forget_signs() ==
        Permutation::identity(2));
  CHECK(SignedPermutation(v({4, 3, -5, -1, 2})).forget_signs() ==
        Permutation(v({4, 3, 5, 1, 2})));
}

TEST_CASE("forget_signs is a surjective homomorphism with kernel 2^n") {
  for (int n = 1; n <= 4; ++n) {
    auto all = all_signed_permutations(n);
    std::set<Permutation> image;
    size_t kernel = 0;
    for (const auto& w : all) {
      image.insert(w.forget_signs());
      if (w.forget_signs() == Permutation::identity(n)) ++kernel;
    }
    CHECK(image.size() == all_permutations(n).size());
    CHECK(kernel == (size_t{1} << n));
  }
  std::mt19937 rng(11);
  auto elements = all_signed_permutations(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = elements[rng() % elements.size()];
    const auto& b = elements[rng() % elements.size()];
    CHECK(a.compose(b).forget_signs() ==
          a.forget_signs().compose(b.forget_signs()));
  }
}

TEST_CASE("window serialization") {
  CHECK(Permutation(v({2, 1, 3})).to_string() == "2,1,3");
  CHECK(Permutation::parse("2,1,3") == Permutation(v({2, 1, 3})));
  SignedPermutation w(v({4, 3, -5, -1, 2}));
  CHECK(w.to_string() == "+4,+3,-5,-1,+2");
  CHECK(SignedPermutation::parse("+4,+3,-5,-1,+2") == w);
  CHECK_THROWS(Permutation::parse("2,2,3"));
  CHECK_THROWS(SignedPermutation::parse("+1,+3"));
}

TEST_CASE("enumeration orders are lexicographic") {
  auto perms = all_permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(perms.front() == Permutation::identity(3));
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  auto signed_perms = all_signed_permutations(2);
  REQUIRE(signed_perms.size() == 8);
  CHECK(signed_perms.front() == SignedPermutation(v({-2, -1})));
  CHECK(std::is_sorted(signed_perms.begin(), signed_perms.end()));
}
