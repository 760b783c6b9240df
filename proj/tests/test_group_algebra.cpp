#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "peaklab/group_algebra.hpp"
#include "peaklab/idempotents.hpp"

using namespace peaklab;

namespace {

const GroupId kS2{GroupKind::SymmetricA, 2};
const GroupId kB2{GroupKind::HyperoctahedralB, 2};
const GroupId kB3{GroupKind::HyperoctahedralB, 3};

GroupAlgebraElement half_id_minus_s() {
  GroupAlgebraElement e(kS2);
  auto table = GroupTable::get(kS2);
  e.set_coefficient(table->index_of({1, 2}), Rat(1, 2));
  e.set_coefficient(table->index_of({2, 1}), Rat(-1, 2));
  return e;
}

GroupAlgebraElement half_id_plus_s() {
  GroupAlgebraElement e(kS2);
  auto table = GroupTable::get(kS2);
  e.set_coefficient(table->index_of({1, 2}), Rat(1, 2));
  e.set_coefficient(table->index_of({2, 1}), Rat(1, 2));
  return e;
}

GroupAlgebraElement random_element(GroupId id, std::mt19937& rng) {
  GroupAlgebraElement e(id);
  auto table = GroupTable::get(id);
  for (uint32_t i = 0; i < table->order(); ++i)
    e.set_coefficient(i, frac(static_cast<int>(rng() % 7) - 3,
                              1 + static_cast<int>(rng() % 4)));
  return e;
}

}  // namespace

TEST_CASE("one is a two-sided unit") {
  std::mt19937 rng(3);
  GroupAlgebraElement a = random_element(kB2, rng);
  GroupAlgebraElement one = GroupAlgebraElement::one(kB2);
  CHECK(multiply(a, one) == a);
  CHECK(multiply(one, a) == a);
}

TEST_CASE("projector onto the trivial S_2 isotypic is idempotent") {
  GroupAlgebraElement e = half_id_minus_s();
  CHECK(multiply(e, e) == e);
  GroupAlgebraElement f = half_id_plus_s();
  CHECK(multiply(f, f) == f);
  CHECK(multiply(e, f).is_zero());
}

TEST_CASE("multiplication is associative on random elements") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_element(kB2, rng);
    auto b = random_element(kB2, rng);
    auto c = random_element(kB2, rng);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
  CHECK_THROWS(multiply(random_element(kB2, rng), random_element(kB3, rng)));
}

TEST_CASE("sign-change projector") {
  GroupAlgebraElement e1 = z2n_projector(1);
  auto table = GroupTable::get(GroupId{GroupKind::HyperoctahedralB, 1});
  CHECK(e1.coefficient(table->index_of({1})) == Rat(1, 2));
  CHECK(e1.coefficient(table->index_of({-1})) == Rat(1, 2));
  for (int n = 1; n <= 3; ++n) {
    GroupAlgebraElement e = z2n_projector(n);
    CHECK(multiply(e, e) == e);
  }
  // centrality over all of B_2
  GroupAlgebraElement e2 = z2n_projector(2);
  auto t2 = GroupTable::get(kB2);
  for (uint32_t i = 0; i < t2->order(); ++i) {
    GroupAlgebraElement g(kB2);
    g.set_coefficient(i, Rat(1));
    CHECK(multiply(e2, g) == multiply(g, e2));
  }
}

TEST_CASE("centrality of the projector against random elements") {
  std::mt19937 rng(9);
  GroupAlgebraElement e = z2n_projector(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_element(kB2, rng);
    CHECK(multiply(e, x) == multiply(x, e));
  }
}

TEST_CASE("phi pushes B_n onto S_n") {
  GroupId b1{GroupKind::HyperoctahedralB, 1};
  auto table = GroupTable::get(b1);
  GroupAlgebraElement diff(b1);
  diff.set_coefficient(table->index_of({1}), Rat(1));
  diff.set_coefficient(table->index_of({-1}), Rat(-1));
  CHECK(phi_push(diff).is_zero());

  GroupAlgebraElement sum(b1);
  sum.set_coefficient(table->index_of({1}), Rat(1));
  sum.set_coefficient(table->index_of({-1}), Rat(1));
  GroupAlgebraElement two_id =
      GroupAlgebraElement::one(GroupId{GroupKind::SymmetricA, 1}).scaled(2);
  CHECK(phi_push(sum) == two_id);

  CHECK_THROWS(phi_push(GroupAlgebraElement::one(kS2)));
}

TEST_CASE("phi is an algebra homomorphism") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_element(kB3, rng);
    auto b = random_element(kB3, rng);
    CHECK(phi_push(multiply(a, b)) ==
          multiply(phi_push(a), phi_push(b)));
  }
}

TEST_CASE("phi absorbs the sign projector") {
  // phi(e_Gamma) = identity, hence phi(e_Gamma * x) = phi(x) on every basis
  // element.
  for (int n = 1; n <= 3; ++n) {
    GroupId id{GroupKind::HyperoctahedralB, n};
    GroupAlgebraElement e = z2n_projector(n);
    CHECK(phi_push(e) ==
          GroupAlgebraElement::one(GroupId{GroupKind::SymmetricA, n}));
    auto table = GroupTable::get(id);
    for (uint32_t i = 0; i < table->order(); ++i) {
      GroupAlgebraElement x(id);
      x.set_coefficient(i, Rat(1));
      CHECK(phi_push(multiply(e, x)) == phi_push(x));
    }
  }
}

TEST_CASE("family diagnostics") {
  CHECK(idempotent_family_check({GroupAlgebraElement::one(kS2)}).pass());
  CHECK(idempotent_family_check({half_id_minus_s(), half_id_plus_s()}).pass());
  // {1, 1} is neither orthogonal nor complete.
  FamilyDiagnosis bad = idempotent_family_check(
      {GroupAlgebraElement::one(kS2), GroupAlgebraElement::one(kS2)});
  CHECK(!bad.pass());
  CHECK(!bad.sum_is_identity);
  CHECK(!bad.pair_ok[0][1]);
}

TEST_CASE("left ideal characters over S_2") {
  // Class order for n=2: (2) then (1,1).
  ClassFunction regular = left_ideal_character(GroupAlgebraElement::one(kS2));
  CHECK(regular.value_at(Partition({2})) == 0);
  CHECK(regular.value_at(Partition({1, 1})) == 2);
  CHECK(regular == regular_character(2));

  ClassFunction trivial = left_ideal_character(half_id_plus_s());
  CHECK(trivial.value_at(Partition({2})) == 1);
  CHECK(trivial.value_at(Partition({1, 1})) == 1);

  ClassFunction sign = left_ideal_character(half_id_minus_s());
  CHECK(sign.value_at(Partition({2})) == -1);
  CHECK(sign.value_at(Partition({1, 1})) == 1);
  CHECK(sign.dimension() == 1);

  std::mt19937 rng(17);
  CHECK_THROWS(left_ideal_character(random_element(kS2, rng)));
}

TEST_CASE("characters of a complete family sum to the regular character") {
  for (int n = 1; n <= 4; ++n) {
    EulerianFamily fam = eulerian_A(n);
    ClassFunction sum(n, std::vector<Rat>(partitions_of(n).size(), Rat(0)));
    for (const auto& e : fam.elements) {
      ClassFunction chi = left_ideal_character(e);
      CHECK(is_integer(chi.dimension()));
      sum = sum + chi;
    }
    CHECK(sum == regular_character(n));
  }
  // Type-B side: dimensions sum to |B_n|.
  for (int n = 1; n <= 4; ++n) {
    EulerianFamily fam = eulerian_B(n);
    Rat total(0);
    for (const auto& e : fam.elements) total += left_ideal_dimension(e);
    CHECK(total == Rat(factorial(n) * (Int(1) << n)));
  }
}

TEST_CASE("json round trip with exact coefficients") {
  GroupAlgebraElement e(kB3);
  auto table = GroupTable::get(kB3);
  e.set_coefficient(table->index_of({2, -1, 3}), Rat(1, 2));
  e.set_coefficient(table->index_of({-3, 1, -2}), Rat(-5, 3));
  std::string text = e.to_json_string();
  CHECK(text.find("\"group\":\"B\"") != std::string::npos);
  CHECK(text.find("\"c\":\"1/2\"") != std::string::npos);
  CHECK(GroupAlgebraElement::from_json_string(text) == e);
}
