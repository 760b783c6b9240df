#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "peaklab/param_series.hpp"
#include "peaklab/subspace.hpp"
#include "peaklab/symfunc.hpp"

using namespace peaklab;

namespace {

Partition part(const char* text) { return Partition::parse(text); }

}  // namespace

TEST_CASE("traces on the (2,1) fixed component at n=3") {
  RingSpec gr{RingSpecKind::BVW_GR, 3};
  auto basis = fixed_basis_component(3, 2, 1);
  REQUIRE(basis.size() == 3);
  CHECK(subspace_trace(basis, SignedPermutation::identity(3), gr) == 3);
  CHECK(subspace_trace(basis, SignedPermutation::parse("+2,+1,+3"), gr) == -1);
  CHECK(subspace_trace(basis, SignedPermutation::parse("+2,+3,+1"), gr) == 0);
  // the same values through the symmetric-function route
  ClassFunction chi = subspace_character(basis, gr);
  CHECK(chi == character_of(L_lambda(part("2,1")), 3));
}

TEST_CASE("span violations are reported") {
  RingSpec gr{RingSpecKind::BVW_GR, 3};
  std::vector<Monomial> partial{Monomial::parse("u1*w12")};
  CHECK_THROWS(subspace_character(partial, gr));
}

TEST_CASE("fixed part of a flat-orbit component") {
  RingSpec bu{RingSpecKind::BU, 3};
  // mu = (1,1,1): the loopless-free component of the identity flat; its
  // fixed character is L_{(1,1,1)} + L_{(3)} (odd partitions with these odd
  // parts... only lambda = (1,1,1) has oddparts (1,1,1)).
  auto basis = flat_orbit_component(bu, part("1,1,1"));
  REQUIRE(basis.size() == 1);  // only the empty monomial
  ClassFunction chi = fixed_part_character(basis, bu);
  CHECK(chi == character_of(L_lambda(part("1,1,1")), 3));

  // mu = (2,1) is not odd: zero fixed part.
  auto mixed = flat_orbit_component(bu, part("2,1"));
  CHECK(!mixed.empty());
  ClassFunction zero = fixed_part_character(mixed, bu);
  for (const auto& value : zero.values()) CHECK(value == 0);

  // mu = (1): |mu| = 1, n - |mu| = 2 even; expect sum over lambda with odd
  // parts (1): lambda = (2,1) only... oddparts((2,1)) = (1) and
  // oddparts((1,2))... partitions of 3 with oddparts (1): (2,1).
  auto single = flat_orbit_component(bu, part("1"));
  ClassFunction chi1 = fixed_part_character(single, bu);
  CHECK(chi1 == character_of(L_lambda(part("2,1")), 3));
}

TEST_CASE("type-A ring rejects sign averaging") {
  RingSpec at{RingSpecKind::AT, 3};
  CHECK_THROWS(fixed_part_character(standard_basis(at), at));
}
