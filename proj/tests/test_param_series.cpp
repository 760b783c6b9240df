#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "peaklab/param_series.hpp"

using namespace peaklab;

namespace {

Partition part(const char* text) { return Partition::parse(text); }

}  // namespace

TEST_CASE("equivariant series terms") {
  ParamSeries ih3 = equivariant_series(3);
  REQUIRE(ih3.terms().size() == 3);
  CHECK(ih3.coefficient(0, 0) == L_lambda(part("1,1,1")));
  CHECK(ih3.coefficient(1, 1) == L_lambda(part("2,1")));
  CHECK(ih3.coefficient(1, 2) == L_lambda(part("3")));

  ParamSeries ih4 = equivariant_series(4);
  REQUIRE(ih4.terms().size() == 5);
  CHECK(ih4.coefficient(1, 1) == L_lambda(part("2,1,1")));
  CHECK(ih4.coefficient(2, 2) == L_lambda(part("2,2")));
  CHECK(ih4.coefficient(2, 3) == L_lambda(part("4")));

  // dimension row for n=4: 1 + 6tq + 8tq^2 + 3t^2q^2 + 6t^2q^3
  BivarPoly dims = bihilb_from_equivariant(4);
  BivarPoly expected{{{0, 0}, Rat(1)},
                     {{1, 1}, Rat(6)},
                     {{1, 2}, Rat(8)},
                     {{2, 2}, Rat(3)},
                     {{2, 3}, Rat(6)}};
  CHECK(dims == expected);
}

TEST_CASE("branching rule worked values") {
  // For n=3 both sides equal h2 + tq (3 p1^2 - p2)/2 + t q^2 p1^2.
  ParamSeries ih3 = equivariant_series(3);
  ParamSeries lhs = ih3.apply(restrict_sf);
  SymFunc tq_part = SymFunc::p(part("1,1"), Rat(3, 2)) -
                    SymFunc::p(part("2"), Rat(1, 2));
  ParamSeries expected = ParamSeries::term(0, 0, SymFunc::h(2)) +
                         ParamSeries::term(1, 1, tq_part) +
                         ParamSeries::term(1, 2, SymFunc::p(part("1,1")));
  CHECK(lhs == expected);
  CHECK(branching_defect(3).is_zero());
  CHECK(branching_defect(2).is_zero());
  for (int n = 2; n <= 6; ++n) CHECK(branching_defect(n).is_zero());
  CHECK_THROWS(branching_defect(1));
}

TEST_CASE("jordan components") {
  // P_0 at n=3 is L_(1,1,1) + L_(3) = p1 h2
  SymFunc expected = SymFunc::p(1) * SymFunc::h(2);
  CHECK(jordan_P(3, 0) == expected);
  CHECK(jordan_P(4, 1) ==
        L_lambda(part("2,1,1")) + L_lambda(part("4")));
  CHECK(jordan_P(4, -1).is_zero());
  CHECK(jordan_P(4, 3).is_zero());
  // parity recursions at small n
  for (int n = 3; n <= 7; n += 2)
    for (int m = 0; 2 * m <= n; ++m)
      CHECK(jordan_P(n, m) == induct_sf(jordan_P(n - 1, m)));
  for (int n = 2; n <= 8; n += 2)
    for (int m = 0; 2 * m <= n; ++m)
      CHECK(restrict_sf(jordan_P(n, m)) ==
            induct_sf(restrict_sf(jordan_P(n - 1, m)) +
                      jordan_P(n - 2, m - 1)));
}

TEST_CASE("bihilb routes agree and specialize") {
  for (int n = 0; n <= 7; ++n) {
    BivarPoly a = bihilb_from_equivariant(n);
    CHECK(a == bihilb_by_enumeration(n));
    CHECK(a == bihilb_by_recursion(n));
  }
  auto s4 = sheffer_column(4);
  REQUIRE(s4.size() == 3);
  CHECK(s4[0] + s4[1] + s4[2] == factorial(4));
}

TEST_CASE("sheffer column frozen values") {
  // t-exponent (4 - odd(sigma))/2: classes of S_4:
  //   (1,1,1,1): odd=4 -> t^0, size 1
  //   (2,1,1):   odd=2 -> t^1, size 6
  //   (2,2):     odd=0 -> t^2, size 3
  //   (3,1):     odd=2 -> t^1, size 8
  //   (4):       odd=0 -> t^2, size 6
  auto s4 = sheffer_column(4);
  REQUIRE(s4.size() == 3);
  CHECK(s4[0] == 1);
  CHECK(s4[1] == 14);
  CHECK(s4[2] == 9);
  // three-term recurrence
  for (int n = 2; n <= 8; ++n) {
    auto bn = sheffer_column(n);
    auto b1 = sheffer_column(n - 1);
    auto b2 = sheffer_column(n - 2);
    for (size_t d = 0; d < bn.size(); ++d) {
      Int expect = (d < b1.size() ? b1[d] : Int(0)) +
                   Int((n - 1)) * Int((n - 1)) *
                       (d >= 1 && d - 1 < b2.size() ? b2[d - 1] : Int(0));
      CHECK(bn[d] == expect);
    }
  }
}

TEST_CASE("generating function coefficients through order seven") {
  auto gf = bihilb_gf_coefficients(7);
  for (int n = 0; n <= 7; ++n)
    CHECK(gf[n] == bihilb_gf_term_from_series(n));
}

TEST_CASE("series json shape") {
  ParamSeries ih2 = equivariant_series(2);
  std::string text = ih2.to_json_string();
  CHECK(text.find("\"0\"") != std::string::npos);
  CHECK(text.find("\"p\"") != std::string::npos);
}
