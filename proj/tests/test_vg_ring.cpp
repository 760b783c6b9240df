#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "peaklab/vg_ring.hpp"

using namespace peaklab;

namespace {

const RingSpec kAT3{RingSpecKind::AT, 3};
const RingSpec kAT4{RingSpecKind::AT, 4};
const RingSpec kBU2{RingSpecKind::BU, 2};
const RingSpec kBVW2{RingSpecKind::BVW, 2};
const RingSpec kBVW3{RingSpecKind::BVW, 3};
const RingSpec kGR2{RingSpecKind::BVW_GR, 2};
const RingSpec kGR3{RingSpecKind::BVW_GR, 3};

Polynomial poly(const char* text) { return Polynomial::parse(text); }
Monomial mono(const char* text) { return Monomial::parse(text); }

Polynomial random_poly(RingSpec spec, std::mt19937& rng, int terms = 4) {
  auto basis = standard_basis(spec);
  Polynomial p;
  for (int t = 0; t < terms; ++t)
    p.add_term(basis[rng() % basis.size()],
               frac(static_cast<int>(rng() % 9) - 4, 1 + rng() % 3));
  return p;
}

}  // namespace

TEST_CASE("variable order and text forms") {
  CHECK(Variable::t(1, 2) < Variable::t(1, 3));
  CHECK(Variable::t(1, 3) < Variable::t(2, 3));
  CHECK(Variable::u(2) < Variable::v(1, 2));
  CHECK(Variable::v(1, 2) < Variable::w(1, 2));
  CHECK(Variable::w(1, 2) < Variable::u(3));
  CHECK(Variable::w(5, 10).to_string() == "w5,10");
  CHECK(Variable::parse("w5,10") == Variable::w(5, 10));
  CHECK(Variable::parse("u+12") == Variable::uplus(1, 2));
  CHECK(mono("u1*w12*w13").to_string() == "u1*w12*w13");
  CHECK(mono("v12^2").exponent(Variable::v(1, 2)) == 2);
  CHECK_THROWS(Variable::parse("t312"));
}

TEST_CASE("relation lists match the tabulated counts and rows") {
  auto at3 = relations(kAT3);
  int squares = 0, triples = 0;
  for (const auto& rel : at3)
    (rel.poly.term_count() == 1 ? squares : triples) += 1;
  CHECK(squares == 3);
  CHECK(triples == 1);

  auto has = [](const std::vector<Relation>& rels, const Polynomial& p) {
    return std::any_of(rels.begin(), rels.end(),
                       [&p](const Relation& r) { return r.poly == p; });
  };
  CHECK(has(relations(kBVW2), poly("u1*v12 - 2*u1*u2 - u2*w12")));
  CHECK(has(relations(kGR2), poly("u1*v12 - u2*w12")));
  CHECK(has(relations(kBVW3), poly("v12*w23 - w12*w13 - v13*v23")));
  CHECK(!has(relations(kGR2), poly("u1*v12 - 2*u1*u2 - u2*w12")));
}

TEST_CASE("recorded initial terms are the leading monomials") {
  // Context construction asserts initial == leading term; spot-check a few.
  for (RingSpec spec : {kAT4, RingSpec{RingSpecKind::BU, 4},
                        RingSpec{RingSpecKind::BVW, 4},
                        RingSpec{RingSpecKind::BVW_GR, 4}})
    for (const auto& rel : relations(spec))
      CHECK(rel.poly.leading_monomial() == rel.initial);
  auto at3 = relations(kAT3);
  bool found = false;
  for (const auto& rel : at3)
    if (rel.poly == poly("t12*t23 - t13*t12 - t13*t23")) {
      found = true;
      CHECK(rel.initial == mono("t13*t23"));
    }
  CHECK(found);
}

TEST_CASE("normal forms kill the tabulated relations") {
  CHECK(normal_form(poly("t12^2"), kAT3).is_zero());
  CHECK(normal_form(poly("v12*w12"), kBVW2).is_zero());
  CHECK(normal_form(mono("u2*w12"), kBVW2) == poly("u1*v12 - 2*u1*u2"));
  for (RingSpec spec : {kAT4, RingSpec{RingSpecKind::BU, 4},
                        RingSpec{RingSpecKind::BVW, 4},
                        RingSpec{RingSpecKind::BVW_GR, 4}}) {
    for (const auto& rel : relations(spec)) {
      CHECK(normal_form(rel.poly, spec).is_zero());
      // monomial multiples reduce to zero as well
      Polynomial scaled;
      for (const auto& [m, c] : rel.poly.terms())
        scaled.add_term(m.multiplied_by(Monomial::var(alphabet(spec).front())),
                        c);
      CHECK(normal_form(scaled, spec).is_zero());
    }
  }
  CHECK_THROWS(normal_form(poly("t12"), kBVW2));
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937 rng(23);
  for (RingSpec spec : {kAT4, kBVW3, kGR3}) {
    for (int trial = 0; trial < 8; ++trial) {
      Polynomial p = random_poly(spec, rng);
      Polynomial q = random_poly(spec, rng);
      Polynomial np = normal_form(p, spec);
      CHECK(normal_form(np, spec) == np);
      CHECK(normal_form(p + q, spec) == np + normal_form(q, spec));
      // products of standard monomials reduce consistently
      Polynomial prod = normal_form(p * q, spec);
      CHECK(normal_form(np * normal_form(q, spec), spec) == prod);
    }
  }
}

TEST_CASE("standard bases") {
  auto at3 = standard_basis(kAT3);
  CHECK(at3.size() == 6);
  std::set<Monomial, MonomialLess> expected{
      mono("1"),       mono("t12"),     mono("t13"),
      mono("t23"),     mono("t12*t13"), mono("t12*t23")};
  CHECK(std::set<Monomial, MonomialLess>(at3.begin(), at3.end()) == expected);

  auto bu1 = standard_basis(RingSpec{RingSpecKind::BU, 1});
  CHECK(bu1.size() == 2);
  CHECK(standard_basis(kBVW2).size() == 8);
  // no monomial is reducible
  for (const auto& m : standard_basis(kBVW3))
    CHECK(normal_form(m, kBVW3) == Polynomial::from_monomial(m));
}

TEST_CASE("hilbert series") {
  // (1+t)(1+2t)(1+3t) = 1 + 6t + 11t^2 + 6t^3
  CHECK(hilbert_series(kAT4) ==
        std::vector<Int>{Int(1), Int(6), Int(11), Int(6)});
  CHECK(hilbert_series(kBU2) == std::vector<Int>{Int(1), Int(4), Int(3)});
  // bigraded b-vw-gr at n=3: (1+t)(1+t(1+2q))(1+t(1+4q))
  auto big = bigraded_hilbert_series(kGR3);
  CHECK(big[{0, 0}] == 1);
  CHECK(big[{1, 0}] == 3);
  CHECK(big[{1, 1}] == 6);
  CHECK(big[{2, 0}] == 3);
  CHECK(big[{2, 1}] == 12);
  CHECK(big[{2, 2}] == 8);
  CHECK(big[{3, 0}] == 1);
  CHECK(big[{3, 1}] == 6);
  CHECK(big[{3, 2}] == 8);
}

TEST_CASE("change of basis") {
  CHECK(change_basis_vw_to_upm(poly("v12")) == poly("u+12 + u-12"));
  CHECK(change_basis_upm_to_vw(poly("u+12")) ==
        poly("1/2*v12 + 1/2*w12"));
  std::mt19937 rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    Polynomial p = random_poly(kBVW3, rng);
    CHECK(change_basis_upm_to_vw(change_basis_vw_to_upm(p)) == p);
  }
}

TEST_CASE("actions through linear forms") {
  // tau_1(u1) = -u1
  RingSpec bu3{RingSpecKind::BU, 3};
  CHECK(act(SignedPermutation::tau(3, 1), poly("u1"), bu3) == poly("-1*u1"));
  // sigma(u+24) = -u-13 for sigma = (+4,+3,-5,-1,+2)
  RingSpec bu5{RingSpecKind::BU, 5};
  SignedPermutation sigma = SignedPermutation::parse("+4,+3,-5,-1,+2");
  CHECK(act(sigma, poly("u+24"), bu5) == poly("-1*u-13"));
  // transposition (1 2) sends w12 to -v12
  CHECK(act(Permutation::parse("2,1"), poly("w12"), kBVW2) == poly("-1*v12"));
  // full tau table on the vw alphabet
  RingSpec bvw3{RingSpecKind::BVW, 3};
  CHECK(act(SignedPermutation::tau(3, 1), poly("v12"), bvw3) == poly("v12"));
  CHECK(act(SignedPermutation::tau(3, 2), poly("v12"), bvw3) ==
        poly("-1*v12"));
  CHECK(act(SignedPermutation::tau(3, 1), poly("w12"), bvw3) ==
        poly("-1*w12"));
  CHECK(act(SignedPermutation::tau(3, 2), poly("w12"), bvw3) == poly("w12"));
  CHECK(act(SignedPermutation::tau(3, 3), poly("w12"), bvw3) == poly("w12"));
  // type-A ring rejects sign changes
  CHECK_THROWS(act(SignedPermutation::parse("-1,+2,+3"), poly("t12"), kAT3));
}

TEST_CASE("action is a group action") {
  std::mt19937 rng(31);
  auto elements = all_signed_permutations(4);
  RingSpec bvw4{RingSpecKind::BVW, 4};
  for (int trial = 0; trial < 10; ++trial) {
    const auto& g = elements[rng() % elements.size()];
    const auto& h = elements[rng() % elements.size()];
    Polynomial p = random_poly(bvw4, rng, 3);
    CHECK(act(g, act(h, p, bvw4), bvw4) == act(g.compose(h), p, bvw4));
  }
}

TEST_CASE("ideals are stable under the group action") {
  for (int n = 2; n <= 4; ++n) {
    RingSpec bu{RingSpecKind::BU, n}, bvw{RingSpecKind::BVW, n},
        gr{RingSpecKind::BVW_GR, n};
    std::vector<SignedPermutation> generators;
    for (int i = 1; i <= n; ++i)
      generators.push_back(SignedPermutation::tau(n, i));
    for (int i = 1; i < n; ++i) {
      std::vector<int> w(n);
      for (int k = 0; k < n; ++k) w[k] = k + 1;
      std::swap(w[i - 1], w[i]);
      generators.push_back(SignedPermutation(w));
    }
    for (const auto& g : generators)
      for (RingSpec spec : {bu, bvw, gr})
        for (const auto& rel : relations(spec))
          CHECK(normal_form(act(g, rel.poly, spec), spec).is_zero());
    // type A under adjacent transpositions
    RingSpec at{RingSpecKind::AT, n};
    for (int i = 1; i < n; ++i) {
      std::vector<int> w(n);
      for (int k = 0; k < n; ++k) w[k] = k + 1;
      std::swap(w[i - 1], w[i]);
      for (const auto& rel : relations(at))
        CHECK(normal_form(act(Permutation(w), rel.poly, at), at).is_zero());
    }
  }
}

TEST_CASE("invariant quadratics") {
  auto q2 = quad_generators(2);
  REQUIRE(q2.size() == 1);
  CHECK(q2[0] == mono("u1*w12"));
  auto q3 = quad_generators(3);
  std::set<Monomial, MonomialLess> expected{mono("u1*w12"), mono("u1*w13"),
                                            mono("u2*w23"), mono("w12*w13"),
                                            mono("v12*w23")};
  CHECK(std::set<Monomial, MonomialLess>(q3.begin(), q3.end()) == expected);
  for (int n = 2; n <= 4; ++n) {
    RingSpec bvw{RingSpecKind::BVW, n};
    for (const auto& q : quad_generators(n))
      for (int i = 1; i <= n; ++i)
        CHECK(act(SignedPermutation::tau(n, i),
                  Polynomial::from_monomial(q), bvw) ==
              Polynomial::from_monomial(q));
  }
}

TEST_CASE("pairing map small goldens") {
  CHECK(pairing_phi(mono("t12*t23"), 3) == mono("v12*w23"));
  CHECK(pairing_phi(mono("t12*t13"), 3) == mono("w12*w13"));
  CHECK(pairing_phi(mono("1"), 3) == mono("1"));
  CHECK(pairing_phi(mono("t12*t24*t35*t16*t57*t5,10*t78*t89"), 10) ==
        mono("u1*w16*v12*w24*u3*w35*w57*w5,10*v78*w89"));
  CHECK_THROWS(pairing_phi(mono("t13*t23"), 3));  // two level-3 variables
  CHECK_THROWS(pairing_phi(mono("t12^2"), 3));
}

TEST_CASE("gamma substitution") {
  CHECK(gamma_map(poly("u1")) == poly("1"));
  CHECK(gamma_map(mono("v12*w23")) == mono("t12*t23"));
  CHECK(gamma_map(mono("u1*v12*w12")) == mono("t12^2"));
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : standard_basis(RingSpec{RingSpecKind::AT, n}))
      CHECK(gamma_map(pairing_phi(m, n)) == m);
}

TEST_CASE("fixed basis") {
  auto f2 = fixed_basis(2);
  REQUIRE(f2.size() == 2);
  CHECK(std::set<Monomial, MonomialLess>(f2.begin(), f2.end()) ==
        std::set<Monomial, MonomialLess>{mono("1"), mono("u1*w12")});
  auto f3 = fixed_basis(3);
  std::set<Monomial, MonomialLess> expected{mono("1"),       mono("u1*w12"),
                                            mono("u1*w13"),  mono("u2*w23"),
                                            mono("w12*w13"), mono("v12*w23")};
  CHECK(std::set<Monomial, MonomialLess>(f3.begin(), f3.end()) == expected);
  for (int n = 1; n <= 6; ++n)
    CHECK(Int(static_cast<long>(fixed_basis(n).size())) == factorial(n));
  for (const auto& q : fixed_basis(4))
    CHECK(factors_into_quad_generators(q, 4));
  CHECK(!factors_into_quad_generators(mono("u1*v12"), 2));
}
