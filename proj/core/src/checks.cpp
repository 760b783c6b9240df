#include "peaklab/checks.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "peaklab/idempotents.hpp"
#include "peaklab/param_series.hpp"
#include "peaklab/subspace.hpp"

namespace peaklab {

namespace {

CheckOutcome pass() { return {CheckStatus::Pass, ""}; }
CheckOutcome pass_note(std::string note) {
  return {CheckStatus::Pass, std::move(note)};
}
CheckOutcome fail(std::string witness) {
  return {CheckStatus::Fail, std::move(witness)};
}
CheckOutcome skipped() { return {CheckStatus::Skipped, ""}; }

// ---- criterion 1: Hilbert products and basis cardinalities ----

std::vector<Int> expand_product(const std::vector<int>& linear_coeffs) {
  std::vector<Int> poly{Int(1)};
  for (int a : linear_coeffs) {
    std::vector<Int> next(poly.size() + 1, Int(0));
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += poly[d] * a;
    }
    poly = std::move(next);
  }
  return poly;
}

CheckOutcome check_hilbert_products(int n) {
  std::vector<int> a_factors, b_factors;
  for (int k = 1; k < n; ++k) a_factors.push_back(k);
  for (int k = 1; k <= n; ++k) b_factors.push_back(2 * k - 1);
  auto a_expected = expand_product(a_factors);
  auto b_expected = expand_product(b_factors);

  RingSpec at{RingSpecKind::AT, n};
  if (hilbert_series(at) != a_expected)
    return fail("type-A Hilbert series differs from (1+t)...(1+(n-1)t)");
  for (auto kind : {RingSpecKind::BU, RingSpecKind::BVW, RingSpecKind::BVW_GR}) {
    RingSpec spec{kind, n};
    if (hilbert_series(spec) != b_expected)
      return fail("Hilbert series of " + spec.name() +
                  " differs from (1+t)(1+3t)...(1+(2n-1)t)");
  }

  Int a_total = 0, b_total = 0;
  for (const auto& c : a_expected) a_total += c;
  for (const auto& c : b_expected) b_total += c;
  if (a_total != factorial(n)) return fail("type-A total dimension != n!");
  if (b_total != factorial(n) * (Int(1) << n))
    return fail("type-B total dimension != 2^n n!");

  // Brute-force census at small n: enumerate the basis and compare.
  if (n <= 6) {
    auto census = [](RingSpec spec) {
      std::vector<Int> by_degree;
      for (const auto& m : standard_basis(spec)) {
        size_t d = static_cast<size_t>(m.degree());
        if (by_degree.size() <= d) by_degree.resize(d + 1, Int(0));
        by_degree[d] += 1;
      }
      return by_degree;
    };
    if (census(at) != a_expected)
      return fail("enumerated type-A basis census differs from the product");
    if (census(RingSpec{RingSpecKind::BVW, n}) != b_expected)
      return fail("enumerated b-vw basis census differs from the product");
  }
  return pass();
}

// ---- criterion 2: Eulerian families ----

CheckOutcome check_eulerian_a(int n) {
  EulerianFamily fam = eulerian_A(n);
  FamilyDiagnosis diag = idempotent_family_check(fam.elements);
  if (!diag.pass()) return fail(diag.summary());
  // Leading member: E_{n-1} = (1/n!) sum of all permutations.
  GroupAlgebraElement avg(fam.group);
  Rat c = Rat(1) / Rat(factorial(n));
  for (uint32_t idx = 0; idx < fam.elements.back().table().order(); ++idx)
    avg.set_coefficient(idx, c);
  if (!(fam.elements.back() == avg))
    return fail("E_{n-1} is not the uniform average");
  return pass();
}

CheckOutcome check_eulerian_b(int n) {
  EulerianFamily fam = eulerian_B(n);
  FamilyDiagnosis diag = idempotent_family_check(fam.elements);
  if (!diag.pass()) return fail(diag.summary());
  GroupAlgebraElement avg(fam.group);
  Rat c = Rat(1) / (Rat(factorial(n)) * Rat(Int(1) << n));
  for (uint32_t idx = 0; idx < fam.elements.back().table().order(); ++idx)
    avg.set_coefficient(idx, c);
  if (!(fam.elements.back() == avg))
    return fail("E_n is not the uniform average");
  return pass();
}

CheckOutcome check_descent_constancy(int n) {
  EulerianFamily fam_a = eulerian_A(n);
  for (const auto& e : fam_a.elements)
    if (!group_by_descent_set(e).constant)
      return fail("a type-A member has two coefficients on one descent set");
  if (n <= 5) {
    EulerianFamily fam_b = eulerian_B(n);
    for (const auto& e : fam_b.elements)
      if (!group_by_descent_set(e).constant)
        return fail("a type-B member has two coefficients on one descent set");
  }
  return pass();
}

// ---- criterion 3: peak idempotents ----

CheckOutcome check_peak_orthogonality(int n) {
  PeakFamily fam = peak_idempotents(n);
  FamilyDiagnosis diag = idempotent_family_check(fam.elements);
  if (!diag.pass()) return fail(diag.summary());
  return pass();
}

CheckOutcome check_peak_vanishing(int n) {
  PeakFamily fam = peak_idempotents(n);
  for (int k = 0; k <= n; ++k) {
    bool expected_zero = ((n - k) % 2) != 0;
    if (fam.is_zero[k] != expected_zero) {
      std::ostringstream out;
      out << "pi_" << k << (fam.is_zero[k] ? " vanished" : " is nonzero")
          << " against the parity rule";
      return fail(out.str());
    }
  }
  return pass();
}

CheckOutcome check_peak_constancy(int n) {
  PeakFamily fam = peak_idempotents(n);
  for (const auto& e : fam.elements)
    if (!group_by_peak_set(e).constant)
      return fail("a peak member has two coefficients on one peak set");
  return pass();
}

// ---- criterion 4: character identity and dimensions ----

CheckOutcome check_peak_character(int n) {
  PeakFamily fam = peak_idempotents(n);
  auto parts = partitions_of(n);
  // Odd-cycle census by direct enumeration.
  std::vector<Int> odd_cycle_count(n + 1, Int(0));
  for (const auto& sigma : all_permutations(n))
    odd_cycle_count[sigma.odd_cycle_count()] += 1;
  for (int j = 0; j <= n; ++j) {
    // j = number of odd cycles; the matching family member is pi_j.
    ClassFunction ring_side = left_ideal_character(fam.elements[j]);
    SymFunc lie_sum;
    for (const auto& lambda : parts)
      if (lambda.odd_count() == j) lie_sum = lie_sum + L_lambda(lambda);
    ClassFunction rep_side =
        lie_sum.is_zero()
            ? ClassFunction(n, std::vector<Rat>(parts.size(), Rat(0)))
            : character_of(lie_sum, n);
    if (!(ring_side == rep_side)) {
      std::ostringstream out;
      out << "character of the ideal of pi_" << j
          << " differs from the higher-Lie sum: " << ring_side.to_string()
          << " vs " << rep_side.to_string();
      return fail(out.str());
    }
    if (ring_side.dimension() != Rat(odd_cycle_count[j])) {
      std::ostringstream out;
      out << "dim of the ideal of pi_" << j << " is "
          << rat_to_string(ring_side.dimension()) << ", expected "
          << odd_cycle_count[j].get_str();
      return fail(out.str());
    }
  }
  return pass();
}

// ---- criterion 5: fixed-space basis ----

CheckOutcome check_fixed_basis(int n) {
  auto basis = fixed_basis(n);
  std::set<Monomial, MonomialLess> distinct(basis.begin(), basis.end());
  if (distinct.size() != basis.size())
    return fail("pairing images collide");
  if (Int(static_cast<long>(basis.size())) != factorial(n))
    return fail("fixed basis cardinality is not n!");
  RingSpec bvw{RingSpecKind::BVW, n};
  for (const auto& q : basis) {
    if (!q.squarefree()) return fail("fixed basis monomial " + q.to_string() +
                                     " is not squarefree");
    std::set<int> levels;
    for (const auto& [v, e] : q.factors())
      if (!levels.insert(v.level()).second)
        return fail(q.to_string() + " has two variables in one level");
    if (!factors_into_quad_generators(q, n))
      return fail(q.to_string() + " does not factor into the invariant "
                                  "quadratics");
    if (q.degree() % 2)
      return fail(q.to_string() + " sits in an odd degree");
  }
  // Sign-invariance modulo the ideal.
  for (int i = 1; i <= n; ++i) {
    SignedPermutation tau = SignedPermutation::tau(n, i);
    for (const auto& q : basis) {
      Polynomial lhs =
          normal_form(act(tau, Polynomial::from_monomial(q), bvw), bvw);
      Polynomial rhs = normal_form(Polynomial::from_monomial(q), bvw);
      if (!(lhs == rhs))
        return fail("tau_" + std::to_string(i) + " moves " + q.to_string() +
                    " modulo the ideal");
    }
  }
  return pass();
}

// ---- criterion 6: bigraded table ----

BivarPoly fixed_basis_census(int n) {
  BivarPoly out;
  for (const auto& q : fixed_basis(n))
    out[{q.degree(), q.edge_degree()}] += 1;
  return out;
}

BivarPoly rescale_t_squared(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [k, c] : p) out[{2 * k.first, k.second}] += c;
  return out;
}

CheckOutcome check_bigraded_table(int n) {
  BivarPoly computed = fixed_basis_census(n);
  BivarPoly recursion = rescale_t_squared(bihilb_by_recursion(n));
  if (computed != recursion)
    return fail("fixed-basis census differs from the recursion value: " +
                bivar_to_string(computed));
  static const std::map<int, BivarPoly> tabulated = {
      {3, {{{0, 0}, Rat(1)}, {{2, 1}, Rat(3)}, {{2, 2}, Rat(2)}}},
      {4,
       {{{0, 0}, Rat(1)},
        {{2, 1}, Rat(6)},
        {{2, 2}, Rat(8)},
        {{4, 2}, Rat(3)},
        {{4, 3}, Rat(6)}}},
  };
  if (n == 2) {
    BivarPoly expected{{{0, 0}, Rat(1)}, {{2, 1}, Rat(1)}};
    if (computed != expected)
      return fail("n=2 census differs from the recursion value 1 + t^2 q");
    return pass_note(
        "annotated expected mismatch: reference table entry reads 1, "
        "recursion value 1 + t^2*q verified instead");
  }
  auto it = tabulated.find(n);
  if (it != tabulated.end() && computed != it->second)
    return fail("census differs from the tabulated bigraded series: " +
                bivar_to_string(computed));
  return pass();
}

// ---- criterion 7: bigraded equivariance ----

CheckOutcome check_bigraded_equivariance(int n) {
  RingSpec gr{RingSpecKind::BVW_GR, n};
  auto parts = partitions_of(n);
  BivarPoly census = fixed_basis_census(n);
  size_t covered = 0;
  for (const auto& [key, count] : census) {
    auto [k, l] = key;
    auto basis = fixed_basis_component(n, k, l);
    covered += basis.size();
    ClassFunction ring_side = subspace_character(basis, gr);
    SymFunc lie_sum;
    for (const auto& lambda : parts)
      if (lambda.length() == n - l && lambda.odd_count() == n - k)
        lie_sum = lie_sum + L_lambda(lambda);
    ClassFunction rep_side =
        lie_sum.is_zero()
            ? ClassFunction(n, std::vector<Rat>(parts.size(), Rat(0)))
            : character_of(lie_sum, n);
    if (!(ring_side == rep_side)) {
      std::ostringstream out;
      out << "bidegree (" << k << "," << l << "): ring character "
          << ring_side.to_string() << " differs from the higher-Lie sum "
          << rep_side.to_string();
      return fail(out.str());
    }
  }
  if (covered != fixed_basis(n).size())
    return fail("bidegree components do not exhaust the fixed basis");
  return pass();
}

// ---- criterion 8: flat-orbit fixed characters ----

CheckOutcome check_flat_orbit_characters(int n) {
  RingSpec bu{RingSpecKind::BU, n};
  auto parts_n = partitions_of(n);
  size_t covered = 0;
  for (int m = 0; m <= n; ++m) {
    for (const auto& mu : partitions_of(m)) {
      auto basis = flat_orbit_component(bu, mu);
      covered += basis.size();
      if (basis.empty()) continue;
      ClassFunction fixed_side = fixed_part_character(basis, bu);
      SymFunc lie_sum;
      if (mu.all_parts_odd() && (n - m) % 2 == 0)
        for (const auto& lambda : parts_n)
          if (lambda.odd_parts() == mu) lie_sum = lie_sum + L_lambda(lambda);
      ClassFunction rep_side =
          lie_sum.is_zero()
              ? ClassFunction(n, std::vector<Rat>(parts_n.size(), Rat(0)))
              : character_of(lie_sum, n);
      if (!(fixed_side == rep_side)) {
        std::ostringstream out;
        out << "flat orbit (" << mu.to_string() << "): fixed part "
            << fixed_side.to_string() << " differs from "
            << rep_side.to_string();
        return fail(out.str());
      }
    }
  }
  Int total = factorial(n) * (Int(1) << n);
  if (Int(static_cast<long>(covered)) != total)
    return fail("flat-orbit components do not exhaust the basis");
  return pass();
}

// ---- criterion 9: pairing goldens ----

struct PairingGolden {
  const char* input;
  const char* image;
};

CheckOutcome run_pairing_goldens(int n,
                                 const std::vector<PairingGolden>& rows) {
  for (const auto& row : rows) {
    Monomial m = Monomial::parse(row.input);
    Monomial expected = Monomial::parse(row.image);
    Monomial got = pairing_phi(m, n);
    if (!(got == expected))
      return fail(std::string(row.input) + " -> " + got.to_string() +
                  ", expected " + row.image);
  }
  return pass();
}

CheckOutcome check_pairing_golden(int n) {
  static const std::vector<PairingGolden> rows3 = {
      {"1", "1"},
      {"t12", "u1*w12"},
      {"t13", "u1*w13"},
      {"t23", "u2*w23"},
      {"t12*t13", "w12*w13"},
      {"t12*t23", "v12*w23"},
  };
  static const std::vector<PairingGolden> rows4 = {
      {"t12", "u1*w12"},
      {"t13", "u1*w13"},
      {"t14", "u1*w14"},
      {"t23", "u2*w23"},
      {"t24", "u2*w24"},
      {"t34", "u3*w34"},
      {"t12*t13", "w12*w13"},
      {"t12*t14", "w12*w14"},
      {"t23*t24", "w23*w24"},
      {"t12*t23", "v12*w23"},
      {"t23*t34", "v23*w34"},
      {"t12*t24", "v12*w24"},
      {"t12*t34", "u1*w12*u3*w34"},
      {"t13*t24", "u1*w13*u2*w24"},
      {"t14*t23", "u1*w14*u2*w23"},
      {"t12*t14*t23", "u1*w14*v12*w23"},
      {"t12*t13*t24", "u1*w13*v12*w24"},
  };
  static const std::vector<PairingGolden> rows10 = {
      {"t12*t24*t35*t16*t57*t5,10*t78*t89",
       "u1*w16*v12*w24*u3*w35*w57*w5,10*v78*w89"},
  };
  if (n == 3) return run_pairing_goldens(3, rows3);
  if (n == 4) return run_pairing_goldens(4, rows4);
  if (n == 10) return run_pairing_goldens(10, rows10);
  return skipped();
}

CheckOutcome check_gamma_phi_identity(int n) {
  auto basis = standard_basis(RingSpec{RingSpecKind::AT, n});
  std::set<Monomial, MonomialLess> images;
  for (const auto& m : basis) {
    Monomial phi = pairing_phi(m, n);
    if (!(gamma_map(phi) == m))
      return fail("gamma(phi(" + m.to_string() + ")) = " +
                  gamma_map(phi).to_string());
    images.insert(phi);
  }
  if (images.size() != basis.size()) return fail("phi is not injective");
  return pass();
}

// ---- criterion 10: Hilbert series recursions and generating function ----

CheckOutcome check_bihilb_consistency(int n) {
  BivarPoly closed = bihilb_from_equivariant(n);
  BivarPoly enumerated = bihilb_by_enumeration(n);
  BivarPoly recursion = bihilb_by_recursion(n);
  if (closed != enumerated)
    return fail("dimension specialization differs from the permutation "
                "census: " +
                bivar_to_string(closed) + " vs " +
                bivar_to_string(enumerated));
  if (closed != recursion)
    return fail("series differs from the three-term recursion: " +
                bivar_to_string(closed) + " vs " +
                bivar_to_string(recursion));
  return pass();
}

CheckOutcome check_bihilb_gf(int n) {
  static const std::vector<BivarPoly> gf = bihilb_gf_coefficients(7);
  if (n > 7) return skipped();
  if (gf[n] != bihilb_gf_term_from_series(n))
    return fail("x^" + std::to_string(n) +
                " coefficient of the closed-form generating function "
                "differs: " +
                bivar_to_string(gf[n], "s", "q") + " vs " +
                bivar_to_string(bihilb_gf_term_from_series(n), "s", "q"));
  return pass();
}

CheckOutcome check_sheffer(int n) {
  auto pad = [](std::vector<Int> v, size_t len) {
    v.resize(len, Int(0));
    return v;
  };
  auto bn = sheffer_column(n);
  auto b1 = sheffer_column(n - 1);
  auto b2 = sheffer_column(n - 2);
  size_t len = std::max({bn.size(), b1.size(), b2.size() + 1});
  bn = pad(bn, len);
  b1 = pad(b1, len);
  b2 = pad(b2, len);
  for (size_t d = 0; d < len; ++d) {
    Int expected = b1[d] + (d ? Int((n - 1)) * Int((n - 1)) * b2[d - 1] : Int(0));
    if (bn[d] != expected) {
      std::ostringstream out;
      out << "t^" << d << ": " << bn[d].get_str() << " != "
          << expected.get_str();
      return fail(out.str());
    }
  }
  return pass();
}

// ---- criterion 11: branching rule and equivariant tables ----

CheckOutcome check_branching(int n) {
  ParamSeries defect = branching_defect(n);
  if (!defect.is_zero())
    return fail("branching defect: " + defect.to_string());
  return pass();
}

std::map<Partition, Rat> sch(
    std::initializer_list<std::pair<const char*, int>> rows) {
  std::map<Partition, Rat> out;
  for (const auto& [key, c] : rows) out.emplace(Partition::parse(key), Rat(c));
  return out;
}

CheckOutcome check_equivariant_tables(int n) {
  ParamSeries ih = equivariant_series(n);
  using Key = std::pair<int, int>;
  std::map<Key, std::map<Partition, Rat>> expected;
  std::string note;
  if (n == 2) {
    expected[{0, 0}] = sch({{"2", 1}});
    expected[{1, 1}] = sch({{"1,1", 1}});
    note =
        "annotated expected mismatch: reference row omits the t q term; the "
        "recursion-consistent value with s[1,1] at t q is verified instead";
  } else if (n == 3) {
    expected[{0, 0}] = sch({{"3", 1}});
    expected[{1, 1}] = sch({{"2,1", 1}, {"1,1,1", 1}});
    expected[{1, 2}] = sch({{"2,1", 1}});
  } else if (n == 4) {
    expected[{0, 0}] = sch({{"4", 1}});
    expected[{1, 1}] = sch({{"3,1", 1}, {"2,1,1", 1}});
    expected[{1, 2}] = sch({{"3,1", 1}, {"2,2", 1}, {"2,1,1", 1}});
    expected[{2, 2}] = sch({{"2,2", 1}, {"1,1,1,1", 1}});
    expected[{2, 3}] = sch({{"3,1", 1}, {"2,1,1", 1}});
  } else {
    return skipped();
  }
  if (ih.terms().size() != expected.size())
    return fail("series has unexpected (t,q) support");
  for (const auto& [key, f] : ih.terms()) {
    auto it = expected.find(key);
    if (it == expected.end()) {
      std::ostringstream out;
      out << "unexpected term at t^" << key.first << " q^" << key.second;
      return fail(out.str());
    }
    if (to_schur(f) != it->second) {
      std::ostringstream out;
      out << "Schur expansion at t^" << key.first << " q^" << key.second
          << " is " << schur_json_string(to_schur(f));
      return fail(out.str());
    }
  }
  if (n == 4) {
    BivarPoly dims = bihilb_from_equivariant(4);
    BivarPoly table{{{0, 0}, Rat(1)},
                    {{1, 1}, Rat(6)},
                    {{1, 2}, Rat(8)},
                    {{2, 2}, Rat(3)},
                    {{2, 3}, Rat(6)}};
    if (dims != table)
      return fail("dimension specialization differs from the tabulated "
                  "1+6tq+8tq^2+3t^2q^2+6t^2q^3");
  }
  return note.empty() ? pass() : pass_note(note);
}

// ---- criterion 12: Jordan components ----

CheckOutcome check_jordan(int n) {
  // m = 0 recovers the sum over odd partitions.
  SymFunc odd_sum;
  for (const auto& lambda : partitions_of(n))
    if (lambda.all_parts_odd()) odd_sum = odd_sum + L_lambda(lambda);
  if (!(jordan_P(n, 0) == odd_sum))
    return fail("P_0 differs from the odd-partition Lie sum");
  if (!jordan_P(n, -1).is_zero())
    return fail("P_{-1} is not zero");
  if (n >= 1 && (n % 2) == 1) {
    for (int m = 0; 2 * m <= n; ++m)
      if (!(jordan_P(n, m) == induct_sf(jordan_P(n - 1, m)))) {
        std::ostringstream out;
        out << "odd-rank identity fails at m=" << m;
        return fail(out.str());
      }
  }
  if (n >= 2 && (n % 2) == 0) {
    for (int m = 0; 2 * m <= n; ++m) {
      SymFunc lhs = restrict_sf(jordan_P(n, m));
      SymFunc rhs = induct_sf(restrict_sf(jordan_P(n - 1, m)) +
                              jordan_P(n - 2, m - 1));
      if (!(lhs == rhs)) {
        std::ostringstream out;
        out << "even-rank identity fails at m=" << m;
        return fail(out.str());
      }
    }
  }
  return pass();
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> reg;
  auto add = [&reg](std::string id, std::string description,
                    std::string anchor, int n_min, int n_max,
                    std::function<CheckOutcome(int)> run) {
    reg.push_back(CheckSpec{std::move(id), std::move(description),
                            std::move(anchor), n_min, n_max, n_min, n_max,
                            std::move(run)});
  };
  add("hilbert-products",
      "Hilbert series match the linear-factor products; basis sizes n!, 2^n n!",
      "nbc-basis-hilbert-products", 1, 8, check_hilbert_products);
  add("eulerian-a-orthogonality",
      "type-A Eulerian family is a complete orthogonal idempotent family",
      "eulerian-idempotents-type-a", 1, 6, check_eulerian_a);
  add("eulerian-b-orthogonality",
      "type-B Eulerian family is a complete orthogonal idempotent family",
      "eulerian-idempotents-type-b", 1, 5, check_eulerian_b);
  add("descent-constancy",
      "Eulerian coefficients depend only on the descent set",
      "descent-algebra-membership", 1, 6, check_descent_constancy);
  add("peak-orthogonality",
      "peak family is a complete orthogonal idempotent family in kS_n",
      "peak-idempotents", 1, 5, check_peak_orthogonality);
  add("peak-vanishing", "pi_k = 0 exactly when k and n have opposite parity",
      "peak-idempotent-vanishing", 1, 5, check_peak_vanishing);
  add("peak-constancy",
      "peak coefficients depend only on the peak set",
      "peak-algebra-membership", 1, 5, check_peak_constancy);
  add("peak-character",
      "ideal characters of pi_k match odd-cycle higher-Lie sums",
      "peak-representations-higher-lie", 1, 5, check_peak_character);
  add("fixed-basis",
      "pairing image has size n!, is sign-invariant, and sits in degrees "
      "divisible by four",
      "sign-fixed-subring-basis", 1, 7, check_fixed_basis);
  add("bigraded-table",
      "bigraded census of the fixed basis matches the recursion and the "
      "tabulated rows",
      "bigraded-hilbert-table", 2, 4, check_bigraded_table);
  add("bigraded-equivariance",
      "bidegree components carry the matching higher-Lie characters",
      "bigraded-equivariant-decomposition", 2, 5, check_bigraded_equivariance);
  add("flat-orbit-characters",
      "sign-fixed parts of flat-orbit components carry odd-part higher-Lie "
      "sums",
      "flat-orbit-fixed-characters", 2, 5, check_flat_orbit_characters);
  add("pairing-golden", "pairing bijection reproduces the worked tables",
      "pairing-bijection", 3, 10, check_pairing_golden);
  add("gamma-phi-identity", "gamma o phi is the identity on the type-A basis",
      "pairing-bijection", 1, 6, check_gamma_phi_identity);
  add("bihilb-consistency",
      "closed form, permutation census, and recursion agree",
      "poincare-series-recursion", 0, 8, check_bihilb_consistency);
  add("bihilb-gf",
      "exponential generating function matches through order seven",
      "poincare-series-generating-function", 0, 7, check_bihilb_gf);
  add("sheffer-recursion", "q=1 column satisfies the (n-1)^2 recurrence",
      "sheffer-specialization", 2, 8, check_sheffer);
  add("branching-rule", "restriction satisfies the two-step branching rule",
      "equivariant-branching-rule", 2, 7, check_branching);
  add("equivariant-tables",
      "equivariant series reproduces the tabulated Schur expansions",
      "equivariant-series-tables", 2, 4, check_equivariant_tables);
  add("jordan-identities",
      "Jordan components: odd-partition sum and the two parity identities",
      "jordan-components", 1, 8, check_jordan);
  return reg;
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<CheckSpec>& list_checks() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

std::vector<ReportRecord> run_check(const std::string& id,
                                    std::optional<int> n_min,
                                    std::optional<int> n_max) {
  const CheckSpec* spec = nullptr;
  for (const auto& s : list_checks())
    if (s.id == id) spec = &s;
  if (spec == nullptr) throw std::invalid_argument("unknown check id: " + id);
  int lo = n_min.value_or(spec->n_min);
  int hi = n_max.value_or(spec->n_max);
  if (lo < spec->cap_min || hi > spec->cap_max || lo > hi) {
    std::ostringstream out;
    out << "range [" << lo << "," << hi << "] outside the hard cap ["
        << spec->cap_min << "," << spec->cap_max << "] for " << id;
    throw std::invalid_argument(out.str());
  }
  std::vector<ReportRecord> records;
  for (int n = lo; n <= hi; ++n) {
    auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
      outcome = spec->run(n);
    } catch (const std::exception& err) {
      outcome = fail(std::string("exception: ") + err.what());
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    records.push_back(ReportRecord{id, n, outcome.status, elapsed,
                                   outcome.witness, spec->anchor});
  }
  return records;
}

std::vector<ReportRecord> run_all_checks() {
  std::vector<ReportRecord> records;
  for (const auto& spec : list_checks()) {
    auto part = run_check(spec.id);
    records.insert(records.end(), part.begin(), part.end());
  }
  return records;
}

bool any_failure(const std::vector<ReportRecord>& records) {
  for (const auto& r : records)
    if (r.status == CheckStatus::Fail) return true;
  return false;
}

std::string report_to_json(const std::vector<ReportRecord>& records) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["id"] = r.id;
    rec["n"] = r.n;
    rec["status"] = status_name(r.status);
    rec["ms"] = r.ms;
    rec["witness"] = r.witness;
    rec["anchor"] = r.anchor;
    arr.push_back(std::move(rec));
  }
  j["records"] = std::move(arr);
  return j.dump(2);
}

std::string report_to_text(const std::vector<ReportRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << r.id << " n=" << r.n << " " << status_name(r.status) << " ("
        << r.ms << " ms)";
    if (!r.witness.empty()) out << " :: " << r.witness;
    out << "\n";
  }
  return out.str();
}

std::vector<ReportRecord> report_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("version").get<int>() != 1)
    throw std::invalid_argument("unsupported report version");
  std::vector<ReportRecord> records;
  for (const auto& rec : j.at("records")) {
    ReportRecord r;
    r.id = rec.at("id").get<std::string>();
    r.n = rec.at("n").get<int>();
    std::string status = rec.at("status").get<std::string>();
    r.status = status == "pass" ? CheckStatus::Pass
               : status == "fail" ? CheckStatus::Fail
                                  : CheckStatus::Skipped;
    r.ms = rec.at("ms").get<long long>();
    r.witness = rec.at("witness").get<std::string>();
    r.anchor = rec.at("anchor").get<std::string>();
    records.push_back(std::move(r));
  }
  return records;
}

void emit_report(const std::vector<ReportRecord>& records,
                 const std::string& path, const std::string& format) {
  std::string payload;
  if (format == "json")
    payload = report_to_json(records);
  else if (format == "text")
    payload = report_to_text(records);
  else
    throw std::invalid_argument("unknown report format: " + format);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << payload;
  if (!out.good()) throw std::runtime_error("short write to " + path);
}

}  // namespace peaklab
