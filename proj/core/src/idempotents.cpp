#include "peaklab/idempotents.hpp"

#include <sstream>
#include <stdexcept>

namespace peaklab {

namespace {

// Expands binom(alpha*t + beta, n) = prod_{r=0}^{n-1} (alpha*t + beta - r) / n!
// as a dense degree-n polynomial in t.
std::vector<Rat> binomial_poly_in_t(const Rat& alpha, const Rat& beta, int n) {
  std::vector<Rat> poly{Rat(1)};
  for (int r = 0; r < n; ++r) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    Rat constant = beta - r;
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d] * constant;
      next[d + 1] += poly[d] * alpha;
    }
    poly = std::move(next);
  }
  Rat inv_fact(1);
  inv_fact /= Rat(factorial(n));
  for (auto& c : poly) c *= inv_fact;
  return poly;
}

StatisticGrouping group_by(const GroupAlgebraElement& e,
                           std::vector<int> (GroupTable::*stat)(uint32_t)
                               const) {
  StatisticGrouping g;
  const GroupTable& t = e.table();
  for (uint32_t idx = 0; idx < t.order(); ++idx) {
    std::vector<int> key = (t.*stat)(idx);
    Rat c = e.coefficient(idx);
    auto [it, inserted] = g.coefficient_by_statistic.emplace(key, c);
    if (!inserted && it->second != c) g.constant = false;
    g.fiber_size[key] += 1;
  }
  return g;
}

}  // namespace

EulerianFamily eulerian_A(int n, int n_max) {
  if (n < 1 || n > n_max)
    throw std::invalid_argument("eulerian_A: n out of configured range");
  GroupId id{GroupKind::SymmetricA, n};
  auto table = GroupTable::get(id);
  EulerianFamily family{id, {}};
  family.elements.assign(n, GroupAlgebraElement(table));
  // One expansion per descent number; x = t - 1 + n - des.
  std::vector<std::vector<Rat>> by_descents(n);
  for (int d = 0; d < n; ++d)
    by_descents[d] = binomial_poly_in_t(Rat(1), Rat(n - 1 - d), n);
  for (uint32_t idx = 0; idx < table->order(); ++idx) {
    const auto& poly = by_descents[table->descent_count(idx)];
    // E_k is the coefficient of t^{k+1}.
    for (int k = 0; k < n; ++k)
      family.elements[k].add_term(idx, poly[k + 1]);
  }
  return family;
}

EulerianFamily eulerian_B(int n, int n_max) {
  if (n < 1 || n > n_max)
    throw std::invalid_argument("eulerian_B: n out of configured range");
  GroupId id{GroupKind::HyperoctahedralB, n};
  auto table = GroupTable::get(id);
  EulerianFamily family{id, {}};
  family.elements.assign(n + 1, GroupAlgebraElement(table));
  // x = (t-1)/2 + n - des; descent numbers run 0..n.
  std::vector<std::vector<Rat>> by_descents(n + 1);
  for (int d = 0; d <= n; ++d)
    by_descents[d] =
        binomial_poly_in_t(Rat(1, 2), Rat(n - d) - Rat(1, 2), n);
  for (uint32_t idx = 0; idx < table->order(); ++idx) {
    const auto& poly = by_descents[table->descent_count(idx)];
    for (int k = 0; k <= n; ++k)
      family.elements[k].add_term(idx, poly[k]);
  }
  return family;
}

PeakFamily peak_idempotents(int n, int n_max) {
  EulerianFamily b = eulerian_B(n, n_max);
  PeakFamily family;
  family.n = n;
  for (const auto& e : b.elements) {
    family.elements.push_back(phi_push(e));
    family.is_zero.push_back(family.elements.back().is_zero());
  }
  return family;
}

StatisticGrouping group_by_descent_set(const GroupAlgebraElement& e) {
  return group_by(e, &GroupTable::descent_set);
}

StatisticGrouping group_by_peak_set(const GroupAlgebraElement& e) {
  if (e.group().kind != GroupKind::SymmetricA)
    throw std::invalid_argument("peak statistics live on S_n");
  return group_by(e, &GroupTable::peak_set);
}

std::optional<std::string> check_peak_sum_against_family(
    int n, const std::map<Partition, GroupAlgebraElement>& type_a_family) {
  auto parts = partitions_of(n);
  if (type_a_family.size() != parts.size())
    return "family must contain one element per partition of " +
           std::to_string(n);
  for (const auto& lambda : parts)
    if (!type_a_family.count(lambda))
      return "family is missing partition " + lambda.to_string();

  PeakFamily peaks = peak_idempotents(n);
  GroupId id{GroupKind::SymmetricA, n};

  // Candidate mu: oddparts of partitions of n (including the empty one for
  // even n); pi_mu is identified through pi_k = sum over ell(mu)=k of pi_mu
  // only at the coarse level, so the testable statement is the k-graded one:
  // sum over odd(lambda)=k of E_lambda should reproduce pi_k.
  for (int k = 0; k <= n; ++k) {
    GroupAlgebraElement sum = GroupAlgebraElement::zero(id);
    for (const auto& lambda : parts)
      if (lambda.odd_count() == k) sum = sum + type_a_family.at(lambda);
    if (!(sum == peaks.elements[k])) {
      std::ostringstream out;
      out << "mismatch at k=" << k
          << ": sum over odd(lambda)=k differs from pi_k";
      return out.str();
    }
  }
  return std::nullopt;
}

}  // namespace peaklab
