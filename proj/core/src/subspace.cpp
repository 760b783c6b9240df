#include "peaklab/subspace.hpp"

#include <set>
#include <stdexcept>

#include "peaklab/parallel.hpp"

namespace peaklab {

std::vector<Monomial> flat_orbit_component(RingSpec spec,
                                           const Partition& mu) {
  std::vector<Monomial> out;
  for (const auto& m : standard_basis(spec)) {
    Multigraph g = monomial_multigraph(m, spec.n);
    Partition orbit = spec.kind == RingSpecKind::AT ? type_a_flat_orbit(g)
                                                    : type_b_flat_orbit(g);
    if (orbit == mu) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> fixed_basis_component(int n, int k, int l) {
  std::vector<Monomial> out;
  for (const auto& m : fixed_basis(n))
    if (m.degree() == k && m.edge_degree() == l) out.push_back(m);
  return out;
}

Rat subspace_trace(const std::vector<Monomial>& basis,
                   const SignedPermutation& g, RingSpec spec) {
  std::set<Monomial, MonomialLess> span(basis.begin(), basis.end());
  std::vector<Rat> diag(basis.size());
  parallel_for(basis.size(), [&](size_t idx) {
    const Monomial& m = basis[idx];
    Polynomial image =
        normal_form(act(g, Polynomial::from_monomial(m), spec), spec);
    for (const auto& [mi, ci] : image.terms())
      if (!span.count(mi))
        throw std::runtime_error(
            "action leaves the span of the basis at " + m.to_string() +
            " -> " + mi.to_string());
    diag[idx] = image.coefficient(m);
  });
  Rat trace(0);
  for (const auto& d : diag) trace += d;
  return trace;
}

namespace {

SignedPermutation class_rep_lift(int n, uint32_t class_idx) {
  GroupId sid{GroupKind::SymmetricA, n};
  auto stable = GroupTable::get(sid);
  return SignedPermutation(
      stable->window(stable->class_representative(class_idx)));
}

}  // namespace

ClassFunction subspace_character(const std::vector<Monomial>& basis,
                                 RingSpec spec) {
  const int n = spec.n;
  auto classes = partitions_of(n);
  std::vector<Rat> values;
  for (uint32_t c = 0; c < classes.size(); ++c) {
    Rat tr = subspace_trace(basis, class_rep_lift(n, c), spec);
    if (!is_integer(tr))
      throw std::runtime_error("non-integral subspace trace");
    values.push_back(tr);
  }
  return ClassFunction(n, std::move(values));
}

ClassFunction fixed_part_character(const std::vector<Monomial>& basis,
                                   RingSpec spec) {
  const int n = spec.n;
  if (spec.kind == RingSpecKind::AT)
    throw std::invalid_argument("sign averaging needs a type-B ring");
  auto classes = partitions_of(n);
  Rat scale(1);
  scale /= Rat(Int(1) << n);
  std::vector<Rat> values;
  for (uint32_t c = 0; c < classes.size(); ++c) {
    SignedPermutation sigma = class_rep_lift(n, c);
    Rat total(0);
    std::vector<int> window(n);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i)
        window[i] = (mask >> i) & 1 ? -(i + 1) : (i + 1);
      total += subspace_trace(basis, sigma.compose(SignedPermutation(window)),
                              spec);
    }
    Rat value = total * scale;
    if (!is_integer(value))
      throw std::runtime_error("non-integral fixed-part trace");
    values.push_back(value);
  }
  return ClassFunction(n, std::move(values));
}

}  // namespace peaklab
