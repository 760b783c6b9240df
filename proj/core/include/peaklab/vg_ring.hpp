#pragma once

#include <map>
#include <utility>
#include <vector>

#include "peaklab/permutation.hpp"
#include "peaklab/polynomial.hpp"

namespace peaklab {

struct Relation {
  Polynomial poly;      // exactly as tabulated, signs included
  Monomial initial;     // the marked initial term
};

// The variable alphabet of a spec, grouped by level (level index 1..n for the
// B alphabets, 1..n-1 for type A under level() = j-1).
std::vector<std::vector<Variable>> level_sets(RingSpec spec);
std::vector<Variable> alphabet(RingSpec spec);
bool variable_in_spec(const Variable& v, RingSpec spec);

// The tabulated quadratic generator list with marked initial terms; the
// recorded initial term is asserted against the monomial order at build time.
const std::vector<Relation>& relations(RingSpec spec);

// Fully reduced remainder of p modulo relations(spec) under the fixed
// monomial order.  Linear, idempotent, and exact; throws on alphabet
// mismatch.
Polynomial normal_form(const Polynomial& p, RingSpec spec);
Polynomial normal_form(const Monomial& m, RingSpec spec);

// All squarefree monomials with at most one variable per level, enumerated
// deterministically (levels most-significant first, "skip" before each
// level's variables in order).  Sizes n! and 2^n n!.
std::vector<Monomial> standard_basis(RingSpec spec);

// Degree census of the standard basis, computed from the enumerated level
// sets by polynomial multiplication; index = degree.
std::vector<Int> hilbert_series(RingSpec spec);
// Census by (total degree, edge degree); the q-grading of the filtration.
std::map<std::pair<int, int>, Int> bigraded_hilbert_series(RingSpec spec);

// The change of basis between the two type-B alphabets: v -> u+ + u-,
// w -> u+ - u-, u -> u, and its inverse u+ -> (v+w)/2, u- -> (v-w)/2.
Polynomial change_basis_vw_to_upm(const Polynomial& p);
Polynomial change_basis_upm_to_vw(const Polynomial& p);

// Group action through the defining linear forms: each variable corresponds
// to a form in x_1..x_n, the group acts by signed permutation of the x_i,
// and the image form is renormalized to the canonical i<j representative
// with a +-1 sign.  Extended multiplicatively and linearly.
Polynomial act(const SignedPermutation& g, const Polynomial& p, RingSpec spec);
Polynomial act(const Permutation& g, const Polynomial& p, RingSpec spec);

// The set Q of sign-invariant quadratic monomials:
// {u_i w_ij} for i<j, {w_ij w_ik} and {v_ij w_jk} for i<j<k.
std::vector<Monomial> quad_generators(int n);

// Recursive factorization of a standard type-A monomial into Q-quadratics;
// the image lies in the standard b-vw basis and gamma(phi(m)) = m.
Monomial pairing_phi(const Monomial& m, int n);

// Substitution u_i -> 1, v_ij/w_ij -> t_ij (also accepts u+-, for flats).
Polynomial gamma_map(const Polynomial& p);
Monomial gamma_map(const Monomial& m);

// phi-image of the type-A standard basis: a basis of the sign-fixed
// subspace; cardinality n!.
std::vector<Monomial> fixed_basis(int n);

// True iff m factors completely into quad_generators(n) elements.
bool factors_into_quad_generators(const Monomial& m, int n);

}  // namespace peaklab
