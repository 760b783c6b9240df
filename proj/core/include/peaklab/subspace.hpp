#pragma once

#include <vector>

#include "peaklab/group_algebra.hpp"
#include "peaklab/multigraph.hpp"
#include "peaklab/vg_ring.hpp"

namespace peaklab {

// Standard-basis monomials whose multigraph has the given flat orbit:
// component sizes for the type-A ring, loopless component sizes for the
// type-B rings.
std::vector<Monomial> flat_orbit_component(RingSpec spec, const Partition& mu);

// Fixed-basis monomials with bidegree (deg, edge-degree) = (k, l).
std::vector<Monomial> fixed_basis_component(int n, int k, int l);

// Trace of g on the span of the given monomials, computed term by term via
// the action and normal form.  Throws if some image expansion leaves the
// span of the basis.
Rat subspace_trace(const std::vector<Monomial>& basis,
                   const SignedPermutation& g, RingSpec spec);

// Traces of the S_n conjugacy-class representatives (positive lifts for the
// B rings); traces are asserted integral.
ClassFunction subspace_character(const std::vector<Monomial>& basis,
                                 RingSpec spec);

// Character of the sign-fixed part of the span: averages subspace_trace
// over the 2^n coset members tau * lift(sigma).
ClassFunction fixed_part_character(const std::vector<Monomial>& basis,
                                   RingSpec spec);

}  // namespace peaklab
