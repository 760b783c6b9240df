#pragma once

#include <map>
#include <string>
#include <vector>

#include "peaklab/monomial.hpp"
#include "peaklab/partition.hpp"

namespace peaklab {

// Multigraph on vertex set 1..n with parallel edges and self-loops.
struct Multigraph {
  int n = 0;
  std::map<std::pair<int, int>, int> edges;  // {i<j} -> multiplicity
  std::map<int, int> loops;                  // i -> multiplicity

  int edge_count() const;  // counts loops too, with multiplicity
};

// Edge variables (t, u+-, v, w) contribute edges {i,j}; u_i contributes a
// loop at i.  Exponents are multiplicities.
Multigraph monomial_multigraph(const Monomial& q, int n);

struct ComponentData {
  std::vector<int> vertices;  // sorted
  int edge_total = 0;         // edges within, loops included
  int loop_count = 0;
  int cyclomatic() const {
    return edge_total - static_cast<int>(vertices.size()) + 1;
  }
};

// Connected components in order of smallest vertex.
std::vector<ComponentData> components(const Multigraph& g);

// (lambda+, lambda-): sizes of loopless / looped components.
DoublePartition double_partition(const Multigraph& g);

// CL-data: the component partition plus cyclomatic number and loop count per
// block.
struct CLData {
  std::vector<ComponentData> blocks;
  std::vector<int> beta;
  std::vector<int> loops;
  std::string to_string() const;
};

CLData cl_data(const Multigraph& g);

// Each component has beta <= 1, and beta = 1 only with exactly one loop.
bool is_lightly_looped_forest(const Multigraph& g);

// Type-A flat: the vertex partition into components (blocks sorted).
std::vector<std::vector<int>> type_a_flat(const Multigraph& g);
// Type-A flat orbit: component sizes.
Partition type_a_flat_orbit(const Multigraph& g);
// Type-B flat orbit: sizes of loopless components (looped components merge
// into the zero block).
Partition type_b_flat_orbit(const Multigraph& g);

}  // namespace peaklab
