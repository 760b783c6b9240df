#include "peaklab/multigraph.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peaklab {

int Multigraph::edge_count() const {
  int total = 0;
  for (const auto& [e, m] : edges) total += m;
  for (const auto& [v, m] : loops) total += m;
  return total;
}

Multigraph monomial_multigraph(const Monomial& q, int n) {
  Multigraph g;
  g.n = n;
  for (const auto& [v, e] : q.factors()) {
    if (v.j > n) throw std::invalid_argument("variable index exceeds n");
    if (v.is_pair())
      g.edges[{v.i, v.j}] += e;
    else
      g.loops[v.i] += e;
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ComponentData> components(const Multigraph& g) {
  UnionFind uf(g.n);
  for (const auto& [e, m] : g.edges) uf.unite(e.first, e.second);
  std::map<int, ComponentData> by_root;
  for (int v = 1; v <= g.n; ++v) by_root[uf.find(v)].vertices.push_back(v);
  for (const auto& [e, m] : g.edges) by_root[uf.find(e.first)].edge_total += m;
  for (const auto& [v, m] : g.loops) {
    auto& block = by_root[uf.find(v)];
    block.edge_total += m;
    block.loop_count += m;
  }
  std::vector<ComponentData> out;
  for (auto& [root, data] : by_root) out.push_back(std::move(data));
  return out;
}

DoublePartition double_partition(const Multigraph& g) {
  std::vector<int> plus, minus;
  for (const auto& block : components(g)) {
    if (block.loop_count == 0)
      plus.push_back(static_cast<int>(block.vertices.size()));
    else
      minus.push_back(static_cast<int>(block.vertices.size()));
  }
  return DoublePartition{Partition::from_unsorted(std::move(plus)),
                         Partition::from_unsorted(std::move(minus))};
}

CLData cl_data(const Multigraph& g) {
  CLData data;
  data.blocks = components(g);
  for (const auto& block : data.blocks) {
    data.beta.push_back(block.cyclomatic());
    data.loops.push_back(block.loop_count);
  }
  return data;
}

std::string CLData::to_string() const {
  std::ostringstream out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) out << " ";
    out << "{";
    for (size_t v = 0; v < blocks[b].vertices.size(); ++v) {
      if (v) out << ",";
      out << blocks[b].vertices[v];
    }
    out << "}:b=" << beta[b] << ",l=" << loops[b];
  }
  return out.str();
}

bool is_lightly_looped_forest(const Multigraph& g) {
  for (const auto& block : components(g)) {
    int beta = block.cyclomatic();
    if (beta > 1) return false;
    if (beta == 1 && block.loop_count != 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> type_a_flat(const Multigraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& block : components(g)) out.push_back(block.vertices);
  return out;
}

Partition type_a_flat_orbit(const Multigraph& g) {
  std::vector<int> sizes;
  for (const auto& block : components(g))
    sizes.push_back(static_cast<int>(block.vertices.size()));
  return Partition::from_unsorted(std::move(sizes));
}

Partition type_b_flat_orbit(const Multigraph& g) {
  return double_partition(g).plus;
}

}  // namespace peaklab
