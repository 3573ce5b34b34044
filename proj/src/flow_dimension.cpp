#include "ivp/flow_dimension.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ivp {

FlowDimGraph build_graph(const FamilySpec& spec) {
  FlowDimGraph g;
  g.n = spec.n;
  for (const ElementaryVector& e : elementary_set(spec)) {
    switch (e.kind) {
      case ElementaryVector::Kind::Zero:
        break;  // the zero vector contributes neither an edge nor a node mark
      case ElementaryVector::Kind::Unit:
        g.v1.insert(e.i);
        break;
      case ElementaryVector::Kind::Diff:
        g.edges.insert({e.i, e.j});
        break;
    }
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentSummary components_and_k0(const FlowDimGraph& g) {
  UnionFind uf(g.n);
  for (const auto& [i, j] : g.edges) uf.unite(i - 1, j - 1);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.n; ++v) by_root[uf.find(v)].push_back(v + 1);

  ComponentSummary s;
  for (auto& [root, members] : by_root) s.components.push_back(members);
  std::sort(s.components.begin(), s.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& comp : s.components) {
    bool touches_v1 = std::any_of(comp.begin(), comp.end(),
                                  [&](int v) { return g.v1.count(v) > 0; });
    if (!touches_v1) ++s.k0;
  }
  return s;
}

int dahl_dimension(const FamilySpec& spec) {
  const ComponentSummary s = components_and_k0(build_graph(spec));
  const bool origin = origin_in_affine_hull(family_generators(spec));
  return origin ? spec.n - s.k0 : spec.n - s.k0 - 1;
}

std::string format_graph(const FlowDimGraph& g) {
  std::ostringstream os;
  for (const auto& [i, j] : g.edges) os << i << ' ' << j << '\n';
  os << "V1:";
  for (int v : g.v1) os << ' ' << v;
  os << '\n';
  return os.str();
}

}  // namespace ivp
