#pragma once

// Dahl's flow-dimension graph: polytope dimension from connectivity,
// with no convex-hull computation involved.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivp/interval_family.hpp"

namespace ivp {

struct FlowDimGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // directed (i, j), 1-based
  std::set<int> v1;
};

struct ComponentSummary {
  // Undirected connected components, each sorted, ordered by smallest
  // member; k0 counts components disjoint from v1.
  std::vector<std::vector<int>> components;
  int k0 = 0;
};

FlowDimGraph build_graph(const FamilySpec& spec);

ComponentSummary components_and_k0(const FlowDimGraph& g);

// n - k0 if the origin lies in the affine hull of the generators,
// n - k0 - 1 otherwise.
int dahl_dimension(const FamilySpec& spec);

// Edge-list text form, one "i j" per line, "V1: ..." footer.
std::string format_graph(const FlowDimGraph& g);

}  // namespace ivp
