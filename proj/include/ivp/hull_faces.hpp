#pragma once

// Exact facet enumeration, face lattice / f-vectors, the pyramid
// face-count recursion, and placing triangulations.

#include <cstdint>
#include <string>
#include <vector>

#include "ivp/interval_family.hpp"

namespace ivp {

// Facets normal . x <= rhs plus affine-hull equations, both with
// primitive sign-normalized normals, sorted lexicographically.
struct HRep {
  int ambient = 0;
  int dim = -1;
  std::vector<Equation> facets;
  std::vector<Equation> equations;
};

HRep facet_enumeration(const LatticePolytope& p);

// Computes and caches the H-representation.
const HRep& hrep_of(const LatticePolytope& p);

struct FVector {
  int d = 0;
  std::vector<Int> counts;  // f_{-1}, f_0, ..., f_d

  Int f(int k) const { return counts.at(static_cast<size_t>(k + 1)); }
  bool euler_ok() const;
};

// Distinct tight vertex sets of the proper nonempty faces, as bitsets
// over vertex indices (closure of facet-set intersections).
std::vector<std::uint64_t> face_vertex_sets(const LatticePolytope& p);

FVector f_vector(const LatticePolytope& p);

// Face counts of a pyramid over a base with f-vector fK.
FVector pyramid_f_vector(const FVector& fK);

// Base of the i-th pyramidal family: unit vectors e_1..e_i and
// e_{n-i+1}..e_n together with the interval vectors of length n-i.
std::vector<IVec> pyramidal_base(int n, int i);

struct ApexCheck {
  int apex;  // 1-based coordinate index of the apex e_apex
  bool is_apex;
};

// Walk the apex sequence e_{i+1},...,e_{n-i}, checking each lies
// outside the affine hull of the accumulated base.
std::vector<ApexCheck> pyramid_tower_check(const FamilySpec& spec);

// Incremental placing triangulation: points processed in the given
// order, each new point coned over the visible boundary facets.
// Returns index sets of full-dimensional simplices.
std::vector<std::vector<int>> placing_triangulation(
    const std::vector<IVec>& points);

// H-rep text format: "a_1 ... a_n <= b" and "a_1 ... a_n == b" lines.
std::string format_hrep(const HRep& h);

}  // namespace ivp
