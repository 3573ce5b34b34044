#pragma once

// Interval vectors, the complete / fixed / pyramidal polytope families,
// Postnikov's root polytope, and the unimodular transform T with its
// lattice-preserving bijection.

#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ivp/lattice_core.hpp"

namespace ivp {

struct IntervalVector {
  int n = 0;
  // Zero span or 1-based [i, j] with 1 <= i <= j <= n.
  bool is_zero = true;
  int i = 0, j = 0;

  static IntervalVector zero(int n) { return {n, true, 0, 0}; }
  int length() const { return is_zero ? 0 : j - i + 1; }
  IVec realize() const;
};

IntervalVector make_interval_vector(int n, int i, int j);

struct FamilySpec {
  int n = 0;
  std::set<int> lengths;
  bool include_origin = false;

  static FamilySpec complete(int n, bool include_origin);
  static FamilySpec fixed(int n, int i);
  static FamilySpec pyramidal(int n, int i);  // lengths {1, n-i}
  void validate() const;
};

struct HRep;  // defined in hull_faces.hpp

struct LatticePolytope {
  int n = 0;
  std::vector<IVec> vertices;  // deduplicated, lexicographically sorted
  mutable std::shared_ptr<const HRep> cached_hrep;
};

// All interval vectors with length in spec.lengths, in (length, start)
// order, plus the origin if requested. Not minimized.
std::vector<IVec> family_generators(const FamilySpec& spec);

// Drop every generator that is a convex combination of the others;
// result sorted lexicographically.
std::vector<IVec> minimize_vertices(const std::vector<IVec>& generators);

LatticePolytope build_family(const FamilySpec& spec);

// conv(0, e_i - e_j for i < j) in R^n.
LatticePolytope build_root_polytope(int n);

enum class Direction { Forward, Inverse };

// T is the lower-triangular all-ones matrix: forward takes prefix sums,
// inverse takes first differences.
IVec apply_T(const IVec& v, Direction dir);

// Forward: B ∩ Z^n -> Z^{n-1} by dropping the (zero) last coordinate of
// T x; inverse reconstructs the unique preimage with coordinate sum 0.
IVec lattice_bijection(const IVec& x, Direction dir);

struct ElementaryVector {
  enum class Kind { Zero, Unit, Diff };
  int n = 0;
  Kind kind = Kind::Zero;
  int i = 0, j = 0;  // Unit(i); Diff(i, j) = e_i - e_j with i < j
  IVec realize() const;
};

// E = T^{-1}(I_S), classified.
std::vector<ElementaryVector> elementary_set(const FamilySpec& spec);

// Classify an integer vector as an elementary vector, if it is one.
std::optional<ElementaryVector> classify_elementary(const IVec& v);

// Vertex-list text format: "n m" header then m rows of n integers.
// "alpha i j" rows are accepted as shorthand on input.
std::string format_vertex_list(const LatticePolytope& p);
LatticePolytope parse_vertex_list(std::istream& in);

}  // namespace ivp
