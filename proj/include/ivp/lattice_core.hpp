#pragma once

// Exact linear-algebra substrate: determinants, rank, affine hulls,
// Smith normal form, convex-combination feasibility.

#include <stdexcept>
#include <utility>
#include <vector>

#include "ivp/scalar.hpp"

namespace ivp {

// normal . x = rhs, normal primitive with first nonzero entry positive.
struct Equation {
  IVec normal;
  Int rhs;
};

struct AffineHull {
  int ambient = 0;
  int dim = -1;
  std::vector<Equation> equations;
};

// Scale a rational vector to a primitive integer vector with the first
// nonzero entry positive. Zero vectors are returned unchanged.
IVec primitive_normal(const RVec& v);

// Exact determinant via fraction-free (Bareiss) elimination after
// clearing denominators.
Rat det_exact(const RMat& m);

int rank_exact(const RMat& m);

// Canonical basis of { x : m x = 0 }, from the reduced row echelon form.
// Rows of the result are the kernel basis vectors.
RMat kernel_basis(const RMat& m);

AffineHull affine_hull(const std::vector<IVec>& points);

bool origin_in_affine_hull(const std::vector<IVec>& points);

// Smith-normal-form diagonal d_1 | d_2 | ... | d_r followed by zeros,
// all nonnegative; length = min(rows, cols).
std::vector<Int> elementary_divisors(const IMat& m);

// Exact feasibility: does p lie in conv(generators)? Phase-1 simplex
// over the rationals with Bland's rule.
bool in_convex_hull(const IVec& p, const std::vector<IVec>& generators);

}  // namespace ivp
