#pragma once

// Lattice-point counting in dilates, exact Ehrhart interpolation,
// normalized volumes, and the fixed-family lattice-basis decomposition.

#include <string>
#include <vector>

#include "ivp/hull_faces.hpp"

namespace ivp {

struct EhrhartPolynomial {
  int d = 0;
  std::vector<Rat> coeffs;  // c_0..c_d, L(t) = sum c_k t^k

  Rat eval(const Int& t) const;
  bool operator==(const EhrhartPolynomial& o) const {
    return d == o.d && coeffs == o.coeffs;
  }
  std::string to_text() const;  // "L(t) = ..."
  std::string to_json() const;  // array of "num/den" strings
};

// Exact number of lattice points in t * P. Counting walks the bounding
// box coordinate by coordinate with interval pruning against the H-rep;
// slabs of the first coordinate may be split across IVP_THREADS workers.
Int count_lattice_points(const LatticePolytope& p, const Int& t);

// Interpolation through t = 0..d with a guard check at t = d+1.
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p);

// d! times the leading Ehrhart coefficient, asserted integral.
Int normalized_volume(const LatticePolytope& p);

// Normalized volume of a lattice simplex via the elementary divisors of
// its edge matrix (the determinant taken in a lattice basis of the
// affine hull's lattice).
Int simplex_volume_det(const std::vector<IVec>& vertices);

bool is_unimodular_simplex(const LatticePolytope& p);

// Coefficients Y_1..Y_{n-i} of an integer point of the fixed-family
// affine space over the basis w_k = alpha_{k,k+i-1} - alpha_{n-i+1,n}
// anchored at alpha_{n-i+1,n}.
std::vector<Int> decompose_fixed_basis(const IVec& point, int n, int i);

}  // namespace ivp
