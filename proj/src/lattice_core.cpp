#include "ivp/lattice_core.hpp"

#include <algorithm>
#include <numeric>

namespace ivp {

IVec primitive_normal(const RVec& v) {
  const Eigen::Index n = v.size();
  Int lcm = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Int den = v(i).get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  IVec w(n);
  Int g = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Rat s = v(i) * Rat(lcm);
    w(i) = s.get_num();  // denominator is 1 after scaling
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w(i).get_mpz_t());
  }
  if (g == 0) return w;
  for (Eigen::Index i = 0; i < n; ++i) w(i) /= g;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (w(i) != 0) {
      if (w(i) < 0) w = -w;
      break;
    }
  }
  return w;
}

Rat det_exact(const RMat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det_exact: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row, then run fraction-free Bareiss.
  IMat a(n, n);
  Rat scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Int lcm = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      Int den = m(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    scale *= Rat(lcm);
    for (Eigen::Index j = 0; j < n; ++j) {
      Rat s = m(i, j) * Rat(lcm);
      a(i, j) = s.get_num();
    }
  }

  int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return Rat(sign * a(n - 1, n - 1)) / scale;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(RMat& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(row).swap(a.row(p));
    Rat inv = 1 / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != row && a(i, col) != 0) a.row(i) -= a(i, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_exact(const RMat& m) {
  RMat a = m;
  return static_cast<int>(rref(a).size());
}

RMat kernel_basis(const RMat& m) {
  RMat a = m;
  const std::vector<Eigen::Index> pivots = rref(a);
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> free_cols;
  {
    std::vector<bool> is_pivot(n, false);
    for (Eigen::Index c : pivots) is_pivot[c] = true;
    for (Eigen::Index c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  RMat ker(static_cast<Eigen::Index>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    for (Eigen::Index c = 0; c < n; ++c) ker(k, c) = 0;
    ker(k, free_cols[k]) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      ker(k, pivots[r]) = -a(static_cast<Eigen::Index>(r), free_cols[k]);
  }
  return ker;
}

AffineHull affine_hull(const std::vector<IVec>& points) {
  if (points.empty())
    throw std::invalid_argument("affine_hull: empty point list");
  const Eigen::Index n = points[0].size();
  AffineHull hull;
  hull.ambient = static_cast<int>(n);

  RMat diffs(static_cast<Eigen::Index>(points.size()) - 1, n);
  for (size_t i = 1; i < points.size(); ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      diffs(static_cast<Eigen::Index>(i) - 1, j) =
          Rat(points[i](j) - points[0](j));

  hull.dim = rank_exact(diffs);
  RMat ker = kernel_basis(diffs);
  for (Eigen::Index k = 0; k < ker.rows(); ++k) {
    Equation eq;
    eq.normal = primitive_normal(ker.row(k).transpose());
    eq.rhs = 0;
    for (Eigen::Index j = 0; j < n; ++j) eq.rhs += eq.normal(j) * points[0](j);
    hull.equations.push_back(std::move(eq));
  }
  std::sort(hull.equations.begin(), hull.equations.end(),
            [](const Equation& a, const Equation& b) {
              if (lex_less(a.normal, b.normal)) return true;
              if (lex_less(b.normal, a.normal)) return false;
              return a.rhs < b.rhs;
            });
  return hull;
}

bool origin_in_affine_hull(const std::vector<IVec>& points) {
  const AffineHull hull = affine_hull(points);
  for (const Equation& eq : hull.equations)
    if (eq.rhs != 0) return false;
  return true;
}

std::vector<Int> elementary_divisors(const IMat& m) {
  IMat a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const Eigen::Index rmax = std::min(rows, cols);
  Eigen::Index r = 0;
  while (r < rmax) {
    // Find the nonzero entry of minimal absolute value in the submatrix.
    Eigen::Index pi = -1, pj = -1;
    Int best = 0;
    for (Eigen::Index i = r; i < rows; ++i)
      for (Eigen::Index j = r; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    a.row(r).swap(a.row(pi));
    a.col(r).swap(a.col(pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, r) == 0) continue;
        Int q = a(i, r) / a(r, r);
        a.row(i) -= q * a.row(r);
        if (a(i, r) != 0) {
          a.row(r).swap(a.row(i));  // smaller remainder becomes pivot
          clean = false;
        }
      }
      for (Eigen::Index j = r + 1; j < cols; ++j) {
        if (a(r, j) == 0) continue;
        Int q = a(r, j) / a(r, r);
        a.col(j) -= q * a.col(r);
        if (a(r, j) != 0) {
          a.col(r).swap(a.col(j));
          clean = false;
        }
      }
      if (clean) {
        // Enforce the divisibility chain.
        for (Eigen::Index i = r + 1; i < rows && clean; ++i)
          for (Eigen::Index j = r + 1; j < cols && clean; ++j)
            if (a(i, j) % a(r, r) != 0) {
              a.row(r) += a.row(i);
              clean = false;
            }
      }
    }
    if (a(r, r) < 0) a.row(r) = -a.row(r);
    ++r;
  }
  std::vector<Int> divisors(static_cast<size_t>(rmax), Int(0));
  for (Eigen::Index i = 0; i < r; ++i) divisors[static_cast<size_t>(i)] =
      a(i, i);
  return divisors;
}

bool in_convex_hull(const IVec& p, const std::vector<IVec>& generators) {
  if (generators.empty()) return false;
  const Eigen::Index n = p.size();
  const Eigen::Index k = static_cast<Eigen::Index>(generators.size());
  const Eigen::Index rows = n + 1;

  // Phase-1 simplex tableau for: sum λ_i g_i = p, sum λ_i = 1, λ >= 0.
  RMat t(rows, k + rows);
  RVec rhs(rows);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) t(i, j) = Rat(generators[j](i));
    rhs(i) = Rat(p(i));
  }
  for (Eigen::Index j = 0; j < k; ++j) t(n, j) = 1;
  rhs(n) = 1;
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (rhs(i) < 0) {
      t.row(i) = -t.row(i);
      rhs(i) = -rhs(i);
    }
    for (Eigen::Index j = 0; j < rows; ++j) t(i, k + j) = (i == j) ? 1 : 0;
  }

  std::vector<Eigen::Index> basis(rows);
  for (Eigen::Index i = 0; i < rows; ++i) basis[i] = k + i;

  RVec obj = RVec::Zero(k + rows);
  Rat w = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) obj(j) += t(i, j);
    w += rhs(i);
  }

  for (;;) {
    // Bland's rule: smallest-index entering column with positive cost.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < k + rows; ++j)
      if (obj(j) > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rat best = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = rhs(i) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) break;  // unbounded; cannot occur in phase 1
    Rat piv = t(leave, enter);
    t.row(leave) /= piv;
    rhs(leave) /= piv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      t.row(i) -= f * t.row(leave);
      rhs(i) -= f * rhs(leave);
    }
    Rat f = obj(enter);
    obj -= f * t.row(leave).transpose();
    w -= f * rhs(leave);
    basis[leave] = enter;
  }
  return w == 0;
}

}  // namespace ivp
