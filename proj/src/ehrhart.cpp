#include "ivp/ehrhart.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace ivp {

Rat EhrhartPolynomial::eval(const Int& t) const {
  Rat acc = 0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * Rat(t) + coeffs[k];
  return acc;
}

std::string EhrhartPolynomial::to_text() const {
  std::ostringstream os;
  os << "L(t) =";
  bool first = true;
  for (int k = d; k >= 0; --k) {
    const Rat& c = coeffs[static_cast<size_t>(k)];
    if (c == 0 && !(first && k == 0)) continue;
    if (first) {
      os << ' ' << (c < 0 ? "-" : "");
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << '*';
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string EhrhartPolynomial::to_json() const {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k) os << ", ";
    os << '"' << coeffs[k].get_num().get_str() << '/'
       << coeffs[k].get_den().get_str() << '"';
  }
  os << ']';
  return os.str();
}

namespace {

struct Constraint {
  std::vector<Int> a;
  Int rhs;       // already scaled by t
  bool is_eq;
};

struct Counter {
  int n;
  std::vector<Constraint> cons;
  std::vector<Int> lo, hi;
  // min/max achievable contribution of coordinates k..n-1, per constraint
  std::vector<std::vector<Int>> min_rest, max_rest;

  Int count_from(int depth, std::vector<Int>& partial) const {
    if (depth == n) {
      for (size_t c = 0; c < cons.size(); ++c) {
        if (cons[c].is_eq ? partial[c] != cons[c].rhs
                          : partial[c] > cons[c].rhs)
          return 0;
      }
      return 1;
    }
    Int L = lo[static_cast<size_t>(depth)], U = hi[static_cast<size_t>(depth)];
    for (size_t c = 0; c < cons.size() && L <= U; ++c) {
      const Constraint& con = cons[c];
      const Int& mn = min_rest[c][static_cast<size_t>(depth) + 1];
      const Int& mx = max_rest[c][static_cast<size_t>(depth) + 1];
      const Int& ak = con.a[static_cast<size_t>(depth)];
      if (ak == 0) {
        // prune on infeasible residual range
        if (partial[c] + min_rest[c][static_cast<size_t>(depth)] > con.rhs)
          return 0;
        if (con.is_eq &&
            partial[c] + max_rest[c][static_cast<size_t>(depth)] < con.rhs)
          return 0;
        continue;
      }
      Int slack = con.rhs - partial[c] - mn;
      if (ak > 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), slack.get_mpz_t(), ak.get_mpz_t());
        U = std::min(U, q);
      } else {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), slack.get_mpz_t(), ak.get_mpz_t());
        L = std::max(L, q);
      }
      if (con.is_eq) {
        Int slack2 = con.rhs - partial[c] - mx;
        if (ak > 0) {
          Int q;
          mpz_cdiv_q(q.get_mpz_t(), slack2.get_mpz_t(), ak.get_mpz_t());
          L = std::max(L, q);
        } else {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), slack2.get_mpz_t(), ak.get_mpz_t());
          U = std::min(U, q);
        }
      }
    }
    Int total = 0;
    for (Int x = L; x <= U; ++x) {
      for (size_t c = 0; c < cons.size(); ++c)
        partial[c] += cons[c].a[static_cast<size_t>(depth)] * x;
      total += count_from(depth + 1, partial);
      for (size_t c = 0; c < cons.size(); ++c)
        partial[c] -= cons[c].a[static_cast<size_t>(depth)] * x;
    }
    return total;
  }
};

int worker_count() {
  if (const char* env = std::getenv("IVP_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace

Int count_lattice_points(const LatticePolytope& p, const Int& t) {
  if (t < 0)
    throw std::invalid_argument("count_lattice_points: negative dilation");
  if (t == 0) return 1;
  const HRep& h = hrep_of(p);

  Counter ctr;
  ctr.n = p.n;
  auto add = [&](const Equation& eq, bool is_eq) {
    Constraint c;
    c.a.assign(eq.normal.data(), eq.normal.data() + eq.normal.size());
    c.rhs = eq.rhs * t;
    c.is_eq = is_eq;
    ctr.cons.push_back(std::move(c));
  };
  for (const Equation& eq : h.equations) add(eq, true);
  for (const Equation& eq : h.facets) add(eq, false);

  ctr.lo.assign(static_cast<size_t>(p.n), Int(0));
  ctr.hi.assign(static_cast<size_t>(p.n), Int(0));
  for (int j = 0; j < p.n; ++j) {
    Int mn = p.vertices[0](j), mx = p.vertices[0](j);
    for (const IVec& v : p.vertices) {
      mn = std::min(mn, v(j));
      mx = std::max(mx, v(j));
    }
    ctr.lo[static_cast<size_t>(j)] = mn * t;
    ctr.hi[static_cast<size_t>(j)] = mx * t;
  }
  ctr.min_rest.assign(ctr.cons.size(),
                      std::vector<Int>(static_cast<size_t>(p.n) + 1, Int(0)));
  ctr.max_rest = ctr.min_rest;
  for (size_t c = 0; c < ctr.cons.size(); ++c) {
    for (int j = p.n - 1; j >= 0; --j) {
      const Int& a = ctr.cons[c].a[static_cast<size_t>(j)];
      Int v1 = a * ctr.lo[static_cast<size_t>(j)];
      Int v2 = a * ctr.hi[static_cast<size_t>(j)];
      ctr.min_rest[c][static_cast<size_t>(j)] =
          ctr.min_rest[c][static_cast<size_t>(j) + 1] + std::min(v1, v2);
      ctr.max_rest[c][static_cast<size_t>(j)] =
          ctr.max_rest[c][static_cast<size_t>(j) + 1] + std::max(v1, v2);
    }
  }

  const int threads = worker_count();
  if (threads <= 1 || p.n < 2) {
    std::vector<Int> partial(ctr.cons.size(), Int(0));
    return ctr.count_from(0, partial);
  }

  // Deterministic split: slabs of the first coordinate, summed in order.
  std::vector<Int> firsts;
  for (Int x = ctr.lo[0]; x <= ctr.hi[0]; ++x) firsts.push_back(x);
  std::vector<Int> results(firsts.size(), Int(0));
  std::vector<std::thread> pool;
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(threads),
                                           std::max<size_t>(firsts.size(), 1));
  for (size_t w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t idx = w; idx < firsts.size(); idx += nthreads) {
        std::vector<Int> partial(ctr.cons.size(), Int(0));
        for (size_t c = 0; c < ctr.cons.size(); ++c)
          partial[c] = ctr.cons[c].a[0] * firsts[idx];
        // re-bound x_0 by running the depth-0 pruning once
        results[idx] = ctr.count_from(1, partial);
      }
    });
  }
  for (auto& th : pool) th.join();
  Int total = 0;
  for (const Int& r : results) total += r;
  return total;
}

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  if (p.vertices.empty())
    throw std::invalid_argument("ehrhart_polynomial: empty polytope");
  const int d = hrep_of(p).dim;
  RMat vand(d + 1, d + 1);
  RVec rhs(d + 1);
  for (int r = 0; r <= d; ++r) {
    Rat power = 1;
    for (int c = 0; c <= d; ++c) {
      vand(r, c) = power;
      power *= r;
    }
    rhs(r) = Rat(count_lattice_points(p, r));
  }
  Eigen::FullPivLU<RMat> lu(vand);
  RVec sol = lu.solve(rhs);

  EhrhartPolynomial poly;
  poly.d = d;
  for (int k = 0; k <= d; ++k) poly.coeffs.push_back(sol(k));
  // Guard node: a counting bug would almost surely break degree-d fit here.
  if (poly.eval(d + 1) != Rat(count_lattice_points(p, d + 1)))
    throw std::logic_error(
        "ehrhart_polynomial: interpolation failed the guard check at t = d+1");
  if (poly.coeffs.front() != 1 || poly.coeffs.back() <= 0)
    throw std::logic_error("ehrhart_polynomial: invalid coefficient pattern");
  return poly;
}

Int normalized_volume(const LatticePolytope& p) {
  const EhrhartPolynomial poly = ehrhart_polynomial(p);
  Rat vol = Rat(factorial(poly.d)) * poly.coeffs.back();
  if (vol.get_den() != 1)
    throw std::logic_error("normalized_volume: non-integral result");
  return vol.get_num();
}

Int simplex_volume_det(const std::vector<IVec>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("simplex_volume_det: empty vertex list");
  const int d = static_cast<int>(vertices.size()) - 1;
  const Eigen::Index n = vertices[0].size();
  IMat edges(n, d);
  for (int c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      edges(r, c) = vertices[static_cast<size_t>(c) + 1](r) - vertices[0](r);
  const std::vector<Int> div = elementary_divisors(edges);
  Int vol = 1;
  for (const Int& dk : div) {
    if (dk == 0)
      throw std::invalid_argument("simplex_volume_det: degenerate simplex");
    vol *= dk;
  }
  if (static_cast<int>(div.size()) != d)
    throw std::invalid_argument("simplex_volume_det: degenerate simplex");
  return vol;
}

bool is_unimodular_simplex(const LatticePolytope& p) {
  const int d = affine_hull(p.vertices).dim;
  if (static_cast<int>(p.vertices.size()) != d + 1) return false;
  return simplex_volume_det(p.vertices) == 1;
}

std::vector<Int> decompose_fixed_basis(const IVec& point, int n, int i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("decompose_fixed_basis: need 1 <= i <= n");
  for (int k = 1; k <= i; ++k) {
    Int sum = 0;
    for (int j = k; j <= n; j += i) sum += point(j - 1);
    if (sum != 1)
      throw std::invalid_argument(
          "decompose_fixed_basis: point not in the fixed-family affine space");
  }
  std::vector<Int> y(static_cast<size_t>(n - i));
  for (int t = 1; t <= n - i; ++t) {
    // For 1 <= c <= n-i the c-th coordinate is the window sum
    // y_{c-i+1} + ... + y_c, so first differences recover y with a lag-i
    // correction once the window starts sliding.
    if (t == 1)
      y[0] = point(0);
    else if (t <= i)
      y[static_cast<size_t>(t) - 1] = point(t - 1) - point(t - 2);
    else
      y[static_cast<size_t>(t) - 1] = point(t - 1) - point(t - 2) +
                                      y[static_cast<size_t>(t - i) - 1];
  }
  // Reconstruction must be exact.
  IVec rec = make_interval_vector(n, n - i + 1, n).realize();
  for (int t = 1; t <= n - i; ++t) {
    IVec w = make_interval_vector(n, t, t + i - 1).realize() -
             make_interval_vector(n, n - i + 1, n).realize();
    rec += y[static_cast<size_t>(t) - 1] * w;
  }
  if (rec != point)
    throw std::logic_error("decompose_fixed_basis: reconstruction mismatch");
  return y;
}

}  // namespace ivp
