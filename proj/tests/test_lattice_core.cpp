#include <doctest.h>

#include <random>

#include "ivp/interval_family.hpp"
#include "oracles.hpp"

using namespace ivp;

namespace {

IVec vec(std::initializer_list<long> xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

RMat rmat(int rows, int cols, std::initializer_list<long> xs) {
  RMat m(rows, cols);
  auto it = xs.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Rat(*it++);
  return m;
}

}  // namespace

TEST_CASE("det_exact on small fixed matrices") {
  RMat id = RMat::Identity(4, 4);
  CHECK(det_exact(id) == 1);
  CHECK(det_exact(rmat(2, 2, {0, 1, 1, 0})) == -1);

  // 0 diagonal, 1 elsewhere, n = 5
  RMat m(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) m(r, c) = (r == c) ? 0 : 1;
  CHECK(det_exact(m) == 4);
}

TEST_CASE("det_exact rejects non-square input") {
  RMat m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(det_exact(m), std::invalid_argument);
}

TEST_CASE("det_exact handles rational entries") {
  RMat m(2, 2);
  m(0, 0) = Rat(1, 2);
  m(0, 1) = Rat(1, 3);
  m(1, 0) = Rat(1, 5);
  m(1, 1) = Rat(1, 7);
  CHECK(det_exact(m) == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("det_exact agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(20130811);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    RMat m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = Rat(entry(rng));
    CHECK(det_exact(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("affine_hull of the standard simplex vertices") {
  std::vector<IVec> pts;
  for (int n : {3, 4, 6}) {
    pts.clear();
    for (int k = 0; k < n; ++k) {
      IVec e = IVec::Zero(n);
      e(k) = 1;
      pts.push_back(e);
    }
    const AffineHull hull = affine_hull(pts);
    CHECK(hull.dim == n - 1);
    REQUIRE(hull.equations.size() == 1);
    for (int j = 0; j < n; ++j) CHECK(hull.equations[0].normal(j) == 1);
    CHECK(hull.equations[0].rhs == 1);
  }
}

TEST_CASE("affine_hull of a single point") {
  const AffineHull hull = affine_hull({vec({3, -1, 2})});
  CHECK(hull.dim == 0);
  CHECK(hull.equations.size() == 3);
}

TEST_CASE("affine_hull of the fixed family vertices") {
  const auto p = build_family(FamilySpec::fixed(5, 3));
  CHECK(affine_hull(p.vertices).dim == 2);
}

TEST_CASE("affine_hull rejects empty input") {
  CHECK_THROWS_AS(affine_hull({}), std::invalid_argument);
  CHECK_THROWS_AS(origin_in_affine_hull({}), std::invalid_argument);
}

TEST_CASE("affine_hull dim is invariant under input permutation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IVec> pts;
    for (int k = 0; k < 5; ++k) {
      IVec v(4);
      for (int j = 0; j < 4; ++j) v(j) = entry(rng);
      pts.push_back(v);
    }
    const int dim = affine_hull(pts).dim;
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(pts.begin(), pts.end(), rng);
      CHECK(affine_hull(pts).dim == dim);
    }
  }
}

TEST_CASE("affine_hull equations are primitive and sign-normalized") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IVec> pts;
    for (int k = 0; k < 3; ++k) {
      IVec v(5);
      for (int j = 0; j < 5; ++j) v(j) = entry(rng);
      pts.push_back(v);
    }
    for (const Equation& eq : affine_hull(pts).equations) {
      Int g = 0;
      for (int j = 0; j < 5; ++j)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), eq.normal(j).get_mpz_t());
      CHECK(g == 1);
      for (int j = 0; j < 5; ++j) {
        if (eq.normal(j) != 0) {
          CHECK(eq.normal(j) > 0);
          break;
        }
      }
      // every input point satisfies the equation exactly
      for (const IVec& p : pts) {
        Int s = 0;
        for (int j = 0; j < 5; ++j) s += eq.normal(j) * p(j);
        CHECK(s == eq.rhs);
      }
    }
  }
}

TEST_CASE("origin_in_affine_hull examples") {
  CHECK(origin_in_affine_hull(
      family_generators(FamilySpec{4, {1, 3}, false})));
  CHECK_FALSE(origin_in_affine_hull(
      family_generators(FamilySpec::fixed(5, 3))));
  CHECK(origin_in_affine_hull({IVec::Zero(3)}));
}

TEST_CASE("elementary_divisors on fixed matrices") {
  IMat id = IMat::Identity(3, 3);
  CHECK(elementary_divisors(id) == std::vector<Int>{1, 1, 1});

  IMat d2(2, 2);
  d2 << 2, 0, 0, 2;
  CHECK(elementary_divisors(d2) == std::vector<Int>{2, 2});

  // edge matrix of the P_5(I_3) vertices
  const auto p = build_family(FamilySpec::fixed(5, 3));
  REQUIRE(p.vertices.size() == 3);
  IMat edges(5, 2);
  for (int r = 0; r < 5; ++r) {
    edges(r, 0) = p.vertices[1](r) - p.vertices[0](r);
    edges(r, 1) = p.vertices[2](r) - p.vertices[0](r);
  }
  CHECK(elementary_divisors(edges) == std::vector<Int>{1, 1});
}

TEST_CASE("elementary_divisors agrees with determinantal divisors") {
  std::mt19937 rng(2013);
  std::uniform_int_distribution<int> entry(-4, 4), rows(1, 4), cols(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = rows(rng), c = cols(rng);
    IMat m(r, c);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < c; ++b) m(a, b) = entry(rng);
    CHECK(elementary_divisors(m) == oracle::snf_by_minors(m));
  }
}

TEST_CASE("elementary_divisors chain and determinant product") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IMat m(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = entry(rng);
    const auto div = elementary_divisors(m);
    Int prod = 1;
    for (size_t k = 0; k + 1 < div.size(); ++k)
      if (div[k + 1] != 0) CHECK(div[k + 1] % div[k] == 0);
    for (const Int& d : div) prod *= d;
    const Rat det = det_exact(to_rational(m));
    CHECK(prod == abs(det.get_num()));
  }
}

TEST_CASE("in_convex_hull basic geometry") {
  std::vector<IVec> square{vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})};
  CHECK(in_convex_hull(vec({0, 0}), square));
  CHECK(in_convex_hull(vec({1, 1}), square));
  CHECK_FALSE(in_convex_hull(vec({2, 0}), square));
  CHECK_FALSE(in_convex_hull(vec({-1, 0}), square));
  // interior point of a dilate
  std::vector<IVec> big{vec({0, 0}), vec({4, 0}), vec({0, 4})};
  CHECK(in_convex_hull(vec({1, 1}), big));
  CHECK_FALSE(in_convex_hull(vec({3, 3}), big));
}
