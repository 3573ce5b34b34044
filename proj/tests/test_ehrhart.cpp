#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ivp/ehrhart.hpp"
#include "oracles.hpp"

using namespace ivp;

namespace {

IVec vec(std::initializer_list<long> xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

LatticePolytope poly(int n, std::vector<IVec> verts) {
  LatticePolytope p;
  p.n = n;
  std::sort(verts.begin(), verts.end(), lex_less);
  p.vertices = std::move(verts);
  return p;
}

// Coefficients of binom(t + d, d), built by direct convolution.
std::vector<Rat> choose_shift(int d) {
  std::vector<Rat> c{Rat(1)};
  for (int k = 1; k <= d; ++k) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * k;
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  for (Rat& x : c) x /= Rat(factorial(d));
  return c;
}

}  // namespace

TEST_CASE("count_lattice_points on small dilates") {
  const auto fixed = build_family(FamilySpec::fixed(5, 3));
  CHECK(count_lattice_points(fixed, 0) == 1);
  CHECK(count_lattice_points(fixed, 1) == 3);
  CHECK(count_lattice_points(fixed, 2) == 6);

  const auto complete = build_family(FamilySpec::complete(3, true));
  CHECK(count_lattice_points(complete, 1) == 7);
  CHECK(count_lattice_points(complete, 2) == 23);

  CHECK(count_lattice_points(build_family(FamilySpec::complete(3, false)), 1) ==
        6);
  CHECK(count_lattice_points(build_family(FamilySpec::pyramidal(4, 1)), 1) ==
        6);
  CHECK(count_lattice_points(build_root_polytope(4), 1) == 7);

  CHECK_THROWS_AS(count_lattice_points(fixed, -1), std::invalid_argument);
}

TEST_CASE("pruned counting agrees with the full box scan") {
  std::vector<LatticePolytope> polys;
  for (int n = 2; n <= 6; ++n) {
    polys.push_back(build_family(FamilySpec::complete(n, true)));
    polys.push_back(build_family(FamilySpec::complete(n, false)));
  }
  for (int n = 2; n <= 5; ++n) polys.push_back(build_root_polytope(n));
  polys.push_back(build_family(FamilySpec::fixed(5, 2)));
  polys.push_back(build_family(FamilySpec::fixed(6, 3)));
  polys.push_back(build_family(FamilySpec::pyramidal(4, 1)));
  polys.push_back(build_family(FamilySpec::pyramidal(5, 2)));
  polys.push_back(build_family(FamilySpec::pyramidal(6, 1)));
  for (const auto& p : polys)
    for (Int t = 0; t <= 4; ++t)
      CHECK(count_lattice_points(p, t) == oracle::count_by_full_box(p, t));
}

TEST_CASE("threaded counting is deterministic and matches single-thread") {
  const auto p = build_family(FamilySpec::complete(4, true));
  std::vector<Int> single;
  for (Int t = 0; t <= 4; ++t) single.push_back(count_lattice_points(p, t));
  setenv("IVP_THREADS", "3", 1);
  for (Int t = 0; t <= 4; ++t)
    CHECK(count_lattice_points(p, t) == single[static_cast<size_t>(t.get_si())]);
  unsetenv("IVP_THREADS");
}

TEST_CASE("Ehrhart polynomial of the fixed families is a shifted binomial") {
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto poly = ehrhart_polynomial(build_family(FamilySpec::fixed(n, i)));
      CHECK(poly.d == n - i);
      CHECK(poly.coeffs == choose_shift(n - i));
    }
}

TEST_CASE("Ehrhart polynomial of small complete and pyramidal families") {
  const auto c3 = ehrhart_polynomial(build_family(FamilySpec::complete(3, true)));
  REQUIRE(c3.d == 3);
  CHECK(c3.coeffs == std::vector<Rat>{1, Rat(8, 3), Rat(5, 2), Rat(5, 6)});
  CHECK(c3.eval(1) == 7);
  CHECK(c3.eval(2) == 23);

  const auto p41 = ehrhart_polynomial(build_family(FamilySpec::pyramidal(4, 1)));
  REQUIRE(p41.d == 4);
  CHECK(p41.coeffs ==
        std::vector<Rat>{1, Rat(13, 6), Rat(11, 6), Rat(5, 6), Rat(1, 6)});
}

TEST_CASE("Ehrhart text and json forms") {
  const auto c3 = ehrhart_polynomial(build_family(FamilySpec::complete(3, true)));
  CHECK(c3.to_text() == "L(t) = 5/6*t^3 + 5/2*t^2 + 8/3*t + 1");
  CHECK(c3.to_json() == "[\"1/1\", \"8/3\", \"5/2\", \"5/6\"]");
}

TEST_CASE("root polytope dilates count like the complete family") {
  for (int n = 3; n <= 5; ++n)
    CHECK(ehrhart_polynomial(build_root_polytope(n)) ==
          ehrhart_polynomial(
              build_family(FamilySpec::complete(n - 1, true))));
}

TEST_CASE("normalized volumes") {
  for (int n = 1; n <= 4; ++n)
    CHECK(normalized_volume(build_family(FamilySpec::complete(n, true))) ==
          catalan(n));
  CHECK(normalized_volume(build_family(FamilySpec{4, {1, 3}, false})) == 4);
  CHECK(normalized_volume(build_family(FamilySpec::pyramidal(4, 1))) == 4);
  for (int n = 2; n <= 6; ++n)
    CHECK(normalized_volume(build_family(FamilySpec::fixed(n, 2))) == 1);
}

TEST_CASE("simplex_volume_det on explicit simplices") {
  CHECK(simplex_volume_det({vec({0, 0}), vec({1, 0}), vec({0, 1})}) == 1);
  CHECK(simplex_volume_det({vec({0, 0}), vec({2, 0}), vec({0, 2})}) == 4);
  CHECK(simplex_volume_det({vec({0}), vec({3})}) == 3);
  CHECK(simplex_volume_det({vec({5, -2})}) == 1);  // a point
  // embedded segment: lattice length, not euclidean length
  CHECK(simplex_volume_det({vec({0, 0}), vec({2, 2})}) == 2);
  CHECK_THROWS_AS(simplex_volume_det({vec({0, 0}), vec({1, 1}), vec({2, 2})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplex_volume_det({}), std::invalid_argument);
}

TEST_CASE("simplex volume agrees with the Ehrhart volume on simplices") {
  std::mt19937 rng(501);
  std::uniform_int_distribution<int> entry(-2, 2);
  int done = 0;
  while (done < 25) {
    std::vector<IVec> verts;
    for (int k = 0; k < 4; ++k) {
      IVec v(3);
      for (int j = 0; j < 3; ++j) v(j) = entry(rng);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const IVec& a, const IVec& b) { return a == b; }),
                verts.end());
    if (verts.size() != 4 || affine_hull(verts).dim != 3) continue;
    const auto p = poly(3, verts);
    CHECK(simplex_volume_det(verts) == normalized_volume(p));
    ++done;
  }
}

TEST_CASE("is_unimodular_simplex across the fixed families") {
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      CHECK(is_unimodular_simplex(build_family(FamilySpec::fixed(n, i))));
  CHECK_FALSE(is_unimodular_simplex(
      poly(2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})})));
  CHECK_FALSE(is_unimodular_simplex(
      poly(2, {vec({0, 0}), vec({2, 0}), vec({0, 2})})));
}

TEST_CASE("decompose_fixed_basis on named points") {
  // the anchor itself has all coefficients zero
  CHECK(decompose_fixed_basis(make_interval_vector(5, 3, 5).realize(), 5, 3) ==
        std::vector<Int>{0, 0});
  CHECK(decompose_fixed_basis(make_interval_vector(5, 1, 3).realize(), 5, 3) ==
        std::vector<Int>{1, 0});
  CHECK(decompose_fixed_basis(make_interval_vector(5, 2, 4).realize(), 5, 3) ==
        std::vector<Int>{0, 1});
}

TEST_CASE("decompose_fixed_basis rejects points outside the affine space") {
  CHECK_THROWS_AS(decompose_fixed_basis(vec({1, 0, 0, 0, 0}), 5, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(decompose_fixed_basis(vec({0, 0, 0}), 3, 1),
                  std::invalid_argument);
}

TEST_CASE("decompose_fixed_basis inverts random lattice combinations") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coeff(-6, 6), pick_n(2, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    const int i = pick_i(rng);
    const IVec anchor = make_interval_vector(n, n - i + 1, n).realize();
    std::vector<Int> y(static_cast<size_t>(n - i));
    IVec point = anchor;
    for (int t = 1; t <= n - i; ++t) {
      y[static_cast<size_t>(t) - 1] = coeff(rng);
      const IVec w = make_interval_vector(n, t, t + i - 1).realize() - anchor;
      point += y[static_cast<size_t>(t) - 1] * w;
    }
    CHECK(decompose_fixed_basis(point, n, i) == y);
  }
}

TEST_CASE("ehrhart_polynomial rejects empty input") {
  LatticePolytope empty;
  empty.n = 3;
  CHECK_THROWS_AS(ehrhart_polynomial(empty), std::invalid_argument);
}
