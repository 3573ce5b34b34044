#include <doctest.h>

#include "ivp/ehrhart.hpp"
#include "ivp/hull_faces.hpp"

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

FVector fv(std::initializer_list<long> counts) {
  FVector f;
  f.d = static_cast<int>(counts.size()) - 2;
  for (long c : counts) f.counts.push_back(Int(c));
  return f;
}

}  // namespace

TEST_CASE("facets of the unit square") {
  const auto sq =
      poly(2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})});
  const HRep h = facet_enumeration(sq);
  CHECK(h.dim == 2);
  CHECK(h.equations.empty());
  REQUIRE(h.facets.size() == 4);
  for (const Equation& f : h.facets) {
    // each facet is tight at exactly two vertices
    int tight = 0;
    for (const IVec& v : sq.vertices) {
      Int s = f.normal(0) * v(0) + f.normal(1) * v(1);
      CHECK(s <= f.rhs);
      if (s == f.rhs) ++tight;
    }
    CHECK(tight == 2);
  }
}

TEST_CASE("H-rep of the fixed family P_5(I_3)") {
  const auto p = build_family(FamilySpec::fixed(5, 3));
  const HRep& h = hrep_of(p);
  CHECK(h.dim == 2);
  CHECK(h.equations.size() == 3);
  CHECK(h.facets.size() == 3);
  // the cache serves the same object on repeat access
  CHECK(&hrep_of(p) == &h);
}

TEST_CASE("f-vector of simplices and the fixed triangle") {
  const auto p = build_family(FamilySpec::fixed(5, 3));
  const FVector f = f_vector(p);
  CHECK(f.d == 2);
  CHECK(f.counts == fv({1, 3, 3, 1}).counts);
  CHECK(f.euler_ok());
  CHECK(face_vertex_sets(p).size() == 6);
}

TEST_CASE("f-vector of the complete family at n = 4") {
  const auto p = build_family(FamilySpec{4, {1, 3}, false});
  const FVector f = f_vector(p);
  CHECK(f.d == 4);
  CHECK(f.counts == fv({1, 6, 13, 13, 6, 1}).counts);
  CHECK(f.euler_ok());
}

TEST_CASE("Euler relation holds across the families") {
  for (int n = 2; n <= 5; ++n)
    CHECK(f_vector(build_family(FamilySpec::complete(n, true))).euler_ok());
  for (int n = 3; n <= 6; ++n)
    CHECK(f_vector(build_family(FamilySpec::pyramidal(n, 1))).euler_ok());
}

TEST_CASE("pyramid_f_vector on known pyramids") {
  // pyramid over a triangle is a tetrahedron
  CHECK(pyramid_f_vector(fv({1, 3, 3, 1})).counts ==
        fv({1, 4, 6, 4, 1}).counts);
  // pyramid over a square
  CHECK(pyramid_f_vector(fv({1, 4, 4, 1})).counts ==
        fv({1, 5, 8, 5, 1}).counts);
  // a point lifts to a segment, a segment to a triangle
  CHECK(pyramid_f_vector(fv({1, 1})).counts == fv({1, 2, 1}).counts);
  CHECK(pyramid_f_vector(fv({1, 2, 1})).counts == fv({1, 3, 3, 1}).counts);

  FVector bad = fv({1, 3, 3, 1});
  bad.counts[1] = 0;
  CHECK_THROWS_AS(pyramid_f_vector(bad), std::invalid_argument);
}

TEST_CASE("pyramid recursion commutes with building the pyramid") {
  // pyramid over the unit square, apex lifted to a new coordinate
  std::vector<IVec> verts;
  for (long a : {0, 1})
    for (long b : {0, 1}) verts.push_back(vec({a, b, 0}));
  verts.push_back(vec({0, 0, 1}));
  const auto pyr = poly(3, verts);
  const auto sq =
      poly(2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})});
  CHECK(f_vector(pyr).counts == pyramid_f_vector(f_vector(sq)).counts);
}

TEST_CASE("pyramidal base vertices and dimension") {
  for (int i = 1; i <= 3; ++i)
    for (int n = 2 * i + 1; n <= 8; ++n) {
      const auto base = pyramidal_base(n, i);
      CHECK(base.size() == static_cast<size_t>(3 * i + 1));
      CHECK(affine_hull(base).dim == 2 * i);
    }
  CHECK_THROWS_AS(pyramidal_base(4, 2), std::invalid_argument);
}

TEST_CASE("the base of the first pyramidal family is a quadrilateral") {
  const auto base = poly(4, pyramidal_base(4, 1));
  CHECK(f_vector(base).counts == fv({1, 4, 4, 1}).counts);
}

TEST_CASE("pyramid tower check on the pyramidal families") {
  for (int i = 1; i <= 3; ++i)
    for (int n = 2 * i + 1; n <= 8; ++n) {
      const auto checks = pyramid_tower_check(FamilySpec::pyramidal(n, i));
      REQUIRE(checks.size() == static_cast<size_t>(n - 2 * i));
      for (size_t k = 0; k < checks.size(); ++k) {
        CHECK(checks[k].apex == i + 1 + static_cast<int>(k));
        CHECK(checks[k].is_apex);
      }
    }
  CHECK_THROWS_AS(pyramid_tower_check(FamilySpec::fixed(5, 3)),
                  std::invalid_argument);
}

TEST_CASE("iterated pyramid recursion reproduces the pyramidal f-vector") {
  for (int n = 3; n <= 6; ++n) {
    FVector f = f_vector(poly(n, pyramidal_base(n, 1)));
    for (int k = 0; k < n - 2; ++k) f = pyramid_f_vector(f);
    CHECK(f.counts == f_vector(build_family(FamilySpec::pyramidal(n, 1))).counts);
  }
}

TEST_CASE("placing triangulation of the unit square") {
  const std::vector<IVec> pts{vec({0, 0}), vec({1, 0}), vec({0, 1}),
                              vec({1, 1})};
  const auto tri = placing_triangulation(pts);
  REQUIRE(tri.size() == 2);
  Int total = 0;
  for (const auto& s : tri) {
    REQUIRE(s.size() == 3);
    std::vector<IVec> sv;
    for (int idx : s) sv.push_back(pts[static_cast<size_t>(idx)]);
    total += simplex_volume_det(sv);
  }
  CHECK(total == 2);  // normalized area of the unit square
}

TEST_CASE("placing triangulation volumes sum to the polytope volume") {
  for (int n = 3; n <= 5; ++n) {
    const auto p = build_family(FamilySpec::complete(n, true));
    const auto tri = placing_triangulation(p.vertices);
    Int total = 0;
    for (const auto& s : tri) {
      REQUIRE(s.size() == static_cast<size_t>(n + 1));
      std::vector<IVec> sv;
      for (int idx : s) sv.push_back(p.vertices[static_cast<size_t>(idx)]);
      total += simplex_volume_det(sv);
    }
    CHECK(total == normalized_volume(p));
  }
}

TEST_CASE("format_hrep layout") {
  const auto seg = poly(1, {vec({0}), vec({2})});
  CHECK(format_hrep(hrep_of(seg)) == "-1 <= 0\n1 <= 2\n");
  const auto pt = poly(2, {vec({1, 2})});
  CHECK(format_hrep(hrep_of(pt)) == "0 1 == 2\n1 0 == 1\n");
}
