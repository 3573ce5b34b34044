#include "ivp/hull_faces.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace ivp {

namespace {

bool eq_less(const Equation& a, const Equation& b) {
  if (lex_less(a.normal, b.normal)) return true;
  if (lex_less(b.normal, a.normal)) return false;
  return a.rhs < b.rhs;
}

// Normal of the unique hyperplane inside the affine hull through the
// given affinely independent points; nullopt if the points do not span
// a hyperplane of the hull.
std::optional<IVec> hyperplane_normal(const AffineHull& hull,
                                      const std::vector<IVec>& pts) {
  const int n = hull.ambient;
  const Eigen::Index rows =
      static_cast<Eigen::Index>(hull.equations.size() + pts.size() - 1);
  RMat m(rows, n);
  Eigen::Index r = 0;
  for (const Equation& eq : hull.equations) {
    for (int j = 0; j < n; ++j) m(r, j) = Rat(eq.normal(j));
    ++r;
  }
  for (size_t k = 1; k < pts.size(); ++k) {
    for (int j = 0; j < n; ++j) m(r, j) = Rat(pts[k](j) - pts[0](j));
    ++r;
  }
  RMat ker = kernel_basis(m);
  if (ker.rows() != 1) return std::nullopt;
  return primitive_normal(ker.row(0).transpose());
}

// All k-subsets of {0,...,m-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& fn) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

HRep facet_enumeration(const LatticePolytope& p) {
  if (p.vertices.empty())
    throw std::invalid_argument("facet_enumeration: empty polytope");
  const AffineHull hull = affine_hull(p.vertices);
  HRep h;
  h.ambient = hull.ambient;
  h.dim = hull.dim;
  h.equations = hull.equations;
  if (hull.dim <= 0) return h;

  const int m = static_cast<int>(p.vertices.size());
  std::set<std::pair<std::vector<Int>, Int>> seen;
  for_each_subset(m, hull.dim, [&](const std::vector<int>& idx) {
    std::vector<IVec> pts;
    for (int i : idx) pts.push_back(p.vertices[static_cast<size_t>(i)]);
    auto normal = hyperplane_normal(hull, pts);
    if (!normal) return;
    IVec a = *normal;
    Int b = 0;
    for (int j = 0; j < hull.ambient; ++j) b += a(j) * pts[0](j);
    bool any_below = false, any_above = false;
    for (const IVec& v : p.vertices) {
      Int s = 0;
      for (int j = 0; j < hull.ambient; ++j) s += a(j) * v(j);
      if (s < b) any_below = true;
      if (s > b) any_above = true;
    }
    if (any_below && any_above) return;  // not supporting
    if (!any_below && !any_above) return;
    if (any_above) {
      a = -a;
      b = -b;
    }
    std::vector<Int> key(a.data(), a.data() + a.size());
    if (!seen.insert({key, b}).second) return;
    h.facets.push_back({a, b});
  });
  std::sort(h.facets.begin(), h.facets.end(), eq_less);
  return h;
}

const HRep& hrep_of(const LatticePolytope& p) {
  if (!p.cached_hrep)
    p.cached_hrep = std::make_shared<const HRep>(facet_enumeration(p));
  return *p.cached_hrep;
}

bool FVector::euler_ok() const {
  Int alt = 0;
  for (int k = 0; k < d; ++k) alt += (k % 2 == 0) ? f(k) : Int(-f(k));
  return alt == 1 - ((d % 2 == 0) ? 1 : -1);
}

std::vector<std::uint64_t> face_vertex_sets(const LatticePolytope& p) {
  const HRep& h = hrep_of(p);
  const int m = static_cast<int>(p.vertices.size());
  if (m > 64)
    throw std::invalid_argument("face_vertex_sets: too many vertices");
  if (h.dim == 0) return {};

  // Tight vertex sets of the facets; faces are their closed intersections.
  std::vector<uint64_t> facet_sets;
  for (const Equation& fac : h.facets) {
    uint64_t bits = 0;
    for (int i = 0; i < m; ++i) {
      Int s = 0;
      for (int j = 0; j < h.ambient; ++j)
        s += fac.normal(j) * p.vertices[static_cast<size_t>(i)](j);
      if (s == fac.rhs) bits |= uint64_t(1) << i;
    }
    facet_sets.push_back(bits);
  }
  std::set<uint64_t> faces(facet_sets.begin(), facet_sets.end());
  std::vector<uint64_t> queue(faces.begin(), faces.end());
  while (!queue.empty()) {
    uint64_t cur = queue.back();
    queue.pop_back();
    for (uint64_t fs : facet_sets) {
      uint64_t inter = cur & fs;
      if (inter != 0 && faces.insert(inter).second) queue.push_back(inter);
    }
  }
  return {faces.begin(), faces.end()};
}

FVector f_vector(const LatticePolytope& p) {
  const HRep& h = hrep_of(p);
  const int m = static_cast<int>(p.vertices.size());

  FVector f;
  f.d = h.dim;
  f.counts.assign(static_cast<size_t>(h.dim) + 2, Int(0));
  f.counts.front() = 1;  // f_{-1}
  f.counts.back() = 1;   // f_d
  if (h.dim == 0) return f;

  for (uint64_t face : face_vertex_sets(p)) {
    std::vector<IVec> pts;
    for (int i = 0; i < m; ++i)
      if (face & (uint64_t(1) << i))
        pts.push_back(p.vertices[static_cast<size_t>(i)]);
    const int fd = affine_hull(pts).dim;
    f.counts[static_cast<size_t>(fd) + 1] += 1;
  }
  return f;
}

FVector pyramid_f_vector(const FVector& fK) {
  if (fK.counts.size() != static_cast<size_t>(fK.d) + 2 ||
      fK.counts.front() != 1 || fK.counts.back() != 1)
    throw std::invalid_argument("pyramid_f_vector: malformed f-vector");
  for (const Int& c : fK.counts)
    if (c <= 0)
      throw std::invalid_argument("pyramid_f_vector: nonpositive face count");
  FVector f;
  f.d = fK.d + 1;
  f.counts.assign(static_cast<size_t>(f.d) + 2, Int(0));
  f.counts.front() = 1;
  f.counts.back() = 1;
  for (int k = 0; k <= f.d - 1; ++k)
    f.counts[static_cast<size_t>(k) + 1] = fK.f(k) + fK.f(k - 1);
  return f;
}

std::vector<IVec> pyramidal_base(int n, int i) {
  if (i < 1 || n < 2 * i + 1)
    throw std::invalid_argument("pyramidal_base: need 1 <= i and n >= 2i+1");
  std::vector<IVec> base;
  auto unit = [&](int k) {
    IVec v = IVec::Zero(n);
    v(k - 1) = 1;
    return v;
  };
  for (int k = 1; k <= i; ++k) base.push_back(unit(k));
  for (int k = n - i + 1; k <= n; ++k) base.push_back(unit(k));
  for (int k = 1; k <= i + 1; ++k)
    base.push_back(make_interval_vector(n, k, k + n - i - 1).realize());
  return base;
}

std::vector<ApexCheck> pyramid_tower_check(const FamilySpec& spec) {
  const int n = spec.n;
  if (spec.lengths.size() != 2 || spec.lengths.count(1) == 0)
    throw std::invalid_argument("pyramid_tower_check: not a pyramidal family");
  const int i = n - *spec.lengths.rbegin();
  std::vector<IVec> acc = pyramidal_base(n, i);
  std::vector<ApexCheck> out;
  for (int k = i + 1; k <= n - i; ++k) {
    IVec apex = IVec::Zero(n);
    apex(k - 1) = 1;
    const AffineHull hull = affine_hull(acc);
    bool outside = false;
    for (const Equation& eq : hull.equations) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += eq.normal(j) * apex(j);
      if (s != eq.rhs) {
        outside = true;
        break;
      }
    }
    out.push_back({k, outside});
    acc.push_back(apex);
  }
  return out;
}

std::vector<std::vector<int>> placing_triangulation(
    const std::vector<IVec>& points) {
  const AffineHull hull = affine_hull(points);
  const int d = hull.dim;
  const int m = static_cast<int>(points.size());

  // Greedy initial simplex: first d+1 points of increasing affine rank.
  std::vector<int> simplex;
  std::vector<IVec> chosen;
  std::vector<bool> used(static_cast<size_t>(m), false);
  for (int i = 0; i < m && static_cast<int>(simplex.size()) < d + 1; ++i) {
    chosen.push_back(points[static_cast<size_t>(i)]);
    if (affine_hull(chosen).dim == static_cast<int>(simplex.size())) {
      simplex.push_back(i);
      used[static_cast<size_t>(i)] = true;
    } else {
      chosen.pop_back();
    }
  }
  if (static_cast<int>(simplex.size()) != d + 1)
    throw std::logic_error("placing_triangulation: rank deficiency");

  std::vector<std::vector<int>> tri{simplex};
  for (int pi = 0; pi < m; ++pi) {
    if (used[static_cast<size_t>(pi)]) continue;
    const IVec& p = points[static_cast<size_t>(pi)];

    // Boundary facets of the current triangulation with their opposite
    // vertex, keyed by sorted vertex subset.
    std::map<std::vector<int>, std::pair<int, int>> count_and_opp;
    for (const auto& s : tri) {
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> facet;
        for (size_t j = 0; j < s.size(); ++j)
          if (j != drop) facet.push_back(s[j]);
        std::sort(facet.begin(), facet.end());
        auto& entry = count_and_opp[facet];
        entry.first += 1;
        entry.second = s[drop];
      }
    }
    std::vector<std::vector<int>> added;
    for (const auto& [facet, entry] : count_and_opp) {
      if (entry.first != 1) continue;  // interior facet
      std::vector<IVec> pts;
      for (int idx : facet) pts.push_back(points[static_cast<size_t>(idx)]);
      auto normal = hyperplane_normal(hull, pts);
      if (!normal) throw std::logic_error("placing_triangulation: bad facet");
      IVec a = *normal;
      Int b = 0, so = 0, sp = 0;
      for (int j = 0; j < hull.ambient; ++j) {
        b += a(j) * pts[0](j);
        so += a(j) * points[static_cast<size_t>(entry.second)](j);
        sp += a(j) * p(j);
      }
      if (so > b) {
        a = -a;
        b = -b;
        sp = -sp;
      }
      if (sp > b) {  // facet visible from p
        std::vector<int> s = facet;
        s.push_back(pi);
        added.push_back(std::move(s));
      }
    }
    for (auto& s : added) tri.push_back(std::move(s));
    used[static_cast<size_t>(pi)] = true;
  }
  return tri;
}

std::string format_hrep(const HRep& h) {
  std::ostringstream os;
  auto line = [&](const Equation& eq, const char* rel) {
    for (int j = 0; j < h.ambient; ++j) os << (j ? " " : "") << eq.normal(j);
    os << ' ' << rel << ' ' << eq.rhs << '\n';
  };
  for (const Equation& eq : h.equations) line(eq, "==");
  for (const Equation& eq : h.facets) line(eq, "<=");
  return os.str();
}

}  // namespace ivp
