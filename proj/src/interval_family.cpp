#include "ivp/interval_family.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace ivp {

IVec IntervalVector::realize() const {
  IVec v = IVec::Zero(n);
  if (!is_zero)
    for (int k = i; k <= j; ++k) v(k - 1) = 1;
  return v;
}

IntervalVector make_interval_vector(int n, int i, int j) {
  if (i < 1 || j > n || i > j)
    throw std::invalid_argument("make_interval_vector: need 1 <= i <= j <= n");
  return {n, false, i, j};
}

FamilySpec FamilySpec::complete(int n, bool include_origin) {
  FamilySpec s;
  s.n = n;
  for (int l = 1; l <= n; ++l) s.lengths.insert(l);
  s.include_origin = include_origin;
  s.validate();
  return s;
}

FamilySpec FamilySpec::fixed(int n, int i) {
  FamilySpec s;
  s.n = n;
  s.lengths = {i};
  s.validate();
  return s;
}

FamilySpec FamilySpec::pyramidal(int n, int i) {
  if (i < 1 || n < 2 * i + 1)
    throw std::invalid_argument("pyramidal family requires 1 <= i and n >= 2i+1");
  FamilySpec s;
  s.n = n;
  s.lengths = {1, n - i};
  s.validate();
  return s;
}

void FamilySpec::validate() const {
  if (n < 1) throw std::invalid_argument("FamilySpec: n must be positive");
  if (lengths.empty())
    throw std::invalid_argument("FamilySpec: length set is empty");
  for (int l : lengths)
    if (l < 1 || l > n)
      throw std::invalid_argument("FamilySpec: lengths must lie in 1..n");
}

std::vector<IVec> family_generators(const FamilySpec& spec) {
  spec.validate();
  std::vector<IVec> gens;
  for (int len : spec.lengths)
    for (int start = 1; start + len - 1 <= spec.n; ++start)
      gens.push_back(make_interval_vector(spec.n, start, start + len - 1)
                         .realize());
  if (spec.include_origin) gens.push_back(IVec::Zero(spec.n));
  return gens;
}

std::vector<IVec> minimize_vertices(const std::vector<IVec>& generators) {
  std::vector<IVec> pts = generators;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const IVec& a, const IVec& b) { return a == b; }),
            pts.end());
  std::vector<IVec> kept;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<IVec> others;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others)) kept.push_back(pts[i]);
  }
  return kept;
}

LatticePolytope build_family(const FamilySpec& spec) {
  LatticePolytope p;
  p.n = spec.n;
  p.vertices = minimize_vertices(family_generators(spec));
  return p;
}

LatticePolytope build_root_polytope(int n) {
  if (n < 2)
    throw std::invalid_argument("build_root_polytope: n must be at least 2");
  std::vector<IVec> gens;
  gens.push_back(IVec::Zero(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IVec v = IVec::Zero(n);
      v(i) = 1;
      v(j) = -1;
      gens.push_back(v);
    }
  LatticePolytope p;
  p.n = n;
  p.vertices = minimize_vertices(gens);
  return p;
}

IVec apply_T(const IVec& v, Direction dir) {
  const Eigen::Index n = v.size();
  IVec out(n);
  if (dir == Direction::Forward) {
    Int acc = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      acc += v(k);
      out(k) = acc;
    }
  } else {
    for (Eigen::Index k = 0; k < n; ++k)
      out(k) = (k == 0) ? v(0) : Int(v(k) - v(k - 1));
  }
  return out;
}

IVec lattice_bijection(const IVec& x, Direction dir) {
  const Eigen::Index n = x.size();
  if (dir == Direction::Forward) {
    Int sum = 0;
    for (Eigen::Index k = 0; k < n; ++k) sum += x(k);
    if (sum != 0)
      throw std::invalid_argument(
          "lattice_bijection: input has nonzero coordinate sum");
    IVec t = apply_T(x, Direction::Forward);
    return t.head(n - 1);
  }
  IVec pre(n + 1);
  for (Eigen::Index k = 0; k < n; ++k)
    pre(k) = (k == 0) ? x(0) : Int(x(k) - x(k - 1));
  pre(n) = -x(n - 1);
  return pre;
}

IVec ElementaryVector::realize() const {
  IVec v = IVec::Zero(n);
  if (kind == Kind::Unit) {
    v(i - 1) = 1;
  } else if (kind == Kind::Diff) {
    v(i - 1) = 1;
    v(j - 1) = -1;
  }
  return v;
}

std::optional<ElementaryVector> classify_elementary(const IVec& v) {
  const int n = static_cast<int>(v.size());
  int pos = 0, neg = 0, pi = 0, ni = 0;
  for (int k = 0; k < n; ++k) {
    if (v(k) == 1) {
      ++pos;
      pi = k + 1;
    } else if (v(k) == -1) {
      ++neg;
      ni = k + 1;
    } else if (v(k) != 0) {
      return std::nullopt;
    }
  }
  if (pos == 0 && neg == 0)
    return ElementaryVector{n, ElementaryVector::Kind::Zero, 0, 0};
  if (pos == 1 && neg == 0)
    return ElementaryVector{n, ElementaryVector::Kind::Unit, pi, 0};
  if (pos == 1 && neg == 1 && pi < ni)
    return ElementaryVector{n, ElementaryVector::Kind::Diff, pi, ni};
  return std::nullopt;
}

std::vector<ElementaryVector> elementary_set(const FamilySpec& spec) {
  std::vector<ElementaryVector> out;
  for (const IVec& g : family_generators(spec)) {
    auto e = classify_elementary(apply_T(g, Direction::Inverse));
    if (!e)
      throw std::logic_error(
          "elementary_set: T^{-1} of an interval vector is not elementary");
    out.push_back(*e);
  }
  return out;
}

std::string format_vertex_list(const LatticePolytope& p) {
  std::ostringstream os;
  os << p.n << ' ' << p.vertices.size() << '\n';
  for (const IVec& v : p.vertices) {
    for (Eigen::Index k = 0; k < v.size(); ++k)
      os << (k ? " " : "") << v(k);
    os << '\n';
  }
  return os.str();
}

LatticePolytope parse_vertex_list(std::istream& in) {
  int n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0)
    throw std::invalid_argument("vertex list: malformed header");
  LatticePolytope p;
  p.n = n;
  std::string tok;
  for (long r = 0; r < m; ++r) {
    if (!(in >> tok)) throw std::invalid_argument("vertex list: truncated");
    if (tok == "alpha") {
      int i = 0, j = 0;
      if (!(in >> i >> j))
        throw std::invalid_argument("vertex list: malformed alpha row");
      p.vertices.push_back(make_interval_vector(n, i, j).realize());
      continue;
    }
    IVec v(n);
    v(0) = Int(tok);
    for (int k = 1; k < n; ++k) {
      if (!(in >> tok)) throw std::invalid_argument("vertex list: truncated");
      v(k) = Int(tok);
    }
    p.vertices.push_back(std::move(v));
  }
  std::sort(p.vertices.begin(), p.vertices.end(), lex_less);
  p.vertices.erase(
      std::unique(p.vertices.begin(), p.vertices.end(),
                  [](const IVec& a, const IVec& b) { return a == b; }),
      p.vertices.end());
  return p;
}

}  // namespace ivp
