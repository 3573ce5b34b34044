#include "ivp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

namespace ivp {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ConjectureConsistent: return "conjecture-consistent";
    case Status::ConjectureViolated: return "conjecture-violated";
  }
  return "?";
}

namespace {

long need(const std::map<std::string, long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing required parameter '" + key + "'");
  return it->second;
}

void bounds(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("parameter out of bounds: " + what);
}

std::string fvec_str(const std::vector<Int>& counts) {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < counts.size(); ++k)
    os << (k ? "," : "") << counts[k];
  os << ')';
  return os.str();
}

IVec unit(int n, int k) {
  IVec v = IVec::Zero(n);
  v(k - 1) = 1;
  return v;
}

// Coefficients of binom(t + d, d) = (t+1)(t+2)...(t+d) / d!.
std::vector<Rat> binom_shift_coeffs(int d) {
  std::vector<Rat> c{Rat(1)};
  for (int k = 1; k <= d; ++k) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * k;  // multiply by (t + k)
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  Rat f = Rat(factorial(d));
  for (Rat& x : c) x /= f;
  return c;
}

struct ClaimOutcome {
  bool ok;
  std::string computed, expected;
};

ClaimOutcome check_thm11(long n) {
  bounds(n >= 2 && n <= 5, "thm1.1 requires 2 <= n <= 5");
  const auto lhs = ehrhart_polynomial(build_root_polytope(static_cast<int>(n) + 1));
  const auto rhs = ehrhart_polynomial(
      build_family(FamilySpec::complete(static_cast<int>(n), true)));
  return {lhs == rhs, lhs.to_text(), rhs.to_text()};
}

ClaimOutcome check_cor12(long n) {
  bounds(n >= 1 && n <= 6, "cor1.2 requires 1 <= n <= 6");
  const Int vol = normalized_volume(
      build_family(FamilySpec::complete(static_cast<int>(n), true)));
  const Int expect = catalan(static_cast<int>(n));
  return {vol == expect, vol.get_str(), expect.get_str()};
}

ClaimOutcome check_thm13(long n, long i_lo, long i_hi) {
  bounds(n >= 1 && n <= 8, "thm1.3 requires 1 <= n <= 8");
  std::ostringstream comp, expc;
  bool ok = true;
  for (long i = i_lo; i <= i_hi; ++i) {
    const auto spec = FamilySpec::fixed(static_cast<int>(n), static_cast<int>(i));
    const LatticePolytope p = build_family(spec);
    const int d = affine_hull(p.vertices).dim;
    const int dd = dahl_dimension(spec);
    const bool uni = is_unimodular_simplex(p);
    const auto poly = ehrhart_polynomial(p);
    const auto expect_coeffs = binom_shift_coeffs(static_cast<int>(n - i));
    const bool here = d == n - i && dd == n - i &&
                      p.vertices.size() == static_cast<size_t>(n - i + 1) &&
                      uni && poly.coeffs == expect_coeffs;
    ok = ok && here;
    comp << "i=" << i << ":dim=" << d << "/" << dd
         << ",verts=" << p.vertices.size() << ",unimodular=" << uni
         << ",L=" << poly.to_text() << "; ";
    expc << "i=" << i << ":dim=" << n - i << "/" << n - i
         << ",verts=" << n - i + 1 << ",unimodular=1,L=C(t+" << n - i << ","
         << n - i << "); ";
  }
  return {ok, comp.str(), expc.str()};
}

ClaimOutcome check_thm14(long n) {
  bounds(n >= 3 && n <= 7, "thm1.4 requires 3 <= n <= 7");
  const FVector f = f_vector(
      build_family(FamilySpec::pyramidal(static_cast<int>(n), 1)));
  std::vector<Int> expect;
  expect.push_back(1);
  for (int k = 0; k <= static_cast<int>(n) - 1; ++k)
    expect.push_back(binomial(static_cast<int>(n) - 1, k) +
                     binomial(static_cast<int>(n) + 1, k + 1));
  expect.push_back(1);
  bool palindromic = true;
  for (int k = 0; k <= static_cast<int>(n) - 1; ++k)
    if (f.f(k) != f.f(static_cast<int>(n) - 1 - k)) palindromic = false;
  return {f.counts == expect && palindromic, fvec_str(f.counts),
          fvec_str(expect) + " palindromic"};
}

ClaimOutcome check_thm15(long nl) {
  bounds(nl >= 3 && nl <= 7, "thm1.5 requires 3 <= n <= 7");
  const int n = static_cast<int>(nl);
  const Int vol =
      normalized_volume(build_family(FamilySpec::pyramidal(n, 1)));
  std::vector<IVec> s1, s2;
  for (int k = 1; k <= n; ++k) s1.push_back(unit(n, k));
  s1.push_back(make_interval_vector(n, 1, n - 1).realize());
  for (int k = 2; k <= n; ++k) s2.push_back(unit(n, k));
  s2.push_back(make_interval_vector(n, 1, n - 1).realize());
  s2.push_back(make_interval_vector(n, 2, n).realize());
  const Int v1 = simplex_volume_det(s1), v2 = simplex_volume_det(s2);
  std::ostringstream comp, expc;
  comp << "vol=" << vol << ",S1=" << v1 << ",S2=" << v2;
  expc << "vol=" << 2 * (n - 2) << ",S1=" << n - 2 << ",S2=" << n - 2;
  return {vol == 2 * (n - 2) && v1 == n - 2 && v2 == n - 2, comp.str(),
          expc.str()};
}

ClaimOutcome check_thm42(long nl, unsigned long seed) {
  bounds(nl >= 2 && nl <= 8, "thm4.2 requires 2 <= n <= 8");
  const int n = static_cast<int>(nl);
  auto spec_of_mask = [&](unsigned mask) {
    FamilySpec s;
    s.n = n;
    for (int l = 1; l <= n; ++l)
      if (mask & (1u << (l - 1))) s.lengths.insert(l);
    return s;
  };
  int checked = 0, mismatches = 0;
  auto check_one = [&](const FamilySpec& s) {
    const int rank_dim = affine_hull(family_generators(s)).dim;
    if (dahl_dimension(s) != rank_dim) ++mismatches;
    ++checked;
  };
  if (n <= 6) {
    for (unsigned mask = 1; mask < (1u << n); ++mask)
      check_one(spec_of_mask(mask));
  } else {
    std::mt19937_64 rng(seed + static_cast<unsigned long>(n));
    std::uniform_int_distribution<unsigned> dist(1, (1u << n) - 1);
    for (int s = 0; s < 200; ++s) check_one(spec_of_mask(dist(rng)));
  }
  std::ostringstream comp;
  comp << checked << " specs, " << mismatches << " mismatches";
  return {mismatches == 0, comp.str(),
          std::to_string(checked) + " specs, 0 mismatches"};
}

ClaimOutcome check_lem43(long nl) {
  bounds(nl >= 2 && nl <= 10, "lem4.3 requires 2 <= n <= 10");
  const int n = static_cast<int>(nl);
  bool ok = true;
  for (int i = 1; i <= n; ++i) {
    const auto summary =
        components_and_k0(build_graph(FamilySpec::fixed(n, i)));
    std::vector<std::vector<int>> residues;
    for (int r = 1; r <= std::min(i, n); ++r) {
      std::vector<int> cls;
      for (int v = r; v <= n; v += i) cls.push_back(v);
      residues.push_back(cls);
    }
    if (summary.components != residues) ok = false;
  }
  return {ok, ok ? "components = residue classes mod i for all i"
                 : "component/residue mismatch",
          "components = residue classes mod i for all i"};
}

ClaimOutcome check_lem52(long nl) {
  bounds(nl >= 3 && nl <= 8, "lem5.2 requires 3 <= n <= 8");
  const int n = static_cast<int>(nl);
  const LatticePolytope p = build_family(FamilySpec::pyramidal(n, 1));
  const std::vector<IVec> b{unit(n, 1), unit(n, n),
                            make_interval_vector(n, 1, n - 1).realize(),
                            make_interval_vector(n, 2, n).realize()};
  std::uint64_t want = 0;
  for (const IVec& v : b) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    if (it == p.vertices.end())
      return {false, "B vertex missing from polytope", "B is a 2-face"};
    want |= std::uint64_t(1) << (it - p.vertices.begin());
  }
  bool found = false;
  for (std::uint64_t face : face_vertex_sets(p))
    if (face == want) found = true;
  const int bdim = affine_hull(b).dim;
  return {found && bdim == 2,
          found ? "B is the tight set of a face, dim " + std::to_string(bdim)
                : "B is not a face",
          "B is the tight set of a face, dim 2"};
}

ClaimOutcome check_lem54(long nl) {
  bounds(nl >= 3 && nl <= 8, "lem5.4 requires 3 <= n <= 8");
  const int n = static_cast<int>(nl);
  LatticePolytope b;
  b.n = n;
  b.vertices = minimize_vertices({unit(n, 1), unit(n, n),
                                  make_interval_vector(n, 1, n - 1).realize(),
                                  make_interval_vector(n, 2, n).realize()});
  const FVector f = f_vector(b);
  const std::vector<Int> expect{1, 4, 4, 1};
  return {f.counts == expect, fvec_str(f.counts), fvec_str(expect)};
}

ClaimOutcome check_lem56(long nl) {
  bounds(nl >= 2 && nl <= 10, "lem5.6 requires 2 <= n <= 10");
  const int n = static_cast<int>(nl);
  RMat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = (r == c) ? 0 : 1;
  const Rat det = det_exact(m);
  const Rat expect = Rat((n % 2 == 0) ? -(n - 1) : (n - 1));
  return {det == expect, det.get_str(), expect.get_str()};
}

ClaimOutcome check_prop44(long n, long i_lo, long i_hi) {
  bounds(n >= 1 && n <= 8, "prop4.4 requires 1 <= n <= 8");
  bool ok = true;
  std::ostringstream comp;
  for (long i = i_lo; i <= i_hi; ++i) {
    const auto spec = FamilySpec::fixed(static_cast<int>(n), static_cast<int>(i));
    const LatticePolytope p = build_family(spec);
    const int d = affine_hull(p.vertices).dim;
    const int dd = dahl_dimension(spec);
    if (d != n - i || dd != n - i ||
        p.vertices.size() != static_cast<size_t>(n - i + 1))
      ok = false;
    comp << "i=" << i << ":dim=" << d << "/" << dd << ",verts="
         << p.vertices.size() << "; ";
  }
  return {ok, comp.str(), "dim = n-i (both routes), n-i+1 vertices, all i"};
}

ClaimOutcome check_prop51(long nl) {
  bounds(nl >= 3 && nl <= 8, "prop5.1 requires 3 <= n <= 8");
  const int n = static_cast<int>(nl);
  const auto spec = FamilySpec::pyramidal(n, 1);
  const int d = affine_hull(family_generators(spec)).dim;
  const int dd = dahl_dimension(spec);
  std::ostringstream comp;
  comp << "dim=" << d << "/" << dd;
  return {d == n && dd == n, comp.str(),
          "dim=" + std::to_string(n) + "/" + std::to_string(n)};
}

ClaimOutcome check_thm55(long nl) {
  bounds(nl >= 3 && nl <= 6, "thm5.5 requires 3 <= n <= 6");
  const int n = static_cast<int>(nl);
  FVector f{2, {1, 4, 4, 1}};
  for (int k = 0; k < n - 2; ++k) f = pyramid_f_vector(f);
  const FVector direct =
      f_vector(build_family(FamilySpec::pyramidal(n, 1)));
  return {f.counts == direct.counts, fvec_str(f.counts),
          fvec_str(direct.counts)};
}

ClaimOutcome check_prop62(long nl, long il) {
  bounds(il >= 1 && il <= 3, "prop6.2 requires 1 <= i <= 3");
  bounds(nl >= 2 * il + 1 && nl <= 8, "prop6.2 requires 2i+1 <= n <= 8");
  const int n = static_cast<int>(nl), i = static_cast<int>(il);
  const auto spec = FamilySpec::pyramidal(n, i);
  const auto checks = pyramid_tower_check(spec);
  const bool all_apex = std::all_of(checks.begin(), checks.end(),
                                    [](const ApexCheck& c) { return c.is_apex; });
  const int base_dim = affine_hull(pyramidal_base(n, i)).dim;
  const int total_dim = affine_hull(family_generators(spec)).dim;
  std::ostringstream comp;
  comp << "apexes_outside=" << all_apex << ",base_dim=" << base_dim
       << ",dim=" << total_dim;
  std::ostringstream expc;
  expc << "apexes_outside=1,base_dim=" << 2 * i << ",dim=" << n;
  return {all_apex && base_dim == 2 * i && total_dim == n, comp.str(),
          expc.str()};
}

ClaimOutcome check_conj63(long nl, long il) {
  bounds(il >= 1 && il <= 3, "conj6.3 requires 1 <= i <= 3");
  bounds(nl >= 2 * il + 1 && nl <= 8, "conj6.3 requires 2i+1 <= n <= 8");
  const int n = static_cast<int>(nl), i = static_cast<int>(il);
  const Int vol = normalized_volume(build_family(FamilySpec::pyramidal(n, i)));
  Int expect = Int(1) << i;
  expect *= (n - (i + 1));

  // Greedy placing triangulation of the 2i-dimensional base, pyramided
  // over the apex sequence: does it realize the conjectured shape?
  const auto base = pyramidal_base(n, i);
  const auto tri = placing_triangulation(base);
  bool equal_pieces = true;
  Int piece_sum = 0;
  for (const auto& simplex : tri) {
    std::vector<IVec> pts;
    for (int idx : simplex) pts.push_back(base[static_cast<size_t>(idx)]);
    for (int k = i + 1; k <= n - i; ++k) pts.push_back(unit(n, k));
    const Int pv = simplex_volume_det(pts);
    piece_sum += pv;
    if (pv != n - (i + 1)) equal_pieces = false;
  }
  std::ostringstream comp, expc;
  comp << "vol=" << vol << ",base_simplices=" << tri.size()
       << ",equal_pieces=" << equal_pieces << ",piece_sum=" << piece_sum;
  expc << "vol=" << expect << ",base_simplices=" << (Int(1) << i)
       << ",equal_pieces=1,piece_sum=" << expect;
  return {vol == expect, comp.str(), expc.str()};
}

}  // namespace

CheckResult verify_claim(const std::string& claim_id,
                         const std::map<std::string, long>& params,
                         unsigned long seed) {
  CheckResult res;
  res.claim_id = claim_id;
  res.params = params;
  const auto start = std::chrono::steady_clock::now();

  ClaimOutcome out{false, "", ""};
  bool conjecture = false;
  if (claim_id == "thm1.1") {
    out = check_thm11(need(params, "n"));
  } else if (claim_id == "cor1.2") {
    out = check_cor12(need(params, "n"));
  } else if (claim_id == "thm1.3") {
    long n = need(params, "n");
    long i = params.count("i") ? params.at("i") : 0;
    out = check_thm13(n, i ? i : 1, i ? i : n);
  } else if (claim_id == "thm1.4") {
    out = check_thm14(need(params, "n"));
  } else if (claim_id == "thm1.5") {
    out = check_thm15(need(params, "n"));
  } else if (claim_id == "thm4.2") {
    out = check_thm42(need(params, "n"), seed);
  } else if (claim_id == "lem4.3") {
    out = check_lem43(need(params, "n"));
  } else if (claim_id == "lem5.2") {
    out = check_lem52(need(params, "n"));
  } else if (claim_id == "lem5.4") {
    out = check_lem54(need(params, "n"));
  } else if (claim_id == "lem5.6") {
    out = check_lem56(need(params, "n"));
  } else if (claim_id == "prop4.4") {
    long n = need(params, "n");
    long i = params.count("i") ? params.at("i") : 0;
    out = check_prop44(n, i ? i : 1, i ? i : n);
  } else if (claim_id == "prop5.1") {
    out = check_prop51(need(params, "n"));
  } else if (claim_id == "thm5.5") {
    out = check_thm55(need(params, "n"));
  } else if (claim_id == "prop6.2") {
    out = check_prop62(need(params, "n"), need(params, "i"));
  } else if (claim_id == "conj6.3") {
    conjecture = true;
    out = check_conj63(need(params, "n"), need(params, "i"));
  } else {
    throw std::invalid_argument("unknown claim id: " + claim_id);
  }

  res.computed = out.computed;
  res.expected = out.expected;
  res.status = conjecture
                   ? (out.ok ? Status::ConjectureConsistent
                             : Status::ConjectureViolated)
                   : (out.ok ? Status::Pass : Status::Fail);
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

SuiteConfig default_config() {
  SuiteConfig cfg;
  auto add = [&](const std::string& id, std::map<std::string, long> p) {
    cfg.checks.emplace_back(id, std::move(p));
  };
  for (long n = 2; n <= 5; ++n) add("thm1.1", {{"n", n}});
  for (long n = 1; n <= 6; ++n) add("cor1.2", {{"n", n}});
  for (long n = 1; n <= 8; ++n) add("thm1.3", {{"n", n}});
  for (long n = 3; n <= 7; ++n) add("thm1.4", {{"n", n}});
  for (long n = 3; n <= 7; ++n) add("thm1.5", {{"n", n}});
  for (long n = 2; n <= 6; ++n) add("thm4.2", {{"n", n}});
  for (long n = 2; n <= 10; ++n) add("lem4.3", {{"n", n}});
  for (long n = 3; n <= 7; ++n) add("lem5.2", {{"n", n}});
  for (long n = 3; n <= 8; ++n) add("lem5.4", {{"n", n}});
  for (long n = 2; n <= 10; ++n) add("lem5.6", {{"n", n}});
  for (long n = 1; n <= 8; ++n) add("prop4.4", {{"n", n}});
  for (long n = 3; n <= 8; ++n) add("prop5.1", {{"n", n}});
  for (long n = 3; n <= 6; ++n) add("thm5.5", {{"n", n}});
  for (long i = 1; i <= 3; ++i)
    for (long n = 2 * i + 1; n <= 8; ++n) add("prop6.2", {{"n", n}, {"i", i}});
  for (long n = 3; n <= 6; ++n) add("conj6.3", {{"n", n}, {"i", 1}});
  for (long n = 5; n <= 6; ++n) add("conj6.3", {{"n", n}, {"i", 2}});
  return cfg;
}

Report verify_suite(const SuiteConfig& config) {
  Report report;
  report.environment = "ivp exact polytope toolkit";
  for (const auto& [id, params] : config.checks) {
    CheckResult res;
    try {
      res = verify_claim(id, params, config.seed);
    } catch (const std::exception& e) {
      res.claim_id = id;
      res.params = params;
      res.status = Status::Fail;
      res.computed = std::string("error: ") + e.what();
      res.expected = "no error";
    }
    report.results.push_back(std::move(res));
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.claim_id != b.claim_id)
                       return a.claim_id < b.claim_id;
                     return a.params < b.params;
                   });
  for (const CheckResult& r : report.results) {
    switch (r.status) {
      case Status::Pass: ++report.passed; break;
      case Status::Fail: ++report.failed; break;
      case Status::ConjectureConsistent: ++report.conjecture_consistent; break;
      case Status::ConjectureViolated: ++report.conjecture_violated; break;
    }
  }
  return report;
}

std::vector<CheckResult> probe_conjecture(int i, int n_lo, int n_hi) {
  if (i < 1)
    throw std::invalid_argument("probe_conjecture: i must be at least 1");
  std::vector<CheckResult> out;
  for (int n = n_lo; n <= n_hi; ++n)
    out.push_back(verify_claim("conj6.3", {{"n", n}, {"i", i}}));
  return out;
}

std::string report_json(const Report& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["environment"] = r.environment;
  j["summary"] = {{"pass", r.passed},
                  {"fail", r.failed},
                  {"conjecture-consistent", r.conjecture_consistent},
                  {"conjecture-violated", r.conjecture_violated}};
  j["results"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.results) {
    nlohmann::ordered_json e;
    e["claim_id"] = c.claim_id;
    e["params"] = c.params;
    e["status"] = to_string(c.status);
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    if (include_timing) e["elapsed_ms"] = c.elapsed_ms;
    j["results"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  for (const CheckResult& c : r.results) {
    os << c.claim_id << " (";
    bool first = true;
    for (const auto& [k, v] : c.params) {
      os << (first ? "" : ", ") << k << "=" << v;
      first = false;
    }
    os << "): " << to_string(c.status) << "\n    computed: " << c.computed
       << "\n    expected: " << c.expected << '\n';
  }
  os << "summary: " << r.passed << " pass, " << r.failed << " fail, "
     << r.conjecture_consistent << " conjecture-consistent, "
     << r.conjecture_violated << " conjecture-violated\n";
  return os.str();
}

namespace {
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "claim_id,n,i,status,computed,expected\n";
  for (const CheckResult& c : r.results) {
    os << c.claim_id << ',';
    os << (c.params.count("n") ? std::to_string(c.params.at("n")) : "") << ',';
    os << (c.params.count("i") ? std::to_string(c.params.at("i")) : "") << ',';
    os << to_string(c.status) << ',' << csv_quote(c.computed) << ','
       << csv_quote(c.expected) << '\n';
  }
  return os.str();
}

}  // namespace ivp
