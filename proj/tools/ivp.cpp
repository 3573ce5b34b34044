// Command-line front end for the interval-vector polytope toolkit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ivp/verify.hpp"

namespace {

using namespace ivp;

struct FamilyOpts {
  std::string family;  // complete|fixed|pyramidal|root|file
  int n = 0;
  int i = 0;
  std::string lengths;  // comma-separated custom length set
  bool include_origin = false;
  std::string file;
};

void add_family_options(CLI::App* cmd, FamilyOpts& opts) {
  cmd->add_option("--family", opts.family,
                  "complete|fixed|pyramidal|root|file")
      ->required();
  cmd->add_option("--n", opts.n, "ambient dimension");
  cmd->add_option("--i", opts.i, "family parameter i");
  cmd->add_option("--lengths", opts.lengths,
                  "comma-separated interval lengths (overrides --family kind)");
  cmd->add_flag("--include-origin", opts.include_origin,
                "include the origin among the generators");
  cmd->add_option("--file", opts.file, "vertex-list file (family = file)");
}

std::optional<FamilySpec> spec_of(const FamilyOpts& o) {
  if (!o.lengths.empty()) {
    FamilySpec s;
    s.n = o.n;
    s.include_origin = o.include_origin;
    std::stringstream ss(o.lengths);
    std::string tok;
    while (std::getline(ss, tok, ',')) s.lengths.insert(std::stoi(tok));
    s.validate();
    return s;
  }
  if (o.family == "complete")
    return FamilySpec::complete(o.n, o.include_origin);
  if (o.family == "fixed") return FamilySpec::fixed(o.n, o.i);
  if (o.family == "pyramidal") return FamilySpec::pyramidal(o.n, o.i);
  return std::nullopt;
}

LatticePolytope polytope_of(const FamilyOpts& o) {
  if (auto spec = spec_of(o)) return build_family(*spec);
  if (o.family == "root") return build_root_polytope(o.n);
  if (o.family == "file") {
    std::ifstream in(o.file);
    if (!in) throw std::invalid_argument("--file: cannot open " + o.file);
    return parse_vertex_list(in);
  }
  throw std::invalid_argument("--family: unknown family " + o.family);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    std::ofstream out(out_path);
    out << content;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-vector polytope toolkit"};
  app.require_subcommand(1);

  FamilyOpts opts;
  std::string format = "text";
  std::string out_path;
  unsigned long seed = 0;
  long t_dilate = 1;
  std::vector<std::string> claims;
  int conj_i = 1;
  std::string n_range = "3..8";

  auto* build = app.add_subcommand("build", "print the vertex list");
  add_family_options(build, opts);

  auto* dim = app.add_subcommand("dim", "rank-based and Dahl dimension");
  add_family_options(dim, opts);

  auto* graph = app.add_subcommand("graph", "flow-dimension graph export");
  add_family_options(graph, opts);

  auto* fvector = app.add_subcommand("fvector", "face counts by dimension");
  add_family_options(fvector, opts);

  auto* facets = app.add_subcommand("facets", "H-representation");
  add_family_options(facets, opts);

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial");
  add_family_options(ehr, opts);
  ehr->add_option("--format", format, "json|text");

  auto* volume = app.add_subcommand("volume", "normalized volume");
  add_family_options(volume, opts);

  auto* count = app.add_subcommand("count", "lattice points in the t-dilate");
  add_family_options(count, opts);
  count->add_option("--t", t_dilate, "dilation factor")->required();

  auto* verify = app.add_subcommand("verify", "run the claim suite");
  verify->add_option("--claims", claims, "claim ids (default: full suite)");
  verify->add_option("--n", opts.n, "restrict to a single n");
  verify->add_option("--i", opts.i, "restrict to a single i");
  verify->add_option("--format", format, "json|csv|text");
  verify->add_option("--out", out_path, "output path (default stdout)");
  verify->add_option("--seed", seed, "seed for sampled checks");

  auto* conjecture = app.add_subcommand("conjecture", "probe the volume"
                                        " formula for pyramidal families");
  conjecture->add_option("--i", conj_i, "pyramid index i")->required();
  conjecture->add_option("--n-range", n_range, "inclusive range, e.g. 3..8");
  conjecture->add_option("--format", format, "json|csv|text");
  conjecture->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) {
      std::cout << format_vertex_list(polytope_of(opts));
    } else if (dim->parsed()) {
      const LatticePolytope p = polytope_of(opts);
      std::cout << "rank " << affine_hull(p.vertices).dim << '\n';
      if (auto spec = spec_of(opts))
        std::cout << "dahl " << dahl_dimension(*spec) << '\n';
    } else if (graph->parsed()) {
      auto spec = spec_of(opts);
      if (!spec)
        throw std::invalid_argument("graph requires an interval-vector family");
      std::cout << format_graph(build_graph(*spec));
    } else if (fvector->parsed()) {
      const FVector f = f_vector(polytope_of(opts));
      for (size_t k = 0; k < f.counts.size(); ++k)
        std::cout << (k ? " " : "") << f.counts[k];
      std::cout << '\n';
    } else if (facets->parsed()) {
      std::cout << format_hrep(hrep_of(polytope_of(opts)));
    } else if (ehr->parsed()) {
      const EhrhartPolynomial poly = ehrhart_polynomial(polytope_of(opts));
      std::cout << (format == "json" ? poly.to_json() + "\n"
                                     : poly.to_text() + "\n");
    } else if (volume->parsed()) {
      std::cout << normalized_volume(polytope_of(opts)) << '\n';
    } else if (count->parsed()) {
      std::cout << count_lattice_points(polytope_of(opts), Int(t_dilate))
                << '\n';
    } else if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.seed = seed;
      if (claims.empty() && opts.n == 0) {
        cfg = default_config();
        cfg.seed = seed;
      } else {
        const SuiteConfig all = default_config();
        for (const auto& [id, params] : all.checks) {
          if (!claims.empty() &&
              std::find(claims.begin(), claims.end(), id) == claims.end())
            continue;
          if (opts.n != 0 &&
              (!params.count("n") || params.at("n") != opts.n))
            continue;
          if (opts.i != 0 && params.count("i") && params.at("i") != opts.i)
            continue;
          cfg.checks.emplace_back(id, params);
        }
      }
      const Report report = verify_suite(cfg);
      if (format == "json")
        emit(out_path, report_json(report));
      else if (format == "csv")
        emit(out_path, report_csv(report));
      else
        emit(out_path, report_text(report));
      return report.ok() ? 0 : 1;
    } else if (conjecture->parsed()) {
      auto dots = n_range.find("..");
      int lo = 0, hi = 0;
      if (dots == std::string::npos) {
        lo = hi = std::stoi(n_range);
      } else {
        lo = std::stoi(n_range.substr(0, dots));
        hi = std::stoi(n_range.substr(dots + 2));
      }
      Report report;
      report.environment = "ivp exact polytope toolkit";
      for (CheckResult& r : probe_conjecture(conj_i, lo, hi)) {
        switch (r.status) {
          case Status::ConjectureConsistent: ++report.conjecture_consistent;
            break;
          case Status::ConjectureViolated: ++report.conjecture_violated; break;
          default: break;
        }
        report.results.push_back(std::move(r));
      }
      if (format == "json")
        emit(out_path, report_json(report));
      else if (format == "csv")
        emit(out_path, report_csv(report));
      else
        emit(out_path, report_text(report));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
