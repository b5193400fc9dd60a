// Command-line front end: exact displaceability analysis of rational
// polytopes given as halfspace files or built-in catalog entries.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "probelab/bundles.hpp"
#include "probelab/ewald.hpp"
#include "probelab/io.hpp"
#include "probelab/maximin.hpp"
#include "probelab/polygon.hpp"
#include "probelab/probes.hpp"
#include "probelab/scan.hpp"

using namespace probelab;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFalse = 1;
constexpr int kInputError = 2;

RatVec parse_point(const std::string& csv, int dim) {
  RatVec out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  if (static_cast<int>(out.size()) != dim)
    throw std::invalid_argument("point has wrong dimension");
  return out;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

int run_check(const std::string& uri) {
  auto file = load_polytope(uri);
  const Polytope& p = file.polytope;
  std::cout << "dim: " << p.dim() << "\n";
  std::cout << "facets: " << p.num_facets() << "\n";
  std::cout << "vertices: " << p.vertices().size() << "\n";
  std::cout << "simple: " << (p.is_simple() ? "yes" : "no") << "\n";
  std::cout << "integral: " << (p.is_integral() ? "yes" : "no") << "\n";
  auto sm = p.smooth();
  std::cout << "smooth: " << (sm.smooth ? "yes" : "no (" + sm.reason + ")")
            << "\n";
  RatVec origin(p.dim(), Rat(0));
  if (p.strictly_contains(origin))
    std::cout << "reflexive: " << (p.is_reflexive() ? "yes" : "no") << "\n";
  else
    std::cout << "reflexive: no (origin not interior)\n";
  auto mono = p.monotone();
  if (mono.monotone)
    std::cout << "monotone: yes (u0 = " << to_string(*mono.u0) << ")\n";
  else
    std::cout << "monotone: no (" << mono.reason << ")\n";
  return kOk;
}

int run_v0(const std::string& uri) {
  auto file = load_polytope(uri);
  std::cout << format_trace(central_point(file.polytope, file.ghosts));
  return kOk;
}

int run_displace(const std::string& uri, const std::string& point, long bound) {
  auto file = load_polytope(uri);
  const Polytope& p = file.polytope;
  RatVec u = parse_point(point, p.dim());
  if (bound <= 0) bound = default_direction_bound(p);
  auto r = find_displacing_probe(p, u, bound);
  std::cout << "point: " << to_string(u) << "\n";
  if (r.displaced) {
    const Probe& w = *r.witness;
    std::cout << "displaced: yes\n";
    std::cout << "witness: facet " << w.facet_id << " direction "
              << to_string(w.direction) << " entry " << to_string(w.entry)
              << " exit " << to_string(w.exit) << " position "
              << to_string(r.position) << " length " << to_string(w.length)
              << "\n";
    return kOk;
  }
  bool is_v0 = central_point(p, file.ghosts).v0 == u;
  std::cout << "displaced: no (bound " << bound << ")"
            << (is_v0 ? " (v0)" : "") << "\n";
  return kPropertyFalse;
}

int run_scan(const std::string& uri, int res, long bound,
             const std::string& svg_path, const std::string& csv_path) {
  auto file = load_polytope(uri);
  const Polytope& p = file.polytope;
  if (bound <= 0) bound = default_direction_bound(p);
  ScanGrid grid = scan(p, res, bound);
  long displaced = 0;
  for (const auto& c : grid.cells)
    if (c.status == CellStatus::kDisplaced) ++displaced;
  std::cout << "scanned " << grid.cells.size() << " points: " << displaced
            << " displaced, " << (grid.cells.size() - displaced)
            << " not displaced\n";
  if (!csv_path.empty()) write_or_print(csv_path, export_csv(grid));
  if (!svg_path.empty()) write_or_print(svg_path, render_svg(grid));
  return kOk;
}

int run_ewald(const std::string& uri, const std::string& mode,
              bool synthesize) {
  auto file = load_polytope(uri);
  const Polytope& p = file.polytope;
  if (mode == "weak") {
    auto r = weak_ewald(p);
    if (r.found) {
      std::cout << "weak: yes, basis";
      for (const auto& v : r.basis) std::cout << " " << to_string(v);
      std::cout << "\n";
      return kOk;
    }
    std::cout << "weak: no\n";
    return kPropertyFalse;
  }
  if (mode == "strong") {
    auto r = strong_ewald(p);
    bool all = true;
    for (int f = 0; f < p.num_facets(); ++f) {
      std::cout << "facet " << f << ": " << (r[f] ? "yes" : "no") << "\n";
      if (!r[f]) all = false;
    }
    std::cout << "strong: " << (all ? "yes" : "no") << "\n";
    return all ? kOk : kPropertyFalse;
  }
  if (mode != "star") throw std::invalid_argument("unknown mode: " + mode);
  auto report = star_ewald(p);
  std::cout << format_star_report(report);
  std::cout << "star: " << (report.all_satisfied ? "yes" : "no") << "\n";
  int rc = report.all_satisfied ? kOk : kPropertyFalse;
  if (synthesize) {
    auto mono = p.monotone();
    Polytope centered =
        mono.monotone ? translate(p, negate(*mono.u0)) : p;
    RatVec origin(centered.dim(), Rat(0));
    if (!centered.strictly_contains(origin))
      throw std::invalid_argument(
          "--synthesize needs the distinguished point in the interior");
    auto creport = star_ewald(centered);
    long total = 0, moved = 0;
    LatVec lo, hi;
    centered.vertex_box(lo, hi);
    LatVec cur(centered.dim());
    auto rec = [&](auto&& self, int coord) -> void {
      if (coord == centered.dim()) {
        RatVec u(centered.dim());
        for (int i = 0; i < centered.dim(); ++i) u[i] = rat(cur[i], Int(8));
        if (!centered.strictly_contains(u) || u == RatVec(centered.dim(), Rat(0)))
          return;
        ++total;
        try {
          auto r = synthesize_displacement(centered, u, creport);
          if (r.displaced && displaces(*r.witness, u)) ++moved;
        } catch (const std::runtime_error&) {
          // a face without a star witness: counted as not displaced
        }
        return;
      }
      for (Int v = lo[coord] * 8; v <= hi[coord] * 8; ++v) {
        cur[coord] = v;
        self(self, coord + 1);
      }
    };
    rec(rec, 0);
    std::cout << "synthesized displacement at " << moved << "/" << total
              << " interior eighth-grid points\n";
    if (moved != total) rc = kPropertyFalse;
  }
  return rc;
}

int run_bundle(const std::string& base_uri, const std::string& twist,
               int simplex_k, int alpha, const std::string& emit) {
  Polytope result = [&] {
    if (!base_uri.empty()) {
      auto base = load_polytope(base_uri);
      std::vector<Int> b;
      std::stringstream ss(twist);
      std::string tok;
      while (std::getline(ss, tok, ',')) b.push_back(Int(tok));
      return build_delta1_bundle(base.polytope, b);
    }
    return build_simplex_bundle(simplex_k, alpha);
  }();
  std::vector<std::string> comments(result.num_facets(), "base facet");
  comments[result.num_facets() - 2] = "fiber facet";
  comments[result.num_facets() - 1] = "fiber facet";
  write_or_print(emit, print_polytope_file(result, {}, comments));
  return kOk;
}

int run_catalog(const std::string& name, const std::string& emit) {
  auto file = catalog(name);
  write_or_print(emit, print_polytope_file(file.polytope, file.ghosts));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact probe-displaceability analysis of rational polytopes"};
  app.require_subcommand(1);

  std::string uri, point, svg_path, csv_path, mode = "star", emit;
  std::string base_uri, twist;
  long bound = 0;
  int res = 8, simplex_k = 0, alpha = 0;
  bool synthesize = false;

  auto* check = app.add_subcommand("check", "structural predicates");
  check->add_option("file", uri, "polytope file or catalog:NAME")->required();

  auto* v0 = app.add_subcommand("v0", "maximin cascade and central point");
  v0->add_option("file", uri)->required();

  auto* displace = app.add_subcommand("displace", "probe search for a point");
  displace->add_option("file", uri)->required();
  displace->add_option("--point", point, "comma-separated rationals")
      ->required();
  displace->add_option("--bound", bound, "direction bound");

  auto* scan_cmd = app.add_subcommand("scan", "grid scan of the interior");
  scan_cmd->add_option("file", uri)->required();
  scan_cmd->add_option("--res", res, "grid denominator")->required();
  scan_cmd->add_option("--bound", bound);
  scan_cmd->add_option("--svg", svg_path, "write an SVG rendering");
  scan_cmd->add_option("--csv", csv_path, "write CSV rows");

  auto* ewald_cmd = app.add_subcommand("ewald", "symmetric-point conditions");
  ewald_cmd->add_option("file", uri)->required();
  ewald_cmd->add_option("--mode", mode, "weak|strong|star");
  ewald_cmd->add_flag("--synthesize", synthesize,
                      "construct witnesses over the eighth grid");

  auto* bundle_cmd = app.add_subcommand("bundle", "segment bundle builders");
  bundle_cmd->add_option("--base", base_uri, "monotone base polytope");
  bundle_cmd->add_option("--b", twist, "comma-separated twist integers");
  bundle_cmd->add_option("--simplex", simplex_k, "simplex base dimension");
  bundle_cmd->add_option("--alpha", alpha, "simplex bundle twist");
  bundle_cmd->add_option("--emit", emit, "output file (default stdout)");

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a built-in polytope");
  catalog_cmd->add_option("name", point)->required();
  catalog_cmd->add_option("--emit", emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kInputError;
  }

  try {
    if (check->parsed()) return run_check(uri);
    if (v0->parsed()) return run_v0(uri);
    if (displace->parsed()) return run_displace(uri, point, bound);
    if (scan_cmd->parsed()) return run_scan(uri, res, bound, svg_path, csv_path);
    if (ewald_cmd->parsed()) return run_ewald(uri, mode, synthesize);
    if (bundle_cmd->parsed()) {
      if (base_uri.empty() == (simplex_k == 0)) {
        std::cerr << "bundle: pass either --base with --b, or --simplex with "
                     "--alpha\n";
        return kInputError;
      }
      return run_bundle(base_uri, twist, simplex_k, alpha, emit);
    }
    if (catalog_cmd->parsed()) return run_catalog(point, emit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
