#include "probelab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "probelab/bundles.hpp"
#include "probelab/polygon.hpp"

namespace probelab {

namespace {

std::invalid_argument parse_error(size_t line, const std::string& what) {
  return std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

PolytopeFile parse_polytope_file(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  int dim = -1;
  std::vector<HalfSpace> facets;
  std::vector<AffineFunctional> ghosts;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "dim") {
      if (dim >= 0) throw parse_error(lineno, "duplicate dim line");
      if (toks.size() != 2) throw parse_error(lineno, "dim expects one integer");
      try {
        dim = std::stoi(toks[1]);
      } catch (...) {
        throw parse_error(lineno, "dim expects one integer");
      }
      if (dim < 1) throw parse_error(lineno, "dimension must be positive");
    } else if (toks[0] == "facet" || toks[0] == "ghost") {
      if (dim < 0) throw parse_error(lineno, "dim line must come first");
      if (toks.size() != static_cast<size_t>(dim) + 2)
        throw parse_error(lineno, "expected " + std::to_string(dim) +
                                      " normal entries and a support constant");
      LatVec eta(dim);
      for (int i = 0; i < dim; ++i) {
        Rat v;
        try {
          v = parse_rat(toks[1 + i]);
        } catch (const std::exception& e) {
          throw parse_error(lineno, e.what());
        }
        if (v.get_den() != 1)
          throw parse_error(lineno, "normal entries must be integers");
        eta[i] = v.get_num();
      }
      Rat kappa;
      try {
        kappa = parse_rat(toks[dim + 1]);
      } catch (const std::exception& e) {
        throw parse_error(lineno, e.what());
      }
      if (is_zero(eta)) throw parse_error(lineno, "zero normal");
      auto [prim, g] = make_primitive(eta);
      if (toks[0] == "facet")
        facets.push_back({prim, kappa / Rat(g)});
      else
        ghosts.push_back({prim, kappa / Rat(g), true});
    } else {
      throw parse_error(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (dim < 0) throw std::invalid_argument("missing dim line");
  if (facets.empty()) throw std::invalid_argument("no facet lines");
  return {Polytope::from_halfspaces(dim, facets), ghosts};
}

std::string print_polytope_file(const Polytope& p,
                                const std::vector<AffineFunctional>& ghosts,
                                const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "dim " << p.dim() << "\n";
  for (int i = 0; i < p.num_facets(); ++i) {
    os << "facet";
    for (const auto& c : p.facet(i).eta) os << " " << c;
    os << " " << to_string(p.facet(i).kappa);
    if (static_cast<size_t>(i) < comments.size() && !comments[i].empty())
      os << "  # " << comments[i];
    os << "\n";
  }
  for (const auto& g : ghosts) {
    os << "ghost";
    for (const auto& c : g.eta) os << " " << c;
    os << " " << to_string(g.kappa) << "\n";
  }
  return os.str();
}

namespace {

Polytope make(int dim, std::vector<HalfSpace> rows) {
  return Polytope::from_halfspaces(dim, std::move(rows));
}

Polytope monotone_hexagon() {
  // Three-corner blow-up of the standard monotone triangle.
  return make(2, {{{-1, 0}, 1},
                  {{0, -1}, 1},
                  {{1, 1}, 1},
                  {{-1, -1}, 1},
                  {{1, 0}, 1},
                  {{0, 1}, 1}});
}

std::optional<Polytope> fixed_catalog(const std::string& name) {
  if (name == "square")
    return make(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  if (name == "cp2") return make(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 1}, 1}});
  if (name == "cp2_blow1")
    return make(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 1}, 1}, {{-1, -1}, 1}});
  if (name == "cp2_blow2")
    return make(2, {{{-1, 0}, 1},
                    {{0, -1}, 1},
                    {{1, 1}, 1},
                    {{-1, -1}, 1},
                    {{1, 0}, 1}});
  if (name == "cp2_blow3") return monotone_hexagon();
  if (name == "fig4_triangle")
    return make(2, {{{-1, 0}, Rat(0)}, {{0, -1}, Rat(0)}, {{5, 3}, 15}});
  if (name == "fig6_a")
    // Triangle bundle over a segment with one twisted base facet.
    return make(3, {{{1, 0, 0}, 1},
                    {{0, 1, 0}, 1},
                    {{-1, -1, 0}, 1},
                    {{0, 0, 1}, 1},
                    {{1, 0, -1}, 1}});
  if (name == "fig6_b")
    // Segment bundle over the monotone triangle.
    return make(3, {{{-1, 0, 0}, 1},
                    {{0, -1, 0}, 1},
                    {{1, 1, 1}, 1},
                    {{0, 0, 1}, 1},
                    {{0, 0, -1}, 1}});
  if (name == "fig7_I")
    return make(3, {{{-1, 0, 0}, 1},
                    {{1, 0, 0}, 1},
                    {{0, -1, 0}, 1},
                    {{0, 0, -1}, 1},
                    {{-2, 1, 1}, 1}});
  if (name == "fig7_II")
    // fig7_I blown up along the edge where the large facet meets {x3 = -1}.
    return make(3, {{{-1, 0, 0}, 1},
                    {{1, 0, 0}, 1},
                    {{0, -1, 0}, 1},
                    {{0, 0, -1}, 1},
                    {{-2, 1, 1}, 1},
                    {{1, 0, -1}, 1}});
  if (name == "hirz_odd_k1")
    return make(2,
                {{{-1, 0}, Rat(0)}, {{0, -1}, Rat(0)}, {{1, -3}, 1}, {{0, 1}, 3}});
  if (name == "hirz_even")
    return make(2,
                {{{-1, 0}, Rat(0)}, {{0, -1}, Rat(0)}, {{1, -2}, 1}, {{0, 1}, 3}});
  if (name == "rect_1_3")
    return make(2, {{{-1, 0}, Rat(0)}, {{0, -1}, Rat(0)}, {{1, 0}, 1}, {{0, 1}, 3}});
  if (name == "remark25")
    // (unit square with one corner cut) x (long interval): the cascade pins
    // the square sides, then the cut, then the interval ends.
    return make(3, {{{-1, 0, 0}, Rat(0)},
                    {{1, 0, 0}, 1},
                    {{0, -1, 0}, Rat(0)},
                    {{0, 1, 0}, 1},
                    {{1, 1, 0}, rat(7, 4)},
                    {{0, 0, -1}, Rat(0)},
                    {{0, 0, 1}, 5}});
  if (name == "cube")
    return make(3, {{{-1, 0, 0}, 1},
                    {{1, 0, 0}, 1},
                    {{0, -1, 0}, 1},
                    {{0, 1, 0}, 1},
                    {{0, 0, -1}, 1},
                    {{0, 0, 1}, 1}});
  if (name == "ot_bundle") {
    // Iterated segment bundles over the monotone hexagon. Unit hexagon edges
    // force zero twist at both stages, so this is the product with a square.
    Polytope stage1 = build_delta1_bundle(monotone_hexagon(),
                                          std::vector<Int>(6, Int(0)));
    return build_delta1_bundle(stage1, std::vector<Int>(8, Int(0)));
  }
  if (name == "refl_tri_no_star")
    // Reflexive, S = {+-(1,0), +-(1,-1)}, star condition fails at the vertex
    // (-1,1): both candidate witnesses have their negation on an incident
    // facet.
    return make(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 2}, 1}});
  if (name == "refl_tri_empty_s")
    // Reflexive with no nonzero symmetric lattice points at all.
    return make(2, {{{1, -2}, 1}, {{-2, 1}, 1}, {{1, 1}, 1}});
  // TODO: add the two nonsmooth reflexive triangles from Nill's
  // reflexive-polygon list (examples 3 and 6d) once exact H-representations
  // for them are pinned down.
  return std::nullopt;
}

}  // namespace

PolytopeFile catalog(const std::string& name) {
  if (auto p = fixed_catalog(name)) return {std::move(*p), {}};
  auto paren = name.find('(');
  if (paren != std::string::npos && name.back() == ')') {
    std::string fn = name.substr(0, paren);
    std::string args = name.substr(paren + 1, name.size() - paren - 2);
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("catalog entry expects two arguments: " + name);
    std::string a = args.substr(0, comma), b = args.substr(comma + 1);
    if (fn == "simplex_bundle")
      return {build_simplex_bundle(std::stoi(a), std::stoi(b)), {}};
    if (fn == "two_point_blowup")
      return {two_point_blowup(parse_rat(a), parse_rat(b)), {}};
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
  return {"square",      "cp2",          "cp2_blow1",   "cp2_blow2",
          "cp2_blow3",   "fig4_triangle", "fig6_a",      "fig6_b",
          "fig7_I",      "fig7_II",      "hirz_odd_k1", "hirz_even",
          "rect_1_3",    "remark25",     "cube",        "ot_bundle",
          "refl_tri_no_star", "refl_tri_empty_s"};
}

PolytopeFile load_polytope(const std::string& uri) {
  if (uri.rfind("catalog:", 0) == 0) return catalog(uri.substr(8));
  std::ifstream in(uri);
  if (!in) throw std::invalid_argument("cannot open file: " + uri);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope_file(buf.str());
}

}  // namespace probelab
