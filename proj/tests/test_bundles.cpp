#include "doctest.h"

#include <set>

#include "probelab/bundles.hpp"
#include "probelab/ewald.hpp"
#include "probelab/io.hpp"
#include "support.hpp"

using namespace probelab;
using namespace probelab::testing;

namespace {
Polytope cat(const std::string& name) { return catalog(name).polytope; }

std::set<RatVec> ambient_vertices(const Polytope& slice_poly,
                                  const Splitting& s, const RatVec& y) {
  std::set<RatVec> out;
  for (const auto& v : slice_poly.vertices()) out.insert(s.embed(v, y));
  return out;
}
}  // namespace

TEST_CASE("segment bundle over a segment is the square") {
  Polytope seg = Polytope::from_halfspaces(1, {{zv({-1}), 1}, {zv({1}), 1}});
  Polytope b = build_delta1_bundle(seg, {Int(0), Int(0)});
  CHECK(b.dim() == 2);
  CHECK(b.num_facets() == 4);
  CHECK(b.vertices().size() == 4);
  CHECK(b.monotone().monotone);
}

TEST_CASE("twisted segment bundle over the monotone triangle") {
  Polytope b = build_delta1_bundle(cat("cp2"), {Int(0), Int(0), Int(1)});
  CHECK(b.dim() == 3);
  CHECK(b.monotone().monotone);
  // |b_i| <= 1 keeps the poles in the symmetric set
  auto s = symmetric_points(b).points;
  CHECK(std::find(s.begin(), s.end(), zv({0, 0, 1})) != s.end());
  CHECK(std::find(s.begin(), s.end(), zv({0, 0, -1})) != s.end());

  CHECK_THROWS_AS(build_delta1_bundle(cat("cp2"), {Int(0), Int(0), Int(5)}),
                  std::runtime_error);
  try {
    build_delta1_bundle(cat("cp2"), {Int(0), Int(0), Int(5)});
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("not a bundle (combinatorics broke)") == 0);
    CHECK(msg.find("+ 1") != std::string::npos);  // edge inequality report
  }
}

TEST_CASE("simplex bundles") {
  Polytope s10 = build_simplex_bundle(1, 0);
  CHECK(s10.num_facets() == 4);
  std::set<RatVec> verts(s10.vertices().begin(), s10.vertices().end());
  std::set<RatVec> square = {qv({-1, -1}), qv({-1, 1}), qv({1, -1}),
                             qv({1, 1})};
  CHECK(verts == square);

  Polytope s21 = build_simplex_bundle(2, 1);
  CHECK(s21.dim() == 3);
  CHECK(s21.monotone().monotone);
  auto sym = symmetric_points(s21).points;
  CHECK(std::find(sym.begin(), sym.end(), zv({1, 0, 1})) != sym.end());
  // its negation sits on the bottom fiber facet {y = -1}
  CHECK(s21.ell(s21.num_facets() - 1, to_rat(zv({-1, 0, -1}))) == 0);

  // side lengths of the two fiber facets are k+1±alpha
  Polytope s22 = build_simplex_bundle(2, 2);
  auto spec = verify_bundle(s22, {3, 4});
  Polytope top = slice(s22, spec.splitting, qv({1}), spec.fiber);
  Polytope bottom = slice(s22, spec.splitting, qv({-1}), spec.fiber);
  for (const auto& e : top.edges()) CHECK(e.length == 5);
  for (const auto& e : bottom.edges()) CHECK(e.length == 1);
  // combinatorially the polytope with one small facet
  CHECK(small_facets(s22).size() == 1);
  CHECK(s22.vertices().size() == cat("fig7_I").vertices().size());

  CHECK_THROWS_AS(build_simplex_bundle(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_simplex_bundle(2, -1), std::invalid_argument);
}

TEST_CASE("verify_bundle on the catalog bundles") {
  // triangle bundle over a segment
  auto a = verify_bundle(cat("fig6_a"), {0, 1, 2});
  CHECK(a.base.dim() == 1);
  CHECK(a.fiber.dim() == 2);
  CHECK(a.fiber.num_facets() == 3);
  CHECK(a.fiber.monotone().monotone);

  // segment bundle over the triangle
  auto b = verify_bundle(cat("fig6_b"), {3, 4});
  CHECK(b.base.dim() == 2);
  CHECK(b.fiber.dim() == 1);
  CHECK(b.base.num_facets() == 3);

  // wrong partition: one horizontal and one vertical facet as "fiber"
  CHECK_THROWS_AS(verify_bundle(cat("square"), {0, 1}), std::runtime_error);
}

TEST_CASE("slices") {
  Polytope s21 = build_simplex_bundle(2, 1);
  auto spec = verify_bundle(s21, {3, 4});
  // central slice is monotone
  Polytope central = slice(s21, spec.splitting, qv({0}), spec.fiber);
  CHECK(central.monotone().monotone);
  // integral slices at integral fiber points
  for (long y = -1; y <= 1; ++y) {
    Polytope s = slice(s21, spec.splitting, qv({y}), spec.fiber);
    CHECK(s.is_integral());
  }
  CHECK_THROWS_WITH_AS(slice(s21, spec.splitting, qv({2}), spec.fiber),
                       "y outside fiber", std::invalid_argument);

  // product: every slice is the same segment
  Polytope prod = product(cat("cp2"), Polytope::from_halfspaces(
                                          1, {{zv({-1}), 1}, {zv({1}), 1}}));
  auto pspec = verify_bundle(prod, {3, 4});
  Polytope sl0 = slice(prod, pspec.splitting, qv({0}), pspec.fiber);
  Polytope sl1 = slice(prod, pspec.splitting, qvs({"1/2"}), pspec.fiber);
  CHECK(sl0.vertices() == sl1.vertices());

  // slice through a fiber vertex equals the corresponding face
  Polytope top = slice(prod, pspec.splitting, qv({1}), pspec.fiber);
  CHECK(top.vertices().size() == 3);
  for (const auto& v : ambient_vertices(top, pspec.splitting, qv({1}))) {
    bool is_vertex = false;
    for (const auto& w : prod.vertices())
      if (w == v) is_vertex = true;
    CHECK(is_vertex);
  }
}

TEST_CASE("slice is independent of the splitting complement") {
  Polytope s21 = build_simplex_bundle(2, 1);
  auto spec = verify_bundle(s21, {3, 4});
  // alternative complement W' = W + K*M embeds the same affine plane
  Splitting alt = spec.splitting;
  for (size_t i = 0; i < alt.fiber_comp.size(); ++i)
    alt.fiber_comp[i][0] += 2 * alt.base_basis[i][0] - alt.base_basis[i][1];
  for (const auto* y : {"0", "1/2", "-1"}) {
    RatVec yy = {parse_rat(y)};
    Polytope s1 = slice(s21, spec.splitting, yy, spec.fiber);
    Polytope s2 = slice(s21, alt, yy, spec.fiber);
    CHECK(ambient_vertices(s1, spec.splitting, yy) ==
          ambient_vertices(s2, alt, yy));
  }
}

TEST_CASE("slabs") {
  Polytope prod = product(cat("cp2_blow1"), Polytope::from_halfspaces(
                                                1, {{zv({-1}), 1}, {zv({1}), 1}}));
  CHECK(prod.monotone().monotone);
  // promote the fiber to the blow-up polygon: bundle over the segment
  auto spec = verify_bundle(prod, {0, 1, 2, 3});
  CHECK(spec.fiber.num_facets() == 4);
  for (const auto& w : symmetric_points(spec.fiber).points) {
    Polytope sl = slab(prod, spec.splitting, w, spec.fiber);
    CHECK(sl.dim() == 2);
    CHECK(sl.monotone().monotone);
  }
  // w = 1 on a segment fiber gives back the whole polytope
  auto bspec = verify_bundle(prod, {4, 5});
  Polytope whole = slab(prod, bspec.splitting, zv({1}), bspec.fiber);
  CHECK(whole.vertices().size() == prod.vertices().size());
  CHECK(whole.num_facets() == prod.num_facets());
  CHECK_THROWS_AS(slab(prod, bspec.splitting, zv({2}), bspec.fiber),
                  std::invalid_argument);
}

TEST_CASE("full fiber-lemma suite on catalog bundles") {
  struct Case {
    std::string name;
    std::vector<int> fiber_ids;
  };
  std::vector<Case> cases = {{"fig6_b", {3, 4}},
                             {"simplex_bundle(1,1)", {2, 3}},
                             {"simplex_bundle(2,1)", {3, 4}},
                             {"simplex_bundle(2,2)", {3, 4}},
                             {"simplex_bundle(3,1)", {4, 5}},
                             {"simplex_bundle(3,2)", {4, 5}},
                             {"simplex_bundle(3,3)", {4, 5}},
                             {"ot_bundle", {8, 9}}};
  for (const auto& c : cases) {
    Polytope p = cat(c.name);
    REQUIRE_MESSAGE(p.monotone().monotone, c.name);
    auto spec = verify_bundle(p, c.fiber_ids);
    CHECK_MESSAGE(spec.fiber.monotone().monotone, c.name);
    Polytope central =
        slice(p, spec.splitting, RatVec(spec.fiber.dim(), Rat(0)), spec.fiber);
    CHECK_MESSAGE(central.monotone().monotone, c.name);
    for (const auto& y : spec.fiber.lattice_points())
      CHECK(slice(p, spec.splitting, to_rat(y), spec.fiber).is_integral());
    for (const auto& w : symmetric_points(spec.fiber).points) {
      Polytope sl = slab(p, spec.splitting, w, spec.fiber);
      CHECK_MESSAGE(sl.monotone().monotone, c.name);
    }
  }
}

TEST_CASE("star condition for products and simplex bundles") {
  Polytope seg = Polytope::from_halfspaces(1, {{zv({-1}), 1}, {zv({1}), 1}});
  CHECK(star_ewald(seg).all_satisfied);
  // products are star exactly when both factors are
  CHECK(star_ewald(product(cat("cp2"), seg)).all_satisfied);
  CHECK(star_ewald(product(cat("cp2"), cat("cp2_blow1"))).all_satisfied);
  CHECK(star_ewald(product(cat("square"), cat("cp2_blow3"))).all_satisfied);
  CHECK_FALSE(star_ewald(product(cat("refl_tri_no_star"), seg)).all_satisfied);

  for (int k = 1; k <= 3; ++k)
    for (int alpha = 1; alpha <= k; ++alpha) {
      Polytope b = build_simplex_bundle(k, alpha);
      CHECK_MESSAGE(star_ewald(b).all_satisfied,
                    "simplex_bundle(" << k << "," << alpha << ")");
    }
  CHECK(star_ewald(cat("ot_bundle")).all_satisfied);
}
