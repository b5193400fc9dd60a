#include "doctest.h"

#include <algorithm>
#include <set>

#include "probelab/ewald.hpp"
#include "probelab/io.hpp"
#include "support.hpp"

using namespace probelab;
using namespace probelab::testing;

namespace {
Polytope cat(const std::string& name) { return catalog(name).polytope; }

std::set<LatVec> sym_set(const Polytope& p) {
  auto s = symmetric_points(p).points;
  return {s.begin(), s.end()};
}
}  // namespace

TEST_CASE("symmetric points") {
  std::set<LatVec> cp2_expect = {zv({1, 0}),  zv({-1, 0}), zv({0, 1}),
                                 zv({0, -1}), zv({1, -1}), zv({-1, 1})};
  CHECK(sym_set(cat("cp2")) == cp2_expect);
  CHECK(sym_set(cat("square")).size() == 8);
  CHECK_THROWS_WITH_AS(symmetric_points(cat("rect_1_3")),
                       "origin not interior", std::invalid_argument);

  // the small facet of fig7_I carries its lattice points into the set
  Polytope f7 = cat("fig7_I");
  auto s7 = sym_set(f7);
  CHECK(s7.size() == 12);
  for (const auto& z : f7.lattice_points()) {
    if (f7.ell(0, to_rat(z)) != 0) continue;  // small facet {x1 = -1}
    CHECK(s7.count(z));
    CHECK(s7.count(negate(z)));
  }
  // closure under negation, zero excluded
  for (const auto& v : s7) {
    CHECK(!is_zero(v));
    CHECK(s7.count(negate(v)));
  }
}

TEST_CASE("weak ewald") {
  auto sq = weak_ewald(cat("square"));
  REQUIRE(sq.found);
  CHECK(sq.basis == std::vector<LatVec>{zv({-1, -1}), zv({-1, 0})});

  auto t = weak_ewald(cat("cp2"));
  REQUIRE(t.found);
  IntMat m = {t.basis[0], t.basis[1]};
  CHECK(abs(det(m)) == 1);

  Polytope seg = Polytope::from_halfspaces(1, {{zv({1}), 1}, {zv({-1}), 1}});
  auto s1 = weak_ewald(seg);
  REQUIRE(s1.found);
  CHECK(s1.basis == std::vector<LatVec>{zv({-1})});

  CHECK_FALSE(weak_ewald(cat("refl_tri_empty_s")).found);
  CHECK(sym_set(cat("refl_tri_empty_s")).empty());
  CHECK(weak_ewald(cat("refl_tri_no_star")).found);
}

TEST_CASE("strong ewald") {
  auto sq = strong_ewald(cat("square"));
  CHECK(sq == std::vector<bool>(4, true));
  auto t = strong_ewald(cat("cp2"));
  CHECK(t == std::vector<bool>(3, true));
  // frozen verdicts computed by subset enumeration over S
  CHECK(strong_ewald(cat("fig7_I")) == std::vector<bool>(5, true));
  CHECK(strong_ewald(cat("fig7_II")) == std::vector<bool>(6, true));
  // the no-star triangle has a facet whose symmetric points cannot span
  auto r = strong_ewald(cat("refl_tri_no_star"));
  CHECK(r == std::vector<bool>{true, false, true});
}

TEST_CASE("star membership on the square") {
  Polytope sq = cat("square");
  // the vertex (-1,-1) lies on facets 0 (x >= -1) and 1 (y >= -1)
  int fi = sq.face_index({0, 1});
  REQUIRE(fi >= 0);
  const Face& corner = sq.faces()[fi];
  REQUIRE(corner.dim == 0);

  auto a = star_membership(sq, corner, zv({-1, 0}));
  CHECK(a.in_star_star);
  CHECK(a.in_star_capital);
  CHECK_FALSE(a.in_star_lower);

  auto b = star_membership(sq, corner, zv({-1, -1}));
  CHECK(b.in_star_lower);
  CHECK_FALSE(b.in_star_star);

  auto c = star_membership(sq, corner, zv({1, 0}));
  CHECK_FALSE(c.in_star_capital);
  CHECK_FALSE(c.in_star_star);
}

TEST_CASE("star ewald verdicts") {
  for (const auto& name :
       {"square", "cp2", "cp2_blow1", "cp2_blow2", "cp2_blow3"}) {
    auto report = star_ewald(cat(name));
    CHECK_MESSAGE(report.all_satisfied, name);
  }
  CHECK(star_ewald(cat("fig7_I")).all_satisfied);
  CHECK(star_ewald(cat("fig7_II")).all_satisfied);

  // witnesses are symmetric points with the stated membership
  Polytope p = cat("fig7_II");
  auto report = star_ewald(p);
  auto s = sym_set(p);
  for (const auto& v : report.verdicts) {
    REQUIRE(v.satisfied);
    REQUIRE(v.witness.has_value());
    CHECK(s.count(*v.witness));
    CHECK(star_membership(p, v.face, *v.witness).in_star_star);
    CHECK_FALSE(
        star_membership(p, v.face, negate(*v.witness)).in_star_capital);
  }

  // the constructed reflexive triangle fails exactly at the vertex (-1, 1)
  Polytope bad = cat("refl_tri_no_star");
  auto rb = star_ewald(bad);
  CHECK_FALSE(rb.all_satisfied);
  int failures = 0;
  for (const auto& v : rb.verdicts) {
    if (v.satisfied) continue;
    ++failures;
    REQUIRE(v.face.dim == 0);
    CHECK(bad.vertices()[v.face.vertex_ids[0]] == qv({-1, 1}));
  }
  CHECK(failures == 1);
}

TEST_CASE("star/weak chain and witness sanity across the catalog") {
  for (const auto& name : catalog_names()) {
    Polytope p = cat(name);
    RatVec origin(p.dim(), Rat(0));
    if (!p.strictly_contains(origin)) continue;
    auto report = star_ewald(p);
    // a vertex whose faces are all satisfied forces the weak condition
    for (size_t vid = 0; vid < p.vertices().size(); ++vid) {
      bool all = true;
      for (const auto& v : report.verdicts) {
        if (std::find(v.face.vertex_ids.begin(), v.face.vertex_ids.end(),
                      static_cast<int>(vid)) == v.face.vertex_ids.end())
          continue;
        if (!v.satisfied) all = false;
      }
      if (all) CHECK_MESSAGE(weak_ewald(p).found, name);
    }
    // no symmetric pair inside one facet
    auto s = symmetric_points(p).points;
    for (const auto& v : s)
      for (int f = 0; f < p.num_facets(); ++f) {
        bool both = p.ell(f, to_rat(v)) == 0 && p.ell(f, to_rat(negate(v))) == 0;
        CHECK_FALSE(both);
      }
    // any facet containing a symmetric point satisfies the star condition
    for (const auto& verdict : report.verdicts) {
      if (verdict.face.dim != p.dim() - 1) continue;
      int f = verdict.face.facet_ids[0];
      bool has_sym = false;
      for (const auto& v : s)
        if (p.ell(f, to_rat(v)) == 0) has_sym = true;
      if (has_sym) CHECK_MESSAGE(verdict.satisfied, name);
    }
  }
}

TEST_CASE("synthesized displacement on monotone polytopes") {
  Polytope t = cat("cp2");
  auto report = star_ewald(t);
  auto r1 = synthesize_displacement(t, qvs({"1/2", "0"}), report);
  CHECK(r1.displaced);
  REQUIRE(r1.witness.has_value());
  CHECK(displaces(*r1.witness, qvs({"1/2", "0"})));
  auto sym = sym_set(t);
  CHECK(sym.count(negate(r1.witness->direction)));

  Polytope sq = cat("square");
  auto r2 = synthesize_displacement(sq, qvs({"1/4", "1/4"}));
  CHECK(r2.displaced);

  CHECK_THROWS_WITH_AS(synthesize_displacement(sq, qv({0, 0})), "u0 excluded",
                       std::invalid_argument);

  // faces without a witness surface as an error
  Polytope bad = cat("refl_tri_no_star");
  auto rb = star_ewald(bad);
  CHECK_THROWS_AS(
      synthesize_displacement(bad, scale(rat(1, 8), qv({-1, 1})), rb),
      std::runtime_error);
}

TEST_CASE("special points of vertices in facets") {
  Polytope f7 = cat("fig7_I");
  int vid = -1;
  for (size_t v = 0; v < f7.vertices().size(); ++v)
    if (f7.vertices()[v] == qv({-1, -1, -1})) vid = static_cast<int>(v);
  REQUIRE(vid >= 0);
  CHECK(special_point_s(f7, vid, 0) == qv({-1, 0, 0}));  // facet {x1 = -1}
  CHECK(special_point_s(f7, vid, 2) == qv({0, -1, 0}));  // facet {x2 = -1}
  CHECK(special_point_s(f7, vid, 3) == qv({0, 0, -1}));  // facet {x3 = -1}
  CHECK_THROWS_WITH_AS(special_point_s(f7, vid, 1), "vertex not on facet",
                       std::invalid_argument);

  Polytope sq = cat("square");
  int corner = -1;
  for (size_t v = 0; v < sq.vertices().size(); ++v)
    if (sq.vertices()[v] == qv({-1, -1})) corner = static_cast<int>(v);
  CHECK(special_point_s(sq, corner, 0) == qv({-1, 0}));
}

TEST_CASE("small facets") {
  auto f1 = small_facets(cat("fig7_I"));
  CHECK(f1 == std::vector<int>{0});
  auto f2 = small_facets(cat("fig7_II"));
  CHECK(f2 == std::vector<int>{0});
  CHECK(small_facets(cat("cube")).empty());
  CHECK_THROWS_AS(small_facets(cat("square")), std::invalid_argument);
  // at most one small facet in any catalog 3-polytope
  for (const auto& name : catalog_names()) {
    Polytope p = cat(name);
    if (p.dim() != 3) continue;
    CHECK(small_facets(p).size() <= 1);
  }
}

TEST_CASE("non-unimodular unit-edge triangles are not small facets") {
  // prism over the triangle (0,0),(2,1),(1,2): all its edges are primitive,
  // but the triangle has lattice area 3/2
  Polytope prism = Polytope::from_halfspaces(
      3, {{zv({1, -2, 0}), Rat(0)}, {zv({-2, 1, 0}), Rat(0)},
          {zv({1, 1, 0}), 3}, {zv({0, 0, 1}), 1}, {zv({0, 0, -1}), 1}});
  for (const auto& e : prism.edges())
    if (prism.ell(3, prism.vertices()[e.v0]) == 0 &&
        prism.ell(3, prism.vertices()[e.v1]) == 0)
      CHECK(e.length == 1);
  CHECK(small_facets(prism).empty());
}
