#include "doctest.h"

#include "probelab/lp.hpp"
#include "support.hpp"

using namespace probelab;
using namespace probelab::testing;

TEST_CASE("lp: max t under two roofs") {
  // max t s.t. t <= x, t <= 2-x, 0 <= x <= 2; vars (x, t)
  LpProblem p;
  p.num_vars = 2;
  p.objective = {Rat(0), Rat(1)};
  p.leq = {
      {{Rat(-1), Rat(1)}, Rat(0)},  // t - x <= 0
      {{Rat(1), Rat(1)}, Rat(2)},   // t + x <= 2
      {{Rat(1), Rat(0)}, Rat(2)},   // x <= 2
      {{Rat(-1), Rat(0)}, Rat(0)},  // -x <= 0
  };
  p.lower_bounds = RatVec{Rat(0), Rat(0)};
  auto sol = exact_lp_max(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == 1);
  CHECK(sol.point[0] == 1);
}

TEST_CASE("lp: max x1 over the square picks the Bland vertex") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {Rat(1), Rat(0)};
  p.leq = {
      {{Rat(-1), Rat(0)}, Rat(1)},
      {{Rat(0), Rat(-1)}, Rat(1)},
      {{Rat(1), Rat(0)}, Rat(1)},
      {{Rat(0), Rat(1)}, Rat(1)},
  };
  p.lower_bounds = RatVec{Rat(-1), Rat(-1)};
  auto sol = exact_lp_max(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == 1);
  CHECK(sol.point == qv({1, -1}));
}

TEST_CASE("lp: infeasible and unbounded are distinguished") {
  LpProblem p;
  p.num_vars = 1;
  p.objective = {Rat(1)};
  p.leq = {{{Rat(1)}, Rat(0)}, {{Rat(-1)}, Rat(-1)}};  // x <= 0, x >= 1
  CHECK(exact_lp_max(p).status == LpStatus::kInfeasible);

  LpProblem q;
  q.num_vars = 1;
  q.objective = {Rat(1)};
  q.leq = {{{Rat(-1)}, Rat(0)}};  // x >= 0
  CHECK(exact_lp_max(q).status == LpStatus::kUnbounded);
}

TEST_CASE("lp: equality constraints with split variables") {
  // max x + y s.t. x + y + z = 3, z >= 1, x <= 1, y <= 5, all free
  LpProblem p;
  p.num_vars = 3;
  p.objective = {Rat(1), Rat(1), Rat(0)};
  p.eq = {{{Rat(1), Rat(1), Rat(1)}, Rat(3)}};
  p.leq = {
      {{Rat(0), Rat(0), Rat(-1)}, Rat(-1)},
      {{Rat(1), Rat(0), Rat(0)}, Rat(1)},
      {{Rat(0), Rat(1), Rat(0)}, Rat(5)},
  };
  auto sol = exact_lp_max(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == 2);
}

TEST_CASE("lp: exact rational optimum") {
  // max y s.t. 3y - 2x <= 1 and 5y + 4x <= 7: vertex at y = 9/11.
  LpProblem p;
  p.num_vars = 2;
  p.objective = {Rat(0), Rat(1)};
  p.leq = {
      {{Rat(-2), Rat(3)}, Rat(1)},
      {{Rat(4), Rat(5)}, Rat(7)},
      {{Rat(-1), Rat(0)}, Rat(5)},
      {{Rat(0), Rat(-1)}, Rat(5)},
  };
  p.lower_bounds = RatVec{Rat(-5), Rat(-5)};
  auto sol = exact_lp_max(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == rat(9, 11));
}
