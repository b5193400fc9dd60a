#pragma once

#include <random>
#include <vector>

#include "probelab/exact.hpp"
#include "probelab/polytope.hpp"

namespace probelab::testing {

inline RatVec qvs(std::initializer_list<const char*> coords) {
  RatVec v;
  for (const char* c : coords) v.push_back(parse_rat(c));
  return v;
}

inline RatVec qv(std::initializer_list<long> coords) {
  RatVec v;
  for (long c : coords) v.push_back(Rat(c));
  return v;
}

inline LatVec zv(std::initializer_list<long> coords) {
  LatVec v;
  for (long c : coords) v.push_back(Int(c));
  return v;
}

/// Random unimodular matrix: a product of elementary shears and signed
/// permutations, seeded.
inline IntMat random_unimodular(int n, std::mt19937_64& rng) {
  IntMat t = identity_mat(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-3, 3), ops(6, 12);
  int steps = ops(rng);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      for (int c = 0; c < n; ++c) t[i][c] = -t[i][c];
      continue;
    }
    Int f = coef(rng);
    for (int c = 0; c < n; ++c) t[i][c] += f * t[j][c];
  }
  return t;
}

/// Random bounded full-dimensional rational polytope: box facets with random
/// rational supports plus a few random cut facets through the interior box.
inline Polytope random_polytope(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 6), den(1, 4), extra(1, 3);
  std::uniform_int_distribution<long> nc(-3, 3);
  std::vector<HalfSpace> rows;
  for (int i = 0; i < n; ++i) {
    LatVec plus(n, Int(0)), minus(n, Int(0));
    plus[i] = 1;
    minus[i] = -1;
    rows.push_back({plus, rat(num(rng), den(rng))});
    rows.push_back({minus, rat(num(rng), den(rng))});
  }
  int cuts = extra(rng);
  for (int c = 0; c < cuts; ++c) {
    LatVec eta(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      eta[i] = nc(rng);
      if (eta[i] != 0) zero = false;
    }
    if (zero) continue;
    rows.push_back({make_primitive(eta).first, rat(num(rng) + 2, den(rng))});
  }
  return Polytope::from_halfspaces(n, rows);
}

}  // namespace probelab::testing
