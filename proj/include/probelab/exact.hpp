#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace probelab {

using Int = mpz_class;
using Rat = mpq_class;          // kept canonical: lowest terms, denominator > 0
using LatVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonicalized rational from numerator/denominator.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

/// Parses "p/q" or "p" (optional sign, base 10). Throws std::invalid_argument
/// on anything else, including zero denominators.
Rat parse_rat(const std::string& token);

std::string to_string(const Rat& q);
std::string to_string(const LatVec& v);   // "(a, b, c)"
std::string to_string(const RatVec& v);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

Int dot(const LatVec& a, const LatVec& b);
Rat dot(const LatVec& a, const RatVec& x);

RatVec to_rat(const LatVec& v);
std::optional<LatVec> to_lat(const RatVec& v);  // nullopt unless all entries integral

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& t, const RatVec& v);
RatVec axpy(const RatVec& x, const Rat& t, const LatVec& d);  // x + t*d

LatVec negate(const LatVec& v);
bool is_zero(const LatVec& v);

/// Divides out the gcd of the coordinates. Returns (v/g, g), g > 0.
/// Throws std::invalid_argument("zero direction") on the zero vector.
std::pair<LatVec, Int> make_primitive(const LatVec& v);
bool is_primitive(const LatVec& v);

/// Lattice-normalized distance between two rational points: write y - x = t*p
/// with p primitive integral and t >= 0; returns t. Symmetric; 0 iff x == y.
Rat affine_distance(const RatVec& x, const RatVec& y);

/// |<lambda, eta>| == 1. Both arguments must be primitive.
bool is_integrally_transverse(const LatVec& lambda, const LatVec& eta);

struct HalfSpace {
  LatVec eta;  // outward normal, primitive
  Rat kappa;   // support constant: <eta, x> <= kappa
};

/// kappa - <eta, u>: the lattice distance from u to the boundary hyperplane
/// along the normal (positive inside the half-space).
Rat ell(const HalfSpace& h, const RatVec& u);

/// Smallest t > 0 with x + t*lambda on the boundary hyperplane of h; 0 when x
/// is on it; nullopt when the ray misses it. lambda must be primitive, so the
/// ray parameter is the affine distance.
std::optional<Rat> directed_distance(const RatVec& x, const HalfSpace& h,
                                     const LatVec& lambda);

// Small exact integer matrices, row-major.
using IntMat = std::vector<LatVec>;

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
LatVec mat_apply(const IntMat& t, const LatVec& x);
RatVec mat_apply(const IntMat& t, const RatVec& x);
IntMat transpose(const IntMat& a);
Int det(const IntMat& a);

/// Exact inverse of a matrix with det = ±1.
/// Throws std::invalid_argument("not unimodular") otherwise.
IntMat unimodular_inverse(const IntMat& t);

/// x -> Tx + shift with |det T| = 1.
RatVec apply_unimodular(const IntMat& t, const LatVec& shift, const RatVec& x);
LatVec apply_unimodular(const IntMat& t, const LatVec& shift, const LatVec& x);

}  // namespace probelab
