#include "probelab/exact.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace probelab {

Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& token) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = token.find('/');
  if (slash == std::string::npos) {
    if (!is_int(token)) throw std::invalid_argument("non-rational token: " + token);
    return Rat(Int(token));
  }
  std::string num = token.substr(0, slash), den = token.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("non-rational token: " + token);
  Int d(den);
  if (d == 0) throw std::invalid_argument("non-rational token: " + token);
  return rat(Int(num), d);
}

std::string to_string(const Rat& q) { return q.get_str(); }

template <class V>
static std::string join_vec(const V& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const LatVec& v) { return join_vec(v); }
std::string to_string(const RatVec& v) { return join_vec(v); }

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int dot(const LatVec& a, const LatVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const LatVec& a, const RatVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

RatVec to_rat(const LatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

std::optional<LatVec> to_lat(const RatVec& v) {
  LatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& t, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
  return r;
}

RatVec axpy(const RatVec& x, const Rat& t, const LatVec& d) {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + t * Rat(d[i]);
  return r;
}

LatVec negate(const LatVec& v) {
  LatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const LatVec& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

std::pair<LatVec, Int> make_primitive(const LatVec& v) {
  if (is_zero(v)) throw std::invalid_argument("zero direction");
  Int g = 0;
  for (const auto& c : v) g = gcd(g, c);
  LatVec p(v.size());
  for (size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {p, g};
}

bool is_primitive(const LatVec& v) {
  if (is_zero(v)) return false;
  Int g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g == 1;
}

Rat affine_distance(const RatVec& x, const RatVec& y) {
  if (x == y) return 0;
  Int m = 1;
  for (size_t i = 0; i < x.size(); ++i) m = lcm(m, Rat(y[i] - x[i]).get_den());
  LatVec d(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    Rat c = (y[i] - x[i]) * Rat(m);
    d[i] = c.get_num();
  }
  auto [p, g] = make_primitive(d);
  (void)p;
  return rat(g, m);
}

bool is_integrally_transverse(const LatVec& lambda, const LatVec& eta) {
  if (!is_primitive(lambda) || !is_primitive(eta))
    throw std::invalid_argument("must be primitive");
  Int ip = dot(lambda, eta);
  return ip == 1 || ip == -1;
}

Rat ell(const HalfSpace& h, const RatVec& u) { return h.kappa - dot(h.eta, u); }

std::optional<Rat> directed_distance(const RatVec& x, const HalfSpace& h,
                                     const LatVec& lambda) {
  Rat l = ell(h, x);
  if (l == 0) return Rat(0);
  Int speed = dot(lambda, h.eta);
  if (speed == 0) return std::nullopt;
  Rat t = l / Rat(speed);
  if (t <= 0) return std::nullopt;
  return t;
}

IntMat identity_mat(int n) {
  IntMat m(n, LatVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), c = b[0].size();
  IntMat r(n, LatVec(c, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      for (size_t l = 0; l < c; ++l) r[i][l] += a[i][j] * b[j][l];
  return r;
}

LatVec mat_apply(const IntMat& t, const LatVec& x) {
  LatVec r(t.size(), 0);
  for (size_t i = 0; i < t.size(); ++i) r[i] = dot(t[i], x);
  return r;
}

RatVec mat_apply(const IntMat& t, const RatVec& x) {
  RatVec r(t.size());
  for (size_t i = 0; i < t.size(); ++i) r[i] = dot(t[i], x);
  return r;
}

IntMat transpose(const IntMat& a) {
  IntMat r(a[0].size(), LatVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

// Cofactor expansion; the matrices here never exceed dimension ~5.
Int det(const IntMat& a) {
  size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Int s = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    IntMat minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      LatVec row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Int c = a[0][j] * det(minor);
    s += (j % 2 == 0) ? c : -c;
  }
  return s;
}

IntMat unimodular_inverse(const IntMat& t) {
  Int d = det(t);
  if (d != 1 && d != -1) throw std::invalid_argument("not unimodular");
  size_t n = t.size();
  if (n == 1) return {{d}};
  IntMat adj(n, LatVec(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      IntMat minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        LatVec row;
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(t[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof * d;  // d = 1/det
    }
  }
  return adj;
}

RatVec apply_unimodular(const IntMat& t, const LatVec& shift, const RatVec& x) {
  Int d = det(t);
  if (d != 1 && d != -1) throw std::invalid_argument("not unimodular");
  RatVec r = mat_apply(t, x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += Rat(shift[i]);
  return r;
}

LatVec apply_unimodular(const IntMat& t, const LatVec& shift, const LatVec& x) {
  Int d = det(t);
  if (d != 1 && d != -1) throw std::invalid_argument("not unimodular");
  LatVec r = mat_apply(t, x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += shift[i];
  return r;
}

}  // namespace probelab
