#include "strata/lattice.hpp"

#include <algorithm>

#include "strata/errors.hpp"
#include "strata/intmath.hpp"

namespace strata {

namespace {

using i128 = __int128;

i128 iabs(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long to_ll(i128 v, const char* what) {
  const i128 bound = (i128)1 << 62;
  if (v >= bound || v <= -bound)
    fail(Errc::ResourceLimit, std::string(what) + ": coordinate overflow");
  return (long long)v;
}

struct Vec2 {
  i128 a;
  long long b;
};

}  // namespace

namespace {

// Squarefreeness is tested by trial division, and 128-bit multiplication
// headroom assumes |d| * f^2 stays far below 2^126, so the ground field
// discriminant is capped.
constexpr long long kMaxFieldD = 1000000;

void check_field_bound(long long d) {
  if (d > kMaxFieldD || d < -kMaxFieldD)
    fail(Errc::ResourceLimit, "field parameter d exceeds the supported bound of 10^6");
}

}  // namespace

bool valid_quad_field(long long d) {
  if (d == 0 || d == 1) return false;
  long long r = d % 4;
  if (r < 0) r += 4;
  if (r == 1) return false;
  return is_squarefree(d);
}

QuadLattice::QuadLattice(long long d, long long m, long long c, long long f)
    : d_(d), m_(m), c_(c), f_(f) {
  check_field_bound(d);
  if (!valid_quad_field(d))
    fail(Errc::UnsupportedRing,
         "ground field requires squarefree d, d != 0, 1, d % 4 != 1");
  if (m < 1 || f < 1 || c < 0 || c >= m || m % f != 0 || c % f != 0)
    fail(Errc::InvalidParameter, "basis rows are not in Hermite normal form");
  if ((i128)m * f > (i128)1000000000000LL)
    fail(Errc::ResourceLimit, "ideal norm exceeds 10^12");
  if (!contains(0, m_) || ((i128)d_ * f_ - (i128)(c_ / f_) * c_) % m_ != 0)
    fail(Errc::InvalidIdeal, "lattice is not closed under multiplication by sqrt(d)");
}

bool QuadLattice::contains(long long a, long long b) const {
  if (b % f_ != 0) return false;
  long long k = b / f_;
  i128 a2 = (i128)a - (i128)k * c_;
  return a2 % m_ == 0;
}

bool QuadLattice::contains(const QuadLattice& other) const {
  if (d_ != other.d_) fail(Errc::InvalidParameter, "mismatched ground fields");
  return contains(other.m_, 0) && contains(other.c_, other.f_);
}

std::string QuadLattice::to_string() const {
  if (c_ == 0 && f_ == m_) return "(" + std::to_string(m_) + ")";
  return "(" + std::to_string(m_) + ", " + quad_term(c_, f_, d_) + ")";
}

std::string quad_term(long long a, long long b, long long d) {
  if (b == 0) return std::to_string(a);
  std::string root = "√" + std::to_string(d);
  std::string bpart;
  if (b == 1)
    bpart = root;
  else if (b == -1)
    bpart = "-" + root;
  else
    bpart = std::to_string(b) + root;
  if (a == 0) return bpart;
  if (b > 0) return std::to_string(a) + "+" + bpart;
  return std::to_string(a) + bpart;
}

QuadLattice hnf_from_generators(long long d,
                                const std::vector<std::pair<long long, long long>>& gens) {
  check_field_bound(d);
  if (!valid_quad_field(d))
    fail(Errc::UnsupportedRing,
         "ground field requires squarefree d, d != 0, 1, d % 4 != 1");
  std::vector<Vec2> vs;
  for (auto [a, b] : gens) {
    if (a == 0 && b == 0) continue;
    vs.push_back({(i128)a, b});
    vs.push_back({(i128)d * b, a});
  }
  if (vs.empty()) fail(Errc::ZeroIdeal, "all generators are zero");

  // Bezout-combine rows until one carries the gcd of the sqrt(d) coordinates.
  i128 c0 = 0;
  long long f = 0;
  for (const Vec2& v : vs) {
    if (v.b == 0) continue;
    if (f == 0) {
      c0 = v.a;
      f = v.b;
      if (f < 0) {
        f = -f;
        c0 = -c0;
      }
      continue;
    }
    Bezout bz = ext_gcd(f, v.b);
    c0 = (i128)bz.s * c0 + (i128)bz.t * v.a;
    f = bz.g;
  }
  if (f == 0) fail(Errc::InternalCheck, "generator set has rank below 2");

  i128 m128 = 0;
  for (const Vec2& v : vs) {
    long long q = v.b / f;
    m128 = gcd128(m128, v.a - (i128)q * c0);
  }
  if (m128 == 0) fail(Errc::InternalCheck, "generator set has rank below 2");

  long long m = to_ll(m128, "hnf_from_generators");
  c0 %= m;
  if (c0 < 0) c0 += m;
  return QuadLattice(d, m, (long long)c0, f);
}

QuadLattice unit_lattice(long long d) { return QuadLattice(d, 1, 0, 1); }

QuadLattice principal_lattice(long long d, long long a, long long b) {
  return hnf_from_generators(d, {{a, b}});
}

QuadLattice lattice_product(const QuadLattice& x, const QuadLattice& y) {
  if (x.d() != y.d()) fail(Errc::InvalidParameter, "mismatched ground fields");
  long long d = x.d();
  const std::pair<i128, i128> rx[2] = {{x.m(), 0}, {x.c(), x.f()}};
  const std::pair<i128, i128> ry[2] = {{y.m(), 0}, {y.c(), y.f()}};
  std::vector<std::pair<long long, long long>> gens;
  for (const auto& u : rx)
    for (const auto& v : ry) {
      i128 a = u.first * v.first + (i128)d * u.second * v.second;
      i128 b = u.first * v.second + v.first * u.second;
      gens.emplace_back(to_ll(a, "lattice_product"), to_ll(b, "lattice_product"));
    }
  return hnf_from_generators(d, gens);
}

QuadLattice lattice_sum(const QuadLattice& x, const QuadLattice& y) {
  if (x.d() != y.d()) fail(Errc::InvalidParameter, "mismatched ground fields");
  return hnf_from_generators(
      x.d(), {{x.m(), 0}, {x.c(), x.f()}, {y.m(), 0}, {y.c(), y.f()}});
}

QuadLattice lattice_power(const QuadLattice& x, int k) {
  if (k < 0 || k > 64) fail(Errc::InvalidParameter, "power out of range");
  QuadLattice acc = unit_lattice(x.d());
  for (int i = 0; i < k; ++i) acc = lattice_product(acc, x);
  return acc;
}

QuadLattice star_product(const QuadLattice& x, const QuadLattice& y,
                         const QuadLattice& a) {
  if (!x.contains(a) || !y.contains(a))
    fail(Errc::InvalidParameter, "star factors must contain the defining ideal");
  return lattice_sum(lattice_product(x, y), a);
}

std::vector<SplitPrime> split_prime(long long d, long long p) {
  check_field_bound(d);
  if (!valid_quad_field(d))
    fail(Errc::UnsupportedRing,
         "ground field requires squarefree d, d != 0, 1, d % 4 != 1");
  if (!is_prime(p)) fail(Errc::InvalidParameter, "p must be a rational prime");

  std::vector<SplitPrime> out;
  if (p == 2) {
    long long dm = ((d % 2) + 2) % 2;
    if (dm == 0)
      out.push_back({QuadLattice(d, 2, 0, 1), Splitting::Ramified});
    else
      out.push_back({QuadLattice(d, 2, 1, 1), Splitting::Ramified});
  } else if (d % p == 0) {
    out.push_back({QuadLattice(d, p, 0, 1), Splitting::Ramified});
  } else {
    long long dm = ((d % p) + p) % p;
    if (mod_pow(dm, (p - 1) / 2, p) == 1) {
      long long r = 0;
      for (long long t = 1; t < p; ++t)
        if (t * t % p == dm) {
          r = t;
          break;
        }
      long long lo = std::min(r, p - r), hi = std::max(r, p - r);
      out.push_back({QuadLattice(d, p, lo, 1), Splitting::Split});
      out.push_back({QuadLattice(d, p, hi, 1), Splitting::Split});
    } else {
      out.push_back({QuadLattice(d, p, 0, p), Splitting::Inert});
    }
  }

  QuadLattice acc = unit_lattice(d);
  for (const SplitPrime& sp : out) {
    acc = lattice_product(acc, sp.ideal);
    if (sp.kind == Splitting::Ramified) acc = lattice_product(acc, sp.ideal);
  }
  if (!(acc == principal_lattice(d, p, 0)))
    fail(Errc::InternalCheck, "prime splitting does not reconstruct (p)");
  return out;
}

std::vector<IdealFactor> factor_ideal(const QuadLattice& a) {
  if (a.is_unit()) fail(Errc::InvalidParameter, "factor_ideal expects a proper ideal");

  std::vector<IdealFactor> factors;
  for (auto [p, unused] : trial_factor(a.norm())) {
    (void)unused;
    for (const SplitPrime& sp : split_prime(a.d(), p)) {
      int e = 0;
      QuadLattice pw = sp.ideal;
      while (pw.contains(a)) {
        if (++e > 64) fail(Errc::InternalCheck, "runaway exponent in factor_ideal");
        pw = lattice_product(pw, sp.ideal);
      }
      if (e > 0) factors.push_back({sp.ideal, e});
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const IdealFactor& lhs, const IdealFactor& rhs) {
              if (lhs.prime.norm() != rhs.prime.norm())
                return lhs.prime.norm() < rhs.prime.norm();
              return lhs.prime.c() < rhs.prime.c();
            });

  QuadLattice acc = unit_lattice(a.d());
  for (const IdealFactor& fac : factors)
    acc = lattice_product(acc, lattice_power(fac.prime, fac.exponent));
  if (!(acc == a))
    fail(Errc::FactorisationFailure, "prime power product does not reconstruct the ideal");
  return factors;
}

}  // namespace strata
