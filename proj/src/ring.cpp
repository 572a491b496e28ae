#include "strata/ring.hpp"

#include <algorithm>
#include <numeric>

#include "strata/errors.hpp"

namespace strata {

namespace {
using i128 = __int128;
constexpr long long kMaxOrder = 10000000;
}  // namespace

struct FiniteRing::Rep {
  RingKind kind;
  int order = 0;
  int one = 0;
  long long n = 0;                     // Zn
  long long d = 0;                     // QuadQuotient
  std::optional<QuadLattice> lattice;  // QuadQuotient
  long long m = 0, c = 0, f = 0;       // cached lattice rows
  std::shared_ptr<const Rep> parent;   // Quotient
  std::vector<int> coset_of;           // parent index -> coset index
  std::vector<int> rep_of;             // coset index -> parent representative
};

namespace {

// Reduce a + b*sqrt(d) to its element index.  All intermediates are 128-bit:
// with coordinates below m and f, |a| <= m^2 + |d|*f^2 and |b| <= 2*m*f, so
// under the caps |d| <= 10^6, m*f <= 10^12 (hence m, f <= 10^12) every product
// here stays below 10^32, far inside the signed 128-bit range (~1.7*10^38).
int quad_index(const FiniteRing::Rep& r, i128 a, i128 b) {
  i128 br = b % r.f;
  if (br < 0) br += r.f;
  i128 k = (b - br) / r.f;
  i128 a2 = (a - k * r.c) % r.m;
  if (a2 < 0) a2 += r.m;
  return (int)(a2 + br * r.m);
}

int do_add(const FiniteRing::Rep& r, int x, int y);
int do_mul(const FiniteRing::Rep& r, int x, int y);
int do_neg(const FiniteRing::Rep& r, int x);

int do_add(const FiniteRing::Rep& r, int x, int y) {
  switch (r.kind) {
    case RingKind::Zn:
      return (int)(((long long)x + y) % r.n);
    case RingKind::QuadQuotient:
      return quad_index(r, (i128)(x % r.m) + (y % r.m), (i128)(x / r.m) + (y / r.m));
    case RingKind::Quotient:
      return r.coset_of[do_add(*r.parent, r.rep_of[x], r.rep_of[y])];
  }
  return 0;
}

int do_mul(const FiniteRing::Rep& r, int x, int y) {
  switch (r.kind) {
    case RingKind::Zn:
      return (int)((long long)x * y % r.n);
    case RingKind::QuadQuotient: {
      i128 xa = x % r.m, xb = x / r.m;
      i128 ya = y % r.m, yb = y / r.m;
      return quad_index(r, xa * ya + (i128)r.d * xb * yb, xa * yb + ya * xb);
    }
    case RingKind::Quotient:
      return r.coset_of[do_mul(*r.parent, r.rep_of[x], r.rep_of[y])];
  }
  return 0;
}

int do_neg(const FiniteRing::Rep& r, int x) {
  switch (r.kind) {
    case RingKind::Zn:
      return (int)((r.n - x) % r.n);
    case RingKind::QuadQuotient:
      return quad_index(r, -(i128)(x % r.m), -(i128)(x / r.m));
    case RingKind::Quotient:
      return r.coset_of[do_neg(*r.parent, r.rep_of[x])];
  }
  return 0;
}

}  // namespace

FiniteRing FiniteRing::integers_mod(long long n) {
  if (n < 1) fail(Errc::InvalidParameter, "modulus must be positive");
  if (n > kMaxOrder) fail(Errc::ResourceLimit, "modulus exceeds the supported order");
  auto rep = std::make_shared<Rep>();
  rep->kind = RingKind::Zn;
  rep->order = (int)n;
  rep->n = n;
  rep->one = n == 1 ? 0 : 1;
  return FiniteRing(rep);
}

FiniteRing FiniteRing::quad_quotient(long long d, const QuadLattice& a) {
  if (a.d() != d) fail(Errc::InvalidParameter, "lattice belongs to a different field");
  if (a.norm() > kMaxOrder) fail(Errc::ResourceLimit, "quotient order exceeds the supported order");
  auto rep = std::make_shared<Rep>();
  rep->kind = RingKind::QuadQuotient;
  rep->order = (int)a.norm();
  rep->d = d;
  rep->lattice = a;
  rep->m = a.m();
  rep->c = a.c();
  rep->f = a.f();
  rep->one = rep->order == 1 ? 0 : 1;
  return FiniteRing(rep);
}

RingKind FiniteRing::kind() const { return rep_->kind; }
int FiniteRing::order() const { return rep_->order; }
int FiniteRing::one() const { return rep_->one; }

int FiniteRing::add(int x, int y) const { return do_add(*rep_, x, y); }
int FiniteRing::mul(int x, int y) const { return do_mul(*rep_, x, y); }
int FiniteRing::neg(int x) const { return do_neg(*rep_, x); }

int FiniteRing::pow(int x, long long k) const {
  if (k < 0) fail(Errc::InvalidParameter, "negative exponent");
  int acc = one();
  int base = x;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

long long FiniteRing::modulus() const {
  if (rep_->kind != RingKind::Zn) fail(Errc::InvalidParameter, "not a Z/nZ ring");
  return rep_->n;
}

long long FiniteRing::d() const {
  if (rep_->kind != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "not a quadratic quotient");
  return rep_->d;
}

const QuadLattice& FiniteRing::defining_ideal() const {
  if (rep_->kind != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "not a quadratic quotient");
  return *rep_->lattice;
}

std::pair<long long, long long> FiniteRing::coords(int x) const {
  if (rep_->kind != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "not a quadratic quotient");
  return {x % rep_->m, x / rep_->m};
}

int FiniteRing::element_from_coords(long long a, long long b) const {
  if (rep_->kind != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "not a quadratic quotient");
  return quad_index(*rep_, a, b);
}

FiniteRing FiniteRing::parent() const {
  if (rep_->kind != RingKind::Quotient)
    fail(Errc::InvalidParameter, "not a quotient ring");
  return FiniteRing(rep_->parent);
}

int FiniteRing::coset_rep(int x) const {
  if (rep_->kind != RingKind::Quotient)
    fail(Errc::InvalidParameter, "not a quotient ring");
  return rep_->rep_of[x];
}

int FiniteRing::project(int parent_element) const {
  if (rep_->kind != RingKind::Quotient)
    fail(Errc::InvalidParameter, "not a quotient ring");
  return rep_->coset_of[parent_element];
}

std::string FiniteRing::format(int x) const {
  switch (rep_->kind) {
    case RingKind::Zn:
      return std::to_string(x);
    case RingKind::QuadQuotient: {
      auto [a, b] = coords(x);
      return quad_term(a, b, rep_->d);
    }
    case RingKind::Quotient:
      return parent().format(rep_->rep_of[x]);
  }
  return "";
}

bool Ideal::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

std::vector<int> principal_elems(const FiniteRing& r, int x) {
  const int n = r.order();
  std::vector<char> seen(n, 0);
  for (int t = 0; t < n; ++t) seen[r.mul(x, t)] = 1;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

Ideal make_ideal(const FiniteRing& r, std::vector<int> elems) {
  const int n = r.order();
  std::vector<char> member(n, 0);
  for (int e : elems) member[e] = 1;
  Ideal out;
  out.elems = std::move(elems);
  std::vector<int> stamp(n, -1);
  for (int g : out.elems) {
    size_t cnt = 0;
    bool inside = true;
    for (int t = 0; t < n && inside; ++t) {
      int y = r.mul(g, t);
      if (!member[y]) inside = false;
      else if (stamp[y] != g) {
        stamp[y] = g;
        ++cnt;
      }
    }
    if (inside && cnt == out.elems.size()) {
      out.principal = true;
      out.generator = g;
      break;
    }
  }
  return out;
}

Ideal principal_ideal(const FiniteRing& r, int x) {
  return make_ideal(r, principal_elems(r, x));
}

Ideal annihilator(const FiniteRing& r, int x) {
  std::vector<int> out;
  for (int y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.zero()) out.push_back(y);
  return make_ideal(r, std::move(out));
}

std::vector<int> units(const FiniteRing& r) {
  const int n = r.order();
  std::vector<int> out;
  if (r.kind() == RingKind::Zn) {
    long long mod = r.modulus();
    if (mod == 1) return {0};
    for (int x = 1; x < n; ++x)
      if (std::gcd((long long)x, mod) == 1) out.push_back(x);
    return out;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.mul(x, y) == r.one()) {
        out.push_back(x);
        break;
      }
  return out;
}

bool is_ideal(const FiniteRing& r, const std::vector<int>& elems) {
  const int n = r.order();
  std::vector<char> member(n, 0);
  for (int e : elems) {
    if (e < 0 || e >= n) return false;
    member[e] = 1;
  }
  if (!member[r.zero()]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!member[r.add(a, b)]) return false;
  for (int a : elems)
    for (int t = 0; t < n; ++t)
      if (!member[r.mul(a, t)]) return false;
  return true;
}

FiniteRing quotient_by_ideal(const FiniteRing& r, const std::vector<int>& ideal) {
  if (!is_ideal(r, ideal)) fail(Errc::InvalidIdeal, "element set is not an ideal");
  const int n = r.order();
  auto rep = std::make_shared<FiniteRing::Rep>();
  rep->kind = RingKind::Quotient;
  rep->parent = r.rep_;
  rep->coset_of.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    if (rep->coset_of[p] != -1) continue;
    int q = (int)rep->rep_of.size();
    rep->rep_of.push_back(p);
    for (int i : ideal) rep->coset_of[r.add(p, i)] = q;
  }
  rep->order = (int)rep->rep_of.size();
  if ((long long)rep->order * (long long)ideal.size() != n)
    fail(Errc::InternalCheck, "coset partition does not tile the ring");
  rep->one = rep->coset_of[r.one()];
  return FiniteRing(rep);
}

}  // namespace strata
