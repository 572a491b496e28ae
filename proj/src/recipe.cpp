#include "strata/recipe.hpp"

#include <algorithm>
#include <numeric>

#include "strata/errors.hpp"
#include "strata/intmath.hpp"

namespace strata::recipe {

namespace {

using i128 = __int128;

std::vector<int> unit_orbit(const FiniteRing& r, int x, const std::vector<int>& us) {
  std::vector<char> bm(r.order(), 0);
  for (int u : us) bm[r.mul(x, u)] = 1;
  std::vector<int> out;
  for (int i = 0; i < (int)bm.size(); ++i)
    if (bm[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::pair<long long, int>> factor_integer(long long n) {
  if (n < 2) fail(Errc::InvalidParameter, "factor_integer expects n >= 2");
  return trial_factor(n);
}

int integer_depth(long long x) {
  if (x < 0) x = -x;
  if (x < 2) fail(Errc::InvalidParameter, "integer_depth expects |x| >= 2");
  int depth = 0;
  for (auto [p, e] : trial_factor(x)) {
    (void)p;
    depth += e;
  }
  return depth;
}

Factorization Factorization::for_ring(const FiniteRing& r) {
  switch (r.kind()) {
    case RingKind::Zn: {
      long long n = r.modulus();
      std::vector<std::pair<long long, int>> pf;
      if (n > 1) pf = trial_factor(n);
      return of_integers(r, std::move(pf));
    }
    case RingKind::QuadQuotient: {
      const QuadLattice& a = r.defining_ideal();
      std::vector<IdealFactor> pf;
      if (!a.is_unit()) pf = factor_ideal(a);
      return of_ideals(r, std::move(pf));
    }
    case RingKind::Quotient:
      break;
  }
  fail(Errc::UnsupportedRing, "the recipe needs Z/nZ or a quadratic quotient");
}

Factorization Factorization::of_integers(const FiniteRing& r,
                                         std::vector<std::pair<long long, int>> primes) {
  if (r.kind() != RingKind::Zn)
    fail(Errc::InvalidParameter, "integer factorisation only fits Z/nZ");
  std::sort(primes.begin(), primes.end());
  i128 prod = 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    auto [p, e] = primes[i];
    if (!is_prime(p) || e < 1)
      fail(Errc::InvalidParameter, "factors must be prime powers with positive exponents");
    if (i > 0 && primes[i - 1].first == p)
      fail(Errc::InvalidParameter, "repeated prime in factorisation");
    for (int t = 0; t < e; ++t) {
      prod *= p;
      if (prod > (i128)1 << 62)
        fail(Errc::InvalidParameter, "factorisation overflows");
    }
  }
  if (prod != (i128)r.modulus())
    fail(Errc::InvalidParameter, "prime powers do not multiply to the modulus");

  Factorization out(r);
  for (auto [p, e] : primes) {
    out.primes_.push_back(p);
    out.exps_.push_back(e);
  }
  out.finish();
  return out;
}

Factorization Factorization::of_ideals(const FiniteRing& r,
                                       std::vector<IdealFactor> primes) {
  if (r.kind() != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "ideal factorisation only fits quadratic quotients");
  const QuadLattice& a = r.defining_ideal();
  const long long d = r.d();

  std::sort(primes.begin(), primes.end(),
            [](const IdealFactor& lhs, const IdealFactor& rhs) {
              if (lhs.prime.norm() != rhs.prime.norm())
                return lhs.prime.norm() < rhs.prime.norm();
              return lhs.prime.c() < rhs.prime.c();
            });
  for (size_t i = 0; i < primes.size(); ++i) {
    const QuadLattice& p = primes[i].prime;
    if (p.d() != d) fail(Errc::InvalidParameter, "prime from a different field");
    if (primes[i].exponent < 1)
      fail(Errc::InvalidParameter, "exponents must be positive");
    if (i > 0 && primes[i - 1].prime == p)
      fail(Errc::InvalidParameter, "repeated prime in factorisation");
    bool found = false;
    for (const SplitPrime& sp : split_prime(d, p.m()))
      if (sp.ideal == p) found = true;
    if (!found) fail(Errc::InvalidParameter, "listed ideal is not prime");
  }
  QuadLattice acc = unit_lattice(d);
  for (const IdealFactor& fac : primes)
    acc = lattice_product(acc, lattice_power(fac.prime, fac.exponent));
  if (!(acc == a))
    fail(Errc::InvalidParameter, "prime powers do not multiply to the defining ideal");

  Factorization out(r);
  for (const IdealFactor& fac : primes) {
    out.prime_ideals_.push_back(fac.prime);
    out.exps_.push_back(fac.exponent);
    std::vector<QuadLattice> powers;
    QuadLattice pw = fac.prime;
    for (int k = 1; k <= fac.exponent; ++k) {
      powers.push_back(pw);
      if (k < fac.exponent) pw = lattice_product(pw, fac.prime);
    }
    out.prime_powers_.push_back(std::move(powers));
  }
  out.finish();
  return out;
}

void Factorization::finish() {
  units_ = units(ring_);
  const int n = ring_.order();
  for (int i = 0; i < count(); ++i) {
    std::vector<int> target;
    if (ring_.kind() == RingKind::Zn) {
      for (long long v = 0; v < n; v += primes_[i]) target.push_back((int)v);
    } else {
      const QuadLattice& p = prime_ideals_[i];
      for (int x = 0; x < n; ++x) {
        auto [a, b] = ring_.coords(x);
        if (p.contains(a, b)) target.push_back(x);
      }
    }
    int gen = -1;
    for (int x : target)
      if (principal_elems(ring_, x) == target) {
        gen = x;
        break;
      }
    if (gen < 0)
      fail(Errc::NotPrincipal, "prime image has no single generator in the ring");
    gens_.push_back(gen);
  }
}

long long Factorization::rational_prime(int i) const {
  if (ring_.kind() != RingKind::Zn)
    fail(Errc::InvalidParameter, "not an integer factorisation");
  return primes_[i];
}

const QuadLattice& Factorization::prime_ideal(int i) const {
  if (ring_.kind() != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "not an ideal factorisation");
  return prime_ideals_[i];
}

const QuadLattice& Factorization::prime_power(int i, int k) const {
  if (ring_.kind() != RingKind::QuadQuotient)
    fail(Errc::InvalidParameter, "not an ideal factorisation");
  if (k < 1 || k > exps_[i]) fail(Errc::InvalidParameter, "power out of range");
  return prime_powers_[i][k - 1];
}

std::string Factorization::prime_label(int i) const {
  if (ring_.kind() == RingKind::Zn) return std::to_string(primes_[i]);
  return prime_ideals_[i].to_string();
}

Profile classify(const Factorization& fact, int x) {
  const FiniteRing& r = fact.ring();
  const int cnt = fact.count();
  Profile out;
  out.f.assign(cnt, 0);
  if (r.kind() == RingKind::Zn) {
    long long n = r.modulus();
    long long g = x == 0 ? n : std::gcd((long long)x, n);
    if (n > 1)
      for (int i = 0; i < cnt; ++i) out.f[i] = valuation(g, fact.rational_prime(i));
  } else {
    auto [a, b] = r.coords(x);
    const QuadLattice& defining = r.defining_ideal();
    QuadLattice lift = hnf_from_generators(
        r.d(), {{a, b}, {defining.m(), 0}, {defining.c(), defining.f()}});
    for (int i = 0; i < cnt; ++i) {
      int k = 0;
      while (k < fact.exponent(i) && fact.prime_power(i, k + 1).contains(lift)) ++k;
      out.f[i] = k;
    }
  }
  int dmin = -1;
  for (int i = 0; i < cnt; ++i) {
    if (out.f[i] > 0) out.support |= 1u << i;
    if (out.f[i] > 0 && out.f[i] != fact.exponent(i) && (dmin < 0 || out.f[i] < dmin))
      dmin = out.f[i];
  }
  out.in_base = dmin < 0;
  out.depth = out.in_base ? 0 : dmin;
  return out;
}

Component component(const Factorization& fact, unsigned subset) {
  const FiniteRing& r = fact.ring();
  const int cnt = fact.count();
  if (cnt > 30 || subset >= (1u << cnt))
    fail(Errc::InvalidParameter, "subset mask out of range");

  int xe = r.one();
  int emax = 0;
  unsigned long long profile_count = 1;
  for (int i = 0; i < cnt; ++i) {
    if (!(subset & (1u << i))) continue;
    xe = r.mul(xe, r.pow(fact.generator(i), fact.exponent(i)));
    emax = std::max(emax, fact.exponent(i));
    profile_count *= (unsigned long long)fact.exponent(i);
    if (profile_count > 1000000)
      fail(Errc::ResourceLimit, "too many exponent profiles");
  }

  Component out;
  out.idempotent = principal_ideal(r, xe);
  out.base = unit_orbit(r, xe, fact.unit_elements());
  const int height = (subset == 0 || emax <= 1) ? 0 : emax - 1;
  out.layers.assign(height, {});

  if (subset != 0) {
    std::vector<int> idx;
    for (int i = 0; i < cnt; ++i)
      if (subset & (1u << i)) idx.push_back(i);
    std::vector<int> f(idx.size(), 1);
    while (true) {
      int depth = -1;
      for (size_t j = 0; j < idx.size(); ++j)
        if (f[j] != fact.exponent(idx[j]) && (depth < 0 || f[j] < depth)) depth = f[j];
      if (depth > 0) {
        int y = r.one();
        for (size_t j = 0; j < idx.size(); ++j)
          y = r.mul(y, r.pow(fact.generator(idx[j]), f[j]));
        std::vector<int> orb = unit_orbit(r, y, fact.unit_elements());
        std::vector<int>& layer = out.layers[depth - 1];
        std::vector<int> merged;
        std::merge(layer.begin(), layer.end(), orb.begin(), orb.end(),
                   std::back_inserter(merged));
        layer = std::move(merged);
      }
      size_t j = 0;
      while (j < idx.size() && f[j] == fact.exponent(idx[j])) f[j++] = 1;
      if (j == idx.size()) break;
      ++f[j];
    }
  }

  out.elems = out.base;
  for (const std::vector<int>& layer : out.layers) {
    std::vector<int> merged;
    std::merge(out.elems.begin(), out.elems.end(), layer.begin(), layer.end(),
               std::back_inserter(merged));
    out.elems = std::move(merged);
  }
  size_t total = out.base.size();
  for (const auto& layer : out.layers) total += layer.size();
  if (total != out.elems.size())
    fail(Errc::InternalCheck, "base and layers overlap");
  return out;
}

Decomposition decompose(const Factorization& fact) {
  const FiniteRing& r = fact.ring();
  const int n = r.order();
  const int cnt = fact.count();
  if (cnt > 10) fail(Errc::ResourceLimit, "too many primes for the subset lattice");
  const unsigned total = 1u << cnt;

  Decomposition out;
  out.source = Decomposition::Source::Recipe;
  for (unsigned mask = 0; mask < total; ++mask) {
    out.components.push_back(component(fact, mask));
    out.subsets.push_back(mask);
  }

  out.meet.assign(total, std::vector<int>(total, -1));
  for (unsigned i = 0; i < total; ++i)
    for (unsigned j = 0; j < total; ++j) out.meet[i][j] = (int)(i | j);

  for (unsigned mask = 0; mask < total; ++mask)
    for (int i = 0; i < cnt; ++i)
      if (mask & (1u << i)) out.hasse.emplace_back((int)mask, (int)(mask ^ (1u << i)));
  std::sort(out.hasse.begin(), out.hasse.end());

  out.comp_of.assign(n, -1);
  size_t covered = 0;
  for (int x = 0; x < n; ++x) {
    Profile pr = classify(fact, x);
    out.comp_of[x] = (int)pr.support;
    const Component& comp = out.components[pr.support];
    bool placed;
    if (pr.in_base)
      placed = std::binary_search(comp.base.begin(), comp.base.end(), x);
    else
      placed = pr.depth <= comp.height() &&
               std::binary_search(comp.layers[pr.depth - 1].begin(),
                                  comp.layers[pr.depth - 1].end(), x);
    if (!placed)
      fail(Errc::InternalCheck,
           "structural component disagrees with element classification");
  }
  for (const Component& comp : out.components) covered += comp.elems.size();
  if (covered != (size_t)n)
    fail(Errc::InternalCheck, "components do not partition the ring");
  return out;
}

}  // namespace strata::recipe
