#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strata/decomposition.hpp"
#include "strata/lattice.hpp"
#include "strata/ring.hpp"

namespace strata::recipe {

/// Ascending (prime, exponent) pairs of n >= 2 by trial division.
std::vector<std::pair<long long, int>> factor_integer(long long n);

/// Number of prime factors of |x| counted with multiplicity (|x| >= 2).
/// This is the depth of x in the non-unit component of the integers.
int integer_depth(long long x);

/// The defining modulus of a ring factored into primes, together with the
/// data the structural recipe consumes: exponents, a canonical in-ring
/// generator per prime (smallest element index generating its image), the
/// unit list, and cached prime ideal powers for quadratic quotients.
///
/// Construction validates everything: primality of each factor, minimality
/// (no repeated primes), and exact reconstruction of the modulus.
class Factorization {
 public:
  /// Factor the ring's own modulus (Z/nZ or a quadratic quotient).
  static Factorization for_ring(const FiniteRing& r);
  /// Use a caller-supplied factorisation, fully checked.
  static Factorization of_integers(const FiniteRing& r,
                                   std::vector<std::pair<long long, int>> primes);
  static Factorization of_ideals(const FiniteRing& r, std::vector<IdealFactor> primes);

  const FiniteRing& ring() const { return ring_; }
  int count() const { return (int)exps_.size(); }
  int exponent(int i) const { return exps_[i]; }
  long long rational_prime(int i) const;
  const QuadLattice& prime_ideal(int i) const;
  /// P_i^k for 1 <= k <= exponent(i) (quadratic quotients only).
  const QuadLattice& prime_power(int i, int k) const;
  int generator(int i) const { return gens_[i]; }
  const std::vector<int>& unit_elements() const { return units_; }
  /// "2" for rational primes, "(2, 1+√-5)" for prime ideals.
  std::string prime_label(int i) const;

 private:
  explicit Factorization(FiniteRing r) : ring_(std::move(r)) {}
  void finish();

  FiniteRing ring_;
  std::vector<long long> primes_;
  std::vector<QuadLattice> prime_ideals_;
  std::vector<std::vector<QuadLattice>> prime_powers_;  // [i][k] = P_i^(k+1)
  std::vector<int> exps_;
  std::vector<int> gens_;
  std::vector<int> units_;
};

/// Where one element sits: capped valuations f_i = min(v_i(x), e_i), the
/// support mask (bit i set when f_i > 0), and the derived position.  An
/// element is in the base of its component when every supported valuation
/// is full (f_i == e_i); otherwise its depth is the smallest non-full
/// supported valuation.  Elements of the base have depth 0.
struct Profile {
  std::vector<int> f;
  unsigned support = 0;
  bool in_base = false;
  int depth = 0;
};

Profile classify(const Factorization& fact, int x);

/// The component attached to a subset of the primes, built structurally:
/// the idempotent generator is the product of the supported primes raised
/// to their full exponents, the base is its unit orbit, and each layer is
/// a union of unit orbits of partial-exponent products.
Component component(const Factorization& fact, unsigned subset);

/// All 2^k components with the Boolean meet table, cross-checked element
/// by element against classify().
Decomposition decompose(const Factorization& fact);

}  // namespace strata::recipe
