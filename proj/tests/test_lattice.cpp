#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "strata/errors.hpp"
#include "strata/intmath.hpp"
#include "strata/lattice.hpp"

using namespace strata;

TEST_CASE("ground field validation") {
  CHECK(valid_quad_field(-5));
  CHECK(valid_quad_field(-1));
  CHECK(valid_quad_field(2));
  CHECK(valid_quad_field(3));
  CHECK(valid_quad_field(-6));
  CHECK(!valid_quad_field(0));
  CHECK(!valid_quad_field(1));
  CHECK(!valid_quad_field(5));
  CHECK(!valid_quad_field(-3));
  CHECK(!valid_quad_field(4));
  CHECK(!valid_quad_field(12));
  CHECK(!valid_quad_field(-12));
}

TEST_CASE("constructor enforces HNF and closure under the root") {
  QuadLattice a(-5, 10, 5, 5);
  CHECK(a.norm() == 50);
  CHECK_THROWS_AS(QuadLattice(-5, 10, 11, 5), Error);
  CHECK_THROWS_AS(QuadLattice(-5, 10, 5, 3), Error);
  CHECK_THROWS_AS(QuadLattice(-5, 10, 3, 5), Error);
  CHECK_THROWS_AS(QuadLattice(5, 10, 5, 5), Error);

  CHECK_THROWS_AS(QuadLattice(-5, 7, 2, 1), Error);
  QuadLattice p3(-5, 3, 1, 1);
  CHECK(p3.norm() == 3);
}

TEST_CASE("membership in the order-50 defining ideal") {
  QuadLattice a(-5, 10, 5, 5);
  CHECK(a.contains(10, 0));
  CHECK(a.contains(5, 5));
  CHECK(a.contains(0, 10));
  CHECK(a.contains(-5, 5));
  CHECK(a.contains(15, 5));
  CHECK(!a.contains(5, 0));
  CHECK(!a.contains(0, 5));
  CHECK(!a.contains(1, 1));
  CHECK(!a.contains(2, 0));
}

TEST_CASE("generators reduce to the expected HNF") {
  QuadLattice a = hnf_from_generators(-5, {{10, 0}, {5, 5}});
  CHECK(a == QuadLattice(-5, 10, 5, 5));

  QuadLattice whole = hnf_from_generators(-5, {{1, 0}});
  CHECK(whole == unit_lattice(-5));
  CHECK(whole.is_unit());

  QuadLattice root = hnf_from_generators(-5, {{0, 1}});
  CHECK(root == QuadLattice(-5, 5, 0, 1));

  QuadLattice five = principal_lattice(-5, 5, 0);
  CHECK(five == QuadLattice(-5, 5, 0, 5));

  CHECK(principal_lattice(-5, 1, 1) == hnf_from_generators(-5, {{1, 1}}));
  CHECK(hnf_from_generators(-5, {{1, 1}}) == QuadLattice(-5, 6, 1, 1));

  CHECK_THROWS_AS(hnf_from_generators(-5, {{0, 0}, {0, 0}}), Error);
}

TEST_CASE("norm is the index of the sublattice") {
  std::vector<QuadLattice> samples = {
      QuadLattice(-5, 10, 5, 5), QuadLattice(-5, 5, 0, 1), QuadLattice(-5, 6, 1, 1),
      QuadLattice(-1, 2, 1, 1),  QuadLattice(2, 7, 3, 1),  QuadLattice(3, 11, 5, 1)};
  for (const QuadLattice& a : samples) {
    long long count = 0;
    for (long long x = 0; x < a.m(); ++x)
      for (long long y = 0; y < a.f(); ++y)
        if (a.contains(x, y)) ++count;
    CHECK(count == 1);
    CHECK(a.norm() == a.m() * a.f());
  }
}

TEST_CASE("ramified square recovers the rational prime") {
  QuadLattice p5(-5, 5, 0, 1);
  CHECK(lattice_power(p5, 2) == principal_lattice(-5, 5, 0));
  QuadLattice p2(-5, 2, 1, 1);
  CHECK(lattice_power(p2, 2) == principal_lattice(-5, 2, 0));
}

TEST_CASE("product and sum agree with brute containment") {
  QuadLattice x(-5, 10, 5, 5);
  QuadLattice y(-5, 5, 0, 1);
  QuadLattice prod = lattice_product(x, y);
  CHECK(prod.norm() == x.norm() * y.norm());
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b)
      if (prod.contains(a, b)) {
        CHECK(x.contains(a, b));
        CHECK(y.contains(a, b));
      }
  QuadLattice s = lattice_sum(x, y);
  CHECK(s == y);
  CHECK(lattice_sum(x, unit_lattice(-5)).is_unit());
}

TEST_CASE("star product stays above the modulus") {
  QuadLattice a(-5, 10, 5, 5);
  QuadLattice p2(-5, 2, 1, 1);
  QuadLattice p5(-5, 5, 0, 1);
  QuadLattice both = star_product(p2, p5, a);
  CHECK(both.contains(a));
  CHECK(both == lattice_sum(lattice_product(p2, p5), a));
  CHECK_THROWS_AS(star_product(QuadLattice(-5, 3, 1, 1), p5, a), Error);
}

TEST_CASE("splitting of small primes over d = -5") {
  auto two = split_prime(-5, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].kind == Splitting::Ramified);
  CHECK(two[0].ideal == QuadLattice(-5, 2, 1, 1));

  auto five = split_prime(-5, 5);
  REQUIRE(five.size() == 1);
  CHECK(five[0].kind == Splitting::Ramified);
  CHECK(five[0].ideal == QuadLattice(-5, 5, 0, 1));

  auto three = split_prime(-5, 3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].kind == Splitting::Split);
  CHECK(three[0].ideal == QuadLattice(-5, 3, 1, 1));
  CHECK(three[1].ideal == QuadLattice(-5, 3, 2, 1));

  auto eleven = split_prime(-5, 11);
  REQUIRE(eleven.size() == 1);
  CHECK(eleven[0].kind == Splitting::Inert);
  CHECK(eleven[0].ideal == QuadLattice(-5, 11, 0, 11));
}

TEST_CASE("splitting over other fields") {
  auto two = split_prime(-6, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].kind == Splitting::Ramified);
  CHECK(two[0].ideal == QuadLattice(-6, 2, 0, 1));

  auto seven = split_prime(2, 7);
  REQUIRE(seven.size() == 2);
  CHECK(seven[0].kind == Splitting::Split);
  CHECK(seven[0].ideal == QuadLattice(2, 7, 3, 1));
  CHECK(seven[1].ideal == QuadLattice(2, 7, 4, 1));

  auto five_gauss = split_prime(-1, 5);
  REQUIRE(five_gauss.size() == 2);
  CHECK(five_gauss[0].ideal == QuadLattice(-1, 5, 2, 1));
  CHECK(five_gauss[1].ideal == QuadLattice(-1, 5, 3, 1));
}

TEST_CASE("prime ideals returned by split_prime multiply back to (p)") {
  std::vector<long long> fields = {-10, -6, -5, -2, -1, 2, 3, 6, 7, 10, 11};
  std::vector<long long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (long long d : fields)
    for (long long p : primes) {
      auto above = split_prime(d, p);
      QuadLattice prod = unit_lattice(d);
      for (const auto& sp : above) {
        int mult = sp.kind == Splitting::Ramified ? 2 : 1;
        for (int i = 0; i < mult; ++i) prod = lattice_product(prod, sp.ideal);
      }
      CHECK(prod == principal_lattice(d, p, 0));
    }
}

TEST_CASE("factorisation of (3) over d = -5 lists conjugates in canonical order") {
  auto f = factor_ideal(principal_lattice(-5, 3, 0));
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == QuadLattice(-5, 3, 1, 1));
  CHECK(f[0].exponent == 1);
  CHECK(f[1].prime == QuadLattice(-5, 3, 2, 1));
  CHECK(f[1].exponent == 1);
}

TEST_CASE("factorisation of the order-50 defining ideal") {
  auto f = factor_ideal(QuadLattice(-5, 10, 5, 5));
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == QuadLattice(-5, 2, 1, 1));
  CHECK(f[0].exponent == 1);
  CHECK(f[1].prime == QuadLattice(-5, 5, 0, 1));
  CHECK(f[1].exponent == 2);
}

TEST_CASE("factorisation rejects the unit ideal") {
  CHECK_THROWS_AS(factor_ideal(unit_lattice(-5)), Error);
}

TEST_CASE("factor then multiply is the identity on generated ideals") {
  std::vector<long long> fields = {-10, -6, -5, -2, -1, 2, 3, 6};
  std::vector<long long> primes = {2, 3, 5, 7, 11, 13};
  for (long long d : fields) {
    std::vector<QuadLattice> smalls;
    for (long long p : primes)
      for (const auto& sp : split_prime(d, p)) smalls.push_back(sp.ideal);

    std::set<std::vector<long long>> seen;
    for (size_t i = 0; i < smalls.size(); ++i)
      for (size_t j = i; j < smalls.size(); ++j) {
        QuadLattice a = lattice_product(smalls[i], smalls[j]);
        if (a.norm() > 10000) continue;
        if (!seen.insert({a.m(), a.c(), a.f()}).second) continue;
        auto fac = factor_ideal(a);
        QuadLattice back = unit_lattice(d);
        long long norm_check = 1;
        for (const auto& [prime, e] : fac) {
          CHECK(e >= 1);
          back = lattice_product(back, lattice_power(prime, e));
          for (int k = 0; k < e; ++k) norm_check *= prime.norm();
        }
        CHECK(back == a);
        CHECK(norm_check == a.norm());
        for (size_t k = 1; k < fac.size(); ++k) {
          bool ordered = fac[k - 1].prime.norm() < fac[k].prime.norm() ||
                         (fac[k - 1].prime.norm() == fac[k].prime.norm() &&
                          fac[k - 1].prime.c() < fac[k].prime.c());
          CHECK(ordered);
        }
      }
  }
}

TEST_CASE("display forms") {
  CHECK(quad_term(0, 0, -5) == "0");
  CHECK(quad_term(3, 0, -5) == "3");
  CHECK(quad_term(0, 1, -5) == "√-5");
  CHECK(quad_term(5, 2, -5) == "5+2√-5");
  CHECK(quad_term(1, 1, -1) == "1+√-1");
  CHECK(QuadLattice(-5, 5, 0, 5).to_string() == "(5)");
  CHECK(QuadLattice(-5, 10, 5, 5).to_string() == "(10, 5+5√-5)");
  CHECK(QuadLattice(-5, 3, 1, 1).to_string() == "(3, 1+√-5)");
}

TEST_CASE("oversized field parameters are rejected up front") {
  long long big = 4000000000000LL;  // would stall trial division if admitted
  CHECK_THROWS_AS((void)hnf_from_generators(big, {{1, 0}}), Error);
  CHECK_THROWS_AS((void)split_prime(big, 3), Error);
  try {
    (void)QuadLattice(big, 1, 0, 1);
    FAIL("expected a resource limit error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ResourceLimit);
  }
}

TEST_CASE("norm-2 generators reduce without scaling") {
  CHECK(hnf_from_generators(-5, {{2, 0}, {1, 1}}) == QuadLattice(-5, 2, 1, 1));
}

TEST_CASE("multiplying by the unit ideal is the identity") {
  QuadLattice a(-5, 10, 5, 5);
  CHECK(lattice_product(a, unit_lattice(-5)) == a);
  CHECK(lattice_product(unit_lattice(-5), a) == a);
}

TEST_CASE("the order-50 ideal is the product of its prime factors") {
  QuadLattice p2(-5, 2, 1, 1);
  QuadLattice p5(-5, 5, 0, 1);
  CHECK(lattice_product(p2, lattice_power(p5, 2)) == QuadLattice(-5, 10, 5, 5));
}

TEST_CASE("a prime ideal factors as itself") {
  QuadLattice p2(-5, 2, 1, 1);
  auto fac = factor_ideal(p2);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].prime == p2);
  CHECK(fac[0].exponent == 1);
}

namespace {
// All ideals containing (10, 5+5*sqrt(-5)): products P2^a * P5^b, a <= 1, b <= 2.
std::vector<QuadLattice> ideals_above_order_fifty() {
  QuadLattice p2(-5, 2, 1, 1);
  QuadLattice p5(-5, 5, 0, 1);
  std::vector<QuadLattice> out;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 2; ++b)
      out.push_back(lattice_product(lattice_power(p2, a), lattice_power(p5, b)));
  return out;
}
}  // namespace

TEST_CASE("star product is associative with identity on the divisor lattice") {
  QuadLattice a(-5, 10, 5, 5);
  std::vector<QuadLattice> divs = ideals_above_order_fifty();
  REQUIRE(divs.size() == 6);
  for (const QuadLattice& x : divs) {
    CHECK(star_product(x, unit_lattice(-5), a) == x);
    for (const QuadLattice& y : divs)
      for (const QuadLattice& z : divs)
        CHECK(star_product(star_product(x, y, a), z, a) ==
              star_product(x, star_product(y, z, a), a));
  }
  QuadLattice p5(-5, 5, 0, 1);
  QuadLattice sq = star_product(p5, p5, a);
  CHECK(sq == principal_lattice(-5, 5, 0));
  CHECK(sq.norm() == 25);
}

TEST_CASE("containment is equivalent to divisibility") {
  std::vector<QuadLattice> basket = ideals_above_order_fifty();
  for (long long p : {3LL, 7LL})
    for (const auto& sp : split_prime(-5, p)) basket.push_back(sp.ideal);

  for (const QuadLattice& x : basket) {
    for (const QuadLattice& y : basket) {
      // Factors contain their products, so a witness H forces containment.
      CHECK(y.contains(lattice_product(y, x)));
      if (!y.contains(x)) continue;
      // Conversely, containment yields a quotient witness via the exponents.
      QuadLattice h = unit_lattice(-5);
      auto fx = x.is_unit() ? std::vector<IdealFactor>{} : factor_ideal(x);
      auto fy = y.is_unit() ? std::vector<IdealFactor>{} : factor_ideal(y);
      for (const auto& [prime, e] : fx) {
        int under = 0;
        for (const auto& [q, eq] : fy)
          if (q == prime) under = eq;
        REQUIRE(e >= under);
        h = lattice_product(h, lattice_power(prime, e - under));
      }
      CHECK(lattice_product(y, h) == x);
    }
  }
}
