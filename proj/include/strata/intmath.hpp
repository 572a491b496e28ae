#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace strata {

// Bezout data: g = gcd(a, b) >= 0 with g == s*a + t*b.
struct Bezout {
  long long g, s, t;
};

Bezout ext_gcd(long long a, long long b);

bool is_prime(long long n);
bool is_squarefree(long long n);

// Ascending (prime, exponent) pairs; n == 1 gives an empty list.
std::vector<std::pair<long long, int>> trial_factor(long long n);

// Largest k with p^k | n (n != 0).
int valuation(long long n, long long p);

long long mod_pow(long long base, long long exp, long long mod);

}  // namespace strata
