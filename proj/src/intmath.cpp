#include "strata/intmath.hpp"

#include "strata/errors.hpp"

namespace strata {

Bezout ext_gcd(long long a, long long b) {
  long long old_r = a, r = b;
  long long old_s = 1, s = 0;
  long long old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

bool is_squarefree(long long n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return false;
    }
  }
  return true;
}

std::vector<std::pair<long long, int>> trial_factor(long long n) {
  if (n < 1) fail(Errc::InvalidParameter, "trial_factor expects n >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      out.emplace_back(q, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(long long n, long long p) {
  if (n == 0 || p < 2) fail(Errc::InvalidParameter, "valuation expects n != 0, p >= 2");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long mod_pow(long long base, long long exp, long long mod) {
  if (mod < 1) fail(Errc::InvalidParameter, "mod_pow expects mod >= 1");
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % mod;
    base = (__int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

}  // namespace strata
