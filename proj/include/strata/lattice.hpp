#pragma once

#include <string>
#include <utility>
#include <vector>

namespace strata {

/// An ideal of Z[sqrt(d)] stored as a full-rank sublattice in Hermite normal
/// form.  The basis rows are (m, 0) and (c, f) with f | m, f | c and
/// 0 <= c < m; the pair (a, b) denotes the element a + b*sqrt(d).  The
/// constructor rejects bases that are not closed under multiplication by
/// sqrt(d), so every QuadLattice is an ideal, never just a lattice.
///
/// Only squarefree d not congruent to 1 mod 4 (and distinct from 0, 1) are
/// accepted: for those Z[sqrt(d)] is the maximal order, which the prime
/// splitting rules below rely on.
class QuadLattice {
 public:
  QuadLattice(long long d, long long m, long long c, long long f);

  long long d() const { return d_; }
  long long m() const { return m_; }
  long long c() const { return c_; }
  long long f() const { return f_; }
  long long norm() const { return m_ * f_; }

  bool is_unit() const { return m_ == 1 && f_ == 1; }
  bool contains(long long a, long long b) const;
  bool contains(const QuadLattice& other) const;

  bool operator==(const QuadLattice& other) const = default;

  /// "(m)" for purely rational ideals, "(m, c+f√d)" otherwise.
  std::string to_string() const;

 private:
  long long d_, m_, c_, f_;
};

/// Checks the ground field: d squarefree, d != 0, 1 and d % 4 != 1.
bool valid_quad_field(long long d);

/// Display form of a + b*sqrt(d), e.g. "0", "3", "√-5", "5+2√-5".
std::string quad_term(long long a, long long b, long long d);

/// Smallest ideal containing the given elements.  The generator list is
/// augmented with sqrt(d) multiples before reduction, so plain element
/// generators are enough.  All zero generators raise zero-ideal.
QuadLattice hnf_from_generators(long long d,
                                const std::vector<std::pair<long long, long long>>& gens);

QuadLattice unit_lattice(long long d);
QuadLattice principal_lattice(long long d, long long a, long long b);

QuadLattice lattice_product(const QuadLattice& x, const QuadLattice& y);
QuadLattice lattice_sum(const QuadLattice& x, const QuadLattice& y);
QuadLattice lattice_power(const QuadLattice& x, int k);

/// Product in the quotient modulo A: X*Y + A.  Both factors must contain A.
QuadLattice star_product(const QuadLattice& x, const QuadLattice& y,
                         const QuadLattice& a);

enum class Splitting { Split, Ramified, Inert };

struct SplitPrime {
  QuadLattice ideal;
  Splitting kind;
};

/// Prime ideals of Z[sqrt(d)] above the rational prime p:
///   two conjugate ideals of norm p when d is a nonzero square mod p,
///   one ideal of norm p when p divides d or p == 2,
///   the inert ideal (p) of norm p^2 otherwise.
/// The reconstruction (product of the returned ideals, squared when
/// ramified) is checked against (p).
std::vector<SplitPrime> split_prime(long long d, long long p);

struct IdealFactor {
  QuadLattice prime;
  int exponent;
};

/// Factorisation of a proper nonzero ideal into prime ideal powers, sorted
/// by (norm, c).  The product of the factors is recomputed and compared to
/// the input; a mismatch raises factorisation-failure.
std::vector<IdealFactor> factor_ideal(const QuadLattice& a);

}  // namespace strata
