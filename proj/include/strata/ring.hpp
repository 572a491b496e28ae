#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/lattice.hpp"

namespace strata {

enum class RingKind { Zn, QuadQuotient, Quotient };

/// A finite commutative ring with identity.  Elements are dense indices
/// 0 .. order-1 with 0 always the zero element.
///
///   Zn            residues 0 .. n-1 of Z/nZ, index == residue
///   QuadQuotient  Z[sqrt(d)] / A with A a full ideal lattice; the element
///                 with coordinates (a, b), 0 <= a < m, 0 <= b < f, has
///                 index a + b*m
///   Quotient      R / I for an ideal I of another FiniteRing; cosets are
///                 indexed by their smallest representative, in order
///
/// Copies share an immutable representation and are cheap.
class FiniteRing {
 public:
  static FiniteRing integers_mod(long long n);
  static FiniteRing quad_quotient(long long d, const QuadLattice& a);

  RingKind kind() const;
  int order() const;
  int zero() const { return 0; }
  int one() const;

  int add(int x, int y) const;
  int mul(int x, int y) const;
  int neg(int x) const;
  int pow(int x, long long k) const;

  /// Zn only: the modulus n.
  long long modulus() const;
  /// QuadQuotient only.
  long long d() const;
  const QuadLattice& defining_ideal() const;
  std::pair<long long, long long> coords(int x) const;
  int element_from_coords(long long a, long long b) const;

  /// Quotient only: the ring it was built from, the representative of a
  /// coset, and the coset of a parent element.
  FiniteRing parent() const;
  int coset_rep(int x) const;
  int project(int parent_element) const;

  /// Display form: the residue for Zn, "a+b√d" for quadratic quotients,
  /// the representative's form for quotient rings.
  std::string format(int x) const;

  /// Same underlying representation (not structural isomorphism).
  bool same_ring(const FiniteRing& other) const { return rep_ == other.rep_; }

  struct Rep;

 private:
  explicit FiniteRing(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;

  friend FiniteRing quotient_by_ideal(const FiniteRing& r, const std::vector<int>& ideal);
};

/// An ideal given by its sorted element list.  generator is the smallest
/// element whose multiples fill the ideal, or -1 when no single element
/// does (principal is then false).
struct Ideal {
  std::vector<int> elems;
  bool principal = false;
  int generator = -1;

  int size() const { return (int)elems.size(); }
  bool contains(int x) const;
  bool operator==(const Ideal& other) const { return elems == other.elems; }
};

/// The principal ideal xR with its canonical generator.
Ideal principal_ideal(const FiniteRing& r, int x);

/// Element set of xR, without the generator search.
std::vector<int> principal_elems(const FiniteRing& r, int x);

/// Ann(x) = { y : xy = 0 }.
Ideal annihilator(const FiniteRing& r, int x);

std::vector<int> units(const FiniteRing& r);

bool is_ideal(const FiniteRing& r, const std::vector<int>& elems);

/// R / I.  The element list must pass is_ideal.
FiniteRing quotient_by_ideal(const FiniteRing& r, const std::vector<int>& ideal);

/// Completes a sorted element set into an Ideal by searching for the
/// canonical generator.
Ideal make_ideal(const FiniteRing& r, std::vector<int> elems);

}  // namespace strata
