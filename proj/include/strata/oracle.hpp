#pragma once

#include <optional>
#include <vector>

#include "strata/decomposition.hpp"
#include "strata/ring.hpp"

namespace strata::oracle {

/// Largest ring order the exhaustive routines accept.  Defaults to 10000;
/// the environment variable STRATA_BRUTE_BOUND overrides it.
int brute_bound();

/// Every ideal, found by closing the principal ideals under pairwise sums.
/// Each result is checked to be principal; the rings constructible here are
/// quotients of principal ideal domains, so a non-principal ideal means a
/// broken invariant.  Sorted by element list.
std::vector<Ideal> all_ideals(const FiniteRing& r);

/// Additive closure of the pairwise element products.
Ideal ideal_product(const FiniteRing& r, const Ideal& lhs, const Ideal& rhs);

/// { a + b }, which is already an ideal.
Ideal ideal_sum(const FiniteRing& r, const Ideal& lhs, const Ideal& rhs);

/// The ideals with I*I == I.  Closed under sums and products.
std::vector<Ideal> idempotent_ideals(const FiniteRing& r,
                                     const std::vector<Ideal>& ideals);

/// Greatest idempotent ideal contained in I: the sum of all idempotent
/// members of E below I.  The result is itself a member of E.
Ideal max_idempotent_in(const FiniteRing& r, const Ideal& ideal,
                        const std::vector<Ideal>& idempotents);

/// Partition of the ring by equality of principal ideals (the Green
/// classes of the multiplicative semigroup).  Classes are sorted by their
/// smallest member, members ascending.
std::vector<std::vector<int>> j_classes(const FiniteRing& r);

/// { u : some v restores xuv = x }, straight from the definition.
/// Quadratic in the ring order; meant for verification at desk scale.
std::vector<int> acting_units(const FiniteRing& r, int x);

/// The Green class of x as a group, when (x) == (x*x): multiplication
/// table, identity, inverses, and an element-by-element pairing with the
/// units of R / Ann(x) realized by the quotient projection.  Otherwise
/// is_group is false and the two distinct ideals witness the failure.
struct JClassGroup {
  bool is_group = false;
  std::vector<int> elems;
  int identity = -1;
  std::vector<int> inverse;                       // indices into elems
  std::vector<std::vector<int>> table;            // indices into elems
  std::optional<FiniteRing> quotient;             // R / Ann(x)
  std::vector<std::pair<int, int>> unit_pairing;  // (class element, unit of quotient)
  std::optional<Ideal> ideal_x, ideal_x2;         // witness when not a group
};

JClassGroup j_class_group(const FiniteRing& r, int x);

/// Base and layers of a multiplicatively closed subset: the base is the
/// stable intersection of the power chain T, T^2, ..., the m-th layer is
/// T^m minus T^(m+1).
struct Strata {
  std::vector<int> base;
  std::vector<std::vector<int>> layers;
};

Strata stratify(const FiniteRing& r, const std::vector<int>& subsemigroup);

/// Exhaustive decomposition.  Groups elements by the greatest idempotent
/// ideal below their principal ideal, stratifies each fiber, and verifies
/// the semilattice law comp(xy) = meet(comp(x), comp(y)) over all pairs.
/// max_order 0 means brute_bound().
Decomposition decompose(const FiniteRing& r, int max_order = 0);

}  // namespace strata::oracle
