#pragma once

#include <utility>
#include <vector>

#include "strata/ring.hpp"

namespace strata {

/// One block of the multiplicative decomposition: all elements whose
/// greatest idempotent ideal is the given one, stratified into a base
/// (the intersection of all powers, a group) and layers above it.
/// layers[i] holds the elements of depth i + 1; all lists are sorted.
struct Component {
  Ideal idempotent;
  std::vector<int> elems;
  std::vector<int> base;
  std::vector<std::vector<int>> layers;

  int height() const { return (int)layers.size(); }
};

/// The full decomposition of a ring's multiplicative semigroup into a
/// semilattice of stratified components.
///
///   meet[i][j]     index of the component holding products of elements
///                  from components i and j
///   hasse          cover edges (lower, upper) of the idempotent order,
///                  lower contained in upper
///   subsets        recipe runs only: bit i set when prime i divides the
///                  component's idempotent ideal, aligned with components
///   comp_of        element index -> component index
///   unreached      idempotent ideals that are not the greatest idempotent
///                  of any element (empty for quotients of principal
///                  ideal domains; reported, never fatal)
struct Decomposition {
  enum class Source { Oracle, Recipe };

  Source source = Source::Oracle;
  std::vector<Component> components;
  std::vector<std::vector<int>> meet;
  std::vector<std::pair<int, int>> hasse;
  std::vector<unsigned> subsets;
  std::vector<int> comp_of;
  std::vector<Ideal> unreached;
};

/// Structural agreement after reordering components canonically; the
/// provenance tag and subset masks are ignored.
bool same_decomposition(const Decomposition& lhs, const Decomposition& rhs);

}  // namespace strata
