#include "strata/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

namespace {

std::vector<int> canonical_order(const Decomposition& d) {
  std::vector<int> idx(d.components.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return d.components[a].idempotent.elems < d.components[b].idempotent.elems;
  });
  return idx;
}

std::vector<std::vector<int>> sorted_elem_lists(const std::vector<Ideal>& ideals) {
  std::vector<std::vector<int>> out;
  for (const Ideal& i : ideals) out.push_back(i.elems);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool same_decomposition(const Decomposition& lhs, const Decomposition& rhs) {
  const size_t k = lhs.components.size();
  if (rhs.components.size() != k) return false;
  if (lhs.comp_of.size() != rhs.comp_of.size()) return false;

  std::vector<int> lo = canonical_order(lhs), ro = canonical_order(rhs);
  std::vector<int> linv(k), rinv(k);
  for (size_t i = 0; i < k; ++i) {
    linv[lo[i]] = (int)i;
    rinv[ro[i]] = (int)i;
  }

  for (size_t i = 0; i < k; ++i) {
    const Component& a = lhs.components[lo[i]];
    const Component& b = rhs.components[ro[i]];
    if (a.idempotent.elems != b.idempotent.elems) return false;
    if (a.elems != b.elems || a.base != b.base || a.layers != b.layers) return false;
  }

  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (linv[lhs.meet[lo[i]][lo[j]]] != rinv[rhs.meet[ro[i]][ro[j]]]) return false;

  auto canon_edges = [](const Decomposition& d, const std::vector<int>& inv) {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : d.hasse) e.emplace_back(inv[a], inv[b]);
    std::sort(e.begin(), e.end());
    return e;
  };
  if (canon_edges(lhs, linv) != canon_edges(rhs, rinv)) return false;

  for (size_t x = 0; x < lhs.comp_of.size(); ++x)
    if (linv[lhs.comp_of[x]] != rinv[rhs.comp_of[x]]) return false;

  return sorted_elem_lists(lhs.unreached) == sorted_elem_lists(rhs.unreached);
}

}  // namespace strata
