#include "strata/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "strata/errors.hpp"

namespace strata::oracle {

namespace {

std::vector<int> collect(const std::vector<char>& bm) {
  std::vector<int> out;
  for (int i = 0; i < (int)bm.size(); ++i)
    if (bm[i]) out.push_back(i);
  return out;
}

// Smallest additive subgroup containing the generators.  Extends the
// running subgroup one coset chain at a time, so the cost is linear in the
// result size per effective generator.
std::vector<int> additive_closure(const FiniteRing& r, const std::vector<int>& gens) {
  const int n = r.order();
  std::vector<char> in(n, 0);
  std::vector<int> list;
  in[r.zero()] = 1;
  list.push_back(r.zero());
  for (int g : gens) {
    if (in[g]) continue;
    const size_t base_count = list.size();
    int t = g;
    while (!in[t]) {
      for (size_t i = 0; i < base_count; ++i) {
        int e = r.add(list[i], t);
        if (!in[e]) {
          in[e] = 1;
          list.push_back(e);
        }
      }
      t = r.add(t, g);
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

bool subset_of(const std::vector<int>& small, const std::vector<char>& big) {
  for (int e : small)
    if (!big[e]) return false;
  return true;
}

}  // namespace

int brute_bound() {
  static const int cached = [] {
    if (const char* env = std::getenv("STRATA_BRUTE_BOUND")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 10000;
  }();
  return cached;
}

std::vector<Ideal> all_ideals(const FiniteRing& r) {
  const int n = r.order();
  if (n > brute_bound())
    fail(Errc::ResourceLimit, "ring order exceeds the exhaustive bound");

  std::map<std::vector<int>, Ideal> found;
  for (int x = 0; x < n; ++x) {
    auto el = principal_elems(r, x);
    if (!found.count(el)) {
      Ideal id = make_ideal(r, el);
      found.emplace(id.elems, std::move(id));
    }
  }

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const Ideal*> cur;
    for (auto& kv : found) cur.push_back(&kv.second);
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Ideal s = ideal_sum(r, *cur[i], *cur[j]);
        if (!found.count(s.elems)) {
          found.emplace(s.elems, std::move(s));
          grew = true;
          goto next_round;
        }
      }
  next_round:;
  }

  std::vector<Ideal> out;
  for (auto& kv : found) {
    if (!kv.second.principal)
      fail(Errc::InternalCheck, "non-principal ideal in a principal ideal quotient");
    out.push_back(kv.second);
  }
  return out;
}

Ideal ideal_product(const FiniteRing& r, const Ideal& lhs, const Ideal& rhs) {
  const int n = r.order();
  std::vector<char> prod(n, 0);
  for (int a : lhs.elems)
    for (int b : rhs.elems) prod[r.mul(a, b)] = 1;
  return make_ideal(r, additive_closure(r, collect(prod)));
}

Ideal ideal_sum(const FiniteRing& r, const Ideal& lhs, const Ideal& rhs) {
  const int n = r.order();
  std::vector<char> bm(n, 0);
  for (int a : lhs.elems)
    for (int b : rhs.elems) bm[r.add(a, b)] = 1;
  return make_ideal(r, collect(bm));
}

std::vector<Ideal> idempotent_ideals(const FiniteRing& r,
                                     const std::vector<Ideal>& ideals) {
  std::vector<Ideal> out;
  for (const Ideal& i : ideals)
    if (ideal_product(r, i, i).elems == i.elems) out.push_back(i);
  return out;
}

Ideal max_idempotent_in(const FiniteRing& r, const Ideal& ideal,
                        const std::vector<Ideal>& idempotents) {
  const int n = r.order();
  std::vector<char> big(n, 0);
  for (int e : ideal.elems) big[e] = 1;

  std::vector<const Ideal*> contained;
  for (const Ideal& j : idempotents)
    if (subset_of(j.elems, big)) contained.push_back(&j);
  if (contained.empty())
    fail(Errc::InternalCheck, "no idempotent ideal inside the input");
  std::sort(contained.begin(), contained.end(),
            [](const Ideal* a, const Ideal* b) {
              if (a->elems.size() != b->elems.size())
                return a->elems.size() > b->elems.size();
              return a->elems < b->elems;
            });

  Ideal acc = *contained[0];
  std::vector<char> accbm(n, 0);
  for (int e : acc.elems) accbm[e] = 1;
  for (size_t i = 1; i < contained.size(); ++i) {
    if (subset_of(contained[i]->elems, accbm)) continue;
    acc = ideal_sum(r, acc, *contained[i]);
    accbm.assign(n, 0);
    for (int e : acc.elems) accbm[e] = 1;
  }

  for (const Ideal* j : contained)
    if (!subset_of(j->elems, accbm))
      fail(Errc::InternalCheck, "greatest idempotent misses a smaller one");
  if (!subset_of(acc.elems, big))
    fail(Errc::InternalCheck, "greatest idempotent escapes the input ideal");
  for (const Ideal& j : idempotents)
    if (j.elems == acc.elems) return j;
  fail(Errc::InternalCheck, "sum of idempotent ideals is not idempotent");
}

std::vector<std::vector<int>> j_classes(const FiniteRing& r) {
  const int n = r.order();
  std::map<std::vector<int>, int> key_to_class;
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    auto key = principal_elems(r, x);
    auto it = key_to_class.find(key);
    if (it == key_to_class.end()) {
      key_to_class.emplace(std::move(key), (int)classes.size());
      classes.push_back({x});
    } else {
      classes[it->second].push_back(x);
    }
  }
  return classes;
}

std::vector<int> acting_units(const FiniteRing& r, int x) {
  const int n = r.order();
  std::vector<int> out;
  for (int u = 0; u < n; ++u) {
    int w = r.mul(x, u);
    for (int v = 0; v < n; ++v)
      if (r.mul(w, v) == x) {
        out.push_back(u);
        break;
      }
  }
  return out;
}

JClassGroup j_class_group(const FiniteRing& r, int x) {
  const int n = r.order();
  JClassGroup out;
  auto px = principal_elems(r, x);
  auto px2 = principal_elems(r, r.mul(x, x));
  if (px != px2) {
    out.is_group = false;
    out.ideal_x = make_ideal(r, px);
    out.ideal_x2 = make_ideal(r, px2);
    return out;
  }
  out.is_group = true;

  for (int y : px)
    for (int t = 0; t < n; ++t)
      if (r.mul(y, t) == x) {
        out.elems.push_back(y);
        break;
      }

  std::vector<int> index_of(n, -1);
  for (size_t i = 0; i < out.elems.size(); ++i) index_of[out.elems[i]] = (int)i;

  out.identity = -1;
  for (size_t i = 0; i < out.elems.size(); ++i) {
    bool fixes = true;
    for (int y : out.elems)
      if (r.mul(out.elems[i], y) != y) {
        fixes = false;
        break;
      }
    if (fixes) {
      out.identity = (int)i;
      break;
    }
  }
  if (out.identity < 0) fail(Errc::InternalCheck, "group class has no identity");

  const size_t k = out.elems.size();
  out.table.assign(k, std::vector<int>(k, -1));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      int idx = index_of[r.mul(out.elems[i], out.elems[j])];
      if (idx < 0) fail(Errc::InternalCheck, "group class is not closed");
      out.table[i][j] = idx;
    }
  out.inverse.assign(k, -1);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j)
      if (out.table[i][j] == out.identity) {
        out.inverse[i] = (int)j;
        break;
      }
    if (out.inverse[i] < 0) fail(Errc::InternalCheck, "group class element lacks an inverse");
  }

  Ideal ann = annihilator(r, x);
  FiniteRing q = quotient_by_ideal(r, ann.elems);
  auto uq = units(q);
  std::vector<char> is_unit(q.order(), 0), hit(q.order(), 0);
  for (int u : uq) is_unit[u] = 1;
  for (int y : out.elems) {
    int cls = q.project(y);
    if (!is_unit[cls] || hit[cls])
      fail(Errc::InternalCheck, "class does not inject into the unit group of R/Ann(x)");
    hit[cls] = 1;
    out.unit_pairing.emplace_back(y, cls);
  }
  if (out.unit_pairing.size() != uq.size())
    fail(Errc::InternalCheck, "class does not cover the unit group of R/Ann(x)");
  out.quotient = std::move(q);
  return out;
}

Strata stratify(const FiniteRing& r, const std::vector<int>& subsemigroup) {
  const int n = r.order();
  std::vector<char> in_t(n, 0);
  for (int e : subsemigroup) {
    if (e < 0 || e >= n)
      fail(Errc::InvalidSubsemigroup, "element index out of range");
    in_t[e] = 1;
  }
  std::vector<int> t = collect(in_t);
  if (t.empty()) fail(Errc::InvalidSubsemigroup, "empty subsemigroup");
  for (int a : t)
    for (int b : t)
      if (!in_t[r.mul(a, b)])
        fail(Errc::InvalidSubsemigroup, "set is not closed under multiplication");

  Strata out;
  std::vector<int> cur = t;
  while (true) {
    std::vector<char> bm(n, 0);
    for (int a : cur)
      for (int b : t) bm[r.mul(a, b)] = 1;
    std::vector<int> next = collect(bm);
    if (next == cur) {
      out.base = std::move(cur);
      break;
    }
    std::vector<int> layer;
    std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(),
                        std::back_inserter(layer));
    out.layers.push_back(std::move(layer));
    cur = std::move(next);
  }
  return out;
}

Decomposition decompose(const FiniteRing& r, int max_order) {
  const int bound = max_order > 0 ? max_order : brute_bound();
  const int n = r.order();
  if (n > bound) fail(Errc::ResourceLimit, "ring order exceeds the exhaustive bound");

  Decomposition out;
  out.source = Decomposition::Source::Oracle;

  auto ideals = all_ideals(r);
  auto idems = idempotent_ideals(r, ideals);
  std::map<std::vector<int>, int> idem_index;
  for (size_t i = 0; i < idems.size(); ++i) idem_index.emplace(idems[i].elems, (int)i);

  // Greatest idempotent below the principal ideal of each element, with the
  // search memoised per distinct principal ideal.
  std::map<std::vector<int>, int> eps_of_delta;
  std::vector<int> comp_index_of_idem(idems.size(), -1);
  out.comp_of.assign(n, -1);
  std::vector<int> comp_idem;  // component -> index into idems
  std::vector<std::vector<int>> members;
  for (int x = 0; x < n; ++x) {
    auto key = principal_elems(r, x);
    int e_idx;
    auto it = eps_of_delta.find(key);
    if (it != eps_of_delta.end()) {
      e_idx = it->second;
    } else {
      Ideal probe;
      probe.elems = key;
      Ideal eps = max_idempotent_in(r, probe, idems);
      e_idx = idem_index.at(eps.elems);
      eps_of_delta.emplace(std::move(key), e_idx);
    }
    int c = comp_index_of_idem[e_idx];
    if (c < 0) {
      c = (int)members.size();
      comp_index_of_idem[e_idx] = c;
      comp_idem.push_back(e_idx);
      members.emplace_back();
    }
    out.comp_of[x] = c;
    members[c].push_back(x);
  }

  for (size_t c = 0; c < members.size(); ++c) {
    Component comp;
    comp.idempotent = idems[comp_idem[c]];
    comp.elems = members[c];
    Strata st = stratify(r, comp.elems);
    comp.base = std::move(st.base);
    comp.layers = std::move(st.layers);
    out.components.push_back(std::move(comp));
  }

  for (size_t i = 0; i < idems.size(); ++i)
    if (comp_index_of_idem[i] < 0) out.unreached.push_back(idems[i]);

  const size_t k = out.components.size();
  out.meet.assign(k, std::vector<int>(k, -1));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      Ideal prod = ideal_product(r, out.components[i].idempotent,
                                 out.components[j].idempotent);
      auto it = idem_index.find(prod.elems);
      if (it == idem_index.end() || comp_index_of_idem[it->second] < 0)
        fail(Errc::InternalCheck, "meet of reached idempotents is unreached");
      out.meet[i][j] = out.meet[j][i] = comp_index_of_idem[it->second];
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (out.comp_of[r.mul(x, y)] != out.meet[out.comp_of[x]][out.comp_of[y]])
        fail(Errc::SemilatticeViolation,
             "component of a product differs from the meet of the components");

  // Cover edges of the idempotent inclusion order.
  std::vector<std::vector<char>> below(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i) {
    std::vector<char> bm(n, 0);
    for (int e : out.components[i].idempotent.elems) bm[e] = 1;
    for (size_t j = 0; j < k; ++j)
      if (i != j && subset_of(out.components[j].idempotent.elems, bm))
        below[j][i] = 1;
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (below[i][j]) {
        bool cover = true;
        for (size_t t = 0; t < k && cover; ++t)
          if (below[i][t] && below[t][j]) cover = false;
        if (cover) out.hasse.emplace_back((int)i, (int)j);
      }

  // Canonical component order.
  std::vector<int> order(k);
  for (size_t i = 0; i < k; ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return out.components[a].idempotent.elems < out.components[b].idempotent.elems;
  });
  std::vector<int> inv(k);
  for (size_t i = 0; i < k; ++i) inv[order[i]] = (int)i;

  Decomposition sorted;
  sorted.source = out.source;
  sorted.unreached = std::move(out.unreached);
  for (size_t i = 0; i < k; ++i) sorted.components.push_back(std::move(out.components[order[i]]));
  sorted.meet.assign(k, std::vector<int>(k, -1));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      sorted.meet[i][j] = inv[out.meet[order[i]][order[j]]];
  for (auto [a, b] : out.hasse) sorted.hasse.emplace_back(inv[a], inv[b]);
  std::sort(sorted.hasse.begin(), sorted.hasse.end());
  sorted.comp_of.resize(n);
  for (int x = 0; x < n; ++x) sorted.comp_of[x] = inv[out.comp_of[x]];

  // Subset labels recovered from the order alone: the components covered by
  // the top play the role of single primes, and any component is labeled by
  // the singletons whose idempotent contains its own.
  int top = -1;
  for (size_t i = 0; i < k; ++i)
    if (sorted.components[i].idempotent.size() == n) top = (int)i;
  if (top < 0) fail(Errc::InternalCheck, "no component for the whole ring");
  std::vector<int> singles;
  for (auto [lo, up] : sorted.hasse)
    if (up == top) singles.push_back(lo);
  std::sort(singles.begin(), singles.end(), [&](int a, int b) {
    return sorted.components[a].idempotent.elems < sorted.components[b].idempotent.elems;
  });
  if (singles.size() >= 32 || k != (size_t)1 << singles.size())
    fail(Errc::InternalCheck, "idempotent order is not a Boolean lattice");
  sorted.subsets.assign(k, 0u);
  for (size_t c = 0; c < k; ++c) {
    for (size_t s = 0; s < singles.size(); ++s) {
      std::vector<char> bm(n, 0);
      for (int e : sorted.components[(size_t)singles[s]].idempotent.elems) bm[e] = 1;
      if (subset_of(sorted.components[c].idempotent.elems, bm))
        sorted.subsets[c] |= 1u << s;
    }
  }
  return sorted;
}

}  // namespace strata::oracle
