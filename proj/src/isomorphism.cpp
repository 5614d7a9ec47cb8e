#include "fusion/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "fusion/subgroup_ops.hpp"

namespace fusion {

namespace {

struct ElementSig {
  int order;
  int centralizer;
  bool operator==(const ElementSig&) const = default;
  auto operator<=>(const ElementSig&) const = default;
};

std::vector<ElementSig> element_signatures(const GroupTable& g) {
  std::vector<ElementSig> sig(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int c = 0;
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(Elem(x), Elem(y)) == g.mul(Elem(y), Elem(x))) ++c;
    sig[x] = {g.element_order(Elem(x)), c};
  }
  return sig;
}

bool coarse_invariants_match(GroupPtr a, GroupPtr b) {
  if (a->order() != b->order()) return false;
  auto fa = full_subgroup(a), fb = full_subgroup(b);
  if (center(fa).size() != center(fb).size()) return false;
  if (derived_subgroup(fa).size() != derived_subgroup(fb).size()) return false;
  return true;
}

}  // namespace

std::vector<Elem> minimal_generating_sequence(GroupPtr g) {
  // Greedy: adjoin the element giving the largest subgroup, smallest
  // index on ties.
  std::vector<Elem> gens;
  SubgroupSet h = trivial_subgroup(g);
  while (h.size() < g->order()) {
    int best_size = -1;
    Elem best = 0;
    SubgroupSet best_h;
    for (int x = 0; x < g->order(); ++x) {
      if (h.contains(Elem(x))) continue;
      std::vector<Elem> seed(h.members());
      seed.push_back(Elem(x));
      auto cand = subgroup_generated(g, seed);
      if (cand.size() > best_size) {
        best_size = cand.size();
        best = Elem(x);
        best_h = std::move(cand);
      }
    }
    gens.push_back(best);
    h = std::move(best_h);
  }
  return gens;
}

std::vector<GroupMorphism> isomorphism_search(GroupPtr a, GroupPtr b,
                                              bool find_all) {
  std::vector<GroupMorphism> out;
  if (!coarse_invariants_match(a, b)) return out;
  const int n = a->order();

  auto sig_a = element_signatures(*a);
  auto sig_b = element_signatures(*b);
  {
    auto ha = sig_a, hb = sig_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return out;
  }

  auto gens = minimal_generating_sequence(a);
  const int k = int(gens.size());

  // BFS enumeration of a: every element reached as previous * generator,
  // so images are forced once generator images are chosen.
  std::vector<int> parent_of(n, -1), via_gen(n, -1);
  std::vector<Elem> bfs_order;
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    bfs_order.push_back(0);
    for (std::size_t i = 0; i < bfs_order.size(); ++i)
      for (int j = 0; j < k; ++j) {
        Elem nx = a->mul(bfs_order[i], gens[j]);
        if (!seen[nx]) {
          seen[nx] = 1;
          parent_of[nx] = bfs_order[i];
          via_gen[nx] = j;
          bfs_order.push_back(nx);
        }
      }
  }

  std::vector<Elem> images(k);
  std::vector<Elem> map(n);
  std::vector<char> used(n);

  auto try_images = [&]() -> bool {
    std::fill(used.begin(), used.end(), 0);
    map[0] = 0;
    used[0] = 1;
    for (std::size_t i = 1; i < bfs_order.size(); ++i) {
      Elem x = bfs_order[i];
      Elem y = b->mul(map[parent_of[x]], images[via_gen[x]]);
      if (used[y]) return false;
      map[x] = y;
      used[y] = 1;
    }
    // generator products suffice: map(x*g_j) == map(x)*map(g_j) for all x
    // implies a full homomorphism by induction over words.
    for (int x = 0; x < n; ++x)
      for (int j = 0; j < k; ++j)
        if (map[a->mul(Elem(x), gens[j])] != b->mul(map[x], images[j]))
          return false;
    return true;
  };

  // Backtracking over generator images, lexicographic candidate order.
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == k) {
      if (try_images()) {
        out.emplace_back(full_subgroup(a), b, map, false);
        return !find_all;
      }
      return false;
    }
    for (int y = 0; y < n; ++y) {
      if (sig_b[y] != sig_a[gens[pos]]) continue;
      images[pos] = Elem(y);
      if (self(self, pos + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

std::vector<GroupMorphism> isomorphism_search(const SubgroupSet& a,
                                              const SubgroupSet& b,
                                              bool find_all) {
  return isomorphism_search(extract_group(a).table, extract_group(b).table,
                            find_all);
}

bool are_isomorphic(GroupPtr a, GroupPtr b) {
  return !isomorphism_search(std::move(a), std::move(b), false).empty();
}

ActionGroup automorphism_group(GroupPtr p, const Caps& caps) {
  if (p->order() > caps.automorphism_cap)
    throw size_limit_error("automorphism cap exceeded");
  auto isos = isomorphism_search(p, p, true);
  std::vector<std::vector<Elem>> maps;
  maps.reserve(isos.size());
  for (auto& f : isos) maps.push_back(f.images());
  return action_group_from_maps(p, std::move(maps));
}

GroupPtr reference_q8() {
  static GroupPtr q8 = group_from_permutations(
      8, {{2, 3, 4, 1, 6, 7, 8, 5}, {5, 8, 7, 6, 3, 2, 1, 4}});
  return q8;
}

GroupPtr reference_gamma() {
  // Z4 : Z4, b^-1 a b = a^3 (the unique nontrivial action).
  static GroupPtr gamma = [] {
    auto enc = [](int i, int j) { return Elem(i * 4 + j); };
    std::vector<Elem> mult(16 * 16);
    const int pw3[4] = {1, 3, 1, 3};  // 3^j mod 4
    for (int i1 = 0; i1 < 4; ++i1)
      for (int j1 = 0; j1 < 4; ++j1)
        for (int i2 = 0; i2 < 4; ++i2)
          for (int j2 = 0; j2 < 4; ++j2)
            mult[std::size_t(enc(i1, j1)) * 16 + enc(i2, j2)] =
                enc((i1 + i2 * pw3[j1]) % 4, (j1 + j2) % 4);
    return GroupTable::create(16, std::move(mult));
  }();
  return gamma;
}

}  // namespace fusion
