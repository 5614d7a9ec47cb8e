#include "fusion/subgroup_ops.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "fusion/isomorphism.hpp"

namespace fusion {

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SubgroupSet centralizer(const SubgroupSet& in, const SubgroupSet& x) {
  const auto& g = *in.parent();
  std::vector<Elem> out;
  for (Elem a : in.members()) {
    bool ok = true;
    for (Elem b : x.members())
      if (g.mul(a, b) != g.mul(b, a)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return unchecked_subgroup(in.parent(), std::move(out));
}

SubgroupSet centralizer_of_element(const SubgroupSet& in, Elem x) {
  const auto& g = *in.parent();
  std::vector<Elem> out;
  for (Elem a : in.members())
    if (g.mul(a, x) == g.mul(x, a)) out.push_back(a);
  return unchecked_subgroup(in.parent(), std::move(out));
}

SubgroupSet normalizer(const SubgroupSet& in, const SubgroupSet& q) {
  const auto& g = *in.parent();
  std::vector<Elem> out;
  for (Elem a : in.members()) {
    bool ok = true;
    for (Elem b : q.members())
      if (!q.contains(g.conj(b, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return unchecked_subgroup(in.parent(), std::move(out));
}

SubgroupSet center(const SubgroupSet& g) { return centralizer(g, g); }

SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b) {
  const auto& g = *a.parent();
  std::vector<Elem> seed;
  for (Elem x : a.members())
    for (Elem y : b.members()) seed.push_back(g.commutator(x, y));
  return subgroup_generated(a.parent(), seed);
}

SubgroupSet derived_subgroup(const SubgroupSet& g) {
  return commutator_subgroup(g, g);
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  std::vector<Elem> out;
  for (Elem x : a.members())
    if (b.contains(x)) out.push_back(x);
  return unchecked_subgroup(a.parent(), std::move(out));
}

SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b) {
  std::vector<Elem> seed(a.members());
  seed.insert(seed.end(), b.members().begin(), b.members().end());
  return subgroup_generated(a.parent(), seed);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<SubgroupSet> all_subgroups(const SubgroupSet& within,
                                       const Caps& caps) {
  if (within.size() > caps.lattice_cap)
    throw size_limit_error("subgroup lattice cap exceeded");
  // Cyclic-extension enumeration: grow by adjoining one cyclic generator,
  // deduplicate by member set.
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<SubgroupSet> found;
  std::deque<int> todo;
  auto push = [&](SubgroupSet s) {
    if (seen.insert(s.members()).second) {
      found.push_back(std::move(s));
      todo.push_back(int(found.size()) - 1);
    }
  };
  push(trivial_subgroup(within.parent()));
  while (!todo.empty()) {
    int idx = todo.front();
    todo.pop_front();
    for (Elem x : within.members()) {
      if (found[idx].contains(x)) continue;
      std::vector<Elem> seed(found[idx].members());
      seed.push_back(x);
      push(subgroup_generated_in(within, seed));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.members() < b.members();
            });
  return found;
}

std::vector<SubgroupSet> all_subgroups(GroupPtr parent, const Caps& caps) {
  return all_subgroups(full_subgroup(std::move(parent)), caps);
}

std::vector<SubgroupSet> maximal_subgroups(const SubgroupSet& g) {
  auto subs = all_subgroups(g);
  // drop g itself, keep subgroups maximal among the rest
  std::vector<SubgroupSet> proper;
  for (auto& s : subs)
    if (s.size() < g.size()) proper.push_back(s);
  std::vector<SubgroupSet> out;
  for (const auto& s : proper) {
    bool maximal = true;
    for (const auto& t : proper)
      if (t.size() > s.size() && t.contains_all(s)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<SubgroupSet> cyclic_subgroups(const SubgroupSet& g) {
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<SubgroupSet> out;
  for (Elem x : g.members()) {
    if (x == GroupTable::identity) continue;
    auto c = subgroup_generated_in(g, {x});
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.members() < b.members();
            });
  return out;
}

SubgroupSet frattini_subgroup(const SubgroupSet& g) {
  if (g.size() == 1) return trivial_subgroup(g.parent());
  auto maxes = maximal_subgroups(g);
  SubgroupSet acc = g;
  for (const auto& m : maxes) acc = intersect(acc, m);
  return acc;
}

SubgroupSet sylow_subgroup_containing(GroupPtr parent, int p,
                                      const SubgroupSet& seed) {
  if (!is_prime(p)) throw domain_error("p must be prime");
  const int target = p_part(parent->order(), p);
  SubgroupSet h = seed;
  if (h.size() > 1) {
    auto q = h.prime_of();
    if (!q || *q != p) throw precondition_error("seed is not a p-subgroup");
  }
  while (h.size() < target) {
    auto n = normalizer(full_subgroup(parent), h);
    bool grown = false;
    for (Elem x : n.members()) {
      if (h.contains(x)) continue;
      if (p_part(parent->element_order(x), p) != parent->element_order(x))
        continue;  // not a p-element
      h = join(h, unchecked_subgroup(parent, {GroupTable::identity, x}));
      grown = true;
      break;
    }
    if (!grown)
      throw theorem_violation("Sylow growth stalled below the p-part");
  }
  return h;
}

SubgroupSet sylow_subgroup(GroupPtr parent, int p) {
  return sylow_subgroup_containing(parent, p, trivial_subgroup(parent));
}

SubgroupSet core_of(GroupPtr g, const SubgroupSet& d) {
  SubgroupSet acc = d;
  for (int x = 0; x < g->order(); ++x) {
    std::vector<Elem> conj;
    conj.reserve(d.members().size());
    for (Elem y : d.members()) conj.push_back(g->conj(y, Elem(x)));
    acc = intersect(acc, unchecked_subgroup(g, std::move(conj)));
    if (acc.size() == 1) break;
  }
  return acc;
}

SubgroupSet o_p(GroupPtr g, int p, const Caps& caps) {
  auto subs = all_subgroups(g, caps);
  auto full = full_subgroup(g);
  std::vector<Elem> seed{GroupTable::identity};
  for (const auto& s : subs) {
    auto q = s.prime_of();
    if (s.size() > 1 && q && *q == p && s.is_normal_in(full))
      seed.insert(seed.end(), s.members().begin(), s.members().end());
  }
  return subgroup_generated(g, seed);
}

std::vector<SubgroupSet> upper_central_series(const SubgroupSet& g) {
  std::vector<SubgroupSet> series{trivial_subgroup(g.parent())};
  for (;;) {
    const SubgroupSet& z = series.back();
    // next term: elements whose commutators with all of g land in z
    std::vector<Elem> next;
    for (Elem x : g.members()) {
      bool ok = true;
      for (Elem y : g.members())
        if (!z.contains(g.parent()->commutator(x, y))) {
          ok = false;
          break;
        }
      if (ok) next.push_back(x);
    }
    SubgroupSet zn = unchecked_subgroup(g.parent(), std::move(next));
    if (zn.size() == z.size()) break;
    series.push_back(std::move(zn));
  }
  return series;
}

SubgroupSet omega_i(const SubgroupSet& p_group, int i) {
  auto p = p_group.prime_of();
  if (p_group.size() > 1 && !p)
    throw domain_error("omega_i needs a group of prime-power order");
  if (p_group.size() == 1) return p_group;
  long bound = 1;
  for (int k = 0; k < i; ++k) bound *= *p;
  std::vector<Elem> seed;
  for (Elem x : p_group.members())
    if (p_group.parent()->power(x, bound) == GroupTable::identity)
      seed.push_back(x);
  return subgroup_generated_in(p_group, seed);
}

bool is_odd_type(const SubgroupSet& p_group, const Caps& caps) {
  auto p = p_group.prime_of();
  if (p_group.size() > 1 && !p) throw domain_error("not a p-group");
  if (!p || *p != 2) return true;
  GroupPtr q8 = reference_q8();
  GroupPtr gamma = reference_gamma();
  for (const auto& s : all_subgroups(p_group, caps)) {
    if (s.size() == 8 &&
        !isomorphism_search(extract_group(s).table, q8, false).empty())
      return false;
    if (s.size() == 16 &&
        !isomorphism_search(extract_group(s).table, gamma, false).empty())
      return false;
  }
  return true;
}

SubgroupSet omega_star(const SubgroupSet& p_group, const Caps& caps) {
  return is_odd_type(p_group, caps) ? omega_i(p_group, 1)
                                    : omega_i(p_group, 2);
}

bool is_p_nilpotent(GroupPtr g, int p) {
  // A normal p-complement, when it exists, is exactly the set of
  // p'-elements; test that set for closure and the right size.
  const int target = g->order() / p_part(g->order(), p);
  std::vector<Elem> pprime;
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(Elem(x)) % p != 0) pprime.push_back(Elem(x));
  if (int(pprime.size()) != target) return false;
  std::vector<char> in(g->order(), 0);
  for (Elem x : pprime) in[x] = 1;
  for (Elem x : pprime)
    for (Elem y : pprime)
      if (!in[g->mul(x, y)]) return false;
  return true;
}

bool is_p_nilpotent_lattice_oracle(GroupPtr g, int p, const Caps& caps) {
  const int target = g->order() / p_part(g->order(), p);
  auto full = full_subgroup(g);
  for (const auto& s : all_subgroups(g, caps))
    if (s.size() == target && s.size() % p != 0 && s.is_normal_in(full))
      return true;
  return target == 1;
}

bool is_p_closed(GroupPtr g, int p) {
  auto s = sylow_subgroup(g, p);
  return s.is_normal_in(full_subgroup(g));
}

int count_nontrivial_cyclic_subgroups(GroupPtr p_group) {
  auto full = full_subgroup(p_group);
  if (p_group->order() > 1 && !full.prime_of())
    throw domain_error("count requires a p-group");
  return int(cyclic_subgroups(full).size());
}

bool strongly_closed_in(GroupPtr g, const SubgroupSet& s, const SubgroupSet& d) {
  for (Elem x : d.members())
    for (int a = 0; a < g->order(); ++a) {
      Elem y = g->conj(x, Elem(a));
      if (s.contains(y) && !d.contains(y)) return false;
    }
  return true;
}

bool subgroup_is_action_invariant(const ActionGroup& a, const SubgroupSet& q) {
  for (const auto& act : a.actions)
    for (Elem x : q.members())
      if (!q.contains(act[x])) return false;
  return true;
}

std::vector<SubgroupSet> invariant_cyclic_outside(const ActionGroup& a,
                                                  const SubgroupSet& h) {
  if (h.parent() != a.acts_on)
    throw precondition_error("h must live in the acted-on group");
  if (!subgroup_is_action_invariant(a, h))
    throw precondition_error("h is not invariant under the action");
  std::vector<SubgroupSet> out;
  for (auto& c : cyclic_subgroups(full_subgroup(a.acts_on))) {
    if (h.contains_all(c)) continue;
    if (subgroup_is_action_invariant(a, c)) out.push_back(std::move(c));
  }
  return out;
}

SubgroupSet action_fixed_points(const ActionGroup& a) {
  std::vector<Elem> out;
  for (int x = 0; x < a.acts_on->order(); ++x) {
    bool fixed = true;
    for (const auto& act : a.actions)
      if (act[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(Elem(x));
  }
  return unchecked_subgroup(a.acts_on, std::move(out));
}

SubgroupSet action_commutator(const ActionGroup& a) {
  std::vector<Elem> seed;
  for (int x = 0; x < a.acts_on->order(); ++x)
    for (const auto& act : a.actions)
      seed.push_back(a.acts_on->mul(a.acts_on->inv(Elem(x)), act[x]));
  return subgroup_generated(a.acts_on, seed);
}

SubgroupSet action_kernel_on(const ActionGroup& a, const SubgroupSet& q) {
  std::vector<Elem> out;
  for (int i = 0; i < a.carrier->order(); ++i) {
    bool trivial = true;
    for (Elem x : q.members())
      if (a.actions[i][x] != x) {
        trivial = false;
        break;
      }
    if (trivial) out.push_back(Elem(i));
  }
  return unchecked_subgroup(a.carrier, std::move(out));
}

}  // namespace fusion
