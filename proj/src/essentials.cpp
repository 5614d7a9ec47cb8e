#include "fusion/essentials.hpp"

#include <algorithm>
#include <set>

#include "fusion/subgroup_ops.hpp"

namespace fusion {

namespace {

void check_embedded_preconditions(const GroupPtr& g, const SubgroupSet& s,
                                  const SubgroupSet& d) {
  if (d.size() <= 1) throw precondition_error("D must be nontrivial");
  auto p = d.prime_of();
  if (!p) throw precondition_error("D must be a p-group");
  if (s.size() != p_part(g->order(), *p) || !s.contains_all(d))
    throw precondition_error("S must be a Sylow p-subgroup containing D");
  if (!strongly_closed_in(g, s, d))
    throw precondition_error("D must be strongly closed in S");
}

/// flags[y] = 1 iff y is nontrivial and some conjugate of y lies in D.
std::vector<char> conjugates_into(const GroupPtr& g, const SubgroupSet& d) {
  std::vector<char> flags(g->order(), 0);
  for (Elem x : d.members()) {
    if (x == GroupTable::identity) continue;
    for (int w = 0; w < g->order(); ++w) flags[g->conj(x, Elem(w))] = 1;
  }
  return flags;
}

}  // namespace

SubgroupSet canonical_embedded_subgroup(GroupPtr g, const SubgroupSet& s,
                                        const SubgroupSet& d) {
  check_embedded_preconditions(g, s, d);
  std::vector<Elem> gens;
  for (int x = 0; x < g->order(); ++x) {
    bool meets = false;
    for (Elem u : d.members()) {
      if (u == GroupTable::identity) continue;
      if (d.contains(g->conj(u, Elem(x)))) {
        meets = true;
        break;
      }
    }
    if (meets) gens.push_back(Elem(x));
  }
  return subgroup_generated(g, gens);
}

bool is_strongly_d_embedded(GroupPtr g, const SubgroupSet& s,
                            const SubgroupSet& d, const SubgroupSet& h) {
  check_embedded_preconditions(g, s, d);
  if (h.size() == g->order()) return false;

  bool contains_conjugate = false;
  for (int x = 0; x < g->order() && !contains_conjugate; ++x) {
    bool all = true;
    for (Elem u : d.members())
      if (!h.contains(g->conj(u, Elem(x)))) {
        all = false;
        break;
      }
    contains_conjugate = all;
  }
  if (!contains_conjugate) return false;

  auto fused_into_d = conjugates_into(g, d);
  for (int w = 0; w < g->order(); ++w) {
    if (h.contains(Elem(w))) continue;
    Elem winv = g->inv(Elem(w));
    for (Elem y : h.members()) {
      if (y == GroupTable::identity || !fused_into_d[y]) continue;
      if (h.contains(g->conj(y, winv))) return false;  // y in H cap H^w
    }
  }
  return true;
}

std::vector<SubgroupSet> all_strongly_d_embedded(GroupPtr g,
                                                 const SubgroupSet& s,
                                                 const SubgroupSet& d,
                                                 const Caps& caps) {
  std::vector<SubgroupSet> out;
  for (const auto& h : all_subgroups(full_subgroup(g), caps))
    if (is_strongly_d_embedded(g, s, d, h)) out.push_back(h);
  return out;
}

bool is_centric_wrt_P(const FusionContext& ctx, const SubgroupSet& q) {
  for (const auto& r : f_conjugacy_class(ctx, q))
    if (!r.contains_all(centralizer(ctx.effective(), r))) return false;
  return true;
}

SubgroupSet h_q(const FusionContext& ctx, const SubgroupSet& q,
                const ActionGroup& autf) {
  if (q == ctx.effective())
    throw precondition_error("H_Q is defined for proper subgroups");
  auto ex = extract_group(q);
  std::vector<Elem> gens;
  for (const auto& phi : hom_set(ctx, q, q)) {
    if (n_phi(ctx, phi).size() <= q.size()) continue;
    std::vector<Elem> v(std::size_t(ex.table->order()));
    for (int i = 0; i < ex.table->order(); ++i)
      v[std::size_t(i)] = Elem(
          ex.from_parent[phi.morphism.apply(ex.to_parent[std::size_t(i)])]);
    auto it = std::find(autf.actions.begin(), autf.actions.end(), v);
    if (it == autf.actions.end())
      throw precondition_error("autf is not aut_f(ctx, q)");
    gens.push_back(Elem(it - autf.actions.begin()));
  }
  return subgroup_generated(autf.carrier, gens);
}

bool is_essential_def3(const FusionContext& ctx, const SubgroupSet& q) {
  if (q == ctx.effective())
    throw precondition_error("essentials are proper subgroups");
  if (!is_reproductive(ctx, q)) return false;
  auto autf = aut_f(ctx, q);
  return h_q(ctx, q, autf).size() < autf.carrier->order();
}

bool is_essential_intro(const FusionContext& ctx, const SubgroupSet& q) {
  if (q == ctx.effective())
    throw precondition_error("essentials are proper subgroups");
  if (!is_centric_wrt_P(ctx, q)) return false;
  if (!is_fully_normalized(ctx, q)) return false;
  auto out = out_f(ctx, q);
  std::set<Elem> d_set;
  for (Elem x : out.aut_p.members())
    d_set.insert(out.quotient.projection[x]);
  std::vector<Elem> d_members(d_set.begin(), d_set.end());
  if (d_members.size() <= 1) return false;  // Out_P(Q) trivial: no D > 1
  auto d = SubgroupSet(out.quotient.table, std::move(d_members));
  auto p = *d.prime_of();
  auto s = sylow_subgroup_containing(out.quotient.table, p, d);
  auto h = canonical_embedded_subgroup(out.quotient.table, s, d);
  return h.size() < out.quotient.table->order();
}

EssentialReport essential_report(const FusionContext& ctx,
                                 const SubgroupSet& q) {
  if (q == ctx.effective())
    throw precondition_error("essentials are proper subgroups");
  EssentialReport rep;
  rep.subgroup = q;
  rep.fully_normalized = is_fully_normalized(ctx, q);
  rep.centric_wrt_p = is_centric_wrt_P(ctx, q);
  rep.reproductive = is_reproductive(ctx, q);

  auto autf = aut_f(ctx, q);
  auto hq = h_q(ctx, q, autf);
  rep.h_q_index = autf.carrier->order() / hq.size();
  rep.verdict_def3 = rep.reproductive && rep.h_q_index > 1;

  rep.verdict_intro = false;
  if (rep.centric_wrt_p && rep.fully_normalized) {
    auto out = out_f(ctx, q);
    std::set<Elem> d_set;
    for (Elem x : out.aut_p.members())
      d_set.insert(out.quotient.projection[x]);
    std::vector<Elem> d_members(d_set.begin(), d_set.end());
    if (d_members.size() > 1) {
      auto d = SubgroupSet(out.quotient.table, std::move(d_members));
      auto s =
          sylow_subgroup_containing(out.quotient.table, *d.prime_of(), d);
      auto h = canonical_embedded_subgroup(out.quotient.table, s, d);
      if (h.size() < out.quotient.table->order()) {
        rep.verdict_intro = true;
        rep.embedded_witness = h;
      }
    }
  }
  return rep;
}

std::vector<EssentialReport> main_essential_collection(
    const FusionContext& ctx) {
  std::set<std::vector<Elem>> reps;
  for (const auto& q : all_subgroups(ctx.effective(), ctx.caps())) {
    if (q == ctx.effective()) continue;
    reps.insert(fully_normalized_representative(ctx, q).members());
  }
  std::vector<EssentialReport> out;
  for (const auto& mem : reps) {
    auto q = unchecked_subgroup(ctx.group(), mem);
    if (!is_essential_def3(ctx, q)) continue;
    out.push_back(essential_report(ctx, q));
  }
  return out;
}

}  // namespace fusion
