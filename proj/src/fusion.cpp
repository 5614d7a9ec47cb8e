#include "fusion/fusion.hpp"

#include <algorithm>
#include <set>

#include "fusion/subgroup_ops.hpp"

namespace fusion {

namespace {

/// Image vector of c_w on q, parallel to q.members().
std::vector<Elem> conj_images(const GroupTable& g, const SubgroupSet& q, Elem w) {
  std::vector<Elem> out(q.members().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = g.conj(q.members()[i], w);
  return out;
}

bool conj_lands_in(const GroupTable& g, const SubgroupSet& q, Elem w,
                   const SubgroupSet& target) {
  for (Elem x : q.members())
    if (!target.contains(g.conj(x, w))) return false;
  return true;
}

std::vector<FMorphism> compute_hom_set(const FusionContext& ctx,
                                       const SubgroupSet& q,
                                       const SubgroupSet& r) {
  const auto& g = *ctx.group();
  std::map<std::vector<Elem>, std::vector<Elem>> found;  // images -> witnesses
  for (int w = 0; w < g.order(); ++w)
    if (conj_lands_in(g, q, Elem(w), r))
      found[conj_images(g, q, Elem(w))].push_back(Elem(w));
  std::vector<FMorphism> out;
  out.reserve(found.size());
  for (auto& [images, witnesses] : found)
    out.push_back({GroupMorphism(q, ctx.group(), images, false),
                   std::move(witnesses)});
  return out;
}

}  // namespace

FusionContext FusionContext::ambient(GroupPtr g, int p, SubgroupSet s,
                                     const Caps& caps) {
  if (s.parent() != g) throw precondition_error("Sylow has a different parent");
  if (s.size() != p_part(g->order(), p) || (s.size() > 1 && s.prime_of() != p))
    throw precondition_error("subgroup is not a Sylow p-subgroup");
  FusionContext ctx;
  ctx.g_ = std::move(g);
  ctx.p_ = p;
  ctx.s_ = s;
  ctx.p_sub_ = std::move(s);
  ctx.mode_ = Mode::ambient;
  ctx.caps_ = caps;
  return ctx;
}

FusionContext FusionContext::restricted(GroupPtr g, int p, SubgroupSet s,
                                        SubgroupSet p_sub, const Caps& caps) {
  FusionContext ctx = ambient(std::move(g), p, std::move(s), caps);
  if (!ctx.s_.contains_all(p_sub))
    throw precondition_error("P is not contained in S");
  for (Elem x : p_sub.members())
    for (int w = 0; w < ctx.g_->order(); ++w) {
      Elem y = ctx.g_->conj(x, Elem(w));
      if (ctx.s_.contains(y) && !p_sub.contains(y))
        throw precondition_error("P is not strongly closed in S");
    }
  ctx.p_sub_ = std::move(p_sub);
  ctx.mode_ = Mode::restricted;
  return ctx;
}

const std::vector<FMorphism>& FusionContext::cached_hom_set(
    const SubgroupSet& q, const SubgroupSet& r) const {
  if (!p_sub_.contains_all(q) || !p_sub_.contains_all(r))
    throw precondition_error("hom_set arguments must lie in the system");
  HomKey key{q.members(), r.members()};
  std::lock_guard<std::mutex> lock(hom_cache_->mutex);
  auto it = hom_cache_->entries.find(key);
  if (it == hom_cache_->entries.end())
    it = hom_cache_->entries
             .emplace(std::move(key), compute_hom_set(*this, q, r))
             .first;
  return it->second;
}

std::vector<FMorphism> hom_set(const FusionContext& ctx, const SubgroupSet& q,
                               const SubgroupSet& r) {
  return ctx.cached_hom_set(q, r);
}

std::vector<SubgroupSet> f_conjugacy_class(const FusionContext& ctx,
                                           const SubgroupSet& q) {
  const auto& g = *ctx.group();
  const auto& eff = ctx.effective();
  if (!eff.contains_all(q))
    throw precondition_error("subgroup must lie in the system");
  std::set<std::vector<Elem>> classes;
  for (int w = 0; w < g.order(); ++w) {
    if (!conj_lands_in(g, q, Elem(w), eff)) continue;
    auto mem = conj_images(g, q, Elem(w));
    std::sort(mem.begin(), mem.end());
    classes.insert(std::move(mem));
  }
  std::vector<SubgroupSet> out;
  out.reserve(classes.size());
  for (const auto& mem : classes)
    out.push_back(unchecked_subgroup(ctx.group(), mem));
  return out;
}

bool is_strongly_closed(const FusionContext& ctx, const SubgroupSet& d) {
  const auto& g = *ctx.group();
  for (Elem x : d.members())
    for (int w = 0; w < g.order(); ++w) {
      Elem y = g.conj(x, Elem(w));
      if (ctx.sylow().contains(y) && !d.contains(y)) return false;
    }
  return true;
}

SubgroupSet n_phi(const FusionContext& ctx, const FMorphism& phi) {
  const auto& g = *ctx.group();
  const auto& q = phi.domain();
  auto r = phi.image();
  auto nq = normalizer(ctx.effective(), q);
  auto nr = normalizer(ctx.effective(), r);

  std::set<std::vector<Elem>> target_auts;
  for (Elem y : nr.members()) target_auts.insert(conj_images(g, r, y));

  auto inv = phi.morphism.inverse();
  std::vector<Elem> members;
  for (Elem x : nq.members()) {
    // transported map phi^-1 c_x phi, written on r's member order
    std::vector<Elem> t(r.members().size());
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = phi.morphism.apply(g.conj(inv.apply(r.members()[i]), x));
    if (target_auts.count(t)) members.push_back(x);
  }
  return SubgroupSet(ctx.group(), std::move(members));
}

std::optional<FMorphism> extend_morphism(const FusionContext& ctx,
                                         const FMorphism& phi,
                                         const SubgroupSet& n) {
  if (!n.contains_all(phi.domain()))
    throw precondition_error("extension domain must contain the domain");
  if (!n_phi(ctx, phi).contains_all(n))
    throw precondition_error("extension domain must lie in N_phi");
  const auto& g = *ctx.group();
  for (Elem h : phi.witnesses) {
    if (!conj_lands_in(g, n, h, ctx.effective())) continue;
    auto images = conj_images(g, n, h);
    std::vector<Elem> witnesses;
    for (int w = 0; w < g.order(); ++w)
      if (conj_images(g, n, Elem(w)) == images) witnesses.push_back(Elem(w));
    return FMorphism{GroupMorphism(n, ctx.group(), std::move(images), false),
                     std::move(witnesses)};
  }
  return std::nullopt;
}

bool is_fully_normalized(const FusionContext& ctx, const SubgroupSet& q) {
  int mine = normalizer(ctx.effective(), q).size();
  for (const auto& r : f_conjugacy_class(ctx, q))
    if (normalizer(ctx.effective(), r).size() > mine) return false;
  return true;
}

bool is_fully_centralized(const FusionContext& ctx, const SubgroupSet& q) {
  int mine = centralizer(ctx.effective(), q).size();
  for (const auto& r : f_conjugacy_class(ctx, q))
    if (centralizer(ctx.effective(), r).size() > mine) return false;
  return true;
}

SubgroupSet fully_normalized_representative(const FusionContext& ctx,
                                            const SubgroupSet& q) {
  auto cls = f_conjugacy_class(ctx, q);  // sorted by member list
  const SubgroupSet* best = &cls.front();
  int best_norm = normalizer(ctx.effective(), cls.front()).size();
  for (const auto& r : cls) {
    int n = normalizer(ctx.effective(), r).size();
    if (n > best_norm) {
      best = &r;
      best_norm = n;
    }
  }
  return *best;
}

bool is_receptive(const FusionContext& ctx, const SubgroupSet& q) {
  for (const auto& r : f_conjugacy_class(ctx, q))
    for (const auto& phi : ctx.cached_hom_set(r, q)) {
      if (!phi.is_isomorphism_onto(q)) continue;
      if (!extend_morphism(ctx, phi, n_phi(ctx, phi))) return false;
    }
  return true;
}

bool is_reproductive(const FusionContext& ctx, const SubgroupSet& q) {
  if (q == ctx.effective())
    throw precondition_error("reproductive is defined for proper subgroups");
  if (!is_receptive(ctx, q)) return false;
  for (const auto& r : f_conjugacy_class(ctx, q)) {
    bool grows = false;
    for (const auto& psi : ctx.cached_hom_set(r, q)) {
      if (!psi.is_isomorphism_onto(q)) continue;
      if (n_phi(ctx, psi).size() > r.size()) {
        grows = true;
        break;
      }
    }
    if (!grows) return false;
  }
  return true;
}

namespace {

ActionGroup action_group_from_conjugators(const SubgroupSet& q,
                                          const SubgroupSet& by) {
  const auto& g = *q.parent();
  auto ex = extract_group(q);
  std::vector<std::vector<Elem>> maps;
  for (Elem y : by.members()) {
    std::vector<Elem> v(std::size_t(ex.table->order()));
    for (int i = 0; i < ex.table->order(); ++i)
      v[std::size_t(i)] =
          Elem(ex.from_parent[g.conj(ex.to_parent[std::size_t(i)], y)]);
    maps.push_back(std::move(v));
  }
  return action_group_from_maps(ex.table, std::move(maps));
}

}  // namespace

ActionGroup aut_f(const FusionContext& ctx, const SubgroupSet& q) {
  auto ex = extract_group(q);
  std::vector<std::vector<Elem>> maps;
  for (const auto& f : ctx.cached_hom_set(q, q)) {
    std::vector<Elem> v(std::size_t(ex.table->order()));
    for (int i = 0; i < ex.table->order(); ++i)
      v[std::size_t(i)] =
          Elem(ex.from_parent[f.morphism.apply(ex.to_parent[std::size_t(i)])]);
    maps.push_back(std::move(v));
  }
  return action_group_from_maps(ex.table, std::move(maps));
}

ActionGroup aut_p(const FusionContext& ctx, const SubgroupSet& q) {
  return action_group_from_conjugators(q, normalizer(ctx.effective(), q));
}

ActionGroup aut_s(const FusionContext& ctx, const SubgroupSet& q) {
  return action_group_from_conjugators(q, normalizer(ctx.sylow(), q));
}

ActionGroup inn(const SubgroupSet& q) {
  return action_group_from_conjugators(q, q);
}

SubgroupSet action_subgroup_in(const ActionGroup& big, const ActionGroup& sub) {
  std::vector<Elem> members;
  for (const auto& v : sub.actions) {
    auto it = std::find(big.actions.begin(), big.actions.end(), v);
    if (it == big.actions.end())
      throw precondition_error("action group is not contained in the other");
    members.push_back(Elem(it - big.actions.begin()));
  }
  return SubgroupSet(big.carrier, std::move(members));
}

OutF out_f(const FusionContext& ctx, const SubgroupSet& q) {
  OutF out;
  out.aut = aut_f(ctx, q);
  out.inn = action_subgroup_in(out.aut, inn(q));
  out.aut_p = action_subgroup_in(out.aut, aut_p(ctx, q));
  out.quotient = quotient_group(out.aut.carrier, out.inn);
  return out;
}

FMorphism normal_conjugate_transport(const FusionContext& ctx,
                                     const SubgroupSet& q,
                                     const SubgroupSet& r) {
  const auto& eff = ctx.effective();
  if (!q.is_normal_in(eff) || !r.is_normal_in(eff))
    throw precondition_error("transport needs normal subgroups");
  {
    auto cls = f_conjugacy_class(ctx, q);
    if (std::find(cls.begin(), cls.end(), r) == cls.end())
      throw precondition_error("subgroups are not fused");
  }
  for (const auto& psi : ctx.cached_hom_set(eff, eff)) {
    std::vector<Elem> image;
    for (Elem x : q.members()) image.push_back(psi.morphism.apply(x));
    std::sort(image.begin(), image.end());
    if (image == r.members()) return psi;
  }
  throw theorem_violation(
      "fused normal subgroups admit no transporting automorphism");
}

}  // namespace fusion
