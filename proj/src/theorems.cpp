#include "fusion/theorems.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <set>

#include "fusion/subgroup_ops.hpp"

namespace fusion {

namespace {

/// The canonical FMorphism (with full witness set) equal to `map`.
FMorphism locate(const FusionContext& ctx, const GroupMorphism& map) {
  for (const auto& f : hom_set(ctx, map.domain(), map.image()))
    if (f.morphism.same_map(map)) return f;
  throw theorem_violation("composed morphism is missing from the system");
}

SubgroupSet image_subgroup(const FusionContext& ctx, const SubgroupSet& q,
                           const GroupMorphism& psi) {
  std::vector<Elem> image;
  image.reserve(q.members().size());
  for (Elem x : q.members()) image.push_back(psi.apply(x));
  std::sort(image.begin(), image.end());
  return unchecked_subgroup(ctx.group(), std::move(image));
}

struct Factorizer {
  const FusionContext& ctx;
  const SubgroupSet& p;  // effective group
  std::vector<std::pair<SubgroupSet, FMorphism>> steps;
  std::map<std::vector<Elem>, bool> essential_memo;
  int emitted = 0;

  explicit Factorizer(const FusionContext& c) : ctx(c), p(c.effective()) {}

  bool rep_is_essential(const SubgroupSet& r) {
    auto it = essential_memo.find(r.members());
    if (it == essential_memo.end())
      it = essential_memo.emplace(r.members(), is_essential_def3(ctx, r)).first;
    return it->second;
  }

  void emit(const SubgroupSet& s, const FMorphism& psi) {
    if (++emitted > 10000) throw theorem_violation("factorization runaway");
    steps.emplace_back(s, psi);
  }

  void decompose(const FMorphism& phi) {
    const auto& q = phi.domain();
    if (q == p) {
      emit(p, phi);
      return;
    }
    auto r = phi.image();
    auto rep = fully_normalized_representative(ctx, r);
    if (r == rep) {
      if (q == r) {
        residual(phi);
        return;
      }
      // reproductivity of the fully normalized rep: some twist of phi has
      // room to grow, and receptivity extends it there
      for (const auto& tw : hom_set(ctx, rep, rep)) {
        auto varphi = locate(ctx, phi.morphism.then(tw.morphism));
        auto n = n_phi(ctx, varphi);
        if (n.size() <= q.size()) continue;
        auto ext = extend_morphism(ctx, varphi, n);
        if (!ext) throw theorem_violation("receptive extension missing");
        decompose(*ext);
        residual(locate(ctx, tw.morphism.inverse()));
        return;
      }
      throw theorem_violation("reproductivity produced no growing twist");
    }
    // route through the representative: phi = (phi f) f^-1
    auto f = hom_set(ctx, r, rep).front();
    decompose(locate(ctx, phi.morphism.then(f.morphism)));
    Factorizer sub(ctx);
    sub.essential_memo = essential_memo;
    sub.decompose(f);
    essential_memo = std::move(sub.essential_memo);
    for (auto it = sub.steps.rbegin(); it != sub.steps.rend(); ++it)
      emit(it->first, locate(ctx, it->second.morphism.inverse()));
  }

  /// alpha in Aut(rep) for a proper fully normalized representative.
  void residual(const FMorphism& alpha) {
    if (alpha.morphism.is_identity()) return;
    auto rep = alpha.domain();
    if (rep_is_essential(rep)) {
      emit(rep, alpha);
      return;
    }
    // non-essential: automorphisms with growing N_phi generate everything;
    // take a shortest word and push each letter to a larger domain
    std::vector<FMorphism> gens;
    for (const auto& f : hom_set(ctx, rep, rep))
      if (n_phi(ctx, f).size() > rep.size()) gens.push_back(f);
    std::map<std::vector<Elem>, std::pair<int, int>> seen;  // prev, gen
    std::vector<GroupMorphism> order{GroupMorphism::identity_on(rep)};
    seen.emplace(order[0].images(), std::make_pair(-1, -1));
    int found = -1;
    for (std::size_t i = 0; i < order.size() && found < 0; ++i) {
      auto cur = order[i];
      for (std::size_t j = 0; j < gens.size() && found < 0; ++j) {
        auto next = cur.then(gens[j].morphism);
        if (!seen.emplace(next.images(), std::make_pair(int(i), int(j)))
                 .second)
          continue;
        order.push_back(next);
        if (next.same_map(alpha.morphism)) found = int(order.size()) - 1;
      }
    }
    if (found < 0)
      throw theorem_violation("growing automorphisms fail to generate");
    std::vector<int> word;
    for (auto key = order[std::size_t(found)].images();;) {
      auto [prev, gen] = seen.at(key);
      if (gen < 0) break;
      word.push_back(gen);
      key = order[std::size_t(prev)].images();
    }
    std::reverse(word.begin(), word.end());
    for (int j : word) {
      const auto& f = gens[std::size_t(j)];
      auto n = n_phi(ctx, f);
      auto ext = extend_morphism(ctx, f, n);
      if (!ext) throw theorem_violation("receptive extension missing");
      if (ext->domain().size() <= rep.size())
        throw theorem_violation("factorization made no progress");
      decompose(*ext);
    }
  }
};

bool normalizes(const GroupPtr& g, Elem h, const SubgroupSet& d) {
  for (Elem x : d.members())
    if (!d.contains(g->conj(x, h))) return false;
  return true;
}

/// Shortest series of strongly closed subgroups from 1 to `target` with
/// [next, d] <= prev; the proof's central-series construction is tried
/// first.
std::optional<std::vector<SubgroupSet>> find_series(const FusionContext& ctx,
                                                    const SubgroupSet& d,
                                                    const SubgroupSet& target) {
  auto step_ok = [&](const SubgroupSet& prev, const SubgroupSet& next) {
    return next.contains_all(prev) &&
           prev.contains_all(commutator_subgroup(next, d));
  };
  if (is_strongly_closed(ctx, target)) {
    std::vector<SubgroupSet> constructed{trivial_subgroup(ctx.group())};
    for (const auto& z : upper_central_series(d)) {
      auto qi = intersect(z, target);
      if (qi.size() > constructed.back().size()) constructed.push_back(qi);
    }
    bool good = constructed.back() == target;
    for (std::size_t i = 0; good && i < constructed.size(); ++i) {
      if (!is_strongly_closed(ctx, constructed[i])) good = false;
      if (good && i + 1 < constructed.size() &&
          !step_ok(constructed[i], constructed[i + 1]))
        good = false;
    }
    if (good) return constructed;

    std::vector<SubgroupSet> nodes;
    for (const auto& h : all_subgroups(target, ctx.caps()))
      if (is_strongly_closed(ctx, h)) nodes.push_back(h);
    std::vector<int> prev(nodes.size(), -2);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].size() == 1) {
        prev[i] = -1;
        queue.push_back(i);
      }
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      if (nodes[cur] == target) {
        std::vector<SubgroupSet> series;
        for (int i = int(cur); i >= 0; i = prev[std::size_t(i)])
          series.push_back(nodes[std::size_t(i)]);
        std::reverse(series.begin(), series.end());
        return series;
      }
      for (std::size_t j = 0; j < nodes.size(); ++j)
        if (prev[j] == -2 && nodes[j].size() > nodes[cur].size() &&
            step_ok(nodes[cur], nodes[j])) {
          prev[j] = int(cur);
          queue.push_back(j);
        }
    }
  }
  return std::nullopt;
}

NormalityVerdict series_verdict(const FusionContext& ctx, const SubgroupSet& d,
                                const SubgroupSet& target,
                                NormalityMethod method) {
  if (!is_strongly_closed(ctx, d))
    throw precondition_error("D is not strongly closed");
  NormalityVerdict verdict;
  verdict.method = method;
  auto series = find_series(ctx, d, target);
  verdict.normal = series.has_value();
  if (series) verdict.series = std::move(*series);
  if (verdict.normal != is_normal_in_system(ctx, d))
    throw theorem_violation("series criterion disagrees with the oracle");
  return verdict;
}

}  // namespace

FactorizationChain factorize(const FusionContext& ctx, const FMorphism& psi) {
  const auto& p = ctx.effective();
  if (!p.contains_all(psi.domain()) || !p.contains_all(psi.image()))
    throw precondition_error("morphism does not live under P");
  auto canonical = locate(ctx, psi.morphism);

  Factorizer fac(ctx);
  fac.decompose(canonical);
  if (fac.steps.empty())
    fac.emit(p, locate(ctx, GroupMorphism::identity_on(p)));

  FactorizationChain chain;
  chain.source = psi.domain();
  chain.target = psi.image();
  auto q = chain.source;
  for (auto& [s, step_psi] : fac.steps) {
    if (!s.contains_all(q))
      throw theorem_violation("chain subgroup escapes its stage");
    auto next = image_subgroup(ctx, q, step_psi.morphism);
    chain.steps.push_back({s, step_psi, q, next});
    q = std::move(next);
  }
  if (q != chain.target) throw theorem_violation("chain misses the target");
  for (Elem x : chain.source.members()) {
    Elem y = x;
    for (const auto& step : chain.steps) y = step.psi.morphism.apply(y);
    if (y != psi.morphism.apply(x))
      throw theorem_violation("chain composite differs from the morphism");
  }
  return chain;
}

bool verify_chain(const FusionContext& ctx, const FMorphism& psi,
                  const FactorizationChain& chain) {
  const auto& p = ctx.effective();
  if (chain.source != psi.domain() || chain.target != psi.image()) return false;
  if (chain.steps.empty())
    return chain.source == chain.target && psi.morphism.is_identity();
  auto q = chain.source;
  for (const auto& step : chain.steps) {
    if (step.s != p &&
        !(is_fully_normalized(ctx, step.s) && is_essential_def3(ctx, step.s)))
      return false;
    if (step.psi.domain() != step.s || step.psi.image() != step.s)
      return false;
    bool in_system = false;
    for (const auto& f : hom_set(ctx, step.s, step.s))
      if (f.same_map(step.psi)) in_system = true;
    if (!in_system) return false;
    if (step.q_prev != q || !step.s.contains_all(q)) return false;
    if (image_subgroup(ctx, q, step.psi.morphism) != step.q_next) return false;
    q = step.q_next;
  }
  if (q != chain.target) return false;
  for (Elem x : chain.source.members()) {
    Elem y = x;
    for (const auto& step : chain.steps) y = step.psi.morphism.apply(y);
    if (y != psi.morphism.apply(x)) return false;
  }
  return true;
}

bool is_normal_in_system(const FusionContext& ctx, const SubgroupSet& d) {
  const auto& g = ctx.group();
  std::vector<char> norm(std::size_t(g->order()), 0);
  for (int h = 0; h < g->order(); ++h)
    norm[std::size_t(h)] = normalizes(g, Elem(h), d);
  for (const auto& q : all_subgroups(ctx.effective(), ctx.caps()))
    for (const auto& r : f_conjugacy_class(ctx, q))
      for (const auto& phi : hom_set(ctx, q, r)) {
        bool witnessed = false;
        for (Elem w : phi.witnesses)
          if (norm[w]) {
            witnessed = true;
            break;
          }
        if (!witnessed) return false;
      }
  return true;
}

bool is_normal_definition_oracle(const FusionContext& ctx) {
  return is_normal_in_system(ctx, ctx.effective());
}

NormalityVerdict is_normal_no_essential(const FusionContext& ctx) {
  NormalityVerdict verdict;
  verdict.method = NormalityMethod::no_essential_criterion;
  auto collection = main_essential_collection(ctx);
  verdict.normal = collection.empty();
  if (!collection.empty()) verdict.essential_witness = collection[0].subgroup;
  return verdict;
}

NormalityVerdict omega_series_test(const FusionContext& ctx,
                                   const SubgroupSet& d) {
  return series_verdict(ctx, d, omega_star(d, ctx.caps()),
                        NormalityMethod::omega_series);
}

NormalityVerdict central_series_test(const FusionContext& ctx,
                                     const SubgroupSet& d) {
  return series_verdict(ctx, d, d, NormalityMethod::central_series);
}

FrobeniusReport frobenius_test(GroupPtr g, int p, const SubgroupSet& d) {
  auto s = d.size() > 1 ? sylow_subgroup_containing(g, p, d)
                        : sylow_subgroup(g, p);
  if (!strongly_closed_in(g, s, d))
    throw precondition_error("D is not strongly closed in a Sylow subgroup");
  FrobeniusReport report;
  report.p_nilpotent = is_p_nilpotent(g, p);
  report.all_local_p_nilpotent = true;
  for (const auto& u : all_subgroups(d)) {
    if (!u.contains_all(centralizer(d, u))) continue;
    auto n = normalizer(full_subgroup(g), u);
    if (!is_p_nilpotent(extract_group(n).table, p)) {
      report.all_local_p_nilpotent = false;
      report.witness = u;
      break;
    }
  }
  return report;
}

ResistanceReport resistance_suite(const std::vector<ResistanceCase>& cases) {
  auto run_case = [](const ResistanceCase& rc) {
    ResistanceEntry entry;
    entry.label = rc.label;
    try {
      auto ctx = FusionContext::restricted(rc.g, rc.p, rc.s, rc.pgrp);
      entry.classification =
          catalog::theoremB_family_of(extract_group(rc.pgrp).table);
      entry.asserted = entry.classification.strongly_resistant_predicted();
      bool oracle = is_normal_definition_oracle(ctx);
      bool no_ess = is_normal_no_essential(ctx).normal;
      bool omega = omega_series_test(ctx, rc.pgrp).normal;
      bool central = central_series_test(ctx, rc.pgrp).normal;
      entry.normal = oracle;
      entry.methods_agree =
          oracle == no_ess && oracle == omega && oracle == central;
      entry.ok = entry.methods_agree && (!entry.asserted || entry.normal);
    } catch (const std::exception& e) {
      entry.error = e.what();
      entry.ok = false;
    }
    return entry;
  };
  std::vector<std::future<ResistanceEntry>> futures;
  futures.reserve(cases.size());
  for (const auto& rc : cases)
    futures.push_back(std::async(std::launch::async, run_case, std::cref(rc)));
  ResistanceReport report;
  for (auto& fut : futures) {
    report.entries.push_back(fut.get());
    report.all_ok = report.all_ok && report.entries.back().ok;
  }
  return report;
}

PowerCongruence power_congruence_check(GroupPtr p3, const GroupMorphism& alpha,
                                       const SubgroupSet& u,
                                       const SubgroupSet& m) {
  auto prime = full_subgroup(p3).prime_of();
  if (!prime || p3->order() != *prime * *prime * *prime ||
      full_subgroup(p3).is_abelian())
    throw precondition_error("expected a nonabelian group of order p^3");
  int p = *prime;
  if (u.size() != p || m.size() != p * p || !m.contains_all(u))
    throw precondition_error("expected a chain 1 < U < M < P");
  if (alpha.domain().size() != p3->order() || alpha.image().size() != p3->order())
    throw precondition_error("alpha is not an automorphism of P");
  auto stabilizes = [&](const SubgroupSet& h) {
    for (Elem x : h.members())
      if (!h.contains(alpha.apply(x))) return false;
    return true;
  };
  if (!stabilizes(u) || !stabilizes(m))
    throw precondition_error("alpha does not stabilize the chain");

  auto power = [&](Elem x, long e) {
    Elem y = GroupTable::identity;
    for (long i = 0; i < e; ++i) y = p3->mul(y, x);
    return y;
  };
  // residue of the power action on a prime-order section; kernel = the
  // subgroup whose cosets form the section (trivial for U itself)
  auto section_residue = [&](const SubgroupSet& big, const SubgroupSet& small) {
    std::optional<long> residue;
    for (Elem x : big.members()) {
      if (small.contains(x)) continue;
      std::optional<long> local;
      for (long e = 0; e < p; ++e)
        if (small.contains(p3->mul(alpha.apply(x), p3->inv(power(x, e))))) {
          local = e;
          break;
        }
      if (!local) throw precondition_error("not a power map on a section");
      if (residue && *residue != *local)
        throw precondition_error("not a power map on a section");
      residue = local;
    }
    return *residue;
  };
  PowerCongruence result;
  result.k = section_residue(u, trivial_subgroup(p3));
  result.m = section_residue(m, u);
  result.n = section_residue(full_subgroup(p3), m);
  result.u_is_center = u == center(full_subgroup(p3));
  long lhs = result.u_is_center ? result.k : result.m;
  long rhs = result.u_is_center ? result.n * result.m : result.n * result.k;
  result.relation_holds = (lhs - rhs) % p == 0;
  return result;
}

}  // namespace fusion
