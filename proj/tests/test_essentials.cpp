#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fusion/essentials.hpp"
#include "fusion/subgroup_ops.hpp"

using namespace fusion;

namespace {

FusionContext s4_ctx() {
  auto g = corpus::s4();
  return FusionContext::ambient(g, 2, sylow_subgroup(g, 2));
}

}  // namespace

TEST_CASE("canonical embedded subgroup") {
  // A4 at p = 3: distinct Sylow 3-subgroups intersect trivially, so
  // H = N_{A4}(D) = D itself, which is strongly D-embedded.
  auto a4 = corpus::a4();
  auto d3 = sylow_subgroup(a4, 3);
  auto h = canonical_embedded_subgroup(a4, d3, d3);
  CHECK(h.size() == 3);
  CHECK(is_strongly_d_embedded(a4, d3, d3, h));
  CHECK_FALSE(is_strongly_d_embedded(a4, d3, d3, full_subgroup(a4)));

  // A5 at p = 2: H = N_{A5}(V4) = A4, the classic strongly 2-embedded case
  auto a5 = corpus::a5();
  auto v4 = sylow_subgroup(a5, 2);
  auto h5 = canonical_embedded_subgroup(a5, v4, v4);
  CHECK(h5.size() == 12);
  CHECK(is_strongly_d_embedded(a5, v4, v4, h5));

  // p-closed group: D cap D^x = D > 1 always, H = G, nothing embedded
  auto sl = corpus::sl23();
  auto q8 = sylow_subgroup(sl, 2);
  CHECK(canonical_embedded_subgroup(sl, q8, q8).size() == 24);
  CHECK(all_strongly_d_embedded(sl, q8, q8).empty());

  // preconditions
  CHECK_THROWS_AS(canonical_embedded_subgroup(a4, d3, trivial_subgroup(a4)),
                  precondition_error);
  auto s4 = corpus::s4();
  auto s2 = sylow_subgroup(s4, 2);
  CHECK_THROWS_AS(canonical_embedded_subgroup(s4, s2, center(s2)),
                  precondition_error);
}

TEST_CASE("exhaustive embedded search agrees with the canonical subgroup") {
  auto a5 = corpus::a5();
  auto v4 = sylow_subgroup(a5, 2);
  auto h = canonical_embedded_subgroup(a5, v4, v4);
  auto found = all_strongly_d_embedded(a5, v4, v4);
  CHECK_FALSE(found.empty());
  for (const auto& k : found) {
    CHECK(is_strongly_d_embedded(a5, v4, v4, k));
    // Lemma (b): canonical H lies in every embedded K containing D
    if (k.contains_all(v4)) CHECK(k.contains_all(h));
  }
  CHECK(intersect(o_p(a5, 2), v4).size() == 1);
}

TEST_CASE("centricity with respect to P") {
  auto ctx = s4_ctx();
  auto v4 = o_p(ctx.group(), 2);
  CHECK(is_centric_wrt_P(ctx, ctx.sylow()));
  CHECK(is_centric_wrt_P(ctx, v4));
  CHECK_FALSE(is_centric_wrt_P(ctx, center(ctx.sylow())));
}

TEST_CASE("H_Q on the S4 context") {
  auto ctx = s4_ctx();
  auto v4 = o_p(ctx.group(), 2);
  auto autf = aut_f(ctx, v4);
  CHECK(autf.carrier->order() == 6);
  auto hq = h_q(ctx, v4, autf);
  CHECK(hq.size() == 2);  // exactly the Aut_P(V4) conjugations grow N_phi
  CHECK(hq == action_subgroup_in(autf, aut_p(ctx, v4)));

  // order-2 subgroups have trivial automorphisms: H_Q = Aut_F(Q)
  auto z = center(ctx.sylow());
  auto autz = aut_f(ctx, z);
  CHECK(h_q(ctx, z, autz).size() == autz.carrier->order());

  CHECK_THROWS_AS(h_q(ctx, ctx.sylow(), autf), precondition_error);
}

TEST_CASE("essential verdicts on S4") {
  auto ctx = s4_ctx();
  auto v4 = o_p(ctx.group(), 2);
  CHECK(is_essential_def3(ctx, v4));
  CHECK(is_essential_intro(ctx, v4));

  auto z = center(ctx.sylow());
  CHECK_FALSE(is_essential_def3(ctx, z));
  CHECK_FALSE(is_essential_intro(ctx, z));

  // the cyclic C4 inside D8: Aut_F is a 2-group, not essential
  for (const auto& q : all_subgroups(ctx.sylow()))
    if (q.size() == 4 && q != v4 && !cyclic_subgroups(q).empty() &&
        q.prime_of() == 2) {
      bool cyclic = false;
      for (Elem x : q.members())
        if (ctx.group()->element_order(x) == 4) cyclic = true;
      if (!cyclic) continue;
      CHECK_FALSE(is_essential_def3(ctx, q));
      CHECK_FALSE(is_essential_intro(ctx, q));
    }

  auto rep = essential_report(ctx, v4);
  CHECK(rep.fully_normalized);
  CHECK(rep.centric_wrt_p);
  CHECK(rep.reproductive);
  CHECK(rep.h_q_index == 3);
  CHECK(rep.verdict_def3);
  CHECK(rep.verdict_intro);
  REQUIRE(rep.embedded_witness.has_value());
  CHECK(rep.embedded_witness->size() < 6);

  CHECK_THROWS_AS(essential_report(ctx, ctx.sylow()), precondition_error);
}

TEST_CASE("equivalence of the two definitions") {
  std::vector<FusionContext> contexts;
  {
    auto g = corpus::s4();
    auto s = sylow_subgroup(g, 2);
    contexts.push_back(FusionContext::ambient(g, 2, s));
    contexts.push_back(FusionContext::restricted(g, 2, s, o_p(g, 2)));
  }
  {
    auto g = corpus::sl23();
    contexts.push_back(FusionContext::ambient(g, 2, sylow_subgroup(g, 2)));
  }
  {
    auto g = corpus::gl23();
    contexts.push_back(FusionContext::ambient(g, 2, sylow_subgroup(g, 2)));
  }
  {
    auto g = corpus::a4();
    contexts.push_back(FusionContext::ambient(g, 2, sylow_subgroup(g, 2)));
  }
  for (const auto& ctx : contexts)
    for (const auto& q : all_subgroups(ctx.effective())) {
      if (q == ctx.effective()) continue;
      auto rep = essential_report(ctx, q);
      if (rep.fully_normalized && rep.centric_wrt_p)
        CHECK(rep.verdict_def3 == rep.verdict_intro);
      // essential (def3) implies centric
      if (rep.verdict_def3) CHECK(rep.centric_wrt_p);
      if (rep.h_q_index == 1) CHECK_FALSE(rep.verdict_def3);
    }
}

TEST_CASE("main essential collections") {
  auto ctx = s4_ctx();
  auto coll = main_essential_collection(ctx);
  REQUIRE(coll.size() == 1);
  CHECK(coll[0].subgroup == o_p(ctx.group(), 2));

  auto sl = corpus::sl23();
  auto sctx = FusionContext::ambient(sl, 2, sylow_subgroup(sl, 2));
  CHECK(main_essential_collection(sctx).empty());

  auto a5 = corpus::a5();
  auto actx = FusionContext::ambient(a5, 2, sylow_subgroup(a5, 2));
  CHECK(main_essential_collection(actx).empty());

  // characterization of essentials, checked on GL(2,3) at p = 2
  auto gl = corpus::gl23();
  auto gctx = FusionContext::ambient(gl, 2, sylow_subgroup(gl, 2));
  auto gcoll = main_essential_collection(gctx);
  CHECK_FALSE(gcoll.empty());
  for (const auto& rep : gcoll) {
    const auto& q = rep.subgroup;
    CHECK(rep.fully_normalized);
    CHECK(rep.centric_wrt_p);
    auto out = out_f(gctx, q);
    // (b) Out_P(Q) cap O_p(Out_F(Q)) = 1
    std::vector<Elem> d_members;
    {
      std::set<Elem> d_set;
      for (Elem x : out.aut_p.members())
        d_set.insert(out.quotient.projection[x]);
      d_members.assign(d_set.begin(), d_set.end());
    }
    auto d = SubgroupSet(out.quotient.table, d_members);
    CHECK(intersect(d, o_p(out.quotient.table, 2)).size() == 1);
    // (c) Inn(Q) = Core of Aut_P(Q) in Aut_F(Q)
    CHECK(core_of(out.aut.carrier, out.aut_p) == out.inn);
    // key lemma: Aut_F(Q) is not p-closed
    CHECK_FALSE(is_p_closed(out.aut.carrier, 2));
  }
}
