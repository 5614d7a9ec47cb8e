#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fusion/fusion.hpp"
#include "fusion/group.hpp"
#include "fusion/subgroup_ops.hpp"

using namespace fusion;

namespace {

FusionContext s4_ctx() {
  auto g = corpus::s4();
  return FusionContext::ambient(g, 2, sylow_subgroup(g, 2));
}

// Z(S) and a fused non-central order-2 subgroup of the normal V4.
SubgroupSet center_c2(const FusionContext& ctx) {
  return center(ctx.sylow());
}

SubgroupSet sibling_c2(const FusionContext& ctx) {
  auto v4 = o_p(ctx.group(), 2);
  auto z = center_c2(ctx);
  for (Elem x : v4.members())
    if (x != GroupTable::identity && !z.contains(x))
      return subgroup_generated(ctx.group(), {x});
  throw std::logic_error("no sibling");
}

// an order-2 subgroup of S generated by a transposition (centralizer 4)
SubgroupSet transposition_c2(const FusionContext& ctx) {
  auto g = ctx.group();
  for (Elem x : ctx.sylow().members())
    if (g->element_order(x) == 2 &&
        centralizer_of_element(full_subgroup(g), x).size() == 4)
      return subgroup_generated(g, {x});
  throw std::logic_error("no transposition");
}

}  // namespace

TEST_CASE("context construction") {
  auto g = corpus::s4();
  auto s = sylow_subgroup(g, 2);
  auto ctx = FusionContext::ambient(g, 2, s);
  CHECK(ctx.effective() == s);
  CHECK(ctx.mode() == FusionContext::Mode::ambient);

  auto v4 = o_p(g, 2);
  auto rctx = FusionContext::restricted(g, 2, s, v4);
  CHECK(rctx.effective() == v4);
  CHECK(rctx.mode() == FusionContext::Mode::restricted);

  // Z(D8) is not strongly closed, a C3 is not a 2-Sylow
  CHECK_THROWS_AS(FusionContext::restricted(g, 2, s, center(s)),
                  precondition_error);
  CHECK_THROWS_AS(FusionContext::ambient(g, 2, sylow_subgroup(g, 3)),
                  precondition_error);
}

TEST_CASE("hom sets") {
  auto ctx = s4_ctx();
  auto g = ctx.group();
  auto triv = trivial_subgroup(g);
  CHECK(hom_set(ctx, triv, triv).size() == 1);

  auto z = center_c2(ctx);
  auto r = sibling_c2(ctx);
  auto maps = hom_set(ctx, z, r);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0].image() == r);
  CHECK_FALSE(maps[0].witnesses.empty());
  for (Elem w : maps[0].witnesses)
    for (std::size_t i = 0; i < z.members().size(); ++i)
      CHECK(g->conj(z.members()[i], w) == maps[0].morphism.images()[i]);

  // different S4-classes: no morphism
  CHECK(hom_set(ctx, transposition_c2(ctx), z).empty());

  // inverse of an isomorphism is a member of the reverse hom set
  auto back = hom_set(ctx, r, z);
  REQUIRE(back.size() == 1);
  CHECK(maps[0].morphism.then(back[0].morphism).is_identity());

  CHECK_THROWS_AS(
      hom_set(ctx, full_subgroup(g), full_subgroup(g)),
      precondition_error);
}

TEST_CASE("conjugacy classes and strong closure") {
  auto ctx = s4_ctx();
  auto v4 = o_p(ctx.group(), 2);
  CHECK(f_conjugacy_class(ctx, v4).size() == 1);
  CHECK(f_conjugacy_class(ctx, ctx.sylow()).size() == 1);
  auto cls = f_conjugacy_class(ctx, center_c2(ctx));
  CHECK(cls.size() == 3);
  for (const auto& c : cls) CHECK(v4.contains_all(c));

  CHECK(is_strongly_closed(ctx, v4));
  CHECK(is_strongly_closed(ctx, ctx.sylow()));
  CHECK_FALSE(is_strongly_closed(ctx, center_c2(ctx)));
}

TEST_CASE("N_phi") {
  auto ctx = s4_ctx();
  auto z = center_c2(ctx);
  auto v4 = o_p(ctx.group(), 2);

  // identity and c_s morphisms have full N_phi
  for (const auto& phi : hom_set(ctx, z, z))
    CHECK(n_phi(ctx, phi) == normalizer(ctx.sylow(), z));

  auto phi = hom_set(ctx, z, sibling_c2(ctx))[0];
  auto np = n_phi(ctx, phi);
  CHECK(np.contains_all(v4));
  // Q C_P(Q) <= N_phi <= N_P(Q) for every morphism out of z and v4
  for (const auto& q : {z, v4})
    for (const auto& r : f_conjugacy_class(ctx, q))
      for (const auto& f : hom_set(ctx, q, r)) {
        auto n = n_phi(ctx, f);
        CHECK(n.contains_all(join(q, centralizer(ctx.sylow(), q))));
        CHECK(normalizer(ctx.sylow(), q).contains_all(n));
      }
}

TEST_CASE("extension of morphisms") {
  auto ctx = s4_ctx();
  auto z = center_c2(ctx);
  auto r = sibling_c2(ctx);
  // toward the fully normalized member: extension over all of N_phi exists
  auto phi = hom_set(ctx, r, z)[0];
  auto np = n_phi(ctx, phi);

  CHECK(extend_morphism(ctx, phi, r)->same_map(phi));

  auto ext = extend_morphism(ctx, phi, np);
  REQUIRE(ext.has_value());
  CHECK(ext->domain() == np);
  for (Elem x : r.members())
    CHECK(ext->morphism.apply(x) == phi.morphism.apply(x));

  // away from it: N_phi cannot be left, and the degenerate extension to
  // the domain itself still works
  auto away = hom_set(ctx, z, r)[0];
  CHECK(extend_morphism(ctx, away, z)->same_map(away));
  if (!n_phi(ctx, away).contains_all(ctx.sylow()))
    CHECK_THROWS_AS(extend_morphism(ctx, away, ctx.sylow()),
                    precondition_error);
}

TEST_CASE("full normalization and centralization") {
  auto ctx = s4_ctx();
  auto z = center_c2(ctx);
  auto r = sibling_c2(ctx);
  CHECK(is_fully_normalized(ctx, z));
  CHECK(is_fully_centralized(ctx, z));
  CHECK_FALSE(is_fully_normalized(ctx, r));
  CHECK(is_fully_normalized(ctx, ctx.sylow()));
  CHECK(fully_normalized_representative(ctx, r) == z);
  CHECK(fully_normalized_representative(ctx, z) == z);
}

TEST_CASE("receptivity and reproductivity") {
  auto ctx = s4_ctx();
  // every proper fully normalized subgroup of S is reproductive
  for (const auto& q : all_subgroups(ctx.sylow())) {
    if (q == ctx.effective() || !is_fully_normalized(ctx, q)) continue;
    CHECK(is_receptive(ctx, q));
    CHECK(is_reproductive(ctx, q));
  }
  CHECK(is_receptive(ctx, ctx.sylow()));
  CHECK_THROWS_AS(is_reproductive(ctx, ctx.sylow()), precondition_error);
}

TEST_CASE("automorphism towers") {
  auto ctx = s4_ctx();
  auto v4 = o_p(ctx.group(), 2);

  auto af = aut_f(ctx, v4);
  CHECK(af.carrier->order() == 6);
  CHECK(aut_p(ctx, v4).carrier->order() == 2);
  CHECK(inn(v4).carrier->order() == 1);

  auto of = out_f(ctx, v4);
  CHECK(of.inn.size() == 1);
  CHECK(of.aut_p.size() == 2);
  CHECK(of.quotient.table->order() == 6);

  // Aut_S(S) is Sylow in Aut_F(S) (saturation witness)
  auto afs = aut_f(ctx, ctx.sylow());
  auto ass = action_subgroup_in(afs, aut_s(ctx, ctx.sylow()));
  CHECK(ass.size() == p_part(afs.carrier->order(), 2));

  // SL(2,3) on Q8: the odd automorphism appears
  auto sl = corpus::sl23();
  auto sctx = FusionContext::ambient(sl, 2, sylow_subgroup(sl, 2));
  auto q8 = sctx.sylow();
  auto afq = aut_f(sctx, q8);
  CHECK(afq.carrier->order() == 12);
  CHECK(action_subgroup_in(afq, aut_s(sctx, q8)).size() == 4);
}

TEST_CASE("restricted mode") {
  auto g = corpus::s4();
  auto s = sylow_subgroup(g, 2);
  auto v4 = o_p(g, 2);
  auto ctx = FusionContext::restricted(g, 2, s, v4);
  auto z = center(s);

  auto cls = f_conjugacy_class(ctx, z);
  CHECK(cls.size() == 3);
  // all three order-2 subgroups are normal in P = V4 and fused
  for (const auto& a : cls)
    for (const auto& b : cls) {
      auto psi = normal_conjugate_transport(ctx, a, b);
      CHECK(psi.domain() == v4);
      std::vector<Elem> image;
      for (Elem x : a.members()) image.push_back(psi.morphism.apply(x));
      std::sort(image.begin(), image.end());
      CHECK(image == b.members());
    }
  CHECK_THROWS_AS(normal_conjugate_transport(ctx, v4, z), precondition_error);

  // E-aut group of P is Aut_F(V4) of order 6; Aut_P(V4) is now trivial
  CHECK(aut_f(ctx, v4).carrier->order() == 6);
  CHECK(aut_p(ctx, v4).carrier->order() == 1);
  CHECK(aut_s(ctx, v4).carrier->order() == 2);

  // Aut_P(Q) strongly closed in Aut_S(Q) w.r.t. Aut_F(Q) for receptive Q
  for (const auto& q : all_subgroups(v4)) {
    if (!is_receptive(ctx, q)) continue;
    auto af = aut_f(ctx, q);
    auto in_s = action_subgroup_in(af, aut_s(ctx, q));
    auto in_p = action_subgroup_in(af, aut_p(ctx, q));
    CHECK(strongly_closed_in(af.carrier, in_s, in_p));
  }
}
