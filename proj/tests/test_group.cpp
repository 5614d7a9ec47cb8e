#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fusion/group.hpp"
#include "fusion/subgroup_ops.hpp"

using namespace fusion;

namespace {

GroupPtr z4() {
  std::vector<Elem> mult(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mult[std::size_t(i) * 4 + j] = Elem((i + j) % 4);
  return GroupTable::create(4, std::move(mult));
}

}  // namespace

TEST_CASE("table validation accepts Z4 and rejects broken tables") {
  auto g = z4();
  CHECK(g->order() == 4);
  CHECK(g->element_order(1) == 4);
  CHECK(g->inv(1) == 3);
  CHECK(g->power(1, 7) == 3);
  CHECK(g->power(1, -1) == 3);

  // not a Latin square
  std::vector<Elem> bad(4, Elem(0));
  CHECK_THROWS_AS(GroupTable::create(2, std::move(bad)), validation_error);

  // Latin square with identity but no associativity: swap two entries of Z4
  std::vector<Elem> na = {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 1, 0, 3, 0, 0, 1};
  CHECK_THROWS_AS(GroupTable::create(4, std::move(na)), validation_error);
}

TEST_CASE("permutation group S3") {
  auto g = corpus::s3();
  CHECK(g->order() == 6);
  int by_order[4] = {0, 0, 0, 0};
  for (int x = 0; x < 6; ++x) ++by_order[g->element_order(Elem(x))];
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 3);
  CHECK(by_order[3] == 2);
  for (int x = 0; x < 6; ++x) {
    CHECK(g->mul(Elem(x), g->inv(Elem(x))) == GroupTable::identity);
    CHECK_FALSE(g->label(Elem(x)).empty());
  }
  // conj and commutator agree with their definitions
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      Elem xx = Elem(x), yy = Elem(y);
      CHECK(g->conj(xx, yy) == g->mul(g->mul(g->inv(yy), xx), yy));
      CHECK(g->mul(xx, g->commutator(xx, yy)) == g->conj(xx, yy));
    }
}

TEST_CASE("content hash distinguishes tables") {
  CHECK(corpus::s3()->content_hash() == corpus::s3()->content_hash());
  CHECK(corpus::s3()->content_hash() != corpus::d8()->content_hash());
}

TEST_CASE("subgroup sets") {
  auto g = corpus::s3();
  // {e, 3-cycles} is A3
  auto a3 = subgroup_generated(g, {[&] {
    for (int x = 0; x < 6; ++x)
      if (g->element_order(Elem(x)) == 3) return Elem(x);
    return Elem(0);
  }()});
  CHECK(a3.size() == 3);
  CHECK(a3.is_normal_in(full_subgroup(g)));
  CHECK(a3.is_abelian());
  CHECK(a3.prime_of() == 3);

  Elem t = 0;
  for (int x = 0; x < 6; ++x)
    if (g->element_order(Elem(x)) == 2) t = Elem(x);
  auto c2 = subgroup_generated(g, {t});
  CHECK(c2.size() == 2);
  CHECK_FALSE(c2.is_normal_in(full_subgroup(g)));
  CHECK_FALSE(full_subgroup(g).is_abelian());

  // non-closed member sets are rejected
  CHECK_THROWS_AS(SubgroupSet(g, std::vector<Elem>{0, t, a3.members()[1]}),
                  validation_error);
  CHECK(subgroup_generated_in(a3, {a3.members()[1]}).size() == 3);
  CHECK_THROWS_AS(subgroup_generated_in(c2, {a3.members()[1]}), domain_error);
}

TEST_CASE("morphisms compose, invert and restrict") {
  auto g = corpus::d8();
  auto full = full_subgroup(g);
  for (int x = 0; x < g->order(); ++x) {
    auto f = GroupMorphism::conjugation(full, Elem(x));
    CHECK(f.image() == full);
    auto roundtrip = f.then(f.inverse());
    CHECK(roundtrip.is_identity());
  }
  // right-action composition: (q^x)^y = q^(xy)
  auto fx = GroupMorphism::conjugation(full, Elem(1));
  auto fy = GroupMorphism::conjugation(full, Elem(5));
  auto fxy = GroupMorphism::conjugation(full, g->mul(Elem(1), Elem(5)));
  CHECK(fx.then(fy).same_map(fxy));

  auto z = center(full);
  CHECK(fx.restrict_to(z).domain() == z);
  CHECK(GroupMorphism::identity_on(z).is_identity());

  // image vectors that are not homomorphisms are rejected
  std::vector<Elem> bad(std::size_t(g->order()));
  for (int i = 0; i < g->order(); ++i) bad[std::size_t(i)] = Elem(i);
  std::swap(bad[1], bad[2]);
  CHECK_THROWS_AS(GroupMorphism(full, g, bad), validation_error);
}

TEST_CASE("extract and quotient") {
  auto g = corpus::s4();
  auto v4 = o_p(g, 2);
  CHECK(v4.size() == 4);

  auto ex = extract_group(v4);
  CHECK(ex.table->order() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(ex.to_parent[std::size_t(ex.table->mul(Elem(i), Elem(j)))] ==
            g->mul(ex.to_parent[std::size_t(i)], ex.to_parent[std::size_t(j)]));

  auto q = quotient_group(g, v4);
  CHECK(q.table->order() == 6);
  CHECK_FALSE(full_subgroup(q.table).is_abelian());
  for (int x = 0; x < 24; ++x)
    for (int y = 0; y < 24; ++y)
      CHECK(q.projection[std::size_t(g->mul(Elem(x), Elem(y)))] ==
            q.table->mul(q.projection[std::size_t(x)], q.projection[std::size_t(y)]));
  for (int c = 0; c < 6; ++c)
    CHECK(q.projection[std::size_t(q.section[std::size_t(c)])] == Elem(c));

  // quotient by a non-normal subgroup is rejected
  Elem t = 0;
  for (int x = 0; x < 24; ++x)
    if (g->element_order(Elem(x)) == 2 && !v4.contains(Elem(x))) t = Elem(x);
  CHECK_THROWS_AS(quotient_group(g, subgroup_generated(g, {t})),
                  precondition_error);
}

TEST_CASE("action groups from automorphism maps") {
  auto g = z4();
  std::vector<Elem> ident = {0, 1, 2, 3}, invm = {0, 3, 2, 1};
  auto a = action_group_from_maps(g, {invm, ident});
  CHECK(a.carrier->order() == 2);
  CHECK(a.action_of(0) == ident);
  CHECK(a.action_of(1) == invm);
  // identity map must be present
  CHECK_THROWS_AS(action_group_from_maps(g, {{0, 3, 2, 1}}), validation_error);
}
