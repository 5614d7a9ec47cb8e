#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fusion/group.hpp"
#include "fusion/isomorphism.hpp"
#include "fusion/subgroup_ops.hpp"

using namespace fusion;

TEST_CASE("isomorphism decisions on order 8") {
  CHECK_FALSE(are_isomorphic(corpus::d8(), corpus::q8()));
  CHECK(are_isomorphic(corpus::q8(), reference_q8()));
  auto s2 = sylow_subgroup(corpus::s4(), 2);
  CHECK(are_isomorphic(extract_group(s2).table, corpus::d8()));
  auto c8 = catalog::build(catalog::cyclic_spec(8));
  auto c4c2 = catalog::build(catalog::abelian_spec({4, 2}));
  auto c222 = catalog::build(catalog::elementary_abelian_spec(2, 3));
  GroupPtr groups[] = {corpus::d8(), corpus::q8(), c8, c4c2, c222};
  for (const auto& a : groups)
    for (const auto& b : groups)
      CHECK(are_isomorphic(a, b) == (a->content_hash() == b->content_hash() ||
                                     a == b));
}

TEST_CASE("found isomorphisms are genuine") {
  auto isos = isomorphism_search(corpus::q8(), reference_q8(), false);
  REQUIRE(isos.size() == 1);
  const auto& f = isos[0];
  auto a = corpus::q8();
  auto b = reference_q8();
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      CHECK(f.apply(a->mul(Elem(x), Elem(y))) ==
            b->mul(f.apply(Elem(x)), f.apply(Elem(y))));
}

TEST_CASE("gamma reference matches the catalog build") {
  CHECK(are_isomorphic(reference_gamma(), catalog::build(catalog::gamma_spec())));
  CHECK_FALSE(are_isomorphic(reference_gamma(), corpus::sd16()));
  CHECK_FALSE(are_isomorphic(reference_gamma(),
                             catalog::build(catalog::quaternion_spec(4))));
  CHECK_FALSE(are_isomorphic(reference_q8(), corpus::d8()));
}

TEST_CASE("subgroup overload") {
  auto g = corpus::s4();
  auto v4 = o_p(g, 2);
  auto c22 = full_subgroup(catalog::build(catalog::elementary_abelian_spec(2, 2)));
  CHECK_FALSE(isomorphism_search(v4, c22, false).empty());
  // all six automorphisms of V4 are found
  CHECK(isomorphism_search(v4, v4, true).size() == 6);
}

TEST_CASE("minimal generating sequences") {
  CHECK(minimal_generating_sequence(corpus::c6()).size() == 1);
  CHECK(minimal_generating_sequence(corpus::d8()).size() == 2);
  CHECK(minimal_generating_sequence(corpus::s4()).size() == 2);
  CHECK(minimal_generating_sequence(
            catalog::build(catalog::elementary_abelian_spec(2, 3)))
            .size() == 3);
  auto g = corpus::q8();
  auto gens = minimal_generating_sequence(g);
  CHECK(subgroup_generated(g, gens).is_full());
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(corpus::q8()).carrier->order() == 24);
  CHECK(automorphism_group(corpus::d8()).carrier->order() == 8);
  CHECK(automorphism_group(catalog::build(catalog::cyclic_spec(8)))
            .carrier->order() == 4);
  auto v4 = catalog::build(catalog::elementary_abelian_spec(2, 2));
  auto aut = automorphism_group(v4);
  CHECK(aut.carrier->order() == 6);
  CHECK(aut.acts_on == v4);
  // each stored action really is the map of the corresponding carrier element
  for (int i = 0; i < aut.carrier->order(); ++i)
    for (int j = 0; j < aut.carrier->order(); ++j) {
      Elem k = aut.carrier->mul(Elem(i), Elem(j));
      for (int x = 0; x < v4->order(); ++x)
        CHECK(aut.action_of(k)[std::size_t(x)] ==
              aut.action_of(Elem(j))[aut.action_of(Elem(i))[std::size_t(x)]]);
    }

  Caps tiny;
  tiny.automorphism_cap = 4;
  CHECK_THROWS_AS(automorphism_group(corpus::q8(), tiny), size_limit_error);
}
