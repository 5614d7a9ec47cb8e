#pragma once

#include "fusion/group.hpp"

namespace fusion {

/// Isomorphisms A -> B found by backtracking on images of a minimal
/// generating sequence, pruned by element-order histogram, center order,
/// derived-subgroup order and centralizer sizes. Empty iff not
/// isomorphic; one entry unless find_all.
std::vector<GroupMorphism> isomorphism_search(GroupPtr a, GroupPtr b,
                                              bool find_all);
std::vector<GroupMorphism> isomorphism_search(const SubgroupSet& a,
                                              const SubgroupSet& b,
                                              bool find_all);
bool are_isomorphic(GroupPtr a, GroupPtr b);

/// Full automorphism group as an ActionGroup over p (caps apply to |p|).
ActionGroup automorphism_group(GroupPtr p, const Caps& caps = {});

/// Lexicographically smallest generating sequence of minimal length.
std::vector<Elem> minimal_generating_sequence(GroupPtr g);

/// Fixed reference tables used by odd-type detection: the quaternion
/// group of order 8 and Gamma, the nontrivial semidirect product of Z4 by
/// Z4. Since Aut(C4) has order 2 the nontrivial action is unique, so
/// Gamma is well defined.
GroupPtr reference_q8();
GroupPtr reference_gamma();

}  // namespace fusion
