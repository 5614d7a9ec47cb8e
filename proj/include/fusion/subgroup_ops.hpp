#pragma once

#include "fusion/group.hpp"

namespace fusion {

int p_part(int n, int p);
bool is_prime(int n);

SubgroupSet centralizer(const SubgroupSet& in, const SubgroupSet& x);
SubgroupSet centralizer_of_element(const SubgroupSet& in, Elem x);
SubgroupSet normalizer(const SubgroupSet& in, const SubgroupSet& q);
SubgroupSet center(const SubgroupSet& g);
SubgroupSet derived_subgroup(const SubgroupSet& g);
/// [a, b] = <[x,y] : x in a, y in b>, inside the common parent.
SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b);
/// Intersection of all maximal subgroups.
SubgroupSet frattini_subgroup(const SubgroupSet& g);
SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);
/// <a, b> (product set when both normalize each other, closure otherwise).
SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b);

/// Every subgroup of `within` exactly once, sorted by (order, members).
std::vector<SubgroupSet> all_subgroups(const SubgroupSet& within,
                                       const Caps& caps = {});
std::vector<SubgroupSet> all_subgroups(GroupPtr parent, const Caps& caps = {});
std::vector<SubgroupSet> maximal_subgroups(const SubgroupSet& g);
/// Nontrivial cyclic subgroups, deduplicated, sorted.
std::vector<SubgroupSet> cyclic_subgroups(const SubgroupSet& g);

/// Deterministic Sylow p-subgroup: grown greedily from the smallest-index
/// p-elements (optionally seeded with a known p-subgroup).
SubgroupSet sylow_subgroup(GroupPtr parent, int p);
SubgroupSet sylow_subgroup_containing(GroupPtr parent, int p,
                                      const SubgroupSet& seed);

/// Largest normal subgroup of G contained in d (intersection of conjugates).
SubgroupSet core_of(GroupPtr g, const SubgroupSet& d);
/// Largest normal p-subgroup.
SubgroupSet o_p(GroupPtr g, int p, const Caps& caps = {});

/// Ascending central series 1 = Z_0 < Z_1 <= ... terminating at the
/// hypercenter (last entry repeated-free).
std::vector<SubgroupSet> upper_central_series(const SubgroupSet& g);

SubgroupSet omega_i(const SubgroupSet& p_group, int i);
bool is_odd_type(const SubgroupSet& p_group, const Caps& caps = {});
SubgroupSet omega_star(const SubgroupSet& p_group, const Caps& caps = {});

bool is_p_nilpotent(GroupPtr g, int p);
/// Independent oracle: searches for a normal subgroup of p'-order and
/// p-power index over the full lattice. Test use only.
bool is_p_nilpotent_lattice_oracle(GroupPtr g, int p, const Caps& caps = {});

bool is_p_closed(GroupPtr g, int p);

int count_nontrivial_cyclic_subgroups(GroupPtr p_group);

/// D strongly closed in S with respect to G: x in D, x^g in S => x^g in D.
bool strongly_closed_in(GroupPtr g, const SubgroupSet& s, const SubgroupSet& d);

/// All A-invariant cyclic subgroups of A's acted-on group not contained in
/// h. h must be A-invariant.
std::vector<SubgroupSet> invariant_cyclic_outside(const ActionGroup& a,
                                                  const SubgroupSet& h);

/// Subgroup {g : sigma(g) = g for all actions sigma} of the acted-on group.
SubgroupSet action_fixed_points(const ActionGroup& a);
/// [G, A] = <g^-1 sigma(g)>.
SubgroupSet action_commutator(const ActionGroup& a);
/// Carrier elements acting trivially on q (pointwise), as a SubgroupSet of
/// the carrier.
SubgroupSet action_kernel_on(const ActionGroup& a, const SubgroupSet& q);
bool subgroup_is_action_invariant(const ActionGroup& a, const SubgroupSet& q);

}  // namespace fusion
