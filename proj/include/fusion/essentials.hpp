#pragma once

#include <optional>

#include "fusion/fusion.hpp"

namespace fusion {

/// Verdicts and intermediate data for one subgroup Q < P.
struct EssentialReport {
  SubgroupSet subgroup;
  bool fully_normalized = false;
  bool centric_wrt_p = false;
  bool reproductive = false;
  // index of H_Q in Aut_F(Q); 1 means H_Q is everything
  long h_q_index = 1;
  // canonical strongly Out_P(Q)-embedded subgroup of the Out carrier,
  // present iff proper (i.e. iff one exists)
  std::optional<SubgroupSet> embedded_witness;
  bool verdict_def3 = false;
  bool verdict_intro = false;
};

/// H = <x in G | D cap D^x > 1>. Proper iff some strongly D-embedded
/// subgroup containing D exists, and then H is one and lies in every
/// such. D must be nontrivial and strongly closed in the Sylow s.
SubgroupSet canonical_embedded_subgroup(GroupPtr g, const SubgroupSet& s,
                                        const SubgroupSet& d);

/// Definition test: h proper, some D^x <= h, and for g outside h no
/// nontrivial element of h cap h^g is G-conjugate into D (element-level
/// reduction over cyclic subgroups).
bool is_strongly_d_embedded(GroupPtr g, const SubgroupSet& s,
                            const SubgroupSet& d, const SubgroupSet& h);

/// Exhaustive search over all subgroups; test oracle only.
std::vector<SubgroupSet> all_strongly_d_embedded(GroupPtr g,
                                                 const SubgroupSet& s,
                                                 const SubgroupSet& d,
                                                 const Caps& caps = {});

/// C_P(R) <= R for every conjugate R of Q in the system.
bool is_centric_wrt_P(const FusionContext& ctx, const SubgroupSet& q);

/// H_Q = <phi in Aut_F(Q) | N_phi(Q) > Q> as a subgroup of the carrier
/// of autf, which must be aut_f(ctx, q). Q must be proper.
SubgroupSet h_q(const FusionContext& ctx, const SubgroupSet& q,
                const ActionGroup& autf);

/// Definition 3: Q reproductive and H_Q proper in Aut_F(Q).
bool is_essential_def3(const FusionContext& ctx, const SubgroupSet& q);
/// Introduction definition: centric with respect to P, fully normalized,
/// and Out_F(Q) has a strongly Out_P(Q)-embedded subgroup (decided by
/// properness of the canonical subgroup).
bool is_essential_intro(const FusionContext& ctx, const SubgroupSet& q);

EssentialReport essential_report(const FusionContext& ctx,
                                 const SubgroupSet& q);

/// One fully normalized representative per class of proper subgroups,
/// filtered to essentials, sorted by member list.
std::vector<EssentialReport> main_essential_collection(
    const FusionContext& ctx);

}  // namespace fusion
