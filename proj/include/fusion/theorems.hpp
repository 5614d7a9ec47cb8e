#pragma once

#include <optional>
#include <string>

#include "fusion/catalog.hpp"
#include "fusion/essentials.hpp"

namespace fusion {

/// One link of an Alperin-type factorization: psi is an automorphism of s
/// inside the system, carrying q_prev onto q_next.
struct ChainStep {
  SubgroupSet s;
  FMorphism psi;
  SubgroupSet q_prev;
  SubgroupSet q_next;
};

/// steps compose (left to right, right-action order) to the factorized
/// morphism; every s is the effective group or a fully normalized
/// essential representative.
struct FactorizationChain {
  SubgroupSet source;
  SubgroupSet target;
  std::vector<ChainStep> steps;
};

/// Factorizes a system isomorphism psi: Q -> R through automorphism
/// groups of the effective group and of essential representatives,
/// by induction on the index of the domain. A failure of any step the
/// underlying theorem guarantees raises theorem_violation.
FactorizationChain factorize(const FusionContext& ctx, const FMorphism& psi);

/// Pure re-check of every chain invariant, including membership of each
/// psi_i in the system and essentiality of each non-full s.
bool verify_chain(const FusionContext& ctx, const FMorphism& psi,
                  const FactorizationChain& chain);

enum class NormalityMethod {
  definition_oracle,
  no_essential_criterion,
  omega_series,
  central_series,
};

struct NormalityVerdict {
  bool normal = false;
  NormalityMethod method = NormalityMethod::definition_oracle;
  std::vector<SubgroupSet> series;  // witness for the series methods
  std::optional<SubgroupSet> essential_witness;
};

/// Ground truth for D normal in the system: every morphism has a
/// realizing element that normalizes D.
bool is_normal_in_system(const FusionContext& ctx, const SubgroupSet& d);
/// The above with D = the effective group.
bool is_normal_definition_oracle(const FusionContext& ctx);

/// Normal iff the main essential collection is empty; witness is the
/// first essential representative otherwise.
NormalityVerdict is_normal_no_essential(const FusionContext& ctx);

/// Searches for a series 1 = Q_0 <= ... <= Q_n = Omega*(D) of strongly
/// closed subgroups with [Q_{i+1}, D] <= Q_i: the ascending-central-series
/// construction first, then shortest-path search over the strongly closed
/// subgroups. The verdict is cross-checked against the definition oracle.
NormalityVerdict omega_series_test(const FusionContext& ctx,
                                   const SubgroupSet& d);
/// Same with a full central series of D (target D instead of Omega*(D)).
NormalityVerdict central_series_test(const FusionContext& ctx,
                                     const SubgroupSet& d);

/// Generalized Frobenius criterion data: global p-nilpotency versus
/// p-nilpotency of N_G(U) for every U <= D with C_D(U) <= U.
struct FrobeniusReport {
  bool p_nilpotent = false;
  bool all_local_p_nilpotent = false;
  std::optional<SubgroupSet> witness;  // a failing U, when one exists
};
FrobeniusReport frobenius_test(GroupPtr g, int p, const SubgroupSet& d);

struct ResistanceCase {
  std::string label;
  GroupPtr g;
  int p = 2;
  SubgroupSet s;     // Sylow p-subgroup of g
  SubgroupSet pgrp;  // strongly closed P <= s
};

struct ResistanceEntry {
  std::string label;
  catalog::FamilyClassification classification;
  bool asserted = false;  // non-excluded family: normality is required
  bool normal = false;
  bool methods_agree = false;
  bool ok = false;  // methods agree and (not asserted or normal)
  std::string error;
};

struct ResistanceReport {
  std::vector<ResistanceEntry> entries;
  bool all_ok = true;
};

/// Runs all four normality methods per case (contexts run concurrently),
/// asserts normality for non-excluded families, records the rest.
ResistanceReport resistance_suite(const std::vector<ResistanceCase>& cases);

/// Residues of a chain-stabilizing automorphism of a nonabelian group of
/// order p^3 on the three prime-order sections P/M, M/U, U, and the
/// congruence they must satisfy (k = nm when U is the center, m = nk
/// otherwise).
struct PowerCongruence {
  long n = 1;  // residue on P/M
  long m = 1;  // residue on M/U
  long k = 1;  // residue on U
  bool u_is_center = false;
  bool relation_holds = false;
};
PowerCongruence power_congruence_check(GroupPtr p3, const GroupMorphism& alpha,
                                       const SubgroupSet& u,
                                       const SubgroupSet& m);

}  // namespace fusion
