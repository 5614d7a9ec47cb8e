#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "fusion/group.hpp"

namespace fusion {

/// A fusion-system morphism: a conjugation-induced map together with the
/// full set of group elements realizing it. Identity is the element map;
/// witnesses are auxiliary.
struct FMorphism {
  GroupMorphism morphism;
  std::vector<Elem> witnesses;  // all g in G with c_g|Q = morphism, sorted

  const SubgroupSet& domain() const { return morphism.domain(); }
  SubgroupSet image() const { return morphism.image(); }
  bool same_map(const FMorphism& o) const {
    return morphism.same_map(o.morphism);
  }
  bool is_isomorphism_onto(const SubgroupSet& r) const { return image() == r; }
};

/// A realized fusion system F_S(G), or its restriction E = F|<=P to a
/// strongly closed subgroup P of S. All predicates are computed against
/// the effective group (P when restricted, S otherwise).
class FusionContext {
 public:
  enum class Mode { ambient, restricted };

  static FusionContext ambient(GroupPtr g, int p, SubgroupSet s,
                               const Caps& caps = {});
  /// Verifies that p_sub is strongly closed in s with respect to g.
  static FusionContext restricted(GroupPtr g, int p, SubgroupSet s,
                                  SubgroupSet p_sub, const Caps& caps = {});

  const GroupPtr& group() const { return g_; }
  int prime() const { return p_; }
  const SubgroupSet& sylow() const { return s_; }
  /// P in restricted mode, S in ambient mode.
  const SubgroupSet& effective() const { return p_sub_; }
  Mode mode() const { return mode_; }
  const Caps& caps() const { return caps_; }

  /// Hom-set cache, keyed by (Q.members, R.members). Concurrent reads,
  /// serialized writes.
  const std::vector<FMorphism>& cached_hom_set(const SubgroupSet& q,
                                               const SubgroupSet& r) const;

 private:
  FusionContext() = default;
  GroupPtr g_;
  int p_ = 0;
  SubgroupSet s_;
  SubgroupSet p_sub_;
  Mode mode_ = Mode::ambient;
  Caps caps_;

  using HomKey = std::pair<std::vector<Elem>, std::vector<Elem>>;
  struct HomCache {
    std::map<HomKey, std::vector<FMorphism>> entries;
    std::mutex mutex;
  };
  // Shared so contexts stay copyable; copies share the cache.
  std::shared_ptr<HomCache> hom_cache_ = std::make_shared<HomCache>();
};

/// All distinct conjugation-induced injective maps Q -> R, each with its
/// full witness set, sorted by image vector.
std::vector<FMorphism> hom_set(const FusionContext& ctx, const SubgroupSet& q,
                               const SubgroupSet& r);

/// All subgroups of the effective group of the form Q^g, sorted by
/// member list. Always contains Q.
std::vector<SubgroupSet> f_conjugacy_class(const FusionContext& ctx,
                                           const SubgroupSet& q);

/// x in D, g in G, x^g in S => x^g in D. (Computed against S in both
/// modes; the two notions agree for D <= P.)
bool is_strongly_closed(const FusionContext& ctx, const SubgroupSet& d);

/// N_phi(Q) = {x in N_Peff(Q) | exists y in N_Peff(Q phi) with
/// phi^-1 c_x phi = c_y on Q phi}.
SubgroupSet n_phi(const FusionContext& ctx, const FMorphism& phi);

/// Extension of phi to N (Q <= N <= N_phi) by witness scan; the returned
/// morphism carries its full witness set.
std::optional<FMorphism> extend_morphism(const FusionContext& ctx,
                                         const FMorphism& phi,
                                         const SubgroupSet& n);

bool is_fully_normalized(const FusionContext& ctx, const SubgroupSet& q);
bool is_fully_centralized(const FusionContext& ctx, const SubgroupSet& q);

/// Deterministic fully normalized representative of Q's class:
/// normalizer order descending, then member list ascending.
SubgroupSet fully_normalized_representative(const FusionContext& ctx,
                                            const SubgroupSet& q);

/// Every isomorphism onto Q in the system extends over its full N_phi.
bool is_receptive(const FusionContext& ctx, const SubgroupSet& q);
/// Receptive, and every class member R has some psi in Hom(R, Q) with
/// N_psi(R) > R. Q must be proper in the effective group.
bool is_reproductive(const FusionContext& ctx, const SubgroupSet& q);

/// Automorphism groups of Q acting on its extracted standalone table.
ActionGroup aut_f(const FusionContext& ctx, const SubgroupSet& q);
/// Conjugations by N_Peff(Q).
ActionGroup aut_p(const FusionContext& ctx, const SubgroupSet& q);
/// Conjugations by N_S(Q) (the ambient Sylow), regardless of mode.
ActionGroup aut_s(const FusionContext& ctx, const SubgroupSet& q);
/// Conjugations by Q itself.
ActionGroup inn(const SubgroupSet& q);

/// The maps of `sub` located inside `big`'s carrier; throws
/// precondition_error if some map of `sub` is not in `big`.
SubgroupSet action_subgroup_in(const ActionGroup& big, const ActionGroup& sub);

/// Aut_F(Q) with Inn(Q) and Aut_P(Q) located in its carrier, and the
/// quotient Out_F(Q) = Aut_F(Q)/Inn(Q) with projection and section.
struct OutF {
  ActionGroup aut;      // Aut_F(Q) (restricted mode: Aut_E(Q))
  SubgroupSet inn;      // Inn(Q) as a subgroup of aut.carrier
  SubgroupSet aut_p;    // Aut_P(Q) as a subgroup of aut.carrier
  QuotientGroup quotient;  // aut.carrier / inn
};
OutF out_f(const FusionContext& ctx, const SubgroupSet& q);

/// For Q, R normal in the effective group and fused, an automorphism of
/// the effective group carrying Q to R. Its absence would falsify the
/// normal-conjugates lemma and raises theorem_violation.
FMorphism normal_conjugate_transport(const FusionContext& ctx,
                                     const SubgroupSet& q,
                                     const SubgroupSet& r);

}  // namespace fusion
