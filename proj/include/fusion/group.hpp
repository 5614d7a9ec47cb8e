#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusion {

using Elem = std::uint16_t;

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a computation contradicts a theorem the code relies on.
// Never swallowed: reaching this means either a bug or a falsified claim.
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  int table_cap = 10000;
  int assoc_full_check = 512;  // full associativity check up to this order
  int assoc_samples = 100000;  // random triples above it
  int lattice_cap = 2000;
  int automorphism_cap = 512;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// A finite group as a complete multiplication table. Element 0 is the
/// identity. Immutable after construction.
class GroupTable : public std::enable_shared_from_this<GroupTable> {
 public:
  static constexpr Elem identity = 0;

  int order() const { return n_; }
  Elem mul(Elem x, Elem y) const { return mult_[std::size_t(x) * n_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  /// g^-1 * x * g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv_[g], x), g); }
  /// x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const {
    return mul(mul(inv_[x], inv_[y]), mul(x, y));
  }
  Elem power(Elem x, long e) const;
  int element_order(Elem x) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }

  /// FNV-1a over the multiplication table; used to tie serialized
  /// subgroups to their parent.
  std::uint64_t content_hash() const { return hash_; }

  /// Validates the axioms (Latin square, identity, inverses,
  /// associativity up to the caps) and takes ownership of the table.
  static GroupPtr create(int n, std::vector<Elem> mult,
                         std::vector<std::string> labels = {},
                         const Caps& caps = {});

 private:
  GroupTable() = default;
  int n_ = 0;
  std::vector<Elem> mult_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  std::uint64_t hash_ = 0;
};

/// A subgroup of a fixed parent table: sorted member list plus a
/// membership bitmap. Immutable.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  /// Validates closure, identity and Lagrange; members need not be sorted.
  SubgroupSet(GroupPtr parent, std::vector<Elem> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  int size() const { return int(members_.size()); }
  bool contains(Elem x) const { return flags_[x] != 0; }
  bool contains_all(const SubgroupSet& other) const;
  bool is_full() const { return size() == parent_->order(); }
  bool operator==(const SubgroupSet& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }
  /// Position of x in members(); x must be a member.
  int index_of(Elem x) const;

  bool is_normal_in(const SubgroupSet& bigger) const;
  bool is_abelian() const;
  /// Order is a power of a single prime p; returns p, or nullopt for the
  /// trivial group or mixed order.
  std::optional<int> prime_of() const;

 private:
  friend SubgroupSet unchecked_subgroup(GroupPtr, std::vector<Elem>);
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<char> flags_;
};

/// Internal fast path: caller guarantees the member set is a subgroup.
SubgroupSet unchecked_subgroup(GroupPtr parent, std::vector<Elem> members);

SubgroupSet trivial_subgroup(GroupPtr parent);
SubgroupSet full_subgroup(GroupPtr parent);

/// Smallest subgroup containing seed.
SubgroupSet subgroup_generated(GroupPtr parent, const std::vector<Elem>& seed);
/// Same, but the closure must stay inside `within`.
SubgroupSet subgroup_generated_in(const SubgroupSet& within,
                                  const std::vector<Elem>& seed);

/// A total injective homomorphism from a subgroup into another table.
/// Stored element-by-element, parallel to domain().members().
class GroupMorphism {
 public:
  GroupMorphism() = default;
  GroupMorphism(SubgroupSet domain, GroupPtr codomain_parent,
                std::vector<Elem> images, bool validate = true);

  const SubgroupSet& domain() const { return domain_; }
  const GroupPtr& codomain_parent() const { return codomain_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem apply(Elem x) const { return images_[domain_.index_of(x)]; }
  SubgroupSet image() const;
  bool is_identity() const;

  /// this followed by next (right-action order, matching q^(xy)=(q^x)^y).
  GroupMorphism then(const GroupMorphism& next) const;
  GroupMorphism inverse() const;
  GroupMorphism restrict_to(const SubgroupSet& smaller) const;

  /// c_g restricted to Q, inside Q's parent. Image is Q^g.
  static GroupMorphism conjugation(const SubgroupSet& q, Elem g);
  static GroupMorphism identity_on(const SubgroupSet& q);

  bool same_map(const GroupMorphism& o) const {
    return domain_ == o.domain_ && images_ == o.images_;
  }

 private:
  SubgroupSet domain_;
  GroupPtr codomain_;
  std::vector<Elem> images_;
};

/// A group together with a faithful action on another group: each carrier
/// element carries an automorphism of acts_on (stored as an image vector
/// over all of acts_on, index-parallel to element numbering).
struct ActionGroup {
  GroupPtr carrier;
  GroupPtr acts_on;
  std::vector<std::vector<Elem>> actions;  // actions[i][x] = image of x

  const std::vector<Elem>& action_of(Elem carrier_elem) const {
    return actions[carrier_elem];
  }
};

/// Builds an ActionGroup from a set of automorphism image vectors. The
/// set must be closed under composition; identity becomes element 0 and
/// the rest are numbered in lexicographic image-vector order. Throws
/// validation_error if not closed or not faithful (duplicate maps).
ActionGroup action_group_from_maps(GroupPtr acts_on,
                                   std::vector<std::vector<Elem>> maps);

/// Table of the permutation group generated by the given generators,
/// each a bijection of {1..degree} given as an image list. Elements are
/// numbered in breadth-first closure order from the identity.
GroupPtr group_from_permutations(int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 const Caps& caps = {});

/// A subgroup re-indexed as a standalone table, with both index maps.
struct ExtractedGroup {
  GroupPtr table;
  std::vector<Elem> to_parent;    // size table->order()
  std::vector<int> from_parent;   // size parent order, -1 if absent
};
ExtractedGroup extract_group(const SubgroupSet& q);

/// Quotient G/N for N normal in G, with projection and a section
/// (smallest-index coset representatives). Coset of the identity is 0,
/// the rest are numbered by smallest member.
struct QuotientGroup {
  GroupPtr table;
  std::vector<Elem> projection;  // size |G|
  std::vector<Elem> section;     // size |G/N|, representative per coset
};
QuotientGroup quotient_group(GroupPtr g, const SubgroupSet& n);

}  // namespace fusion
