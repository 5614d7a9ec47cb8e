#include "fusion/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <unordered_map>

namespace fusion {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Elem GroupTable::power(Elem x, long e) const {
  if (e < 0) {
    x = inv_[x];
    e = -e;
  }
  Elem r = identity;
  Elem base = x;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int GroupTable::element_order(Elem x) const {
  int k = 1;
  Elem y = x;
  while (y != identity) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

GroupPtr GroupTable::create(int n, std::vector<Elem> mult,
                            std::vector<std::string> labels,
                            const Caps& caps) {
  if (n <= 0) throw validation_error("group order must be positive");
  if (n > caps.table_cap) throw size_limit_error("group order exceeds table cap");
  if (int(mult.size()) != n * n)
    throw validation_error("multiplication table has wrong size");
  for (Elem v : mult)
    if (v >= n) throw validation_error("table entry out of range");

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->n_ = n;
  g->mult_ = std::move(mult);

  auto at = [&](int x, int y) { return g->mult_[std::size_t(x) * n + y]; };

  // Identity axioms.
  for (int x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw validation_error("element 0 is not an identity");

  // Latin square.
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      if (seen[at(x, y)]) throw validation_error("row is not a permutation");
      seen[at(x, y)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      if (seen[at(y, x)]) throw validation_error("column is not a permutation");
      seen[at(y, x)] = 1;
    }
  }

  // Inverses.
  g->inv_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n; ++y) {
      if (at(x, y) == 0) {
        if (at(y, x) != 0) throw validation_error("one-sided inverse");
        g->inv_[x] = Elem(y);
        found = true;
        break;
      }
    }
    if (!found) throw validation_error("missing inverse");
  }

  // Associativity: full check at small orders, sampled above.
  if (n <= caps.assoc_full_check) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Elem xy = at(x, y);
        for (int z = 0; z < n; ++z)
          if (at(xy, z) != at(x, at(y, z)))
            throw validation_error("associativity fails");
      }
  } else {
    std::mt19937 rng(0xA15E);  // fixed seed, reproducible
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int i = 0; i < caps.assoc_samples; ++i) {
      int x = dist(rng), y = dist(rng), z = dist(rng);
      if (at(at(x, y), z) != at(x, at(y, z)))
        throw validation_error("associativity fails (sampled)");
    }
  }

  if (!labels.empty() && int(labels.size()) != n)
    throw validation_error("label list has wrong size");
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  }
  g->labels_ = std::move(labels);

  std::uint64_t h = 1469598103934665603ull;
  for (Elem v : g->mult_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  g->hash_ = h;
  return g;
}

SubgroupSet::SubgroupSet(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw validation_error("subgroup needs a parent");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  flags_.assign(parent_->order(), 0);
  for (Elem x : members_) {
    if (x >= parent_->order()) throw validation_error("member out of range");
    flags_[x] = 1;
  }
  if (members_.empty() || members_[0] != GroupTable::identity)
    throw validation_error("subgroup must contain the identity");
  for (Elem x : members_) {
    if (!flags_[parent_->inv(x)]) throw validation_error("not closed under inverse");
    for (Elem y : members_)
      if (!flags_[parent_->mul(x, y)])
        throw validation_error("not closed under multiplication");
  }
  if (parent_->order() % int(members_.size()) != 0)
    throw validation_error("Lagrange violated");  // unreachable if closed
}

SubgroupSet unchecked_subgroup(GroupPtr parent, std::vector<Elem> members) {
  SubgroupSet s;
  s.parent_ = std::move(parent);
  std::sort(members.begin(), members.end());
  s.members_ = std::move(members);
  s.flags_.assign(s.parent_->order(), 0);
  for (Elem x : s.members_) s.flags_[x] = 1;
  return s;
}

bool SubgroupSet::contains_all(const SubgroupSet& other) const {
  for (Elem x : other.members_)
    if (!flags_[x]) return false;
  return true;
}

int SubgroupSet::index_of(Elem x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x)
    throw domain_error("element not in subgroup");
  return int(it - members_.begin());
}

bool SubgroupSet::is_normal_in(const SubgroupSet& bigger) const {
  for (Elem g : bigger.members())
    for (Elem x : members_)
      if (!flags_[parent_->conj(x, g)]) return false;
  return true;
}

bool SubgroupSet::is_abelian() const {
  for (Elem x : members_)
    for (Elem y : members_)
      if (parent_->mul(x, y) != parent_->mul(y, x)) return false;
  return true;
}

std::optional<int> SubgroupSet::prime_of() const {
  int n = size();
  if (n == 1) return std::nullopt;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      if (n == 1) return p;
      return std::nullopt;
    }
  }
  return n;  // n itself prime
}

SubgroupSet trivial_subgroup(GroupPtr parent) {
  return unchecked_subgroup(std::move(parent), {GroupTable::identity});
}

SubgroupSet full_subgroup(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (int i = 0; i < int(all.size()); ++i) all[i] = Elem(i);
  return unchecked_subgroup(std::move(parent), std::move(all));
}

namespace {

// Closure under products; `allowed` (optional) restricts the universe.
std::vector<Elem> closure(const GroupTable& g, const std::vector<Elem>& seed,
                          const std::vector<char>* allowed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> list;
  auto add = [&](Elem x) {
    if (!in[x]) {
      if (allowed && !(*allowed)[x])
        throw domain_error("closure escapes the enclosing subgroup");
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(GroupTable::identity);
  for (Elem x : seed) add(x);
  // list grows while we multiply every ordered pair of current members.
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i && j < list.size(); ++j) {
      add(g.mul(list[i], list[j]));
      add(g.mul(list[j], list[i]));
    }
  return list;
}

}  // namespace

SubgroupSet subgroup_generated(GroupPtr parent, const std::vector<Elem>& seed) {
  auto list = closure(*parent, seed, nullptr);
  return unchecked_subgroup(std::move(parent), std::move(list));
}

SubgroupSet subgroup_generated_in(const SubgroupSet& within,
                                  const std::vector<Elem>& seed) {
  std::vector<char> allowed(within.parent()->order(), 0);
  for (Elem x : within.members()) allowed[x] = 1;
  auto list = closure(*within.parent(), seed, &allowed);
  return unchecked_subgroup(within.parent(), std::move(list));
}

GroupMorphism::GroupMorphism(SubgroupSet domain, GroupPtr codomain_parent,
                             std::vector<Elem> images, bool validate)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain_parent)),
      images_(std::move(images)) {
  if (images_.size() != domain_.members().size())
    throw validation_error("morphism image list has wrong size");
  if (!validate) return;
  const auto& mem = domain_.members();
  std::vector<char> hit(codomain_->order(), 0);
  for (Elem y : images_) {
    if (y >= codomain_->order()) throw validation_error("image out of range");
    if (hit[y]) throw validation_error("morphism not injective");
    hit[y] = 1;
  }
  const auto& gp = *domain_.parent();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) {
      Elem xy = gp.mul(mem[i], mem[j]);
      if (apply(xy) != codomain_->mul(images_[i], images_[j]))
        throw validation_error("not a homomorphism");
    }
}

SubgroupSet GroupMorphism::image() const {
  return unchecked_subgroup(codomain_, images_);
}

bool GroupMorphism::is_identity() const {
  if (codomain_ != domain_.parent()) return false;
  return images_ == domain_.members();
}

GroupMorphism GroupMorphism::then(const GroupMorphism& next) const {
  std::vector<Elem> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = next.apply(images_[i]);
  return GroupMorphism(domain_, next.codomain_parent(), std::move(out), false);
}

GroupMorphism GroupMorphism::inverse() const {
  SubgroupSet img = image();
  std::vector<Elem> out(images_.size());
  const auto& mem = domain_.members();
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[img.index_of(images_[i])] = mem[i];
  return GroupMorphism(img, domain_.parent(), std::move(out), false);
}

GroupMorphism GroupMorphism::restrict_to(const SubgroupSet& smaller) const {
  std::vector<Elem> out;
  out.reserve(smaller.members().size());
  for (Elem x : smaller.members()) out.push_back(apply(x));
  return GroupMorphism(smaller, codomain_, std::move(out), false);
}

GroupMorphism GroupMorphism::conjugation(const SubgroupSet& q, Elem g) {
  const auto& gp = *q.parent();
  std::vector<Elem> out;
  out.reserve(q.members().size());
  for (Elem x : q.members()) out.push_back(gp.conj(x, g));
  return GroupMorphism(q, q.parent(), std::move(out), false);
}

GroupMorphism GroupMorphism::identity_on(const SubgroupSet& q) {
  return GroupMorphism(q, q.parent(), q.members(), false);
}

ActionGroup action_group_from_maps(GroupPtr acts_on,
                                   std::vector<std::vector<Elem>> maps) {
  const int n = acts_on->order();
  std::vector<Elem> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = Elem(i);

  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  auto it = std::find(maps.begin(), maps.end(), ident);
  if (it == maps.end()) throw validation_error("identity map missing");
  maps.erase(it);
  maps.insert(maps.begin(), ident);

  std::unordered_map<std::vector<Elem>, Elem, VecHash> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = Elem(i);

  const int m = int(maps.size());
  std::vector<Elem> mult(std::size_t(m) * m);
  std::vector<Elem> tmp(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // mult(i,j) = apply i, then j (right-action composition).
      for (int x = 0; x < n; ++x) tmp[x] = maps[j][maps[i][x]];
      auto f = index.find(tmp);
      if (f == index.end())
        throw validation_error("map set not closed under composition");
      mult[std::size_t(i) * m + j] = f->second;
    }
  ActionGroup ag;
  ag.carrier = GroupTable::create(m, std::move(mult));
  ag.acts_on = std::move(acts_on);
  ag.actions = std::move(maps);
  return ag;
}

GroupPtr group_from_permutations(int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 const Caps& caps) {
  if (degree <= 0) throw validation_error("degree must be positive");
  using Perm = std::vector<int>;  // 0-based internally
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (int(g.size()) != degree)
      throw validation_error("generator has wrong degree");
    std::vector<char> seen(degree, 0);
    Perm p(degree);
    for (int i = 0; i < degree; ++i) {
      int img = g[i] - 1;
      if (img < 0 || img >= degree || seen[img])
        throw validation_error("generator is not a permutation");
      seen[img] = 1;
      p[i] = img;
    }
    gens.push_back(std::move(p));
  }

  Perm ident(degree);
  for (int i = 0; i < degree; ++i) ident[i] = i;

  struct PermHash {
    std::size_t operator()(const Perm& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= std::size_t(x);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  // Breadth-first closure from the identity, generators applied in order.
  std::vector<Perm> elems{ident};
  std::unordered_map<Perm, Elem, PermHash> index;
  index[ident] = 0;
  std::deque<Elem> todo{0};
  Perm prod(degree);
  while (!todo.empty()) {
    Elem cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      for (int i = 0; i < degree; ++i) prod[i] = g[elems[cur][i]];
      if (!index.count(prod)) {
        if (int(elems.size()) >= caps.table_cap)
          throw size_limit_error("permutation closure exceeds table cap");
        Elem id = Elem(elems.size());
        index[prod] = id;
        elems.push_back(prod);
        todo.push_back(id);
      }
    }
  }

  const int n = int(elems.size());
  std::vector<Elem> mult(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (x*y) acts as: first y's perm indexing? Convention: permutations
      // act on points on the right, (xy)(pt) = y(x(pt)).
      for (int t = 0; t < degree; ++t) prod[t] = elems[j][elems[i][t]];
      mult[std::size_t(i) * n + j] = index.at(prod);
    }
  }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    // cycle notation
    std::string s;
    std::vector<char> done(degree, 0);
    for (int t = 0; t < degree; ++t) {
      if (done[t] || elems[i][t] == t) continue;
      s += '(';
      int u = t;
      bool first = true;
      while (!done[u]) {
        done[u] = 1;
        if (!first) s += ' ';
        s += std::to_string(u + 1);
        first = false;
        u = elems[i][u];
      }
      s += ')';
    }
    labels[i] = s.empty() ? "e" : s;
  }
  return GroupTable::create(n, std::move(mult), std::move(labels), caps);
}

ExtractedGroup extract_group(const SubgroupSet& q) {
  ExtractedGroup out;
  const auto& mem = q.members();
  const int n = int(mem.size());
  out.to_parent = mem;
  out.from_parent.assign(q.parent()->order(), -1);
  for (int i = 0; i < n; ++i) out.from_parent[mem[i]] = i;
  std::vector<Elem> mult(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mult[std::size_t(i) * n + j] =
          Elem(out.from_parent[q.parent()->mul(mem[i], mem[j])]);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = q.parent()->label(mem[i]);
  out.table = GroupTable::create(n, std::move(mult), std::move(labels));
  return out;
}

QuotientGroup quotient_group(GroupPtr g, const SubgroupSet& n) {
  if (n.parent() != g) throw domain_error("quotient subgroup has wrong parent");
  if (!n.is_normal_in(full_subgroup(g)))
    throw precondition_error("quotient by a non-normal subgroup");
  const int order = g->order();
  std::vector<int> coset_of(order, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] != -1) continue;
    int id = int(reps.size());
    reps.push_back(Elem(x));  // smallest member, since we scan in order
    for (Elem h : n.members()) coset_of[g->mul(Elem(x), h)] = id;
  }
  const int m = int(reps.size());
  std::vector<Elem> mult(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mult[std::size_t(i) * m + j] = Elem(coset_of[g->mul(reps[i], reps[j])]);
  QuotientGroup out;
  out.table = GroupTable::create(m, std::move(mult));
  out.projection.assign(order, 0);
  for (int x = 0; x < order; ++x) out.projection[x] = Elem(coset_of[x]);
  out.section = std::move(reps);
  return out;
}

}  // namespace fusion
