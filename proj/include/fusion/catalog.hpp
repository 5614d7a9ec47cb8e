#pragma once

#include <map>

#include "fusion/group.hpp"

namespace fusion::catalog {

enum class Family {
  cyclic,
  abelian_type,
  elementary_abelian,
  dihedral,
  semidihedral,
  generalized_quaternion,
  extraspecial_p3_exp_p,
  extraspecial_p3_exp_p2,
  generalized_extraspecial_product,
  metacyclic,
  C_pr,
  G_pr_eps,
  gamma,
  direct_product,
  semidirect_product,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Family-specific parameters. Groups are built as tuple-element groups
/// with closed-form multiplication; presentations are used only for
/// validation.
struct CatalogSpec {
  Family family{};
  std::map<std::string, long> params;  // p, r, n, m, t, eps, k ... per family
  std::vector<CatalogSpec> factors;    // direct_product / semidirect_product
  std::vector<Elem> action;            // semidirect: image list of factor 0
                                       // under the generator of (cyclic) factor 1

  long param(const std::string& key) const;
};

CatalogSpec cyclic_spec(long n);
CatalogSpec abelian_spec(const std::vector<long>& orders);
CatalogSpec elementary_abelian_spec(long p, long k);
CatalogSpec dihedral_spec(long n);             // order 2^n, n >= 2
CatalogSpec semidihedral_spec(long n);         // order 2^n, n >= 4
CatalogSpec quaternion_spec(long n);           // order 2^n, n >= 3
CatalogSpec extraspecial_exp_p_spec(long p);   // order p^3, exponent p, p odd
CatalogSpec extraspecial_exp_p2_spec(long p);  // order p^3, exponent p^2
CatalogSpec metacyclic_spec(long p, long m, long n, long t);
CatalogSpec c_pr_spec(long p, long r);
CatalogSpec g_pr_eps_spec(long p, long r, long eps);
CatalogSpec gamma_spec();
/// E x A: E nonabelian of order p^3 (variant 1 = exponent p / D8,
/// variant 2 = exponent p^2 / Q8), A elementary abelian of rank k.
CatalogSpec gen_extraspecial_product_spec(long p, long variant, long k);

GroupPtr build(const CatalogSpec& spec, const Caps& caps = {});

/// True iff some generator tuple of G satisfies every relation of the
/// family presentation and generates G.
bool validate_presentation(GroupPtr g, const CatalogSpec& spec);

bool is_generalized_extraspecial(GroupPtr p_group);
bool is_metacyclic(GroupPtr p_group, const Caps& caps = {});

enum class TheoremBClause { none, a, b, c, d_i, d_ii };

struct FamilyClassification {
  TheoremBClause clause = TheoremBClause::none;
  bool excluded = false;       // an exceptional form of the matched clause
  std::string description;
  bool strongly_resistant_predicted() const {
    return clause != TheoremBClause::none && !excluded;
  }
};

FamilyClassification theoremB_family_of(GroupPtr p_group,
                                        const Caps& caps = {});

}  // namespace fusion::catalog
