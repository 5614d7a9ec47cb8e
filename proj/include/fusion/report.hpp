#pragma once

#include <json.hpp>

#include "fusion/theorems.hpp"

namespace fusion::report {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

/// Builds a group from its JSON document:
///   {"kind":"permutation","degree":n,"generators":[[...1-based images]]}
///   {"kind":"catalog","name":<family>,"params":{...},
///    "factors":[...], "action":[...]}   (factors/action for products)
GroupPtr group_from_document(const json& doc, const Caps& caps = {});

/// {"members":[...], "parent_hash": <table hash>}
json subgroup_to_json(const SubgroupSet& s);

struct AnalysisRequest {
  json group_doc;
  int prime = 2;
  std::vector<Elem> sylow_gens;   // empty: computed
  std::vector<Elem> pgroup_gens;  // empty: P = S
  Caps caps;
};

/// Strongly closed subgroups, class representatives, essential reports
/// and all four normality verdicts for the restricted context on P.
json cmd_analyze(const AnalysisRequest& req);

/// Chain document for the morphism_index-th map of hom_set(Q, R),
/// with a verification stamp.
json cmd_factorize(const AnalysisRequest& req, const std::vector<Elem>& q_gens,
                   const std::vector<Elem>& r_gens, int morphism_index);

/// The normality section alone.
json cmd_normality(const AnalysisRequest& req);

/// Frobenius criterion for D = <d_gens> (default: the Sylow subgroup).
json cmd_frobenius(const AnalysisRequest& req,
                   const std::vector<Elem>& d_gens);

/// Runs the manifest's resistance cases and frobenius triples; every
/// expectation becomes one pass/fail entry.
json cmd_verify_suite(const json& manifest);

/// Plain indented key/value rendering of any report document.
std::string render_text(const json& doc);

}  // namespace fusion::report
