#include "fusion/report.hpp"

#include <algorithm>

#include "fusion/subgroup_ops.hpp"

namespace fusion::report {

namespace {

catalog::CatalogSpec spec_from_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw validation_error("group document must be an object with a kind");
  const std::string kind = doc.at("kind").get<std::string>();
  catalog::CatalogSpec spec;
  if (kind == "catalog") {
    spec.family = catalog::family_from_name(doc.at("name").get<std::string>());
    if (doc.contains("params"))
      for (auto& [key, value] : doc.at("params").items())
        spec.params[key] = value.get<long>();
    if (doc.contains("factors"))
      for (const json& factor : doc.at("factors"))
        spec.factors.push_back(spec_from_document(factor));
    if (doc.contains("action"))
      for (const json& image : doc.at("action"))
        spec.action.push_back(Elem(image.get<int>()));
    return spec;
  }
  if (kind == "product") {
    const std::string op = doc.at("op").get<std::string>();
    if (op == "direct")
      spec.family = catalog::Family::direct_product;
    else if (op == "semidirect")
      spec.family = catalog::Family::semidirect_product;
    else
      throw validation_error("unknown product op: " + op);
    for (const json& factor : doc.at("factors"))
      spec.factors.push_back(spec_from_document(factor));
    if (doc.contains("action"))
      for (const json& image : doc.at("action"))
        spec.action.push_back(Elem(image.get<int>()));
    return spec;
  }
  throw validation_error("group kind not usable as a catalog spec: " + kind);
}

/// Resolved request: restricted context on P inside F_S(G).
struct Resolved {
  GroupPtr g;
  SubgroupSet s;
  SubgroupSet p_sub;
  FusionContext ctx;
};

SubgroupSet from_gens(GroupPtr g, const std::vector<Elem>& gens) {
  for (Elem x : gens)
    if (int(x) >= g->order())
      throw validation_error("generator index out of range");
  return subgroup_generated(g, gens);
}

Resolved resolve(const AnalysisRequest& req) {
  GroupPtr g = group_from_document(req.group_doc, req.caps);
  if (!is_prime(req.prime)) throw validation_error("prime must be prime");
  if (g->order() > 1 && g->order() % req.prime != 0)
    throw validation_error("prime does not divide the group order");
  SubgroupSet s = req.sylow_gens.empty() && g->order() == 1
                      ? trivial_subgroup(g)
                      : req.sylow_gens.empty()
                            ? sylow_subgroup(g, req.prime)
                            : from_gens(g, req.sylow_gens);
  if (s.size() != p_part(g->order(), req.prime))
    throw validation_error("sylow selector is not a Sylow p-subgroup");
  SubgroupSet p_sub =
      req.pgroup_gens.empty() ? s : from_gens(g, req.pgroup_gens);
  if (!s.contains_all(p_sub))
    throw validation_error("pgroup selector is not contained in the Sylow");
  FusionContext ctx =
      FusionContext::restricted(g, req.prime, s, p_sub, req.caps);
  return Resolved{g, s, p_sub, std::move(ctx)};
}

json group_info(GroupPtr g) {
  return json{{"order", g->order()}, {"hash", g->content_hash()}};
}

json morphism_to_json(const FMorphism& f) {
  json images = json::array();
  for (Elem x : f.morphism.images()) images.push_back(int(x));
  json witnesses = json::array();
  for (Elem w : f.witnesses) witnesses.push_back(int(w));
  return json{{"domain", subgroup_to_json(f.domain())},
              {"images", images},
              {"witnesses", witnesses}};
}

json essential_to_json(const EssentialReport& r) {
  json doc{{"subgroup", subgroup_to_json(r.subgroup)},
           {"fully_normalized", r.fully_normalized},
           {"centric_wrt_p", r.centric_wrt_p},
           {"reproductive", r.reproductive},
           {"h_q_index", r.h_q_index},
           {"verdict_def3", r.verdict_def3},
           {"verdict_intro", r.verdict_intro}};
  doc["embedded_witness"] = r.embedded_witness
                                ? subgroup_to_json(*r.embedded_witness)
                                : json(nullptr);
  return doc;
}

json series_to_json(const std::vector<SubgroupSet>& series) {
  json out = json::array();
  for (const SubgroupSet& s : series) out.push_back(subgroup_to_json(s));
  return out;
}

json verdict_to_json(const NormalityVerdict& v) {
  json doc{{"normal", v.normal}, {"series", series_to_json(v.series)}};
  doc["essential_witness"] = v.essential_witness
                                 ? subgroup_to_json(*v.essential_witness)
                                 : json(nullptr);
  return doc;
}

json normality_section(const FusionContext& ctx) {
  const bool oracle = is_normal_definition_oracle(ctx);
  NormalityVerdict no_ess = is_normal_no_essential(ctx);
  NormalityVerdict omega = omega_series_test(ctx, ctx.effective());
  NormalityVerdict central = central_series_test(ctx, ctx.effective());
  return json{{"definition_oracle", oracle},
              {"no_essential_criterion", verdict_to_json(no_ess)},
              {"omega_series", verdict_to_json(omega)},
              {"central_series", verdict_to_json(central)},
              {"agree", oracle == no_ess.normal && oracle == omega.normal &&
                            oracle == central.normal},
              {"normal", oracle}};
}

json report_head(const char* command) {
  return json{{"version", kVersion}, {"command", command}};
}

}  // namespace

GroupPtr group_from_document(const json& doc, const Caps& caps) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw validation_error("group document must be an object with a kind");
  if (doc.at("kind").get<std::string>() == "permutation") {
    std::vector<std::vector<int>> generators;
    for (const json& gen : doc.at("generators"))
      generators.push_back(gen.get<std::vector<int>>());
    return group_from_permutations(doc.at("degree").get<int>(), generators,
                                   caps);
  }
  return catalog::build(spec_from_document(doc), caps);
}

json subgroup_to_json(const SubgroupSet& s) {
  json members = json::array();
  for (Elem x : s.members()) members.push_back(int(x));
  return json{{"members", members}, {"parent_hash", s.parent()->content_hash()}};
}

json cmd_analyze(const AnalysisRequest& req) {
  Resolved r = resolve(req);
  json doc = report_head("analyze");
  doc["prime"] = req.prime;
  doc["group"] = group_info(r.g);
  doc["sylow"] = subgroup_to_json(r.s);
  doc["pgroup"] = subgroup_to_json(r.p_sub);

  json closed = json::array();
  for (const SubgroupSet& d : all_subgroups(r.s, req.caps))
    if (strongly_closed_in(r.g, r.s, d)) closed.push_back(subgroup_to_json(d));
  doc["strongly_closed"] = closed;

  std::vector<SubgroupSet> reps;
  for (const SubgroupSet& q : all_subgroups(r.p_sub, req.caps)) {
    if (q.size() == r.p_sub.size()) continue;
    SubgroupSet rep = fully_normalized_representative(r.ctx, q);
    if (std::find(reps.begin(), reps.end(), rep) == reps.end())
      reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) {
              return a.members() < b.members();
            });
  json rep_docs = json::array();
  for (const SubgroupSet& rep : reps) rep_docs.push_back(subgroup_to_json(rep));
  doc["class_representatives"] = rep_docs;

  json essentials = json::array();
  for (const EssentialReport& e : main_essential_collection(r.ctx))
    essentials.push_back(essential_to_json(e));
  doc["essentials"] = essentials;
  doc["normality"] = normality_section(r.ctx);
  return doc;
}

json cmd_factorize(const AnalysisRequest& req, const std::vector<Elem>& q_gens,
                   const std::vector<Elem>& r_gens, int morphism_index) {
  Resolved r = resolve(req);
  SubgroupSet q = from_gens(r.g, q_gens);
  SubgroupSet target = from_gens(r.g, r_gens);
  if (!r.p_sub.contains_all(q) || !r.p_sub.contains_all(target))
    throw validation_error("Q and R must be subgroups of P");
  std::vector<FMorphism> isos;
  for (const FMorphism& f : hom_set(r.ctx, q, target))
    if (f.is_isomorphism_onto(target)) isos.push_back(f);
  if (isos.empty())
    throw validation_error("no system isomorphism Q -> R: the pair is not fused");
  if (morphism_index < 0 || morphism_index >= int(isos.size()))
    throw validation_error("morphism index out of range: only " +
                           std::to_string(isos.size()) + " isomorphisms exist");
  const FMorphism& psi = isos[morphism_index];

  FactorizationChain chain = factorize(r.ctx, psi);
  json steps = json::array();
  for (const ChainStep& step : chain.steps)
    steps.push_back(json{{"s", subgroup_to_json(step.s)},
                         {"psi", morphism_to_json(step.psi)},
                         {"q_prev", subgroup_to_json(step.q_prev)},
                         {"q_next", subgroup_to_json(step.q_next)}});
  json doc = report_head("factorize");
  doc["prime"] = req.prime;
  doc["group"] = group_info(r.g);
  doc["morphism"] = morphism_to_json(psi);
  doc["source"] = subgroup_to_json(chain.source);
  doc["target"] = subgroup_to_json(chain.target);
  doc["steps"] = steps;
  doc["verified"] = verify_chain(r.ctx, psi, chain);
  return doc;
}

json cmd_normality(const AnalysisRequest& req) {
  Resolved r = resolve(req);
  json doc = report_head("normality");
  doc["prime"] = req.prime;
  doc["group"] = group_info(r.g);
  doc["pgroup"] = subgroup_to_json(r.p_sub);
  doc["normality"] = normality_section(r.ctx);
  return doc;
}

json cmd_frobenius(const AnalysisRequest& req,
                   const std::vector<Elem>& d_gens) {
  Resolved r = resolve(req);
  SubgroupSet d = d_gens.empty() ? r.s : from_gens(r.g, d_gens);
  FrobeniusReport fr = frobenius_test(r.g, req.prime, d);
  json doc = report_head("frobenius");
  doc["prime"] = req.prime;
  doc["group"] = group_info(r.g);
  doc["d"] = subgroup_to_json(d);
  doc["p_nilpotent"] = fr.p_nilpotent;
  doc["all_local_p_nilpotent"] = fr.all_local_p_nilpotent;
  doc["agree"] = fr.p_nilpotent == fr.all_local_p_nilpotent;
  doc["witness"] = fr.witness ? subgroup_to_json(*fr.witness) : json(nullptr);
  return doc;
}

json cmd_verify_suite(const json& manifest) {
  if (!manifest.is_object())
    throw validation_error("manifest must be a JSON object");
  json assertions = json::array();
  auto record = [&](const std::string& label, const std::string& what,
                    const std::string& ref, bool pass) {
    assertions.push_back(json{
        {"label", label}, {"assertion", what}, {"ref", ref}, {"pass", pass}});
  };

  if (manifest.contains("resistance")) {
    std::vector<ResistanceCase> cases;
    std::vector<json> entries;
    for (const json& entry : manifest.at("resistance")) {
      ResistanceCase c;
      c.label = entry.at("label").get<std::string>();
      c.g = group_from_document(entry.at("group"));
      c.p = entry.at("prime").get<int>();
      c.s = sylow_subgroup(c.g, c.p);
      c.pgrp = entry.contains("pgroup")
                   ? from_gens(c.g, entry.at("pgroup").get<std::vector<Elem>>())
                   : c.s;
      cases.push_back(std::move(c));
      entries.push_back(entry);
    }
    ResistanceReport rep = resistance_suite(cases);
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const ResistanceEntry& e = rep.entries[i];
      const json& src = entries[i];
      const std::string ref =
          src.contains("ref") ? src.at("ref").get<std::string>() : "";
      record(e.label, "normality methods agree",
             ref, e.methods_agree && e.error.empty());
      if (e.asserted)
        record(e.label, "non-excluded family is normal in its system", ref,
               e.ok);
      if (src.contains("expect_excluded"))
        record(e.label, "excluded-family classification matches", ref,
               e.classification.excluded == src.at("expect_excluded").get<bool>());
      if (src.contains("expect_normal"))
        record(e.label, "normality outcome matches", ref,
               e.normal == src.at("expect_normal").get<bool>());
    }
  }

  if (manifest.contains("frobenius")) {
    for (const json& entry : manifest.at("frobenius")) {
      const std::string label = entry.at("label").get<std::string>();
      const std::string ref =
          entry.contains("ref") ? entry.at("ref").get<std::string>() : "";
      GroupPtr g = group_from_document(entry.at("group"));
      const int p = entry.at("prime").get<int>();
      SubgroupSet d = entry.contains("d")
                          ? from_gens(g, entry.at("d").get<std::vector<Elem>>())
                          : sylow_subgroup(g, p);
      FrobeniusReport fr = frobenius_test(g, p, d);
      record(label, "global p-nilpotency equals local p-nilpotency", ref,
             fr.p_nilpotent == fr.all_local_p_nilpotent);
      if (entry.contains("expect_p_nilpotent"))
        record(label, "p-nilpotency outcome matches", ref,
               fr.p_nilpotent == entry.at("expect_p_nilpotent").get<bool>());
    }
  }

  int passed = 0, failed = 0;
  for (const json& a : assertions)
    (a.at("pass").get<bool>() ? passed : failed)++;
  json doc = report_head("verify-suite");
  doc["assertions"] = assertions;
  doc["passed"] = passed;
  doc["failed"] = failed;
  doc["all_pass"] = failed == 0;
  return doc;
}

namespace {
void render(const json& doc, const std::string& key, int depth,
            std::string& out) {
  const std::string pad(std::size_t(depth) * 2, ' ');
  if (doc.is_object()) {
    if (!key.empty()) out += pad + key + ":\n";
    for (auto& [k, v] : doc.items()) render(v, k, depth + !key.empty(), out);
    return;
  }
  if (doc.is_array() && !std::all_of(doc.begin(), doc.end(), [](const json& v) {
        return v.is_primitive();
      })) {
    out += pad + key + ":\n";
    int i = 0;
    for (const json& v : doc) render(v, "[" + std::to_string(i++) + "]",
                                     depth + 1, out);
    return;
  }
  out += pad + key + ": " + doc.dump() + "\n";
}
}  // namespace

std::string render_text(const json& doc) {
  std::string out;
  render(doc, "", 0, out);
  return out;
}

}  // namespace fusion::report
