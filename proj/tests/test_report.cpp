#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "corpus.hpp"
#include "fusion/report.hpp"
#include "fusion/subgroup_ops.hpp"

using namespace fusion;
using report::json;

namespace {

json load(const std::string& rel) {
  std::ifstream in(std::string(FUSION_DATA_DIR) + "/" + rel);
  REQUIRE(bool(in));
  json doc;
  in >> doc;
  return doc;
}

json s4_doc() { return load("groups/s4.json"); }

report::AnalysisRequest s4_request() {
  report::AnalysisRequest req;
  req.group_doc = s4_doc();
  req.prime = 2;
  return req;
}

}  // namespace

TEST_CASE("group documents round-trip to the corpus tables") {
  // Same generator lists, same breadth-first numbering, same table.
  CHECK(report::group_from_document(load("groups/s4.json"))->content_hash() ==
        corpus::s4()->content_hash());
  CHECK(report::group_from_document(load("groups/a5.json"))->content_hash() ==
        corpus::a5()->content_hash());
  CHECK(report::group_from_document(load("groups/sl33.json"))->content_hash() ==
        corpus::sl33()->content_hash());
  CHECK(report::group_from_document(load("groups/d8.json"))->content_hash() ==
        corpus::d8()->content_hash());
  CHECK(report::group_from_document(load("groups/c34.json"))->content_hash() ==
        corpus::c34()->content_hash());
  CHECK(report::group_from_document(load("groups/c3c3_full_inversion.json"))
            ->content_hash() ==
        corpus::c3c3_by_full_inversion()->content_hash());
  CHECK(report::group_from_document(load("groups/c3c3_half_inversion.json"))
            ->content_hash() ==
        corpus::c3c3_by_half_inversion()->content_hash());

  CHECK_THROWS_AS(report::group_from_document(json{{"kind", "nonsense"}}),
                  validation_error);
  CHECK_THROWS_AS(report::group_from_document(json::array()), validation_error);
  CHECK_THROWS_AS(
      report::group_from_document(
          json{{"kind", "catalog"}, {"name", "no_such_family"}}),
      domain_error);
}

TEST_CASE("subgroup serialization carries members and parent hash") {
  auto g = corpus::s4();
  auto v4 = o_p(g, 2);
  json doc = report::subgroup_to_json(v4);
  CHECK(doc.at("members").size() == 4);
  CHECK(doc.at("members").at(0) == 0);
  CHECK(doc.at("parent_hash").get<std::uint64_t>() == g->content_hash());
}

TEST_CASE("analyze report on S4 lists the essential V4 and non-normality") {
  json doc = report::cmd_analyze(s4_request());
  CHECK(doc.at("version") == report::kVersion);
  CHECK(doc.at("group").at("order") == 24);
  CHECK(doc.at("sylow").at("members").size() == 8);
  CHECK(doc.at("essentials").size() == 1);

  auto v4 = o_p(corpus::s4(), 2);
  std::vector<int> expected(v4.members().begin(), v4.members().end());
  CHECK(doc.at("essentials").at(0).at("subgroup").at("members") ==
        json(expected));
  CHECK(doc.at("essentials").at(0).at("verdict_def3") == true);
  CHECK(doc.at("normality").at("normal") == false);
  CHECK(doc.at("normality").at("agree") == true);
  // the Sylow itself is never listed among proper-class representatives
  for (const json& rep : doc.at("class_representatives"))
    CHECK(rep.at("members").size() < 8);
}

TEST_CASE("analyze report on SL(2,3) is normal with no essentials") {
  report::AnalysisRequest req;
  req.group_doc = load("groups/sl23.json");
  req.prime = 2;
  json doc = report::cmd_analyze(req);
  CHECK(doc.at("essentials").empty());
  CHECK(doc.at("normality").at("normal") == true);
  CHECK(doc.at("normality").at("agree") == true);
}

TEST_CASE("analyze handles the trivial group") {
  report::AnalysisRequest req;
  req.group_doc = json{{"kind", "catalog"},
                       {"name", "cyclic"},
                       {"params", json{{"n", 1}}}};
  req.prime = 2;
  json doc = report::cmd_analyze(req);
  CHECK(doc.at("essentials").empty());
  CHECK(doc.at("class_representatives").empty());
  CHECK(doc.at("normality").at("normal") == true);
}

TEST_CASE("analyze validates its request") {
  auto req = s4_request();
  req.prime = 5;
  CHECK_THROWS_AS(report::cmd_analyze(req), validation_error);
  req = s4_request();
  req.prime = 4;
  CHECK_THROWS_AS(report::cmd_analyze(req), validation_error);
  req = s4_request();
  req.sylow_gens = {1};  // a 4-cycle generates C4, not a Sylow 2-subgroup
  CHECK_THROWS_AS(report::cmd_analyze(req), validation_error);
  req = s4_request();
  req.pgroup_gens = {Elem(1000)};
  CHECK_THROWS_AS(report::cmd_analyze(req), validation_error);
}

TEST_CASE("analyze output is deterministic byte for byte") {
  std::string a = report::cmd_analyze(s4_request()).dump(2);
  std::string b = report::cmd_analyze(s4_request()).dump(2);
  CHECK(a == b);
  CHECK(a.find("\"version\"") != std::string::npos);
}

TEST_CASE("factorize report verifies its own chain") {
  auto g = corpus::s4();
  auto v4 = o_p(g, 2);
  auto zgen = center(sylow_subgroup(g, 2)).members().back();

  // center-fusion: Z(D8) -> another C2 inside the normal V4
  Elem other = 0;
  for (Elem x : v4.members())
    if (x != 0 && x != zgen) {
      other = x;
      break;
    }
  json doc = report::cmd_factorize(s4_request(), {zgen}, {other}, 0);
  CHECK(doc.at("verified") == true);
  CHECK(doc.at("steps").size() >= 1);
  CHECK(doc.at("source").at("members").size() == 2);

  // identity request: one step on the effective group
  json id_doc = report::cmd_factorize(s4_request(), {}, {}, 0);
  CHECK(id_doc.at("verified") == true);

  // non-fused pair: Z(D8) is not fused to a transposition subgroup
  bool found_unfused = false;
  for (Elem x : sylow_subgroup(g, 2).members()) {
    if (g->element_order(x) != 2 || v4.contains(x)) continue;
    if (subgroup_generated(g, {x}) == subgroup_generated(g, {zgen})) continue;
    try {
      report::cmd_factorize(s4_request(), {zgen}, {x}, 0);
    } catch (const validation_error&) {
      found_unfused = true;
    }
    if (found_unfused) break;
  }
  // all order-2 subgroups of D8 outside V4 are transposition subgroups,
  // never fused with the central one
  CHECK(found_unfused);

  CHECK_THROWS_AS(report::cmd_factorize(s4_request(), {zgen}, {other}, 99),
                  validation_error);
}

TEST_CASE("normality and frobenius reports") {
  json doc = report::cmd_normality(s4_request());
  CHECK(doc.at("normality").at("normal") == false);
  CHECK(doc.at("normality").at("no_essential_criterion").at("essential_witness")
            .is_object());

  json fr = report::cmd_frobenius(s4_request(), {});
  CHECK(fr.at("p_nilpotent") == false);
  CHECK(fr.at("all_local_p_nilpotent") == false);
  CHECK(fr.at("agree") == true);
  CHECK(fr.at("witness").at("members").size() == 4);

  report::AnalysisRequest c6;
  c6.group_doc = load("groups/c6.json");
  c6.prime = 3;
  json fr2 = report::cmd_frobenius(c6, {});
  CHECK(fr2.at("p_nilpotent") == true);
  CHECK(fr2.at("witness").is_null());
}

TEST_CASE("verify-suite runs the shipped manifest clean") {
  json summary = report::cmd_verify_suite(load("theoremB_suite.json"));
  CHECK(summary.at("all_pass") == true);
  CHECK(summary.at("failed") == 0);
  CHECK(summary.at("passed").get<int>() >= 26);
  for (const json& a : summary.at("assertions")) {
    INFO(a.dump());
    CHECK(a.at("pass") == true);
  }
}

TEST_CASE("verify-suite flags corrupted expectations and accepts empty") {
  json manifest = load("theoremB_suite.json");
  manifest.at("resistance").at(0).at("expect_normal") =
      !manifest.at("resistance").at(0).at("expect_normal").get<bool>();
  json summary = report::cmd_verify_suite(manifest);
  CHECK(summary.at("all_pass") == false);
  CHECK(summary.at("failed").get<int>() >= 1);

  json empty = report::cmd_verify_suite(load("empty_suite.json"));
  CHECK(empty.at("all_pass") == true);
  CHECK(empty.at("assertions").empty());

  CHECK_THROWS_AS(report::cmd_verify_suite(json::array()), validation_error);
}

TEST_CASE("text renderer covers every report shape") {
  std::string text = report::render_text(report::cmd_analyze(s4_request()));
  CHECK(text.find("normal: false") != std::string::npos);
  CHECK(text.find("version: \"") != std::string::npos);
  CHECK(text.find('{') == std::string::npos);
}
