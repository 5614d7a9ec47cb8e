#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fusion/report.hpp"

namespace {

using fusion::report::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fusion::validation_error("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw fusion::validation_error("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

std::vector<fusion::Elem> to_elems(const std::vector<int>& xs) {
  std::vector<fusion::Elem> out;
  for (int x : xs) {
    if (x < 0 || x > 0xffff)
      throw fusion::validation_error("element index out of range");
    out.push_back(fusion::Elem(x));
  }
  return out;
}

fusion::Caps with_overrides(const std::vector<std::string>& overrides) {
  fusion::Caps caps;
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw fusion::validation_error("cap override must be NAME=VALUE: " + item);
    const std::string name = item.substr(0, eq);
    const int value = std::stoi(item.substr(eq + 1));
    if (name == "table_cap")
      caps.table_cap = value;
    else if (name == "assoc_full_check")
      caps.assoc_full_check = value;
    else if (name == "assoc_samples")
      caps.assoc_samples = value;
    else if (name == "lattice_cap")
      caps.lattice_cap = value;
    else if (name == "automorphism_cap")
      caps.automorphism_cap = value;
    else
      throw fusion::validation_error("unknown cap: " + name);
  }
  return caps;
}

// Full document rendered before anything is written: error paths never
// leave partial output behind.
void emit(const json& doc, const std::string& format, const std::string& out) {
  std::string text = format == "text" ? fusion::report::render_text(doc)
                                      : doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::trunc);
  if (!file) throw fusion::validation_error("cannot write file: " + out);
  file << text;
}

struct CommonOpts {
  std::string group_file;
  int prime = 2;
  std::vector<int> sylow;
  std::vector<int> pgroup;
  std::string format = "json";
  std::string out;
  std::vector<std::string> cap_overrides;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_group) {
  auto* g = cmd->add_option("--group", opts.group_file,
                            "Group document (JSON file)");
  if (needs_group) g->required();
  cmd->add_option("--prime", opts.prime, "The prime p")->check(CLI::Range(2, 0xffff));
  cmd->add_option("--sylow", opts.sylow,
                  "Sylow generator index list (default: computed)")
      ->delimiter(',');
  cmd->add_option("--pgroup", opts.pgroup,
                  "Strongly closed P selector (default: the Sylow)")
      ->delimiter(',');
  cmd->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.out, "Output path (default: stdout)");
  cmd->add_option("--cap-override", opts.cap_overrides,
                  "Cap override NAME=VALUE (repeatable)");
}

fusion::report::AnalysisRequest to_request(const CommonOpts& opts) {
  fusion::report::AnalysisRequest req;
  req.group_doc = load_json(opts.group_file);
  req.prime = opts.prime;
  req.sylow_gens = to_elems(opts.sylow);
  req.pgroup_gens = to_elems(opts.pgroup);
  req.caps = with_overrides(opts.cap_overrides);
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion-system analyzer for finite groups at p"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, factorize_opts, normality_opts, frobenius_opts,
      suite_opts;
  std::vector<int> q_gens, r_gens, d_gens;
  int morphism_index = 0;
  std::string manifest_file;

  add_common(app.add_subcommand("analyze", "Full context report"),
             analyze_opts, true);

  auto* factorize = app.add_subcommand(
      "factorize", "Factorize a system isomorphism through essentials");
  add_common(factorize, factorize_opts, true);
  factorize->add_option("--q", q_gens, "Domain generator index list")
      ->delimiter(',')->required();
  factorize->add_option("--r", r_gens, "Image generator index list")
      ->delimiter(',')->required();
  factorize->add_option("--morphism", morphism_index,
                        "Index into the isomorphism list (default 0)");

  add_common(app.add_subcommand("normality", "Normality verdicts only"),
             normality_opts, true);

  auto* frobenius =
      app.add_subcommand("frobenius", "Generalized p-nilpotency criterion");
  add_common(frobenius, frobenius_opts, true);
  frobenius->add_option("--d", d_gens, "D selector (default: the Sylow)")
      ->delimiter(',');

  auto* suite = app.add_subcommand("verify-suite", "Run a suite manifest");
  add_common(suite, suite_opts, false);
  suite->add_option("--manifest", manifest_file, "Suite manifest (JSON file)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("analyze")) {
      emit(fusion::report::cmd_analyze(to_request(analyze_opts)),
           analyze_opts.format, analyze_opts.out);
    } else if (app.got_subcommand("factorize")) {
      emit(fusion::report::cmd_factorize(to_request(factorize_opts),
                                         to_elems(q_gens), to_elems(r_gens),
                                         morphism_index),
           factorize_opts.format, factorize_opts.out);
    } else if (app.got_subcommand("normality")) {
      emit(fusion::report::cmd_normality(to_request(normality_opts)),
           normality_opts.format, normality_opts.out);
    } else if (app.got_subcommand("frobenius")) {
      emit(fusion::report::cmd_frobenius(to_request(frobenius_opts),
                                         to_elems(d_gens)),
           frobenius_opts.format, frobenius_opts.out);
    } else {
      json summary = fusion::report::cmd_verify_suite(load_json(manifest_file));
      emit(summary, suite_opts.format, suite_opts.out);
      if (!summary.at("all_pass").get<bool>()) return 1;
    }
  } catch (const fusion::theorem_violation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n"
              << "This indicates an internal inconsistency; the run cannot "
                 "be trusted.\n";
    return 4;
  } catch (const fusion::size_limit_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
