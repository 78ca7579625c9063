// Copyright 2026 The smskit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smskit/engine.hpp"
#include "smskit/textio.hpp"

namespace {

using namespace smskit;
using nlohmann::json;

long long default_budget() {
  if (const char* env = std::getenv("SMSKIT_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "SMSKIT_BUDGET is not an integer");
    }
  }
  return SearchConfig{}.max_nodes;
}

std::string yesno(bool b) { return b ? "yes" : "NO"; }

json witnesses_json(const CheckReport& rep) {
  json out = json::array();
  for (const Witness& w : rep.witnesses) {
    json jw;
    jw["condition"] = w.condition;
    jw["objects"] = json::array();
    for (Vertex v : w.objects) jw["objects"].push_back(to_string(v));
    jw["detail"] = w.detail;
    out.push_back(jw);
  }
  return out;
}

json set_json(const ObjectSet& s) {
  json out = json::array();
  for (Vertex v : s.members) out.push_back(to_string(v));
  return out;
}

struct Options {
  std::string algebra;
  std::string set;
  std::string from, to;
  std::string format = "text";
  std::string output;
  long long budget = default_budget();
  bool verify = true;
  bool terms = false;
  int parallel = 1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) fail(Errc::parse_error, "cannot open output file " + opt.output);
  f << text;
}

SearchConfig config_of(const Options& opt) {
  SearchConfig cfg;
  cfg.max_nodes = opt.budget;
  cfg.verify_each = opt.verify;
  cfg.threads = opt.parallel;
  return cfg;
}

int run_classify(const Options& opt) {
  RfsType ty = parse_algebra_json(opt.algebra);
  if (opt.format == "json") {
    json j;
    j["type"] = ty.name();
    j["family"] = std::string(1, family_letter(ty.diagram.family()));
    j["n"] = ty.diagram.n();
    j["m_delta"] = ty.diagram.m_delta();
    j["f"] = ty.f_den == 1 ? std::to_string(ty.f_num)
                           : std::to_string(ty.f_num) + "/" + std::to_string(ty.f_den);
    j["t"] = ty.torsion;
    j["r"] = ty.r;
    j["simples"] = ty.simple_count;
    j["objects"] = ty.object_count();
    j["sigma"] = sigma_kind_name(ty.sigma);
    j["symmetric"] = ty.symmetric;
    j["standard"] = ty.standard;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type:      " << ty.name() << "\n";
    std::cout << "m_delta:   " << ty.diagram.m_delta() << "\n";
    std::cout << "r:         " << ty.r << "\n";
    std::cout << "simples:   " << ty.simple_count << "\n";
    std::cout << "objects:   " << ty.object_count() << "\n";
    std::cout << "sigma:     " << sigma_kind_name(ty.sigma) << "\n";
    std::cout << "symmetric: " << (ty.symmetric ? "yes" : "no") << "\n";
    std::cout << "standard:  " << (ty.standard ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_hom(const Options& opt) {
  StableCategory cat(parse_algebra_json(opt.algebra));
  Vertex x = cat.canonicalize(parse_vertex(opt.from));
  Vertex y = cat.canonicalize(parse_vertex(opt.to));
  int dim = cat.stable_hom(x, y);
  if (opt.format == "json") {
    json j;
    j["from"] = to_string(x);
    j["to"] = to_string(y);
    j["dim"] = dim;
    if (opt.terms) {
      j["terms"] = json::array();
      for (const CoveringTerm& t : cat.covering_terms(x, y))
        j["terms"].push_back({{"z", t.z}, {"lift", to_string(t.lift)}, {"dim", t.dim}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << dim << "\n";
    if (opt.terms)
      for (const CoveringTerm& t : cat.covering_terms(x, y))
        std::cout << "z=" << t.z << " lift=" << to_string(t.lift) << " dim=" << t.dim << "\n";
  }
  return 0;
}

int run_check(const Options& opt) {
  StableCategory cat(parse_algebra_json(opt.algebra));
  ObjectSet s = cat.make_set(parse_object_list(cat.type(), opt.set));
  CheckReport rep = cat.check_all(s);
  if (opt.format == "json") {
    json j;
    j["set"] = set_json(s);
    j["orthogonal"] = rep.orthogonal;
    j["cardinality_ok"] = rep.cardinality_ok;
    j["nakayama_stable"] = rep.nakayama_stable;
    j["weak_generating"] = rep.weak_generating;
    j["is_sms"] = rep.is_sms;
    j["witnesses"] = witnesses_json(rep);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "set:             " << to_string(s) << "\n";
    std::cout << "orthogonal:      " << yesno(rep.orthogonal) << "\n";
    std::cout << "cardinality:     " << yesno(rep.cardinality_ok) << " (" << s.size() << " of "
              << cat.type().simple_count << ")\n";
    std::cout << "nakayama_stable: " << yesno(rep.nakayama_stable) << "\n";
    std::cout << "weak_generating: " << yesno(rep.weak_generating) << "\n";
    std::cout << "sms:             " << yesno(rep.is_sms) << "\n";
    for (const Witness& w : rep.witnesses)
      std::cout << "witness[" << w.condition << "]: " << w.detail << "\n";
  }
  return 0;
}

int run_enumerate(const Options& opt) {
  StableCategory cat(parse_algebra_json(opt.algebra));
  EnumerateResult res = enumerate_sms(cat, config_of(opt));
  if (opt.format == "json") {
    json j;
    j["count"] = res.sms.size();
    j["exhaustive"] = res.exhaustive;
    j["sms"] = json::array();
    for (const ObjectSet& s : res.sms) j["sms"].push_back(set_json(s));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sms count: " << res.sms.size() << "\n";
    for (const ObjectSet& s : res.sms) std::cout << to_string(s) << "\n";
  }
  if (!res.exhaustive) {
    std::cerr << "warning: node budget exceeded, enumeration is not exhaustive\n";
    return 1;
  }
  return 0;
}

int run_extend(const Options& opt) {
  StableCategory cat(parse_algebra_json(opt.algebra));
  ObjectSet s = cat.make_set(parse_object_list(cat.type(), opt.set));
  ExtensionResult res = extend_to_sms(cat, s, config_of(opt));
  if (opt.format == "json") {
    json j;
    j["input"] = set_json(s);
    j["sms"] = set_json(res.sms);
    j["steps"] = json::array();
    for (const ExtensionStep& st : res.trace.steps)
      j["steps"].push_back({{"added", set_json(st.added_orbit)},
                            {"perp_before", st.perp_before},
                            {"perp_after", st.perp_after}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input: " << to_string(s) << "\n";
    int k = 0;
    for (const ExtensionStep& st : res.trace.steps)
      std::cout << "step " << ++k << ": add {" << to_string(st.added_orbit) << "} perp "
                << st.perp_before << " -> " << st.perp_after << "\n";
    std::cout << "sms: " << to_string(res.sms) << "\n";
  }
  return 0;
}

int run_verify(const Options& opt) {
  StableCategory cat(parse_algebra_json(opt.algebra));
  CharacterizationReport rep = verify_characterization(cat, config_of(opt));
  bool ok = rep.lists_equal && rep.exhaustive &&
            (!rep.high_orbit_census_ok.has_value() || *rep.high_orbit_census_ok);
  if (opt.format == "json") {
    json j;
    j["algebra"] = cat.type().name();
    j["sms_by_definition"] = rep.by_definition.size();
    j["nu_stable_orthogonal_nf"] = rep.by_conditions.size();
    j["lists_equal"] = rep.lists_equal;
    j["exhaustive"] = rep.exhaustive;
    if (rep.high_orbit_census_ok.has_value()) j["high_orbit_census_ok"] = *rep.high_orbit_census_ok;
    j["notes"] = rep.notes;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << cat.type().name() << "\n";
    std::cout << "sms by definition:               " << rep.by_definition.size() << "\n";
    std::cout << "nu-stable orthogonal, size nf:   " << rep.by_conditions.size() << "\n";
    std::cout << "lists equal: " << yesno(rep.lists_equal) << "\n";
    if (rep.high_orbit_census_ok.has_value())
      std::cout << "high nu-orbit census: " << yesno(*rep.high_orbit_census_ok) << "\n";
    if (!rep.exhaustive) std::cout << "exhaustive: NO (budget exceeded)\n";
    for (const std::string& note : rep.notes) std::cout << "note: " << note << "\n";
  }
  return ok ? 0 : 1;
}

int run_export(const Options& opt) {
  StableCategory cat(parse_algebra_json(opt.algebra));
  std::optional<ObjectSet> highlight;
  if (!opt.set.empty()) highlight = cat.make_set(parse_object_list(cat.type(), opt.set));
  QuiverGraph g = build_quiver(cat, highlight ? &*highlight : nullptr);
  if (opt.format == "dot")
    emit(opt, quiver_to_dot(g));
  else if (opt.format == "json")
    emit(opt, quiver_to_json(g));
  else
    fail(Errc::parse_error, "export format must be dot or json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable-category toolkit for representation-finite self-injective algebras"};
  app.require_subcommand(1);

  Options opt;
  try {
    opt.budget = default_budget();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto add_common = [&](CLI::App* cmd, bool needs_set) {
    cmd->add_option("--algebra", opt.algebra, "algebra spec as JSON")->required();
    cmd->add_option("--format", opt.format, "output format");
    cmd->add_option("--budget", opt.budget, "search node budget");
    cmd->add_flag("--verify,!--no-verify", opt.verify, "re-check emitted sets");
    cmd->add_option("--parallel", opt.parallel, "worker threads for search");
    if (needs_set) cmd->add_option("--set", opt.set, "object set");
  };

  CLI::App* classify = app.add_subcommand("classify", "validate a type against the classification");
  add_common(classify, false);

  CLI::App* hom = app.add_subcommand("hom", "stable hom dimension between two objects");
  add_common(hom, false);
  hom->add_option("--from", opt.from, "source vertex (p,q)")->required();
  hom->add_option("--to", opt.to, "target vertex (p,q)")->required();
  hom->add_flag("--terms", opt.terms, "print the covering-sum breakdown");

  CLI::App* check = app.add_subcommand("check", "run the sms condition report on a set");
  add_common(check, true);
  check->get_option("--set")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate all simple-minded systems");
  add_common(enumerate, false);

  CLI::App* extend = app.add_subcommand("extend", "extend an orthogonal system to an sms");
  add_common(extend, true);
  extend->get_option("--set")->required();

  CLI::App* verify = app.add_subcommand("verify", "verify the sms characterization exhaustively");
  add_common(verify, false);

  CLI::App* exp = app.add_subcommand("export", "export the stable AR quiver");
  add_common(exp, true);
  exp->add_option("-o,--output", opt.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(hom)) return run_hom(opt);
    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(extend)) return run_extend(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(exp)) return run_export(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
