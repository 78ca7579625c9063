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

#include "smskit/textio.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "smskit/nakayama.hpp"

namespace smskit {

namespace {

using nlohmann::json;

std::pair<long long, long long> parse_fraction(const json& f) {
  if (f.is_number_integer()) return {f.get<long long>(), 1};
  if (!f.is_string()) fail(Errc::parse_error, "\"f\" must be an integer or \"num/den\" string");
  std::string s = f.get<std::string>();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad fraction \"" + s + "\"");
  }
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  fail(Errc::parse_error, "family must be one of A, D, E; got \"" + s + "\"");
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RfsType parse_algebra_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("algebra spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j.contains("n") || !j.contains("f"))
    fail(Errc::parse_error, "algebra spec needs \"family\", \"n\" and \"f\"");
  Family fam = parse_family(j["family"].get<std::string>());
  int n = j["n"].get<int>();
  auto [num, den] = parse_fraction(j["f"]);
  int t = j.value("t", 1);
  bool standard = j.value("standard", true);
  return validate_type(fam, n, num, den, t, standard);
}

std::string algebra_to_json(const RfsType& type) {
  json j;
  j["family"] = std::string(1, family_letter(type.diagram.family()));
  j["n"] = type.diagram.n();
  j["f"] = type.f_den == 1 ? std::to_string(type.f_num)
                           : std::to_string(type.f_num) + "/" + std::to_string(type.f_den);
  j["t"] = type.torsion;
  if (!type.standard) j["standard"] = false;
  return j.dump();
}

Vertex parse_vertex(const std::string& text) {
  std::string s = strip(text);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    fail(Errc::parse_error, "vertex literal must look like (p,q); got \"" + text + "\"");
  auto comma = s.find(',');
  if (comma == std::string::npos) fail(Errc::parse_error, "vertex literal needs a comma");
  try {
    int p = std::stoi(strip(s.substr(1, comma - 1)));
    int q = std::stoi(strip(s.substr(comma + 1, s.size() - comma - 2)));
    return Vertex{p, q};
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad vertex literal \"" + text + "\"");
  }
}

namespace {

bool is_nakayama_type(const RfsType& ty) {
  return ty.diagram.family() == Family::A && ty.torsion == 1;
}

Vertex parse_module_token(const RfsType& ty, const std::string& tok) {
  if (!is_nakayama_type(ty))
    fail(Errc::parse_error,
         "module literal \"" + tok + "\" is only meaningful for Nakayama types (A_n, s/n, 1)");
  NakayamaAlgebra alg(ty.simple_count, ty.diagram.n());
  if (tok.size() > 2 && (tok[0] == 'X' || tok[0] == 'x') && tok[1] == '_') {
    auto open = tok.find('(');
    if (open == std::string::npos || tok.back() != ')')
      fail(Errc::parse_error, "module literal must look like X_i(m); got \"" + tok + "\"");
    try {
      int i = std::stoi(tok.substr(2, open - 2));
      int m = std::stoi(tok.substr(open + 1, tok.size() - open - 2));
      return to_vertex(alg, NakayamaModule{i, m});
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad module literal \"" + tok + "\"");
    }
  }
  // Stacked-socle notation "a/b/c": composition factors top first, socle
  // last; consecutive factors must step by +1 around the cyclic quiver.
  std::vector<int> layers;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    auto next = tok.find('/', pos);
    std::string part = strip(next == std::string::npos ? tok.substr(pos)
                                                       : tok.substr(pos, next - pos));
    try {
      layers.push_back(std::stoi(part));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad stacked module literal \"" + tok + "\"");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  for (std::size_t k = 0; k + 1 < layers.size(); ++k)
    if (alg.normalize_index(layers[k] + 1) != alg.normalize_index(layers[k + 1]))
      fail(Errc::parse_error, "stacked literal \"" + tok + "\" is not a uniserial module");
  return to_vertex(alg, NakayamaModule{alg.normalize_index(layers.back()), (int)layers.size()});
}

}  // namespace

std::vector<Vertex> parse_object_list(const RfsType& type, const std::string& text) {
  // Split at commas outside parentheses.
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') depth++;
    if (c == ')') depth--;
    if (c == ',' && depth == 0) {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  tokens.push_back(cur);

  std::vector<Vertex> out;
  for (std::string& t : tokens) {
    std::string tok = strip(t);
    if (tok.empty()) continue;
    if (tok.front() == '(')
      out.push_back(parse_vertex(tok));
    else
      out.push_back(parse_module_token(type, tok));
  }
  return out;
}

QuiverGraph build_quiver(const StableCategory& cat, const ObjectSet* highlight) {
  QuiverGraph g;
  g.algebra = cat.type();
  g.nodes = cat.objects();
  auto idx = [&](Vertex v) { return cat.index_of(cat.canonicalize(v)); };
  std::set<std::pair<int, int>> arrows;
  for (int i = 0; i < (int)g.nodes.size(); ++i) {
    for (Vertex w : zdelta_successors(cat.diagram(), g.nodes[i])) arrows.insert({i, idx(w)});
    g.tau.push_back({i, idx(tau(g.nodes[i]))});
  }
  g.arrows.assign(arrows.begin(), arrows.end());
  if (highlight)
    for (Vertex v : highlight->members) g.highlight.push_back(idx(v));
  std::sort(g.highlight.begin(), g.highlight.end());
  return g;
}

std::string quiver_to_dot(const QuiverGraph& g) {
  std::string out;
  out += "digraph stable_ar_quiver {\n";
  out += "  label=\"" + g.algebra.name() + "\";\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box];\n";
  std::set<int> hi(g.highlight.begin(), g.highlight.end());
  for (int i = 0; i < (int)g.nodes.size(); ++i) {
    out += "  \"" + to_string(g.nodes[i]) + "\"";
    if (hi.count(i)) out += " [style=filled, fillcolor=lightblue]";
    out += ";\n";
  }
  for (auto [a, b] : g.arrows)
    out += "  \"" + to_string(g.nodes[a]) + "\" -> \"" + to_string(g.nodes[b]) + "\";\n";
  for (auto [a, b] : g.tau)
    out += "  \"" + to_string(g.nodes[a]) + "\" -> \"" + to_string(g.nodes[b]) +
           "\" [style=dashed, constraint=false];\n";
  out += "}\n";
  return out;
}

std::string quiver_to_json(const QuiverGraph& g) {
  json j;
  j["algebra"] = json::parse(algebra_to_json(g.algebra));
  j["nodes"] = json::array();
  for (Vertex v : g.nodes) j["nodes"].push_back(to_string(v));
  j["arrows"] = g.arrows;
  j["tau"] = g.tau;
  j["highlight"] = g.highlight;
  return j.dump(2) + "\n";
}

QuiverGraph quiver_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("quiver document is not valid JSON: ") + e.what());
  }
  QuiverGraph g;
  g.algebra = parse_algebra_json(j.at("algebra").dump());
  for (const auto& s : j.at("nodes")) g.nodes.push_back(parse_vertex(s.get<std::string>()));
  for (const auto& a : j.at("arrows")) g.arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  for (const auto& a : j.at("tau")) g.tau.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  if (j.contains("highlight"))
    for (const auto& h : j.at("highlight")) g.highlight.push_back(h.get<int>());
  return g;
}

bool same_quiver(const QuiverGraph& a, const QuiverGraph& b) {
  auto key = [](const QuiverGraph& g) {
    auto arrows = g.arrows;
    auto tau = g.tau;
    std::sort(arrows.begin(), arrows.end());
    std::sort(tau.begin(), tau.end());
    return std::tuple{g.algebra.name(), g.nodes, arrows, tau, g.highlight};
  };
  return key(a) == key(b);
}

}  // namespace smskit
