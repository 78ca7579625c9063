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

#pragma once

#include <string>
#include <vector>

#include "smskit/stable.hpp"

namespace smskit {

/// Algebra spec document, e.g. {"family":"D","n":6,"f":"1/3","t":1}.
/// "f" may be an integer or a "num/den" string; "t" defaults to 1;
/// "standard" defaults to true.
RfsType parse_algebra_json(const std::string& text);
std::string algebra_to_json(const RfsType& type);

/// Vertex literal "(p,q)".
Vertex parse_vertex(const std::string& text);

/// Comma-separated object list.  Tokens are vertex literals; for Nakayama
/// types (A_n, s/n, 1) also module literals "X_i(m)" and stacked-socle
/// literals "a/b/c" (top first, socle last).
std::vector<Vertex> parse_object_list(const RfsType& type, const std::string& text);

/// The quotient stable AR quiver as a graph document.
struct QuiverGraph {
  RfsType algebra;
  std::vector<Vertex> nodes;                  // canonical, sorted
  std::vector<std::pair<int, int>> arrows;    // node index pairs
  std::vector<std::pair<int, int>> tau;       // v -> tau(v)
  std::vector<int> highlight;                 // node indices
};

QuiverGraph build_quiver(const StableCategory& cat, const ObjectSet* highlight = nullptr);
std::string quiver_to_dot(const QuiverGraph& g);
std::string quiver_to_json(const QuiverGraph& g);
QuiverGraph quiver_from_json(const std::string& text);

bool same_quiver(const QuiverGraph& a, const QuiverGraph& b);

}  // namespace smskit
