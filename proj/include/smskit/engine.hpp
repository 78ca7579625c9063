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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smskit/nakayama.hpp"
#include "smskit/stable.hpp"

namespace smskit {

enum class ExtensionStrategy : std::uint8_t { automatic, generic, nakayama, d3m };

struct SearchConfig {
  long long max_nodes = 50'000'000;
  bool verify_each = true;  // re-check every emitted sms with check_all
  ExtensionStrategy strategy = ExtensionStrategy::automatic;
  int threads = 1;  // parallel fan-out of the top-level search branches
};

/// All simple-minded systems of the category, by backtracking over nu-orbits:
/// an sms is nu-stable, so it is a union of nu-orbits; only orbits that are
/// orthogonal systems can occur, and the selected orbits must be pairwise
/// orthogonal with total cardinality equal to the number of simples.
/// Results are sorted lexicographically.  `exhaustive` is false when the node
/// budget ran out (partial results are still returned).
struct EnumerateResult {
  std::vector<ObjectSet> sms;
  bool exhaustive = true;
  long long nodes = 0;
};

EnumerateResult enumerate_sms(const StableCategory& cat, const SearchConfig& cfg = {});

struct ExtensionStep {
  ObjectSet added_orbit;
  std::size_t perp_before = 0;
  std::size_t perp_after = 0;
};

struct ExtensionTrace {
  std::vector<ExtensionStep> steps;
  bool terminated = false;
};

struct ExtensionResult {
  ObjectSet sms;
  ExtensionTrace trace;
};

/// Extends a Nakayama-stable orthogonal system to an sms by repeatedly
/// adding nu-orbits chosen from the two-sided perp.  Preferred picks follow
/// the per-family strategy (generic / Nakayama gcd-cover / D_{3m} high
/// vertex); every pick is verified and falls back to scanning the perp.
/// Throws PreconditionViolated when the input is not a Nakayama-stable
/// orthogonal system, NoValidAddition if no verified pick exists (which
/// would contradict the extension property).
ExtensionResult extend_to_sms(const StableCategory& cat, const ObjectSet& s,
                              const SearchConfig& cfg = {});

/// Exhaustive check of the sms characterization on one algebra:
///   (i)  all sms by definition: maximal orthogonal systems (an sms receives
///        a nonzero map from everything, so nothing can be added) filtered
///        by orthogonality + weak generation, via maximal-clique search;
///   (ii) all nu-stable orthogonal sets of cardinality nf, via the orbit
///        backtracking of enumerate_sms.
/// Reports list equality; for (D_{3m}, s/3, 1) types also the census that
/// every sms contains exactly one nu-orbit of high vertices.
struct CharacterizationReport {
  std::vector<ObjectSet> by_definition;
  std::vector<ObjectSet> by_conditions;
  bool lists_equal = false;
  bool exhaustive = true;
  long long nodes = 0;
  std::optional<bool> high_orbit_census_ok;  // set for (D_{3m}, s/3, 1) only
  std::vector<std::string> notes;
};

CharacterizationReport verify_characterization(const StableCategory& cat,
                                               const SearchConfig& cfg = {});

}  // namespace smskit
