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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "smskit/engine.hpp"

using namespace smskit;

namespace {

StableCategory make_cat(Family f, int n, long long num, long long den, int t) {
  return StableCategory(validate_type(f, n, num, den, t));
}

}  // namespace

TEST_CASE("enumerate on (A_2, 2/2, 1)") {
  StableCategory cat = make_cat(Family::A, 2, 2, 2, 1);
  EnumerateResult res = enumerate_sms(cat);
  CHECK(res.exhaustive);
  REQUIRE(res.sms.size() == 2);
  CHECK(res.sms[0].members == std::vector<Vertex>{{0, 1}, {1, 1}});
  CHECK(res.sms[1].members == std::vector<Vertex>{{0, 2}, {1, 2}});
}

TEST_CASE("enumerate on (A_1, s, 1): only the full set") {
  StableCategory cat = make_cat(Family::A, 1, 3, 1, 1);
  EnumerateResult res = enumerate_sms(cat);
  REQUIRE(res.sms.size() == 1);
  CHECK(res.sms[0].members == cat.objects());
}

TEST_CASE("every enumerated sms has cardinality nf and is nu-stable") {
  for (auto&& cat : {make_cat(Family::A, 3, 4, 3, 1), make_cat(Family::D, 4, 1, 1, 2),
                     make_cat(Family::D, 6, 1, 3, 1)}) {
    for (const ObjectSet& s : enumerate_sms(cat).sms) {
      CHECK((int)s.size() == cat.type().simple_count);
      CHECK(cat.is_nakayama_stable(s));
      CHECK(cat.is_sms(s));
    }
  }
}

TEST_CASE("characterization holds with sigma twists, including odd-n row swaps") {
  // (D_5, 1, 2) exercises nu against the row swap on an odd diagram;
  // (E_6, 1, 2) the arm flip.
  for (auto&& cat : {make_cat(Family::D, 5, 1, 1, 2), make_cat(Family::E, 6, 1, 1, 2)}) {
    CharacterizationReport rep = verify_characterization(cat);
    CHECK(rep.exhaustive);
    CHECK(rep.lists_equal);
    CHECK(rep.by_definition.size() > 0);
    for (Vertex v : cat.objects())
      CHECK(cat.is_orthogonal_system(cat.nu_orbit(v)));
  }
}

TEST_CASE("no sms of a (D_6, s/3, 1) type touches the middle rows") {
  for (auto&& cat : {make_cat(Family::D, 6, 1, 3, 1), make_cat(Family::D, 6, 2, 3, 1)}) {
    for (const ObjectSet& s : enumerate_sms(cat).sms)
      for (Vertex v : s.members) CHECK((v.q < 2 || v.q >= 5));
  }
}

TEST_CASE("tiny budget reports non-exhaustive") {
  StableCategory cat = make_cat(Family::D, 4, 1, 1, 1);
  SearchConfig cfg;
  cfg.max_nodes = 1;
  cfg.verify_each = false;
  EnumerateResult res = enumerate_sms(cat, cfg);
  CHECK_FALSE(res.exhaustive);
}

TEST_CASE("parallel search yields the same list") {
  StableCategory cat = make_cat(Family::D, 4, 1, 1, 1);
  SearchConfig par;
  par.threads = 4;
  CHECK(enumerate_sms(cat).sms == enumerate_sms(cat, par).sms);
}

TEST_CASE("extension rejects bad inputs") {
  StableCategory cat = make_cat(Family::A, 3, 4, 3, 1);
  // The orthogonal but not Nakayama-stable fixture.
  ObjectSet fixture = cat.make_set({{0, 1}, {1, 3}, {2, 1}, {3, 3}});
  CHECK_THROWS_AS(extend_to_sms(cat, fixture), Error);
  try {
    extend_to_sms(cat, fixture);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_violated);
  }
  // Not an orthogonal system either.
  CHECK_THROWS_AS(extend_to_sms(cat, cat.make_set({{0, 1}, {0, 2}})), Error);
}

TEST_CASE("extension from the empty system") {
  for (auto&& cat : {make_cat(Family::D, 4, 1, 1, 1), make_cat(Family::A, 3, 4, 3, 1),
                     make_cat(Family::D, 6, 1, 3, 1)}) {
    ExtensionResult res = extend_to_sms(cat, ObjectSet{});
    CHECK(res.trace.terminated);
    CHECK(res.trace.steps.size() >= 1);
    CHECK(cat.is_sms(res.sms));
  }
}

TEST_CASE("extension from one nu-orbit keeps the input") {
  StableCategory cat = make_cat(Family::D, 4, 1, 1, 1);
  ObjectSet seed = cat.nu_orbit({0, 1});
  ExtensionResult res = extend_to_sms(cat, seed);
  CHECK(cat.is_sms(res.sms));
  for (Vertex v : seed.members) CHECK(res.sms.contains(v));
}

TEST_CASE("extension traces shrink the perp strictly") {
  StableCategory cat = make_cat(Family::D, 6, 2, 3, 1);
  ExtensionResult res = extend_to_sms(cat, ObjectSet{});
  std::size_t prev = cat.objects().size() + 1;
  for (const ExtensionStep& st : res.trace.steps) {
    CHECK(st.perp_after < st.perp_before);
    CHECK(st.perp_before < prev + 1);
    prev = st.perp_after;
  }
  CHECK(res.trace.steps.back().perp_after == 0);
}

TEST_CASE("verify_characterization on small algebras") {
  StableCategory a2 = make_cat(Family::A, 2, 2, 2, 1);
  CharacterizationReport rep = verify_characterization(a2);
  CHECK(rep.lists_equal);
  CHECK(rep.exhaustive);
  CHECK(rep.by_definition.size() == 2);
  CHECK(!rep.high_orbit_census_ok.has_value());

  StableCategory a3 = make_cat(Family::A, 3, 4, 3, 1);
  CharacterizationReport rep3 = verify_characterization(a3);
  CHECK(rep3.lists_equal);
  ObjectSet fixture = a3.make_set({{0, 1}, {1, 3}, {2, 1}, {3, 3}});
  for (const ObjectSet& s : rep3.by_definition) CHECK(s != fixture);
  for (const ObjectSet& s : rep3.by_conditions) CHECK(s != fixture);

  StableCategory d6 = make_cat(Family::D, 6, 1, 3, 1);
  CharacterizationReport rep6 = verify_characterization(d6);
  CHECK(rep6.lists_equal);
  REQUIRE(rep6.high_orbit_census_ok.has_value());
  CHECK(*rep6.high_orbit_census_ok);
}

TEST_CASE("deterministic output") {
  StableCategory cat = make_cat(Family::D, 4, 1, 1, 3);
  EnumerateResult a = enumerate_sms(cat);
  EnumerateResult b = enumerate_sms(cat);
  CHECK(a.sms == b.sms);
}

namespace {

// All Nakayama-stable orthogonal systems: unions of pairwise-orthogonal
// orthogonal nu-orbits, any cardinality.
std::vector<ObjectSet> all_nu_stable_orthogonal(const StableCategory& cat) {
  std::vector<ObjectSet> orbits;
  std::set<Vertex> seen;
  for (Vertex v : cat.objects())
    if (!seen.count(v)) {
      ObjectSet orb = cat.nu_orbit(v);
      for (Vertex w : orb.members) seen.insert(w);
      if (cat.is_orthogonal_system(orb)) orbits.push_back(orb);
    }
  std::vector<ObjectSet> out;
  std::vector<Vertex> current;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == orbits.size()) {
      std::vector<Vertex> s = current;
      std::sort(s.begin(), s.end());
      ObjectSet set{std::move(s)};
      if (cat.is_orthogonal_system(set)) out.push_back(std::move(set));
      return;
    }
    self(self, k + 1);
    current.insert(current.end(), orbits[k].members.begin(), orbits[k].members.end());
    self(self, k + 1);
    current.resize(current.size() - orbits[k].size());
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("empty two-sided perp characterizes sms among nu-stable orthogonal systems") {
  for (auto&& cat : {make_cat(Family::A, 2, 2, 2, 1), make_cat(Family::A, 3, 4, 3, 1),
                     make_cat(Family::D, 4, 1, 1, 3), make_cat(Family::D, 6, 1, 3, 1)}) {
    int checked = 0;
    for (const ObjectSet& s : all_nu_stable_orthogonal(cat)) {
      CHECK(cat.is_sms(s) == cat.two_sided_perp(s).empty());
      ++checked;
    }
    CHECK(checked > 1);
  }
}
