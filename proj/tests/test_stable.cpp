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

#include <random>

#include "smskit/stable.hpp"

using namespace smskit;

namespace {

StableCategory make_cat(Family f, int n, long long num, long long den, int t) {
  return StableCategory(validate_type(f, n, num, den, t));
}

}  // namespace

TEST_CASE("covering sums on (A_2, 2/2, 1)") {
  StableCategory cat = make_cat(Family::A, 2, 2, 2, 1);
  CHECK(cat.stable_hom({0, 1}, {0, 1}) == 1);
  CHECK(cat.stable_hom({0, 1}, {1, 1}) == 0);
  CHECK(cat.stable_hom({1, 2}, {0, 1}) == 1);  // picked up at generator power 1

  auto terms = cat.covering_terms({1, 2}, {0, 1});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].z == 1);
  CHECK(terms[0].lift == Vertex{2, 1});
  CHECK(terms[0].dim == 1);
}

TEST_CASE("nu and nu orbits") {
  StableCategory a2 = make_cat(Family::A, 2, 2, 2, 1);
  for (Vertex v : a2.objects()) CHECK(a2.nu(v) == v);  // symmetric

  StableCategory a3 = make_cat(Family::A, 3, 4, 3, 1);
  CHECK(a3.nu({0, 1}) == Vertex{3, 1});
  CHECK(a3.nu_orbit({0, 1}).size() == 4);

  StableCategory d6 = make_cat(Family::D, 6, 1, 3, 1);
  for (Vertex v : d6.objects()) CHECK(d6.nu(v) == v);  // symmetric, Nakayama functor trivial
}

TEST_CASE("stable bricks") {
  StableCategory d6 = make_cat(Family::D, 6, 1, 3, 1);
  CHECK(d6.is_stable_brick({0, 1}));
  CHECK_FALSE(d6.is_stable_brick({0, 3}));

  StableCategory d42 = make_cat(Family::D, 4, 1, 1, 2);
  for (Vertex v : d42.objects()) CHECK(d42.is_stable_brick(v));
}

TEST_CASE("orthogonal systems") {
  StableCategory a2 = make_cat(Family::A, 2, 2, 2, 1);
  CHECK(a2.is_orthogonal_system(a2.make_set({})));
  CHECK_FALSE(a2.is_orthogonal_system(a2.make_set({{0, 1}, {1, 2}})));
  CHECK(a2.is_orthogonal_system(a2.make_set({{0, 1}, {1, 1}})));

  // Simple modules of a Nakayama algebra: the whole row q = 1.
  StableCategory nak = make_cat(Family::A, 6, 3, 6, 1);
  std::vector<Vertex> simples;
  for (Vertex v : nak.objects())
    if (v.q == 1) simples.push_back(v);
  CHECK(simples.size() == 3);
  ObjectSet s = nak.make_set(simples);
  CHECK(nak.is_orthogonal_system(s));
  CHECK(nak.is_sms(s));
}

TEST_CASE("check_all on the non-Nakayama-stable fixture") {
  // Four simples, Loewy length 4: objects X_1(1), X_4(3), X_3(1), X_2(3)
  // at vertices (0,1), (1,3), (2,1), (3,3).
  StableCategory cat = make_cat(Family::A, 3, 4, 3, 1);
  ObjectSet s = cat.make_set({{0, 1}, {1, 3}, {2, 1}, {3, 3}});
  CheckReport rep = cat.check_all(s);
  CHECK(rep.orthogonal);
  CHECK(rep.cardinality_ok);
  CHECK_FALSE(rep.nakayama_stable);
  CHECK_FALSE(rep.weak_generating);
  CHECK_FALSE(rep.is_sms);
  CHECK(!rep.witnesses.empty());
  bool has_nak_witness = false;
  for (const Witness& w : rep.witnesses) has_nak_witness |= w.condition == "nakayama_stable";
  CHECK(has_nak_witness);
}

TEST_CASE("check_all on an sms of (A_2, 2/2, 1)") {
  StableCategory cat = make_cat(Family::A, 2, 2, 2, 1);
  CheckReport rep = cat.check_all(cat.make_set({{0, 2}, {1, 2}}));
  CHECK(rep.orthogonal);
  CHECK(rep.cardinality_ok);
  CHECK(rep.nakayama_stable);
  CHECK(rep.weak_generating);
  CHECK(rep.is_sms);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("empty set is reported, not thrown") {
  StableCategory cat = make_cat(Family::A, 2, 2, 2, 1);
  CheckReport rep = cat.check_all(ObjectSet{});
  CHECK(rep.orthogonal);
  CHECK_FALSE(rep.weak_generating);
  CHECK_FALSE(rep.is_sms);
  bool mentions_empty = false;
  for (const Witness& w : rep.witnesses)
    mentions_empty |= w.detail.find("EmptySetNotSms") != std::string::npos;
  CHECK(mentions_empty);
}

TEST_CASE("perpendicular object sets") {
  StableCategory cat = make_cat(Family::A, 2, 2, 2, 1);
  ObjectSet everything = cat.make_set(cat.objects());
  CHECK(cat.left_perp(everything).empty());
  CHECK(cat.right_perp(everything).empty());
  CHECK(cat.two_sided_perp(everything).empty());
  CHECK(cat.two_sided_perp(ObjectSet{}).members == cat.objects());

  // High vertex on (D_6, 1/3, 1): the printed two-sided perp of (1,6) is
  // {(3,1)}, whose canonical representative is (0,1).
  StableCategory d6 = make_cat(Family::D, 6, 1, 3, 1);
  ObjectSet perp = d6.two_sided_perp(d6.make_set({{1, 6}}));
  CHECK(perp.members == std::vector<Vertex>{{0, 1}});
  CHECK(d6.canonicalize({3, 1}) == Vertex{0, 1});
}

TEST_CASE("two-sided perp is symmetric in its argument") {
  StableCategory cat = make_cat(Family::D, 6, 2, 3, 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, (int)cat.objects().size() - 1);
  for (int it = 0; it < 200; ++it) {
    Vertex x = cat.objects()[pick(rng)];
    Vertex y = cat.objects()[pick(rng)];
    if (x == y) continue;
    bool a = cat.two_sided_perp(cat.make_set({x})).contains(y);
    bool b = cat.two_sided_perp(cat.make_set({y})).contains(x);
    CHECK(a == b);
  }
}

TEST_CASE("covering window is already stable at scale one") {
  std::mt19937 rng(11);
  for (auto&& cat :
       {make_cat(Family::A, 3, 4, 3, 1), make_cat(Family::A, 5, 1, 1, 2),
        make_cat(Family::D, 4, 1, 1, 3), make_cat(Family::D, 6, 2, 3, 1)}) {
    std::uniform_int_distribution<int> pick(0, (int)cat.objects().size() - 1);
    for (int it = 0; it < 100; ++it) {
      Vertex x = cat.objects()[pick(rng)];
      Vertex y = cat.objects()[pick(rng)];
      CHECK(cat.stable_hom_windowed(x, y, 1) == cat.stable_hom_windowed(x, y, 2));
    }
  }
}

TEST_CASE("make_set rejects duplicates after canonicalization") {
  StableCategory cat = make_cat(Family::A, 2, 2, 2, 1);
  CHECK_THROWS_AS(cat.make_set({{0, 1}, {2, 1}}), Error);  // (2,1) == (0,1) mod tau^-2
}

TEST_CASE("Serre support identities survive the covering quotient") {
  // For type D categories: objects mapped into X's support equal the objects
  // X maps into, after shifting the target by n-2 columns (rows n-1/n read
  // through the parity of n).
  for (auto&& cat : {make_cat(Family::D, 4, 1, 1, 1), make_cat(Family::D, 4, 1, 1, 2),
                     make_cat(Family::D, 5, 1, 1, 1), make_cat(Family::D, 6, 1, 3, 1),
                     make_cat(Family::D, 6, 2, 3, 1)}) {
    const int n = cat.diagram().n();
    auto supp_from = [&](Vertex x) {
      std::vector<Vertex> s;
      for (Vertex z : cat.objects())
        if (cat.stable_hom(x, z) > 0) s.push_back(z);
      return s;
    };
    auto supp_into = [&](Vertex y) {
      std::vector<Vertex> s;
      for (Vertex z : cat.objects())
        if (cat.stable_hom(z, y) > 0) s.push_back(z);
      return s;
    };
    for (Vertex x : cat.objects()) {
      if (x.q <= n - 2) {
        CHECK(supp_into(cat.canonicalize({x.p + n - 2, x.q})) == supp_from(x));
      } else if (x.q == n - 1) {
        int row = n % 2 == 0 ? n - 1 : n;
        CHECK(supp_into(cat.canonicalize({x.p + n - 2, row})) == supp_from(x));
      }
    }
  }
}
