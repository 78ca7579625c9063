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

#include <algorithm>
#include <set>

#include "smskit/dynkin.hpp"

using namespace smskit;

namespace {

// Straightforward re-encoding of the classification families, kept separate
// from validate_type as a reference predicate for the sweep below.
bool in_classification(Family fam, int n, long long num, long long den, int t) {
  if (n < 1 || num < 1 || den < 1) return false;
  switch (fam) {
    case Family::A:
      if (t == 1) return (num * n) % den == 0;                       // (A_n, s/n, 1)
      if (t == 2) return den == 1 && n >= 3 && n % 2 == 1;           // (A_{2p+1}, s, 2)
      return false;
    case Family::D:
      if (n < 4) return false;
      if (t == 1) {
        if (den == 1) return true;                                   // (D_n, s, 1)
        return den == 3 && n % 3 == 0 && n / 3 >= 2 && num % 3 != 0; // (D_{3m}, s/3, 1)
      }
      if (t == 2) return den == 1;                                   // (D_n, s, 2)
      return t == 3 && den == 1 && n == 4;                           // (D_4, s, 3)
    case Family::E:
      if (den != 1 || n < 6 || n > 8) return false;
      if (t == 1) return true;                                       // (E_n, s, 1)
      return t == 2 && n == 6;                                       // (E_6, s, 2)
  }
  return false;
}

bool accepts(Family fam, int n, long long num, long long den, int t) {
  try {
    validate_type(fam, n, num, den, t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_arrow(const DynkinDiagram& d, Vertex a, Vertex b) {
  auto succ = zdelta_successors(d, a);
  return std::find(succ.begin(), succ.end(), b) != succ.end();
}

}  // namespace

TEST_CASE("diagram data") {
  CHECK(DynkinDiagram::make(Family::A, 5).m_delta() == 5);
  CHECK(DynkinDiagram::make(Family::D, 6).m_delta() == 9);
  CHECK(DynkinDiagram::make(Family::E, 6).m_delta() == 11);
  CHECK(DynkinDiagram::make(Family::E, 7).m_delta() == 17);
  CHECK(DynkinDiagram::make(Family::E, 8).m_delta() == 29);
  CHECK_THROWS_AS(DynkinDiagram::make(Family::D, 3), Error);
  CHECK_THROWS_AS(DynkinDiagram::make(Family::E, 9), Error);

  // E_6 edge set: 2->1, 3->2, 3->4, 4->5, 3->6.
  auto e6 = DynkinDiagram::make(Family::E, 6).edges();
  std::set<std::pair<int, int>> want{{2, 1}, {3, 2}, {3, 4}, {4, 5}, {3, 6}};
  CHECK(std::set<std::pair<int, int>>(e6.begin(), e6.end()) == want);
}

TEST_CASE("validate_type examples") {
  RfsType a3 = validate_type(Family::A, 3, 4, 3, 1);
  CHECK(a3.diagram.m_delta() == 3);
  CHECK(a3.r == 4);
  CHECK(a3.simple_count == 4);
  CHECK_FALSE(a3.symmetric);

  RfsType d6 = validate_type(Family::D, 6, 1, 3, 1);
  CHECK(d6.diagram.m_delta() == 9);
  CHECK(d6.r == 3);
  CHECK(d6.simple_count == 2);
  CHECK(d6.symmetric);

  // s = 3 violates the 3-does-not-divide-s side condition; the fraction is
  // read literally, not reduced.
  CHECK_THROWS_AS(validate_type(Family::D, 6, 3, 3, 1), Error);
  try {
    validate_type(Family::D, 6, 3, 3, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::type_not_in_classification);
  }

  try {
    validate_type(Family::A, 3, 1, 2, 1);  // n*f = 3/2
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_integral_invariant);
  }

  CHECK(validate_type(Family::A, 2, 2, 2, 1).r == 2);
  CHECK(validate_type(Family::A, 1, 5, 1, 1).simple_count == 5);
  CHECK(validate_type(Family::D, 4, 2, 1, 3).sigma == SigmaKind::d4_triality);
  CHECK(validate_type(Family::E, 6, 1, 1, 2).sigma == SigmaKind::e6_flip);
  CHECK_THROWS_AS(validate_type(Family::E, 7, 1, 1, 2), Error);
  CHECK_THROWS_AS(validate_type(Family::A, 4, 1, 1, 2), Error);
  CHECK_THROWS_AS(validate_type(Family::D, 4, 1, 1, 4), Error);

  // Symmetric families.
  CHECK(validate_type(Family::A, 6, 2, 6, 1).symmetric);       // s=2 divides n=6
  CHECK_FALSE(validate_type(Family::A, 6, 4, 6, 1).symmetric); // s=4 does not
  CHECK(validate_type(Family::D, 5, 1, 1, 1).symmetric);
  CHECK_FALSE(validate_type(Family::D, 5, 2, 1, 1).symmetric);
  CHECK_FALSE(validate_type(Family::D, 6, 2, 3, 1).symmetric);
  CHECK(validate_type(Family::E, 8, 1, 1, 1).symmetric);
  CHECK_FALSE(validate_type(Family::E, 6, 1, 1, 2).symmetric);

  // Non-standard metadata only exists for (D_{3m}, 1/3, 1).
  CHECK_FALSE(validate_type(Family::D, 6, 1, 3, 1, false).standard);
  CHECK_THROWS_AS(validate_type(Family::D, 6, 2, 3, 1, false), Error);
}

TEST_CASE("validate_type agrees with the classification sweep") {
  for (Family fam : {Family::A, Family::D, Family::E})
    for (int n = 1; n <= 12; ++n)
      for (long long num = 1; num <= 12; ++num)
        for (long long den = 1; den <= 6; ++den)
          for (int t = 1; t <= 3; ++t)
            CHECK(accepts(fam, n, num, den, t) == in_classification(fam, n, num, den, t));
}

TEST_CASE("tau convention") {
  CHECK(tau({0, 2}, 1) == Vertex{-1, 2});
  CHECK(tau({5, 1}, 0) == Vertex{5, 1});
  CHECK(tau({1, 4}, -3) == Vertex{4, 4});
}

TEST_CASE("sigma is an arrow-preserving automorphism of order t") {
  auto check_type = [&](Family fam, int n, long long num, long long den, int t) {
    RfsType ty = validate_type(fam, n, num, den, t);
    const DynkinDiagram& d = ty.diagram;
    const int W = 3 * ty.r + 4;
    for (int p = -W; p <= W; ++p)
      for (int q = 1; q <= n; ++q) {
        Vertex v{p, q};
        // order t
        Vertex w = v;
        for (int k = 0; k < t; ++k) w = apply_sigma(ty, w);
        CHECK(w == v);
        // commutes with tau
        CHECK(apply_sigma(ty, tau(v)) == tau(apply_sigma(ty, v)));
        // arrows map to arrows
        for (Vertex s : zdelta_successors(d, v))
          CHECK(is_arrow(d, apply_sigma(ty, v), apply_sigma(ty, s)));
      }
  };
  check_type(Family::A, 3, 1, 1, 2);
  check_type(Family::A, 5, 2, 1, 2);
  check_type(Family::A, 7, 1, 1, 2);
  check_type(Family::D, 4, 1, 1, 2);
  check_type(Family::D, 5, 2, 1, 2);
  check_type(Family::D, 6, 1, 1, 2);
  check_type(Family::D, 4, 1, 1, 3);
  check_type(Family::E, 6, 1, 1, 2);
  check_type(Family::D, 6, 1, 3, 1);
}

TEST_CASE("sigma coordinate actions") {
  RfsType a3 = validate_type(Family::A, 3, 1, 1, 2);  // p = 1
  CHECK(apply_sigma(a3, {0, 1}) == Vertex{-1, 3});
  CHECK(apply_sigma(a3, {0, 2}) == Vertex{0, 2});  // middle row fixed

  RfsType d4 = validate_type(Family::D, 4, 1, 1, 2);
  CHECK(apply_sigma(d4, {2, 4}) == Vertex{2, 3});
  CHECK(apply_sigma(d4, {2, 1}) == Vertex{2, 1});

  RfsType tri = validate_type(Family::D, 4, 1, 1, 3);
  CHECK(apply_sigma(tri, {0, 1}) == Vertex{-1, 3});
  CHECK(apply_sigma(tri, {0, 3}) == Vertex{0, 4});
  CHECK(apply_sigma(tri, {0, 4}) == Vertex{1, 1});
  CHECK(apply_sigma(tri, {7, 2}) == Vertex{7, 2});

  RfsType e6 = validate_type(Family::E, 6, 1, 1, 2);
  CHECK(apply_sigma(e6, {3, 1}) == Vertex{3, 5});
  CHECK(apply_sigma(e6, {3, 6}) == Vertex{3, 6});
}

TEST_CASE("canonical representatives") {
  RfsType a2 = validate_type(Family::A, 2, 2, 2, 1);  // r = 2
  CHECK(canonical(a2, {5, 1}) == Vertex{1, 1});

  RfsType a3 = validate_type(Family::A, 3, 4, 3, 1);  // r = 4
  CHECK(canonical(a3, {-1, 2}) == Vertex{3, 2});

  RfsType tri = validate_type(Family::D, 4, 1, 1, 3);  // r = 5
  Vertex moved = apply_generator(tri, {0, 1}, -1);
  CHECK(canonical(tri, moved) == canonical(tri, {0, 1}));

  // Idempotence and orbit invariance on a window.
  for (const RfsType& ty : {a2, a3, tri, validate_type(Family::D, 6, 2, 3, 1),
                            validate_type(Family::A, 5, 1, 1, 2)}) {
    for (int p = -8; p <= 8; ++p)
      for (int q = 1; q <= ty.diagram.n(); ++q) {
        Vertex c = canonical(ty, {p, q});
        CHECK(canonical(ty, c) == c);
        for (int z = -3; z <= 3; ++z)
          CHECK(canonical(ty, apply_generator(ty, {p, q}, z)) == c);
      }
  }
  CHECK_THROWS_AS(canonical(a2, Vertex{0, 3}), Error);
}

TEST_CASE("all_objects") {
  RfsType a2 = validate_type(Family::A, 2, 2, 2, 1);
  std::vector<Vertex> want{{0, 1}, {0, 2}, {1, 1}, {1, 2}};
  CHECK(all_objects(a2) == want);

  CHECK(all_objects(validate_type(Family::A, 3, 4, 3, 1)).size() == 12);
  CHECK(all_objects(validate_type(Family::E, 6, 1, 1, 1)).size() == 66);

  // n * r objects, all fixed by canonical, for a mix of types.
  for (auto&& ty : {validate_type(Family::A, 5, 1, 1, 2), validate_type(Family::D, 4, 1, 1, 2),
                    validate_type(Family::D, 4, 1, 1, 3), validate_type(Family::D, 6, 1, 3, 1),
                    validate_type(Family::D, 6, 2, 3, 1), validate_type(Family::E, 6, 1, 1, 2)}) {
    auto objs = all_objects(ty);
    CHECK((int)objs.size() == ty.object_count());
    for (Vertex v : objs) CHECK(canonical(ty, v) == v);
    CHECK(std::is_sorted(objs.begin(), objs.end()));
  }
}
