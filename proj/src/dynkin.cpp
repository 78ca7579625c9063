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

#include "smskit/dynkin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace smskit {

namespace {

// Euclidean remainder in [0, m).
int mod_floor(int a, int m) {
  int v = a % m;
  return v < 0 ? v + m : v;
}

std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> indeg(n + 1, 0);
  for (auto [u, v] : edges) indeg[v]++;
  std::vector<int> order;
  std::set<int> ready;
  for (int q = 1; q <= n; ++q)
    if (indeg[q] == 0) ready.insert(q);
  while (!ready.empty()) {
    int q = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(q);
    for (auto [u, v] : edges)
      if (u == q && --indeg[v] == 0) ready.insert(v);
  }
  if ((int)order.size() != n) throw std::logic_error("diagram orientation is not acyclic");
  return order;
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

const char* sigma_kind_name(SigmaKind k) {
  switch (k) {
    case SigmaKind::identity: return "identity";
    case SigmaKind::a_flip: return "A_flip";
    case SigmaKind::d_swap: return "D_swap";
    case SigmaKind::d4_triality: return "D4_triality";
    case SigmaKind::e6_flip: return "E6_flip";
  }
  return "?";
}

DynkinDiagram DynkinDiagram::make(Family family, int n) {
  DynkinDiagram d;
  d.family_ = family;
  d.n_ = n;
  switch (family) {
    case Family::A:
      if (n < 1) fail(Errc::out_of_range, "A_n needs n >= 1");
      d.m_delta_ = n;
      for (int q = 1; q < n; ++q) d.edges_.push_back({q, q + 1});
      break;
    case Family::D:
      if (n < 4) fail(Errc::out_of_range, "D_n needs n >= 4");
      d.m_delta_ = 2 * n - 3;
      for (int q = 1; q <= n - 2; ++q) d.edges_.push_back({q, q + 1});
      d.edges_.push_back({n - 2, n});
      break;
    case Family::E:
      if (n < 6 || n > 8) fail(Errc::out_of_range, "E_n needs n in {6,7,8}");
      d.m_delta_ = n == 6 ? 11 : n == 7 ? 17 : 29;
      d.edges_.push_back({2, 1});
      d.edges_.push_back({3, 2});
      for (int q = 3; q < n - 1; ++q) d.edges_.push_back({q, q + 1});
      d.edges_.push_back({3, n});
      break;
  }
  d.topo_ = topo_order(n, d.edges_);
  return d;
}

std::string DynkinDiagram::name() const {
  return std::string(1, family_letter(family_)) + "_" + std::to_string(n_);
}

std::vector<Vertex> zdelta_successors(const DynkinDiagram& d, Vertex v) {
  std::vector<Vertex> out;
  for (auto [u, w] : d.edges()) {
    if (u == v.q) out.push_back({v.p, w});
    if (w == v.q) out.push_back({v.p + 1, u});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RfsType::name() const {
  std::string f = std::to_string(f_num);
  if (f_den != 1) f += "/" + std::to_string(f_den);
  return "(" + diagram.name() + ", " + f + ", " + std::to_string(torsion) + ")";
}

RfsType validate_type(Family family, int n, long long f_num, long long f_den, int t,
                      bool standard) {
  if (n < 1) fail(Errc::out_of_range, "n must be positive");
  if (f_num < 1 || f_den < 1) fail(Errc::out_of_range, "f must be a positive rational");
  if (t < 1 || t > 3) fail(Errc::out_of_range, "t must be in {1,2,3}");

  RfsType ty;
  ty.f_num = f_num;
  ty.f_den = f_den;
  ty.torsion = t;
  ty.standard = true;

  // The fraction is read literally: an integer f must be given with
  // denominator 1, and the D_{3m} families with denominator exactly 3.
  const bool integral_f = f_den == 1;
  bool d3m_quotient = false;  // family (D_{3m}, s/3, 1)

  switch (family) {
    case Family::A:
      if (t == 1) {
        // (A_n, s/n, 1): any f with s = n*f a positive integer.
        if ((f_num * n) % f_den != 0)
          fail(Errc::non_integral_invariant,
               "type (A_" + std::to_string(n) + ", " + std::to_string(f_num) + "/" +
                   std::to_string(f_den) + ", 1): simple count n*f is not an integer");
      } else if (t == 2) {
        // (A_{2p+1}, s, 2) with p >= 1.
        if (!integral_f || n < 3 || n % 2 == 0)
          fail(Errc::type_not_in_classification,
               "t = 2 on type A needs A_{2p+1} (odd n >= 3) and integral f");
        ty.sigma = SigmaKind::a_flip;
      } else {
        fail(Errc::type_not_in_classification, "no type A family has t = 3");
      }
      break;
    case Family::D:
      if (n < 4) fail(Errc::type_not_in_classification, "type D needs n >= 4");
      if (t == 1) {
        if (integral_f) {
          // (D_n, s, 1).
        } else if (f_den == 3) {
          // (D_{3m}, s/3, 1) with m >= 2 and 3 not dividing s.
          if (n % 3 != 0 || n / 3 < 2)
            fail(Errc::type_not_in_classification,
                 "f = s/3 on type D needs D_{3m} with m >= 2");
          if (f_num % 3 == 0)
            fail(Errc::type_not_in_classification,
                 "type (D_{3m}, s/3, 1) needs 3 not dividing s");
          d3m_quotient = true;
        } else {
          fail(Errc::type_not_in_classification,
               "type D frequencies are integral or of the form s/3");
        }
      } else if (t == 2) {
        if (!integral_f) fail(Errc::type_not_in_classification, "(D_n, s, 2) needs integral f");
        ty.sigma = SigmaKind::d_swap;
      } else {
        if (!integral_f || n != 4)
          fail(Errc::type_not_in_classification, "t = 3 only occurs as (D_4, s, 3)");
        ty.sigma = SigmaKind::d4_triality;
      }
      break;
    case Family::E:
      if (!integral_f) fail(Errc::type_not_in_classification, "type E needs integral f");
      if (t == 1) {
        // (E_n, s, 1), n in {6,7,8}; range checked by DynkinDiagram::make.
      } else if (t == 2) {
        if (n != 6) fail(Errc::type_not_in_classification, "t = 2 only occurs as (E_6, s, 2)");
        ty.sigma = SigmaKind::e6_flip;
      } else {
        fail(Errc::type_not_in_classification, "no type E family has t = 3");
      }
      break;
  }

  ty.diagram = DynkinDiagram::make(family, n);
  const long long m = ty.diagram.m_delta();
  if ((f_num * m) % f_den != 0)
    fail(Errc::non_integral_invariant, "quotient shift r = f*m_delta is not an integer");
  ty.r = static_cast<int>(f_num * m / f_den);
  if ((f_num * n) % f_den != 0)
    fail(Errc::non_integral_invariant, "simple count n*f is not an integer");
  ty.simple_count = static_cast<int>(f_num * n / f_den);
  if (ty.r < 1 || ty.simple_count < 1)
    fail(Errc::non_integral_invariant, "r and n*f must be positive");

  // Symmetric types: (A_n, s/n, 1) with s | n; (D_{3m}, 1/3, 1);
  // (D_n, 1, 1); (E_n, 1, 1).
  if (family == Family::A && t == 1)
    ty.symmetric = n % ty.simple_count == 0;
  else if (d3m_quotient)
    ty.symmetric = f_num == 1;
  else
    ty.symmetric = t == 1 && integral_f && f_num == 1 && family != Family::A;

  if (!standard) {
    if (!(d3m_quotient && f_num == 1))
      fail(Errc::type_not_in_classification,
           "non-standard algebras exist only in type (D_{3m}, 1/3, 1)");
    ty.standard = false;
  }
  return ty;
}

Vertex apply_sigma(const RfsType& type, Vertex v) {
  const int n = type.diagram.n();
  switch (type.sigma) {
    case SigmaKind::identity:
      return v;
    case SigmaKind::a_flip:
      // (a, b) -> (a + b - (n+1)/2, n+1-b); the column shift is forced by
      // sigma^2 = id together with arrow preservation.
      return Vertex{v.p + v.q - (n + 1) / 2, n + 1 - v.q};
    case SigmaKind::d_swap:
      if (v.q == n - 1) return Vertex{v.p, n};
      if (v.q == n) return Vertex{v.p, n - 1};
      return v;
    case SigmaKind::d4_triality:
      // rows 1 -> 3 -> 4 -> 1, row 2 fixed; shifts forced by sigma^3 = id.
      switch (v.q) {
        case 1: return Vertex{v.p - 1, 3};
        case 3: return Vertex{v.p, 4};
        case 4: return Vertex{v.p + 1, 1};
        default: return v;
      }
    case SigmaKind::e6_flip:
      // Swaps the two length-2 arms; no column shift is needed for this
      // orientation (both arms point away from the branch vertex).
      switch (v.q) {
        case 1: return Vertex{v.p, 5};
        case 5: return Vertex{v.p, 1};
        case 2: return Vertex{v.p, 4};
        case 4: return Vertex{v.p, 2};
        default: return v;
      }
  }
  return v;
}

namespace {

Vertex apply_sigma_inverse(const RfsType& type, Vertex v) {
  if (type.sigma == SigmaKind::d4_triality)
    return apply_sigma(type, apply_sigma(type, v));  // order 3
  return apply_sigma(type, v);                       // the others are involutions
}

}  // namespace

Vertex apply_generator(const RfsType& type, Vertex v, int z) {
  while (z > 0) {
    v = apply_sigma(type, Vertex{v.p + type.r, v.q});
    --z;
  }
  while (z < 0) {
    v = apply_sigma_inverse(type, v);
    v.p -= type.r;
    ++z;
  }
  return v;
}

Vertex canonical(const RfsType& type, Vertex v) {
  const int n = type.diagram.n();
  if (v.q < 1 || v.q > n)
    fail(Errc::out_of_range, "vertex row out of [1, " + std::to_string(n) + "]");
  const int span = type.torsion * type.r;
  Vertex best{};
  bool have = false;
  Vertex w = v;
  for (int z = 0; z < type.torsion; ++z) {
    if (z > 0) w = apply_generator(type, w, 1);
    Vertex cand{mod_floor(w.p, span), w.q};
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  }
  return best;
}

std::vector<Vertex> all_objects(const RfsType& type) {
  const int n = type.diagram.n();
  const int span = type.torsion * type.r;
  std::set<Vertex> reps;
  for (int p = 0; p < span; ++p)
    for (int q = 1; q <= n; ++q) reps.insert(canonical(type, Vertex{p, q}));
  std::vector<Vertex> out(reps.begin(), reps.end());
  if ((int)out.size() != type.object_count())
    throw std::logic_error("quotient orbit count differs from n*r for " + type.name());
  return out;
}

}  // namespace smskit
