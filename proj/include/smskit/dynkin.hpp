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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "smskit/error.hpp"

namespace smskit {

enum class Family : std::uint8_t { A, D, E };

char family_letter(Family f);

/// Vertex of the stable translation quiver ZDelta, written as a coordinate
/// (p, q): p is the column (tau shifts it by -1) and q in [1, n] is the row.
struct Vertex {
  int p = 0;
  int q = 1;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    std::uint64_t k = (std::uint64_t(std::uint32_t(v.p)) << 32) | std::uint32_t(v.q);
    return std::hash<std::uint64_t>{}(k);
  }
};

/// Simply laced Dynkin diagram with a fixed orientation and vertex
/// enumeration:
///
///   A_n:  1 -> 2 -> ... -> n
///   D_n:  1 -> 2 -> ... -> n-2 -> n-1,  n-2 -> n          (n >= 4)
///   E_n:  2 -> 1, 3 -> 2, 3 -> 4 -> ... -> n-1, 3 -> n    (n = 6, 7, 8)
///
/// m_delta is the path-length bound of the mesh category: every path of
/// length >= m_delta vanishes in k(ZDelta).
class DynkinDiagram {
 public:
  DynkinDiagram() : topo_{1} {}  // A_1
  static DynkinDiagram make(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  int m_delta() const { return m_delta_; }

  /// Oriented edges q -> q' of the chosen orientation.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Rows in a topological order of the orientation (sources first).
  const std::vector<int>& topo_rows() const { return topo_; }

  std::string name() const;  // "A_3", "D_6", ...

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.family_ == b.family_ && a.n_ == b.n_;
  }

 private:
  Family family_ = Family::A;
  int n_ = 1;
  int m_delta_ = 1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> topo_;
};

/// tau^power(p, q) = (p - power, q).
inline Vertex tau(Vertex v, int power = 1) { return Vertex{v.p - power, v.q}; }

/// Arrow targets of v in ZDelta: (p, q') for each edge q -> q' and
/// (p + 1, u) for each edge u -> q.
std::vector<Vertex> zdelta_successors(const DynkinDiagram& d, Vertex v);

/// Automorphism kind of ZDelta attached to an Asashiba type; the coordinate
/// action is pinned by arrow preservation, order t, and commutation with tau
/// (see apply_sigma).
enum class SigmaKind : std::uint8_t { identity, a_flip, d_swap, d4_triality, e6_flip };

const char* sigma_kind_name(SigmaKind k);

/// Asashiba type (Delta, f, t) of an RFS algebra, together with the derived
/// quotient data of its stable AR quiver ZDelta / <sigma tau^-r>.
struct RfsType {
  DynkinDiagram diagram;
  long long f_num = 1;  // f kept exactly as given (not reduced); the
  long long f_den = 1;  // classification reads the fraction literally
  int torsion = 1;      // t = order of sigma
  SigmaKind sigma = SigmaKind::identity;
  int r = 1;             // f * m_delta
  int simple_count = 1;  // n * f
  bool symmetric = false;
  bool standard = true;  // metadata only; a non-standard algebra shares the
                         // combinatorics of its standard counterpart

  std::string name() const;  // "(D_6, 1/3, 1)"
  int object_count() const { return diagram.n() * r; }
};

/// Checks (family, n, f, t) against the classification of RFS types and
/// returns the type with r = f*m_delta and nf derived exactly.
/// `standard = false` is only accepted for types (D_{3m}, 1/3, 1).
RfsType validate_type(Family family, int n, long long f_num, long long f_den, int t,
                      bool standard = true);

/// The automorphism sigma of ZDelta for this type, applied to v.
Vertex apply_sigma(const RfsType& type, Vertex v);

/// (sigma tau^-r)^z applied to v; z may be negative.
Vertex apply_generator(const RfsType& type, Vertex v, int z = 1);

/// Unique representative of the <sigma tau^-r>-orbit of v with p in
/// [0, t*r), minimal in (p, q) lexicographic order among those.
Vertex canonical(const RfsType& type, Vertex v);

/// The n*r canonical vertices, sorted by (p, q); one per indecomposable
/// non-projective module.
std::vector<Vertex> all_objects(const RfsType& type);

}  // namespace smskit
