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

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "smskit/dynkin.hpp"
#include "smskit/mesh.hpp"

namespace smskit {

/// Finite set of canonical vertices (candidate orthogonal system / sms).
/// Members are strictly increasing; no duplicates.
struct ObjectSet {
  std::vector<Vertex> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Vertex v) const;
  friend auto operator<=>(const ObjectSet&, const ObjectSet&) = default;
};

struct Witness {
  std::string condition;
  std::vector<Vertex> objects;
  std::string detail;
};

struct CheckReport {
  bool orthogonal = false;
  bool cardinality_ok = false;
  bool nakayama_stable = false;
  bool weak_generating = false;
  bool is_sms = false;
  std::vector<Witness> witnesses;
};

/// One summand of the covering sum for a stable hom space.
struct CoveringTerm {
  int z = 0;      // power of the generator sigma tau^-r
  Vertex lift;    // image of the target under that power
  int dim = 0;    // mesh hom dimension of the summand
};

/// The stable module category of an RFS algebra of the given type, seen
/// through its stable AR quiver ZDelta / <sigma tau^-r>.  Stable hom
/// dimensions are covering sums of mesh hom dimensions over the lifts of the
/// target.  All tables are memoized behind a lock; observable behavior is
/// that of pure functions.
class StableCategory {
 public:
  explicit StableCategory(RfsType type);

  const RfsType& type() const { return type_; }
  const DynkinDiagram& diagram() const { return type_.diagram; }
  const MeshCategory& mesh() const { return mesh_; }

  const std::vector<Vertex>& objects() const { return objects_; }
  int index_of(Vertex canonical_vertex) const;  // -1 if absent
  Vertex canonicalize(Vertex v) const { return canonical(type_, v); }

  /// Builds an ObjectSet from arbitrary vertices: canonicalizes, sorts, and
  /// rejects duplicates.
  ObjectSet make_set(std::vector<Vertex> vertices) const;

  /// dim stHom(X, Y) for canonical X, Y.
  int stable_hom(Vertex x, Vertex y) const;

  /// Covering sum truncated at |p(lift) - p(X)| <= scale * (m_delta + n);
  /// scale 1 already covers every nonzero term.
  int stable_hom_windowed(Vertex x, Vertex y, int scale) const;

  /// The per-z breakdown of the covering sum (nonzero terms only).
  std::vector<CoveringTerm> covering_terms(Vertex x, Vertex y) const;

  Vertex nu(Vertex x) const;
  ObjectSet nu_orbit(Vertex x) const;

  bool is_stable_brick(Vertex x) const { return stable_hom(x, x) == 1; }

  bool is_orthogonal_system(const ObjectSet& s, Witness* w = nullptr) const;
  bool is_nakayama_stable(const ObjectSet& s, Witness* w = nullptr) const;
  bool weak_generates(const ObjectSet& s, Witness* w = nullptr) const;
  bool is_sms(const ObjectSet& s) const;
  CheckReport check_all(const ObjectSet& s) const;

  ObjectSet left_perp(const ObjectSet& s) const;
  ObjectSet right_perp(const ObjectSet& s) const;
  ObjectSet two_sided_perp(const ObjectSet& s) const;

  /// Full stable-hom matrix between objects, hom[i*N+j] = stHom(obj i, obj j).
  const std::vector<int>& hom_matrix() const;
  /// nu as a permutation of object indices.
  const std::vector<int>& nu_permutation() const;

 private:
  void ensure_tables() const;
  int hom_by_index(int i, int j) const;

  RfsType type_;
  MeshCategory mesh_;
  std::vector<Vertex> objects_;
  std::unordered_map<Vertex, int, VertexHash> index_;

  mutable std::mutex mu_;
  mutable std::vector<int> hom_;     // filled by ensure_tables
  mutable std::vector<int> nu_perm_;
};

std::string to_string(Vertex v);
std::string to_string(const ObjectSet& s);

}  // namespace smskit
