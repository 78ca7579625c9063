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
#include <unordered_map>
#include <vector>

#include "smskit/dynkin.hpp"

namespace smskit {

/// Hom dimensions of the mesh category k(ZDelta), computed by forward
/// hammock propagation: d(source) = 1 and, in topological order,
/// d(v) = max(0, sum over arrows u -> v of d(u), minus d(tau v)).
///
/// Tables for the whole window [0, m_delta + n] are built per source row at
/// construction; hom() is then a pure lookup (zero outside the window).
class MeshCategory {
 public:
  explicit MeshCategory(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return d_; }

  /// dim Hom_{k(ZDelta)}(x, y).
  int hom(Vertex x, Vertex y) const;

  /// Columns after which hom vanishes: hom(x, y) = 0 once
  /// y.p - x.p >= m_delta + n.
  int window_width() const { return width_; }

 private:
  DynkinDiagram d_;
  int width_;
  // table_[q0-1][dx * n + (q-1)] = dim Hom((0, q0), (dx, q)).
  std::vector<std::vector<int>> table_;
};

/// Closed form for ZA_ell: dimension is 1 iff p <= r < p+q <= r+s <= p+ell
/// (x = (p,q), y = (r,s)), else 0.
int hom_dim_closed_A(int ell, Vertex x, Vertex y);

/// Support membership for ZD_n: whether y lies in Supp Hom(x, -), by the
/// two-case closed description (low source / high source with the parity
/// clause for high targets).  A vertex (p, q) is low when q <= n-2.
bool supp_nonzero_D(int n, Vertex x, Vertex y);

inline bool is_high_D(int n, Vertex v) { return v.q >= n - 1; }

/// nu = tau^{-m_delta} on ZDelta.
inline Vertex nu_mesh(const DynkinDiagram& d, Vertex v) {
  return Vertex{v.p + d.m_delta(), v.q};
}

/// Independent oracle for mesh hom dimensions, via the identification of
/// k(ZDelta) with the indecomposables of the bounded derived category of a
/// hereditary path algebra.  Column 0 is anchored at the injective slice;
/// vertex (p, q) is tau^{-p} of that anchor, tracked as a pair
/// (positive root, shift).  Dimensions come from iterating
///   hom(M, N) = <dim M, dim N> + hom(N, tau M)
/// down to projectives, and hom(M, N[1]) = hom(N, tau M); no mesh
/// propagation is involved.
class EulerOracle {
 public:
  explicit EulerOracle(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return d_; }

  /// dim Hom_{k(ZDelta)}(x, y); agrees with MeshCategory::hom everywhere.
  int hom(Vertex x, Vertex y) const;

  int root_count() const { return (int)roots_.size(); }

 private:
  struct Object {
    int root;   // index into roots_
    int shift;  // derived degree
  };

  Object object_at(Vertex v) const;
  int hom_mod(int a, int b) const;
  long long euler(int a, int b) const;
  int root_index(const std::vector<int>& dim) const;

  DynkinDiagram d_;
  std::vector<std::pair<int, int>> edges_;     // arrows of the opposite quiver
  std::vector<std::vector<int>> roots_;        // positive roots (dim vectors)
  std::vector<int> tau_root_;                  // -1 when projective
  std::vector<int> tau_inv_root_;              // -1 when injective
  std::vector<int> proj_row_of_root_;          // 0 when not a projective, else row
  std::vector<int> inj_row_of_root_;           // 0 when not an injective, else row
  std::vector<int> proj_of_row_, inj_of_row_;  // row -> root index

  mutable std::mutex mu_;
  mutable std::vector<int> hom_memo_;  // K*K, -1 = unknown
  mutable std::unordered_map<int, std::vector<Object>> column_cache_;
};

}  // namespace smskit
