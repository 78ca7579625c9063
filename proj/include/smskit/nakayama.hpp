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

/// Self-injective Nakayama algebra: cyclic quiver on s vertices with
/// relations rad^{n+1} = 0, i.e. s simple modules and Loewy length n + 1.
/// Its type is (A_n, s/n, 1); it is symmetric exactly when s divides n.
class NakayamaAlgebra {
 public:
  NakayamaAlgebra(int simples, int n);

  int s() const { return s_; }
  int n() const { return n_; }
  int loewy_length() const { return n_ + 1; }
  bool symmetric() const { return n_ % s_ == 0; }

  const RfsType& type() const { return type_; }

  /// Socle index arithmetic: representative of i in [1, s].
  int normalize_index(long long i) const;

 private:
  int s_;
  int n_;
  RfsType type_;
};

/// Uniserial module X_i(m): socle index i in [1, s], Loewy length m.
/// m = 0 encodes the zero module; m = n + 1 a projective-injective, which is
/// zero in the stable category.
struct NakayamaModule {
  int socle = 1;
  int length = 0;

  bool zero_module() const { return length == 0; }
  friend auto operator<=>(const NakayamaModule&, const NakayamaModule&) = default;
};

std::string to_string(NakayamaModule m);

/// Zero in the stable category: the zero module or a projective-injective.
bool stably_zero(const NakayamaAlgebra& alg, NakayamaModule m);

/// X_i(m) <-> canonical vertex of ZA_n / <tau^-s>; the anchor is
/// X_1(m) = (0, m), consistent with tau X_i = X_{i+1}.
Vertex to_vertex(const NakayamaAlgebra& alg, NakayamaModule m);
NakayamaModule from_vertex(const NakayamaAlgebra& alg, Vertex v);

/// tau^power X_i(m) = X_{i+power}(m).
NakayamaModule tau_module(const NakayamaAlgebra& alg, NakayamaModule m, int power = 1);

/// Stable-brick test for symmetric Nakayama algebras (n = m*s):
/// a length-l module is a stable brick iff l <= s or n+1-s <= l <= n.
bool brick_criterion(const NakayamaAlgebra& alg, int length);

/// The non-split triangle
///   X_i(r) -> X_i(r+j) + tau^-k X_i(r-k) -> tau^-k X_i(r-k+j) -> shift X_i(r)
/// for 1 <= i <= s, 0 < k <= r <= n, 1 <= j <= n+1-r.  The last corner is the
/// suspension of `base` and is carried symbolically.
struct Triangle {
  NakayamaModule base;
  NakayamaModule mid_long;   // X_i(r+j); length n+1 means stably zero
  NakayamaModule mid_short;  // tau^-k X_i(r-k); length 0 means zero
  NakayamaModule cone;       // tau^-k X_i(r-k+j)
  NakayamaModule suspension_of() const { return base; }
};

Triangle triangle_family(const NakayamaAlgebra& alg, int i, int r, int k, int j);

/// Covering onto the symmetric Nakayama algebra with e = gcd(s, n) simples
/// (quotient of the stable AR quiver by the Nakayama automorphism).
struct GcdCover {
  NakayamaAlgebra upstairs;
  NakayamaAlgebra downstairs;

  NakayamaModule project(NakayamaModule m) const;
  /// Full preimage of a downstairs module: one module per socle residue.
  std::vector<NakayamaModule> preimage(NakayamaModule m) const;
  ObjectSet preimage_set(const StableCategory& up, const std::vector<NakayamaModule>& s) const;
};

GcdCover gcd_cover(const NakayamaAlgebra& alg);

/// Brick selection for the extension step over a symmetric Nakayama algebra
/// (n = m*s, m > 2): given a non-brick X_i(a*s+b) in the two-sided perp of S,
/// returns X_i(b) when n >= 2*a*s+b and X_i(n-s+b) otherwise.  The returned
/// module is verified to be a brick inside the perp; a failure raises
/// PickNotInPerp (and would contradict the extension property).
NakayamaModule extension_pick(const NakayamaAlgebra& alg, const StableCategory& cat,
                              const ObjectSet& s, NakayamaModule non_brick);

}  // namespace smskit
