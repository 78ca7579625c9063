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

#include "smskit/nakayama.hpp"

#include <numeric>

namespace smskit {

NakayamaAlgebra::NakayamaAlgebra(int simples, int n) : s_(simples), n_(n) {
  if (simples < 1 || n < 1) fail(Errc::out_of_range, "need s >= 1 and n >= 1");
  type_ = validate_type(Family::A, n, simples, n, 1);
}

int NakayamaAlgebra::normalize_index(long long i) const {
  long long v = i % s_;
  if (v <= 0) v += s_;
  return (int)v;
}

std::string to_string(NakayamaModule m) {
  return "X_" + std::to_string(m.socle) + "(" + std::to_string(m.length) + ")";
}

bool stably_zero(const NakayamaAlgebra& alg, NakayamaModule m) {
  return m.length == 0 || m.length == alg.n() + 1;
}

Vertex to_vertex(const NakayamaAlgebra& alg, NakayamaModule m) {
  if (m.length < 1 || m.length > alg.n())
    fail(Errc::out_of_range, to_string(m) + " is not a nonzero non-projective module");
  if (m.socle < 1 || m.socle > alg.s())
    fail(Errc::out_of_range, "socle index out of [1, s]");
  return canonical(alg.type(), Vertex{1 - m.socle, m.length});
}

NakayamaModule from_vertex(const NakayamaAlgebra& alg, Vertex v) {
  Vertex c = canonical(alg.type(), v);
  return NakayamaModule{alg.normalize_index(1 - c.p), c.q};
}

NakayamaModule tau_module(const NakayamaAlgebra& alg, NakayamaModule m, int power) {
  return NakayamaModule{alg.normalize_index(m.socle + power), m.length};
}

bool brick_criterion(const NakayamaAlgebra& alg, int length) {
  if (!alg.symmetric())
    fail(Errc::not_symmetric,
         "brick criterion needs a symmetric Nakayama algebra (s | n); got s = " +
             std::to_string(alg.s()) + ", n = " + std::to_string(alg.n()));
  if (length < 1 || length > alg.n()) fail(Errc::out_of_range, "length out of [1, n]");
  return length <= alg.s() || (alg.n() + 1 - alg.s() <= length && length <= alg.n());
}

Triangle triangle_family(const NakayamaAlgebra& alg, int i, int r, int k, int j) {
  const int n = alg.n();
  if (i < 1 || i > alg.s())
    fail(Errc::side_condition_violated, "need 1 <= i <= s");
  if (!(0 < k && k <= r && r <= n))
    fail(Errc::side_condition_violated, "need 0 < k <= r <= n");
  if (!(1 <= j && j <= n + 1 - r))
    fail(Errc::side_condition_violated, "need 1 <= j <= n+1-r");
  Triangle t;
  t.base = NakayamaModule{i, r};
  t.mid_long = NakayamaModule{i, r + j};
  t.mid_short = tau_module(alg, NakayamaModule{i, r - k}, -k);
  t.cone = tau_module(alg, NakayamaModule{i, r - k + j}, -k);
  if (t.mid_short.length == 0) t.mid_short = NakayamaModule{i, 0};  // keep socle tag stable
  return t;
}

GcdCover gcd_cover(const NakayamaAlgebra& alg) {
  const int e = std::gcd(alg.s(), alg.n());
  return GcdCover{alg, NakayamaAlgebra(e, alg.n())};
}

NakayamaModule GcdCover::project(NakayamaModule m) const {
  return NakayamaModule{downstairs.normalize_index(m.socle), m.length};
}

std::vector<NakayamaModule> GcdCover::preimage(NakayamaModule m) const {
  std::vector<NakayamaModule> out;
  for (int i = 1; i <= upstairs.s(); ++i)
    if (downstairs.normalize_index(i) == downstairs.normalize_index(m.socle))
      out.push_back(NakayamaModule{i, m.length});
  return out;
}

ObjectSet GcdCover::preimage_set(const StableCategory& up,
                                 const std::vector<NakayamaModule>& s) const {
  std::vector<Vertex> vs;
  for (NakayamaModule m : s)
    for (NakayamaModule pre : preimage(m)) vs.push_back(to_vertex(upstairs, pre));
  return up.make_set(std::move(vs));
}

NakayamaModule extension_pick(const NakayamaAlgebra& alg, const StableCategory& cat,
                              const ObjectSet& s, NakayamaModule x) {
  if (!alg.symmetric()) fail(Errc::not_symmetric, "extension pick needs s | n");
  if (brick_criterion(alg, x.length))
    fail(Errc::precondition_violated, to_string(x) + " is already a stable brick");
  Vertex xv = to_vertex(alg, x);
  for (Vertex m : s.members)
    if (cat.stable_hom(m, xv) != 0 || cat.stable_hom(xv, m) != 0)
      fail(Errc::precondition_violated, to_string(x) + " is not in the two-sided perp");
  // Decompose length = a*s + b with 1 <= b <= s; non-brick forces 1 <= a <= m-2.
  const int b = (x.length - 1) % alg.s() + 1;
  const int a = (x.length - b) / alg.s();
  NakayamaModule pick =
      alg.n() >= 2 * a * alg.s() + b ? NakayamaModule{x.socle, b}
                                     : NakayamaModule{x.socle, alg.n() - alg.s() + b};
  Vertex pv = to_vertex(alg, pick);
  if (!cat.is_stable_brick(pv))
    fail(Errc::pick_not_in_perp, to_string(pick) + " is not a stable brick");
  for (Vertex m : s.members)
    if (cat.stable_hom(m, pv) != 0 || cat.stable_hom(pv, m) != 0)
      fail(Errc::pick_not_in_perp, to_string(pick) + " is not two-sided orthogonal to the set");
  return pick;
}

}  // namespace smskit
