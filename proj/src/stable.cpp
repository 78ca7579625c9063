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

#include "smskit/stable.hpp"

#include <algorithm>
#include <stdexcept>

namespace smskit {

bool ObjectSet::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
}

std::string to_string(const ObjectSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += ",";
    out += to_string(s.members[i]);
  }
  return out;
}

StableCategory::StableCategory(RfsType type)
    : type_(std::move(type)), mesh_(type_.diagram), objects_(all_objects(type_)) {
  for (int i = 0; i < (int)objects_.size(); ++i) index_[objects_[i]] = i;
}

int StableCategory::index_of(Vertex v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

ObjectSet StableCategory::make_set(std::vector<Vertex> vertices) const {
  for (Vertex& v : vertices) v = canonicalize(v);
  std::sort(vertices.begin(), vertices.end());
  auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end())
    fail(Errc::precondition_violated, "duplicate object " + to_string(*dup) + " in set");
  return ObjectSet{std::move(vertices)};
}

int StableCategory::stable_hom_windowed(Vertex x, Vertex y, int scale) const {
  const int bound = scale * (diagram().m_delta() + diagram().n());
  // Per generator application the column grows by r up to the bounded wobble
  // of sigma, and (sigma tau^-r)^t is exactly tau^{-tr}; this z range covers
  // every lift whose column can meet the window.
  const int zmax = 2 * bound / type_.r + 2 * type_.torsion + 4;
  int total = 0;
  for (int z = -zmax; z <= zmax; ++z) {
    Vertex lift = apply_generator(type_, y, z);
    if (lift.p < x.p - bound || lift.p > x.p + bound) continue;
    total += mesh_.hom(x, lift);
  }
  return total;
}

int StableCategory::stable_hom(Vertex x, Vertex y) const {
  const int i = index_of(x), j = index_of(y);
  if (i >= 0 && j >= 0) {
    // Served from the matrix when some predicate already paid for it; a
    // lone query stays a direct covering sum.
    std::lock_guard<std::mutex> lock(mu_);
    if (!hom_.empty()) return hom_[(std::size_t)i * objects_.size() + j];
  }
  return stable_hom_windowed(canonicalize(x), canonicalize(y), 1);
}

std::vector<CoveringTerm> StableCategory::covering_terms(Vertex x, Vertex y) const {
  x = canonicalize(x);
  y = canonicalize(y);
  const int bound = diagram().m_delta() + diagram().n();
  const int zmax = 2 * bound / type_.r + 2 * type_.torsion + 4;
  std::vector<CoveringTerm> out;
  for (int z = -zmax; z <= zmax; ++z) {
    Vertex lift = apply_generator(type_, y, z);
    int dim = mesh_.hom(x, lift);
    if (dim > 0) out.push_back({z, lift, dim});
  }
  return out;
}

Vertex StableCategory::nu(Vertex x) const {
  return canonicalize(nu_mesh(diagram(), canonicalize(x)));
}

ObjectSet StableCategory::nu_orbit(Vertex x) const {
  std::vector<Vertex> orbit;
  Vertex v = canonicalize(x);
  const Vertex start = v;
  do {
    orbit.push_back(v);
    v = nu(v);
    if (orbit.size() > objects_.size()) throw std::logic_error("nu orbit did not close");
  } while (v != start);
  std::sort(orbit.begin(), orbit.end());
  return ObjectSet{std::move(orbit)};
}

void StableCategory::ensure_tables() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!hom_.empty()) return;
  const std::size_t N = objects_.size();
  std::vector<int> hom(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      hom[i * N + j] = stable_hom_windowed(objects_[i], objects_[j], 1);
  std::vector<int> perm(N);
  for (std::size_t i = 0; i < N; ++i) {
    int j = index_of(nu(objects_[i]));
    if (j < 0) throw std::logic_error("nu image is not an object");
    perm[i] = j;
  }
  nu_perm_ = std::move(perm);
  hom_ = std::move(hom);
}

const std::vector<int>& StableCategory::hom_matrix() const {
  ensure_tables();
  return hom_;
}

const std::vector<int>& StableCategory::nu_permutation() const {
  ensure_tables();
  return nu_perm_;
}

int StableCategory::hom_by_index(int i, int j) const {
  return hom_[(std::size_t)i * objects_.size() + j];
}

bool StableCategory::is_orthogonal_system(const ObjectSet& s, Witness* w) const {
  ensure_tables();
  for (Vertex m : s.members) {
    if (!is_stable_brick(m)) {
      if (w) *w = {"stable_brick", {m},
                   "stHom(" + to_string(m) + "," + to_string(m) + ") = " +
                       std::to_string(stable_hom(m, m)) + " != 1"};
      return false;
    }
  }
  for (Vertex a : s.members)
    for (Vertex b : s.members) {
      if (a == b) continue;
      int d = stable_hom(a, b);
      if (d != 0) {
        if (w) *w = {"orthogonality", {a, b},
                     "stHom(" + to_string(a) + "," + to_string(b) + ") = " + std::to_string(d)};
        return false;
      }
    }
  return true;
}

bool StableCategory::is_nakayama_stable(const ObjectSet& s, Witness* w) const {
  for (Vertex m : s.members) {
    Vertex im = nu(m);
    if (!s.contains(im)) {
      if (w) *w = {"nakayama_stable", {m, im},
                   "nu(" + to_string(m) + ") = " + to_string(im) + " not in set"};
      return false;
    }
  }
  return true;
}

bool StableCategory::weak_generates(const ObjectSet& s, Witness* w) const {
  if (s.empty() && !objects_.empty()) {
    if (w) *w = {"weak_generation", {}, "EmptySetNotSms: empty set generates nothing"};
    return false;
  }
  ensure_tables();
  for (Vertex x : objects_) {
    bool hit = false;
    for (Vertex t : s.members)
      if (stable_hom(x, t) > 0) {
        hit = true;
        break;
      }
    if (!hit) {
      if (w) *w = {"weak_generation", {x}, "stHom(" + to_string(x) + ", S) = 0 for all S"};
      return false;
    }
  }
  return true;
}

bool StableCategory::is_sms(const ObjectSet& s) const {
  return is_orthogonal_system(s) && weak_generates(s);
}

CheckReport StableCategory::check_all(const ObjectSet& s) const {
  CheckReport rep;
  Witness w;
  rep.orthogonal = is_orthogonal_system(s, &w);
  if (!rep.orthogonal) rep.witnesses.push_back(w);
  rep.cardinality_ok = (int)s.size() == type_.simple_count;
  if (!rep.cardinality_ok)
    rep.witnesses.push_back({"cardinality", {},
                             std::to_string(s.size()) + " objects, " +
                                 std::to_string(type_.simple_count) + " simples"});
  rep.nakayama_stable = is_nakayama_stable(s, &w);
  if (!rep.nakayama_stable) rep.witnesses.push_back(w);
  rep.weak_generating = weak_generates(s, &w);
  if (!rep.weak_generating) rep.witnesses.push_back(w);
  rep.is_sms = rep.orthogonal && rep.weak_generating;
  return rep;
}

ObjectSet StableCategory::left_perp(const ObjectSet& s) const {
  ensure_tables();
  std::vector<Vertex> out;
  for (Vertex y : objects_) {
    bool ok = true;
    for (Vertex x : s.members)
      if (stable_hom(y, x) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return ObjectSet{std::move(out)};
}

ObjectSet StableCategory::right_perp(const ObjectSet& s) const {
  ensure_tables();
  std::vector<Vertex> out;
  for (Vertex y : objects_) {
    bool ok = true;
    for (Vertex x : s.members)
      if (stable_hom(x, y) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return ObjectSet{std::move(out)};
}

ObjectSet StableCategory::two_sided_perp(const ObjectSet& s) const {
  ensure_tables();
  std::vector<Vertex> out;
  for (Vertex y : objects_) {
    bool ok = true;
    for (Vertex x : s.members)
      if (stable_hom(x, y) != 0 || stable_hom(y, x) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return ObjectSet{std::move(out)};
}

}  // namespace smskit
