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

#include "smskit/engine.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

#include "smskit/detail/bitset.hpp"

namespace smskit {

namespace {

using detail::Bits;

/// Index-level view of one stable category: brick flags, the mutual
/// orthogonality graph, weak-generation masks, and the nu-orbit partition.
struct Ctx {
  const StableCategory& cat;
  int N;
  int nf;
  std::vector<char> brick;
  Bits brick_mask;
  std::vector<Bits> compat;   // mutual orthogonality between distinct bricks
  std::vector<Bits> genmask;  // genmask[x] = { t : stHom(x, t) > 0 }
  std::vector<int> nu;
  std::vector<std::vector<int>> orbit_members;
  std::vector<int> orbit_of;
  std::vector<char> orbit_orthogonal;  // orbit is an orthogonal system

  explicit Ctx(const StableCategory& c) : cat(c) {
    N = (int)cat.objects().size();
    nf = cat.type().simple_count;
    const std::vector<int>& hom = cat.hom_matrix();
    nu = cat.nu_permutation();
    auto h = [&](int i, int j) { return hom[(std::size_t)i * N + j]; };

    brick.assign(N, 0);
    brick_mask = Bits(N);
    for (int i = 0; i < N; ++i)
      if (h(i, i) == 1) {
        brick[i] = 1;
        brick_mask.set(i);
      }

    compat.assign(N, Bits(N));
    for (int i = 0; i < N; ++i) {
      if (!brick[i]) continue;
      for (int j = 0; j < N; ++j)
        if (j != i && brick[j] && h(i, j) == 0 && h(j, i) == 0) compat[i].set(j);
    }

    genmask.assign(N, Bits(N));
    for (int x = 0; x < N; ++x)
      for (int t = 0; t < N; ++t)
        if (h(x, t) > 0) genmask[x].set(t);

    orbit_of.assign(N, -1);
    for (int i = 0; i < N; ++i) {
      if (orbit_of[i] >= 0) continue;
      std::vector<int> members;
      for (int j = i; orbit_of[j] < 0; j = nu[j]) {
        orbit_of[j] = (int)orbit_members.size();
        members.push_back(j);
      }
      std::sort(members.begin(), members.end());
      orbit_members.push_back(std::move(members));
    }
    orbit_orthogonal.assign(orbit_members.size(), 1);
    for (std::size_t o = 0; o < orbit_members.size(); ++o) {
      const auto& mem = orbit_members[o];
      for (int a : mem) {
        if (!brick[a]) {
          orbit_orthogonal[o] = 0;
          break;
        }
        for (int b : mem)
          if (a != b && h(a, b) != 0) {
            orbit_orthogonal[o] = 0;
            break;
          }
        if (!orbit_orthogonal[o]) break;
      }
    }
  }

  bool weakly_generated(const Bits& sel) const {
    for (int x = 0; x < N; ++x)
      if (!genmask[x].intersects(sel)) return false;
    return true;
  }

  ObjectSet to_set(const Bits& sel) const {
    std::vector<Vertex> vs;
    sel.for_each([&](int i) { vs.push_back(cat.objects()[i]); });
    return ObjectSet{std::move(vs)};
  }

  Bits to_bits(const ObjectSet& s) const {
    Bits b(N);
    for (Vertex v : s.members) {
      int i = cat.index_of(v);
      if (i < 0) fail(Errc::out_of_range, to_string(v) + " is not an object of the category");
      b.set(i);
    }
    return b;
  }
};

struct Budget {
  std::atomic<long long> remaining;
  std::atomic<bool> exhausted{false};
  explicit Budget(long long n) : remaining(n) {}
  bool spend() {
    if (remaining.fetch_sub(1, std::memory_order_relaxed) <= 0) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  long long used(long long start) const {
    long long rem = remaining.load(std::memory_order_relaxed);
    return rem >= 0 ? start - rem : start;
  }
};

// ---------------------------------------------------------------------------
// Orbit backtracking: all selections of pairwise-orthogonal orbits with total
// cardinality nf.

struct OrbitSearch {
  const Ctx& ctx;
  std::vector<int> usable;            // orthogonal orbits, ordered by min member
  std::vector<int> size_of;           // sizes of usable orbits
  std::vector<long long> suffix_sum;  // total size of usable[i..]
  std::vector<Bits> cross_ok;         // usable x usable mutual orthogonality

  explicit OrbitSearch(const Ctx& c) : ctx(c) {
    for (std::size_t o = 0; o < c.orbit_members.size(); ++o)
      if (c.orbit_orthogonal[o]) usable.push_back((int)o);
    std::sort(usable.begin(), usable.end(), [&](int a, int b) {
      return c.orbit_members[a].front() < c.orbit_members[b].front();
    });
    const int K = (int)usable.size();
    size_of.resize(K);
    for (int k = 0; k < K; ++k) size_of[k] = (int)c.orbit_members[usable[k]].size();
    suffix_sum.assign(K + 1, 0);
    for (int k = K - 1; k >= 0; --k) suffix_sum[k] = suffix_sum[k + 1] + size_of[k];
    cross_ok.assign(K, Bits(K));
    const std::vector<int>& hom = c.cat.hom_matrix();
    auto h = [&](int i, int j) { return hom[(std::size_t)i * c.N + j]; };
    for (int a = 0; a < K; ++a)
      for (int b = a + 1; b < K; ++b) {
        bool ok = true;
        for (int i : c.orbit_members[usable[a]]) {
          for (int j : c.orbit_members[usable[b]])
            if (h(i, j) != 0 || h(j, i) != 0) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (ok) {
          cross_ok[a].set(b);
          cross_ok[b].set(a);
        }
      }
  }

  // Depth-first over positions >= k; chosen orbits are all mutually
  // orthogonal and their sizes sum to `have`.
  void dfs(int k, Bits allowed, int have, std::vector<int>& chosen, Budget& budget,
           std::vector<Bits>& out) const {
    if (!budget.spend()) return;
    if (have == ctx.nf) {
      Bits sel(ctx.N);
      for (int c : chosen)
        for (int i : ctx.orbit_members[usable[c]]) sel.set(i);
      out.push_back(sel);
      return;
    }
    if (k >= (int)usable.size()) return;
    if (have + suffix_sum[k] < ctx.nf) return;  // cannot reach nf any more
    if (allowed.test(k) && have + size_of[k] <= ctx.nf) {
      chosen.push_back(k);
      dfs(k + 1, allowed & cross_ok[k], have + size_of[k], chosen, budget, out);
      chosen.pop_back();
    }
    dfs(k + 1, allowed, have, chosen, budget, out);
  }

  std::vector<Bits> run(Budget& budget, int threads) const {
    const int K = (int)usable.size();
    Bits all(K);
    for (int k = 0; k < K; ++k) all.set(k);
    if (threads <= 1 || K == 0) {
      std::vector<Bits> out;
      std::vector<int> chosen;
      dfs(0, all, 0, chosen, budget, out);
      return out;
    }
    // Fan out by first chosen orbit; branch k explores selections whose
    // smallest orbit is usable[k].  Results concatenate in k order, so the
    // output is independent of scheduling.
    std::vector<std::future<std::vector<Bits>>> futs;
    for (int k = 0; k < K; ++k)
      futs.push_back(std::async(std::launch::async, [this, k, all, &budget]() {
        std::vector<Bits> out;
        if (size_of[k] > ctx.nf) return out;
        std::vector<int> chosen{k};
        dfs(k + 1, all & cross_ok[k], size_of[k], chosen, budget, out);
        return out;
      }));
    std::vector<Bits> out;
    for (auto& f : futs) {
      auto part = f.get();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Maximal orthogonal systems by Bron-Kerbosch with pivoting.

void bron_kerbosch(const Ctx& ctx, Bits r, Bits p, Bits x, Budget& budget,
                   std::vector<Bits>& out) {
  if (!budget.spend()) return;
  if (!p.any() && !x.any()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int deg = (p & ctx.compat[u]).count();
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  });
  Bits cand = p;
  cand.subtract(ctx.compat[pivot]);
  cand.for_each([&](int v) {
    if (!p.test(v)) return;  // already moved to x in this frame
    Bits r2 = r;
    r2.set(v);
    bron_kerbosch(ctx, r2, p & ctx.compat[v], x & ctx.compat[v], budget, out);
    p.reset(v);
    x.set(v);
  });
}

std::vector<ObjectSet> sorted_sets(const Ctx& ctx, std::vector<Bits> sels) {
  std::vector<ObjectSet> out;
  out.reserve(sels.size());
  for (const Bits& b : sels) out.push_back(ctx.to_set(b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

EnumerateResult enumerate_sms(const StableCategory& cat, const SearchConfig& cfg) {
  Ctx ctx(cat);
  OrbitSearch search(ctx);
  Budget budget(cfg.max_nodes);
  std::vector<Bits> found = search.run(budget, cfg.threads);

  EnumerateResult res;
  res.sms = sorted_sets(ctx, std::move(found));
  res.exhaustive = !budget.exhausted.load();
  res.nodes = budget.used(cfg.max_nodes);
  if (cfg.verify_each) {
    for (const ObjectSet& s : res.sms) {
      CheckReport rep = cat.check_all(s);
      if (!rep.is_sms || !rep.cardinality_ok || !rep.nakayama_stable)
        throw std::logic_error("enumerated set fails the sms check: " + to_string(s));
    }
  }
  return res;
}

namespace {

// Candidate orbits for one extension step, in preferred order.  Every
// candidate is re-verified by the caller, so preferences only steer the
// search.
std::vector<int> preferred_picks(const Ctx& ctx, ExtensionStrategy strategy,
                                 const ObjectSet& current, const std::vector<int>& perp) {
  const RfsType& ty = ctx.cat.type();
  ExtensionStrategy eff = strategy;
  if (eff == ExtensionStrategy::automatic) {
    if (ty.diagram.family() == Family::A && ty.torsion == 1)
      eff = ExtensionStrategy::nakayama;
    else if (ty.diagram.family() == Family::D && ty.f_den == 3)
      eff = ExtensionStrategy::d3m;
    else
      eff = ExtensionStrategy::generic;
  }

  std::vector<int> order;
  auto push_unique = [&](int i) {
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
  };

  if (eff == ExtensionStrategy::nakayama && ty.diagram.family() == Family::A &&
      ty.torsion == 1) {
    // Work under the gcd covering: project to the symmetric Nakayama algebra,
    // pick there (repairing non-bricks through the triangle-family step), and
    // pull the pick back as a nu-orbit upstairs.
    NakayamaAlgebra up(ty.simple_count, ty.diagram.n());
    GcdCover cover = gcd_cover(up);
    StableCategory down(cover.downstairs.type());
    std::vector<Vertex> proj;
    for (Vertex v : current.members)
      proj.push_back(to_vertex(cover.downstairs, cover.project(from_vertex(up, v))));
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    ObjectSet s_down{std::move(proj)};
    if (down.is_orthogonal_system(s_down)) {
      ObjectSet perp_down = down.two_sided_perp(s_down);
      for (Vertex v : perp_down.members) {
        NakayamaModule pick = from_vertex(cover.downstairs, v);
        if (!brick_criterion(cover.downstairs, pick.length)) {
          try {
            pick = extension_pick(cover.downstairs, down, s_down, pick);
          } catch (const Error&) {
            continue;
          }
        }
        // Any upstairs preimage generates the same nu-orbit.
        for (NakayamaModule pre : cover.preimage(pick)) {
          push_unique(ctx.cat.index_of(to_vertex(up, pre)));
          break;
        }
      }
    }
  } else if (eff == ExtensionStrategy::d3m && ty.diagram.family() == Family::D &&
             ty.f_den == 3) {
    const int n = ty.diagram.n();
    const int m = n / 3;
    bool has_high = false;
    for (Vertex v : current.members) has_high = has_high || is_high_D(n, v);
    if (!has_high) {
      // A non-brick (p, t) with m <= t < 3m-1 in the perp points at the high
      // vertex (p, 3m), whose two-sided perp swallows the current one.
      for (int i : perp) {
        Vertex v = ctx.cat.objects()[i];
        if (v.q >= m && v.q < 3 * m - 1 && !ctx.brick[i]) {
          int hi = ctx.cat.index_of(ctx.cat.canonicalize(Vertex{v.p, 3 * m}));
          if (hi >= 0) push_unique(hi);
          break;
        }
      }
    }
    for (int i : perp) {
      Vertex v = ctx.cat.objects()[i];
      if (v.q < m || v.q >= 3 * m - 1) push_unique(i);
    }
  }

  // Generic order, also the shared fallback: every perp member ascending.
  for (int i : perp) push_unique(i);
  return order;
}

}  // namespace

ExtensionResult extend_to_sms(const StableCategory& cat, const ObjectSet& s,
                              const SearchConfig& cfg) {
  Witness w;
  if (!cat.is_orthogonal_system(s, &w))
    fail(Errc::precondition_violated, "input is not an orthogonal system (" + w.detail + ")");
  if (!cat.is_nakayama_stable(s, &w))
    fail(Errc::precondition_violated, "input is not Nakayama-stable (" + w.detail + ")");

  Ctx ctx(cat);
  const std::vector<int>& hom = cat.hom_matrix();
  auto h = [&](int i, int j) { return hom[(std::size_t)i * ctx.N + j]; };

  Bits sel = ctx.to_bits(s);
  auto perp_of = [&](const Bits& current) {
    std::vector<int> perp;
    for (int y = 0; y < ctx.N; ++y) {
      if (current.test(y)) continue;
      bool ok = true;
      current.for_each([&](int x) { ok = ok && h(x, y) == 0 && h(y, x) == 0; });
      if (ok) perp.push_back(y);
    }
    return perp;
  };

  ExtensionResult res;
  std::vector<int> perp = perp_of(sel);
  while (!perp.empty()) {
    if ((long long)res.trace.steps.size() > (long long)ctx.N)
      throw std::logic_error("extension loop exceeded the object count bound");

    int picked = -1;
    Bits orbit(ctx.N);
    for (int i : preferred_picks(ctx, cfg.strategy, ctx.to_set(sel), perp)) {
      if (i < 0 || sel.test(i)) continue;
      // The nu-orbit of the candidate must be an orthogonal system and lie
      // inside the perp; then the union stays orthogonal and nu-stable.
      int o = ctx.orbit_of[i];
      if (!ctx.orbit_orthogonal[o]) continue;
      bool inside = true;
      for (int j : ctx.orbit_members[o])
        inside = inside && std::binary_search(perp.begin(), perp.end(), j);
      if (!inside) continue;
      picked = i;
      orbit = Bits(ctx.N);
      for (int j : ctx.orbit_members[o]) orbit.set(j);
      break;
    }
    if (picked < 0)
      fail(Errc::no_valid_addition,
           "no nu-orbit in the two-sided perp keeps the system orthogonal");

    Bits next = sel | orbit;
    std::vector<int> next_perp = perp_of(next);

    // Loop invariants: the grown set stays a Nakayama-stable orthogonal
    // system and the perp shrinks strictly.
    ObjectSet grown = ctx.to_set(next);
    if (!cat.is_orthogonal_system(grown) || !cat.is_nakayama_stable(grown))
      throw std::logic_error("extension step broke the orthogonal system invariant");
    if (next_perp.size() >= perp.size())
      throw std::logic_error("two-sided perp did not shrink");

    res.trace.steps.push_back({ctx.to_set(orbit), perp.size(), next_perp.size()});
    sel = std::move(next);
    perp = std::move(next_perp);
  }

  res.sms = ctx.to_set(sel);
  res.trace.terminated = true;
  if (cfg.verify_each && !cat.is_sms(res.sms))
    throw std::logic_error("extension terminated on a non-sms: " + to_string(res.sms));
  return res;
}

CharacterizationReport verify_characterization(const StableCategory& cat,
                                               const SearchConfig& cfg) {
  Ctx ctx(cat);
  CharacterizationReport rep;
  Budget budget(cfg.max_nodes);

  // (ii) nu-stable orthogonal sets of cardinality nf, over orbits.
  OrbitSearch search(ctx);
  rep.by_conditions = sorted_sets(ctx, search.run(budget, cfg.threads));

  // (i) sms by definition: maximal orthogonal systems that weakly generate.
  // (An sms receives a nonzero stable map from every object, so no object
  // can be orthogonally adjoined: it is a maximal clique of the mutual
  // orthogonality graph.)
  std::vector<Bits> cliques;
  {
    Bits r(ctx.N), p = ctx.brick_mask, x(ctx.N);
    bron_kerbosch(ctx, r, p, x, budget, cliques);
  }
  std::vector<Bits> gen;
  for (Bits& b : cliques)
    if (ctx.weakly_generated(b)) gen.push_back(b);
  rep.by_definition = sorted_sets(ctx, std::move(gen));

  rep.exhaustive = !budget.exhausted.load();
  rep.nodes = budget.used(cfg.max_nodes);
  rep.lists_equal = rep.by_definition == rep.by_conditions;
  if (!rep.lists_equal) {
    for (const ObjectSet& s : rep.by_definition)
      if (!std::binary_search(rep.by_conditions.begin(), rep.by_conditions.end(), s))
        rep.notes.push_back("sms by definition only: " + to_string(s));
    for (const ObjectSet& s : rep.by_conditions)
      if (!std::binary_search(rep.by_definition.begin(), rep.by_definition.end(), s))
        rep.notes.push_back("three-condition set only: " + to_string(s));
  }

  const RfsType& ty = cat.type();
  if (ty.diagram.family() == Family::D && ty.f_den == 3) {
    const int n = ty.diagram.n();
    bool ok = true;
    for (const ObjectSet& s : rep.by_conditions) {
      std::vector<int> high_orbits;
      for (Vertex v : s.members)
        if (is_high_D(n, v)) high_orbits.push_back(ctx.orbit_of[cat.index_of(v)]);
      std::sort(high_orbits.begin(), high_orbits.end());
      high_orbits.erase(std::unique(high_orbits.begin(), high_orbits.end()),
                        high_orbits.end());
      if (high_orbits.size() != 1) {
        ok = false;
        rep.notes.push_back("high nu-orbit count " + std::to_string(high_orbits.size()) +
                            " in " + to_string(s));
      }
    }
    rep.high_orbit_census_ok = ok;
  }
  return rep;
}

}  // namespace smskit
