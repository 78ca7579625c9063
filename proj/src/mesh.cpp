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

#include "smskit/mesh.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace smskit {

MeshCategory::MeshCategory(DynkinDiagram diagram) : d_(std::move(diagram)) {
  const int n = d_.n();
  const int m = d_.m_delta();
  width_ = m + n;
  table_.assign(n, {});
  for (int q0 = 1; q0 <= n; ++q0) {
    std::vector<int>& t = table_[q0 - 1];
    t.assign((width_ + 1) * n, 0);
    auto at = [&](int dx, int q) -> int& { return t[dx * n + (q - 1)]; };
    for (int dx = 0; dx <= width_; ++dx) {
      for (int q : d_.topo_rows()) {
        if (dx == 0 && q == q0) {
          at(dx, q) = 1;
          continue;
        }
        int sum = 0;
        for (auto [u, w] : d_.edges()) {
          if (w == q) sum += at(dx, u);                // (dx, u) -> (dx, q)
          if (u == q && dx > 0) sum += at(dx - 1, w);  // (dx-1, w) -> (dx, q)
        }
        if (dx > 0) sum -= at(dx - 1, q);  // tau v
        at(dx, q) = std::max(0, sum);
      }
    }
    // Paths of length >= m_delta vanish, so columns from m_delta on must be
    // clean zeros; a failure here would be a propagation bug.
    for (int dx = m; dx <= width_; ++dx)
      for (int q = 1; q <= n; ++q)
        if (at(dx, q) != 0) throw std::logic_error("hammock table violates vanishing bound");
  }
}

int MeshCategory::hom(Vertex x, Vertex y) const {
  const int n = d_.n();
  if (x.q < 1 || x.q > n || y.q < 1 || y.q > n)
    fail(Errc::out_of_range, "vertex row out of range for " + d_.name());
  const int dx = y.p - x.p;
  if (dx < 0 || dx >= width_) return 0;
  return table_[x.q - 1][dx * n + (y.q - 1)];
}

int hom_dim_closed_A(int ell, Vertex x, Vertex y) {
  const int p = x.p, q = x.q, r = y.p, s = y.q;
  return (p <= r && r < p + q && p + q <= r + s && r + s <= p + ell) ? 1 : 0;
}

bool supp_nonzero_D(int n, Vertex x, Vertex y) {
  const int p = x.p, q = x.q;
  const int xx = y.p, yy = y.q;
  if (q <= n - 2) {
    // low source
    if (p <= xx && xx <= p + q - 1 && p + q - 1 < xx + yy) return true;
    const int t = xx + std::min(yy, n - 1);
    return xx < p + n - 1 && p + n - 1 <= t && t <= p + q + n - 2;
  }
  // high source
  if (yy <= n - 2) return xx <= p + n - 2 && p + n - 2 < xx + yy;
  return p <= xx && xx <= p + n - 2 && (xx + yy - p - q) % 2 == 0;
}

// ---------------------------------------------------------------------------
// EulerOracle

namespace {

// Positive roots of the underlying graph, generated by closing the simples
// under the simple reflections s_i(x) = x - (x, e_i) e_i.
std::vector<std::vector<int>> positive_roots(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> x = queue.back();
    queue.pop_back();
    for (int i = 1; i <= n; ++i) {
      int pair = 2 * x[i - 1];
      for (int j : adj[i]) pair -= x[j - 1];
      std::vector<int> y = x;
      y[i - 1] -= pair;
      if (std::all_of(y.begin(), y.end(), [](int c) { return c >= 0; }) && seen.insert(y).second)
        queue.push_back(y);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  return out;
}

}  // namespace

EulerOracle::EulerOracle(DynkinDiagram diagram) : d_(std::move(diagram)) {
  const int n = d_.n();
  // Representations of the opposite orientation: with that convention the
  // injective slice carries the arrows of the diagram itself and can be
  // pinned to column 0 of ZDelta.
  for (auto [u, v] : d_.edges()) edges_.push_back({v, u});

  roots_ = positive_roots(n, edges_);
  const int K = (int)roots_.size();

  // path[u][v] = 1 iff there is a directed path u -> v (trees: at most one).
  std::vector<std::vector<int>> path(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) path[u][u] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : edges_)
      for (int w = 0; w < n; ++w)
        if (path[v - 1][w] && !path[u - 1][w]) {
          path[u - 1][w] = 1;
          changed = true;
        }
  }

  // dim P_j = row j of the path matrix, dim I_j = column j.
  proj_of_row_.assign(n + 1, -1);
  inj_of_row_.assign(n + 1, -1);
  proj_row_of_root_.assign(K, 0);
  inj_row_of_root_.assign(K, 0);
  for (int j = 1; j <= n; ++j) {
    std::vector<int> dp(n), di(n);
    for (int w = 0; w < n; ++w) {
      dp[w] = path[j - 1][w];
      di[w] = path[w][j - 1];
    }
    proj_of_row_[j] = root_index(dp);
    inj_of_row_[j] = root_index(di);
    proj_row_of_root_[proj_of_row_[j]] = j;
    inj_row_of_root_[inj_of_row_[j]] = j;
  }

  // Gram matrix of the Euler form, E = I - Adj; its inverse is the path
  // matrix, so the Coxeter matrix Phi = -E^{-1} E^T stays integral.
  std::vector<std::vector<int>> E(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) E[i][i] = 1;
  for (auto [u, v] : edges_) E[u - 1][v - 1] -= 1;
  auto mul = [n](const std::vector<std::vector<int>>& A, const std::vector<std::vector<int>>& B) {
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
  };
  std::vector<std::vector<int>> Et(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Et[i][j] = E[j][i];
  std::vector<std::vector<int>> phi = mul(path, Et);  // E^{-1} E^T
  std::vector<std::vector<int>> patht(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) patht[i][j] = path[j][i];
  std::vector<std::vector<int>> phi_inv = mul(patht, E);  // E^{-T} E
  auto apply = [n](const std::vector<std::vector<int>>& M, const std::vector<int>& x) {
    std::vector<int> y(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] -= M[i][j] * x[j];  // minus sign of Phi
    return y;
  };

  tau_root_.assign(K, -1);
  tau_inv_root_.assign(K, -1);
  for (int a = 0; a < K; ++a) {
    if (proj_row_of_root_[a] == 0) {
      tau_root_[a] = root_index(apply(phi, roots_[a]));
    }
    if (inj_row_of_root_[a] == 0) {
      tau_inv_root_[a] = root_index(apply(phi_inv, roots_[a]));
    }
  }
  // Sanity of signs and transposes: the Coxeter matrix must send projective
  // dimension vectors to minus the matching injective ones.
  for (int j = 1; j <= n; ++j) {
    std::vector<int> im = apply(phi, roots_[proj_of_row_[j]]);
    for (int w = 0; w < n; ++w) im[w] = -im[w];
    if (im != roots_[inj_of_row_[j]])
      throw std::logic_error("Coxeter matrix check failed for " + d_.name());
  }
  for (int a = 0; a < K; ++a) {
    if (tau_root_[a] >= 0 && tau_inv_root_[tau_root_[a]] != a)
      throw std::logic_error("tau / tau^{-1} are not mutually inverse on roots");
  }

  hom_memo_.assign((std::size_t)K * K, -1);
}

int EulerOracle::root_index(const std::vector<int>& dim) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), dim);
  if (it == roots_.end() || *it != dim)
    throw std::logic_error("dimension vector is not a positive root");
  return (int)(it - roots_.begin());
}

long long EulerOracle::euler(int a, int b) const {
  const std::vector<int>& x = roots_[a];
  const std::vector<int>& y = roots_[b];
  long long v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) v += (long long)x[i] * y[i];
  for (auto [u, w] : edges_) v -= (long long)x[u - 1] * y[w - 1];
  return v;
}

int EulerOracle::hom_mod(int a, int b) const {
  int& memo = hom_memo_[(std::size_t)a * roots_.size() + b];
  if (memo >= 0) return memo;
  long long v = euler(a, b);
  if (tau_root_[a] >= 0) v += hom_mod(b, tau_root_[a]);
  if (v < 0) throw std::logic_error("negative hom dimension in Euler recursion");
  memo = (int)v;
  return memo;
}

EulerOracle::Object EulerOracle::object_at(Vertex v) const {
  auto column = [this](int p, auto&& self) -> const std::vector<Object>& {
    auto it = column_cache_.find(p);
    if (it != column_cache_.end()) return it->second;
    std::vector<Object> col;
    if (p == 0) {
      for (int q = 1; q <= d_.n(); ++q) col.push_back({inj_of_row_[q], 0});
    } else if (p > 0) {
      for (Object o : self(p - 1, self)) {
        if (int row = inj_row_of_root_[o.root]; row != 0)
          col.push_back({proj_of_row_[row], o.shift + 1});
        else
          col.push_back({tau_inv_root_[o.root], o.shift});
      }
    } else {
      for (Object o : self(p + 1, self)) {
        if (int row = proj_row_of_root_[o.root]; row != 0)
          col.push_back({inj_of_row_[row], o.shift - 1});
        else
          col.push_back({tau_root_[o.root], o.shift});
      }
    }
    return column_cache_.emplace(p, std::move(col)).first->second;
  };
  return column(v.p, column)[v.q - 1];
}

int EulerOracle::hom(Vertex x, Vertex y) const {
  const int n = d_.n();
  if (x.q < 1 || x.q > n || y.q < 1 || y.q > n)
    fail(Errc::out_of_range, "vertex row out of range for " + d_.name());
  std::lock_guard<std::mutex> lock(mu_);
  Object a = object_at(x);
  Object b = object_at(y);
  if (b.shift == a.shift) return hom_mod(a.root, b.root);
  if (b.shift == a.shift + 1)
    return tau_root_[a.root] < 0 ? 0 : hom_mod(b.root, tau_root_[a.root]);
  return 0;
}

}  // namespace smskit
