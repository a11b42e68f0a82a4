#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the library's BFS, bitset partitions or pruned search.

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "metricdim/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
inline constexpr int inf = std::numeric_limits<int>::max() / 4;

inline Matrix floyd_warshall(const metricdim::Graph& g) {
  const int n = g.order();
  Matrix d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool resolves(const Matrix& d, const std::vector<int>& s) {
  std::set<std::vector<int>> seen;
  for (std::size_t u = 0; u < d.size(); ++u) {
    std::vector<int> r;
    for (int v : s) r.push_back(d[u][v]);
    if (!seen.insert(r).second) return false;
  }
  return true;
}

struct Basis {
  int dimension = 0;
  std::vector<int> basis;
};

/// Smallest k, and the lexicographically first k-subset, that resolves.
inline Basis brute_force_dimension(const metricdim::Graph& g) {
  const auto d = floyd_warshall(g);
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (resolves(d, idx)) return {k, idx};
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {n, {}};
}

/// Number of labeled connected graphs on n vertices by scanning every mask.
inline int count_connected_labeled(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int count = 0;
  for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    int components = n;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) {
        const int a = find(pairs[b].first), c = find(pairs[b].second);
        if (a != c) {
          parent[a] = c;
          --components;
        }
      }
    if (components == 1) ++count;
  }
  return count;
}

/// Every shortest x-y path, enumerated by DFS over simple paths.
inline std::set<int> geodesic_vertices(const metricdim::Graph& g, int x, int y) {
  const auto d = floyd_warshall(g);
  std::set<int> out;
  std::vector<int> path{x};
  auto dfs = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) - 1 > d[x][y]) return;
    if (v == y) {
      if (static_cast<int>(path.size()) - 1 == d[x][y]) out.insert(path.begin(), path.end());
      return;
    }
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w) && std::find(path.begin(), path.end(), w) == path.end()) {
        path.push_back(w);
        self(self, w);
        path.pop_back();
      }
  };
  dfs(dfs, x);
  return out;
}

/// True when some vertex permutation maps a's distance matrix onto b's.
inline bool isomorphic_distances(const metricdim::Graph& a, const metricdim::Graph& b) {
  if (a.order() != b.order()) return false;
  const auto da = floyd_warshall(a), db = floyd_warshall(b);
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.order() && ok; ++i)
      for (int j = 0; j < a.order() && ok; ++j) ok = da[i][j] == db[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
