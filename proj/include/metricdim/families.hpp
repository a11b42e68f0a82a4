#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "metricdim/graph.hpp"
#include "metricdim/products.hpp"

namespace metricdim {

// Vertex numbering conventions:
//   path, cycle     traversal order 0..n-1 (cycle closes n-1 ~ 0)
//   star            centre 0, leaves 1..n-1
//   caterpillar     spine 0..s-1, then the legs of spine vertex 0, 1, ...
//   grid, hypercube row-major product pairing
//   pseudo_sphere   poles a=0, b=1, then the interior of each path from a to b
//   clique_fan      centre 0, then each clique in turn

inline Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph star_graph(int n) {
  if (n < 2) throw InvalidArgument("star needs n >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

inline Graph caterpillar_graph(int spine, int legs) {
  if (spine < 1 || legs < 0) throw InvalidArgument("caterpillar needs spine >= 1 and legs >= 0");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i)
    for (int l = 0; l < legs; ++l) e.emplace_back(i, next++);
  return Graph(next, e);
}

/// Uniform labeled tree decoded from a seeded Prüfer sequence. Reduction is
/// done with raw engine output so the tree is identical on every platform.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("tree needs n >= 1");
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (auto& x : prufer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : prufer) ++degree[x];
  std::vector<Edge> e;
  for (int x : prufer) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0)
        u = v;
      else
        e.emplace_back(u, v);
    }
  return Graph(n, e);
}

/// Q_r as the r-fold Cartesian power of K2.
inline Graph hypercube_graph(int r) {
  if (r < 1) throw InvalidArgument("hypercube needs r >= 1");
  Graph q = complete_graph(2);
  for (int i = 1; i < r; ++i) q = cartesian_product(q, complete_graph(2));
  return q;
}

inline Graph grid_graph(int n, int m) { return cartesian_product(path_graph(n), path_graph(m)); }

/// r paths of order `path_order` (default k+1) glued at their end points.
inline Graph pseudo_sphere(int k, int r, int path_order = 0) {
  if (k < 2 || r < 2) throw InvalidArgument("pseudo-sphere needs k >= 2 and r >= 2");
  if (path_order == 0) path_order = k + 1;
  if (path_order < k + 1) throw InvalidArgument("pseudo-sphere paths need order >= k+1");
  const int interior = path_order - 2;
  std::vector<Edge> e;
  int next = 2;
  for (int p = 0; p < r; ++p) {
    int prev = 0;
    for (int i = 0; i < interior; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph(next, e);
}

/// K1 + (K_{r1} ∪ ... ∪ K_{rl}).
inline Graph clique_fan(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw InvalidArgument("clique fan needs at least two cliques");
  std::vector<Edge> e;
  int next = 1;
  for (int r : sizes) {
    if (r < 2) throw InvalidArgument("clique fan cliques need order >= 2");
    const int base = next;
    for (int i = 0; i < r; ++i) {
      e.emplace_back(0, base + i);
      for (int j = i + 1; j < r; ++j) e.emplace_back(base + i, base + j);
    }
    next += r;
  }
  return Graph(next, e);
}

namespace detail {

inline void require_arity(std::string_view kind, const std::vector<int>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi)
    throw InvalidArgument("family '" + std::string(kind) + "' takes " + std::to_string(lo) +
                          (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters");
}

}  // namespace detail

/// Builds a named family instance.
inline Graph family(std::string_view kind, const std::vector<int>& params) {
  using detail::require_arity;
  if (kind == "path") return require_arity(kind, params, 1, 1), path_graph(params[0]);
  if (kind == "cycle") return require_arity(kind, params, 1, 1), cycle_graph(params[0]);
  if (kind == "complete") return require_arity(kind, params, 1, 1), complete_graph(params[0]);
  if (kind == "star") return require_arity(kind, params, 1, 1), star_graph(params[0]);
  if (kind == "caterpillar") return require_arity(kind, params, 2, 2), caterpillar_graph(params[0], params[1]);
  if (kind == "random_tree") {
    require_arity(kind, params, 2, 2);
    if (params[1] < 0) throw InvalidArgument("random_tree seed must be nonnegative");
    return random_tree(params[0], static_cast<std::uint64_t>(params[1]));
  }
  if (kind == "hypercube") return require_arity(kind, params, 1, 1), hypercube_graph(params[0]);
  if (kind == "grid") {
    require_arity(kind, params, 2, 2);
    if (params[0] < 1 || params[1] < 1) throw InvalidArgument("grid needs n, m >= 1");
    return grid_graph(params[0], params[1]);
  }
  if (kind == "pseudo_sphere")
    return require_arity(kind, params, 2, 3), pseudo_sphere(params[0], params[1], params.size() == 3 ? params[2] : 0);
  if (kind == "clique_fan") return clique_fan(params);
  throw InvalidArgument("unknown graph family '" + std::string(kind) + "'");
}

/// Parses "kind:p1xp2x..." (e.g. "path:5", "grid:2x3") into a family instance.
inline Graph family_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("family spec '" + std::string(spec) + "' lacks ':'");
  const auto kind = spec.substr(0, colon);
  std::vector<int> params;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const auto sep = rest.find('x');
    const auto tok = rest.substr(0, sep);
    if (tok.empty()) throw InvalidArgument("empty parameter in family spec '" + std::string(spec) + "'");
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw InvalidArgument("bad parameter in family spec '" + std::string(spec) + "'");
      value = value * 10 + (ch - '0');
      if (value > 1'000'000) throw InvalidArgument("parameter too large in '" + std::string(spec) + "'");
    }
    params.push_back(value);
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + 1);
  }
  return family(kind, params);
}

}  // namespace metricdim
