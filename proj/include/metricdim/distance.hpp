#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// All-pairs hop distances. Entries between components hold `unreachable`.
class DistanceMatrix {
public:
  static constexpr int unreachable = -1;

  DistanceMatrix() = default;

  int order() const noexcept { return n_; }
  int operator()(int a, int b) const noexcept {
    return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }
  const int* row(int a) const noexcept { return d_.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(n_); }
  bool connected() const noexcept { return connected_; }
  /// Largest finite distance.
  int diameter() const noexcept { return diameter_; }

  void require_connected() const {
    if (!connected_) throw DisconnectedGraph();
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);

  int n_ = 0;
  std::vector<int> d_;
  int diameter_ = 0;
  bool connected_ = true;
};

/// One BFS per source, frontiers expanded as bitset unions of adjacency rows.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  dm.n_ = n;
  dm.d_.assign(un * un, DistanceMatrix::unreachable);
  for (int s = 0; s < n; ++s) {
    int* row = dm.d_.data() + static_cast<std::size_t>(s) * un;
    VertexSet seen(un), frontier(un);
    seen.set(static_cast<std::size_t>(s));
    frontier.set(static_cast<std::size_t>(s));
    row[s] = 0;
    for (int level = 1; frontier.any(); ++level) {
      VertexSet next(un);
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<int>(v)); });
      next.subtract(seen);
      next.for_each([&](std::size_t v) { row[v] = level; });
      seen |= next;
      frontier = std::move(next);
    }
  }
  for (int v : dm.d_) {
    if (v == DistanceMatrix::unreachable)
      dm.connected_ = false;
    else
      dm.diameter_ = std::max(dm.diameter_, v);
  }
  return dm;
}

inline bool is_connected(const Graph& g) {
  const auto un = static_cast<std::size_t>(g.order());
  VertexSet seen(un), frontier(un);
  seen.set(0);
  frontier.set(0);
  while (frontier.any()) {
    VertexSet next(un);
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<int>(v)); });
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == un;
}

/// Geodesic interval I[x,y]: vertices on some shortest x-y path.
inline VertexSet interval(const DistanceMatrix& dm, int x, int y) {
  const int n = dm.order();
  if (x < 0 || y < 0 || x >= n || y >= n) throw InvalidArgument("interval endpoint out of range");
  dm.require_connected();
  VertexSet out(static_cast<std::size_t>(n));
  const int dxy = dm(x, y);
  for (int w = 0; w < n; ++w)
    if (dm(x, w) + dm(w, y) == dxy) out.set(static_cast<std::size_t>(w));
  return out;
}

inline VertexSet interval(const Graph& g, const DistanceMatrix& dm, int x, int y) {
  if (dm.order() != g.order()) throw InvalidArgument("distance matrix does not match graph");
  return interval(dm, x, y);
}

}  // namespace metricdim
