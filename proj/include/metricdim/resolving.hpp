#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

/// Ordered list of distinct landmark vertices; the order fixes the
/// coordinates of a metric representation.
class LandmarkSet {
public:
  LandmarkSet() = default;
  explicit LandmarkSet(std::vector<int> vertices) : v_(std::move(vertices)) {
    auto sorted = v_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("landmark set contains a duplicate vertex");
    if (!sorted.empty() && sorted.front() < 0) throw InvalidArgument("negative landmark index");
  }

  void check_range(int n) const {
    for (int v : v_)
      if (v >= n) throw InvalidArgument("landmark " + std::to_string(v) + " out of range for order " + std::to_string(n));
  }

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  int operator[](std::size_t i) const { return v_[i]; }
  const std::vector<int>& vertices() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  bool contains(int v) const { return std::find(v_.begin(), v_.end(), v) != v_.end(); }

  friend bool operator==(const LandmarkSet&, const LandmarkSet&) = default;
  friend auto operator<=>(const LandmarkSet&, const LandmarkSet&) = default;

private:
  std::vector<int> v_;
};

/// r(u|S): distances from u to each landmark, in landmark order.
inline std::vector<int> metric_vector(const DistanceMatrix& dm, int u, const LandmarkSet& s) {
  dm.require_connected();
  if (u < 0 || u >= dm.order()) throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
  s.check_range(dm.order());
  std::vector<int> r;
  r.reserve(s.size());
  for (int v : s) r.push_back(dm(u, v));
  return r;
}

struct GeneratorCheck {
  bool is_generator = false;
  /// Two vertices sharing a representation, present when !is_generator.
  std::optional<std::pair<int, int>> undistinguished;

  explicit operator bool() const noexcept { return is_generator; }
};

inline GeneratorCheck check_metric_generator(const DistanceMatrix& dm, const LandmarkSet& s) {
  dm.require_connected();
  s.check_range(dm.order());
  std::map<std::vector<int>, int> seen;
  for (int u = 0; u < dm.order(); ++u) {
    std::vector<int> r;
    r.reserve(s.size());
    for (int v : s) r.push_back(dm(u, v));
    auto [it, inserted] = seen.emplace(std::move(r), u);
    if (!inserted) return {false, std::pair{it->second, u}};
  }
  return {true, std::nullopt};
}

inline bool is_metric_generator(const DistanceMatrix& dm, const LandmarkSet& s) {
  return check_metric_generator(dm, s).is_generator;
}

enum class TwinMode { true_twin, mixed };

/// Twin equivalence classes, each sorted, ordered by smallest member.
struct TwinPartition {
  TwinMode mode = TwinMode::true_twin;
  std::vector<std::vector<int>> classes;

  std::size_t class_count() const noexcept { return classes.size(); }
  bool all_singletons() const noexcept {
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
  }
};

/// true-twin mode: N[u] = N[v]. mixed mode: N[u] = N[v] or N(u) = N(v).
inline TwinPartition twin_partition(const Graph& g, TwinMode mode) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<VertexSet> closed;
  closed.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighbors(v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool twins = closed[u] == closed[v] || (mode == TwinMode::mixed && g.neighbors(u) == g.neighbors(v));
      if (twins) parent[find(v)] = find(u);
    }
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  TwinPartition tp{mode, {}};
  for (auto& [root, members] : by_root) tp.classes.push_back(std::move(members));
  std::sort(tp.classes.begin(), tp.classes.end());
  return tp;
}

/// n - t over mixed-twin classes, and at least 1 on nontrivial graphs.
inline int twin_lower_bound(const Graph& g) {
  if (g.order() == 1) return 0;
  const auto tp = twin_partition(g, TwinMode::mixed);
  return std::max(1, g.order() - static_cast<int>(tp.class_count()));
}

/// Smallest k with D^k + k*D^(k-1) >= n: the number of distance vectors over
/// {0..D}^k with at most one zero coordinate.
inline int counting_lower_bound(int n, int diameter) {
  if (n < 2 || diameter < 1) throw InvalidArgument("counting bound needs n >= 2 and D >= 1");
  const auto target = static_cast<std::uint64_t>(n);
  const auto d = static_cast<std::uint64_t>(diameter);
  for (int k = 1;; ++k) {
    // D^(k-1) * (D + k), saturating once past the target.
    std::uint64_t p = 1;
    for (int i = 0; i < k - 1 && p < target; ++i) p *= d;
    if (p >= target || p * (d + static_cast<std::uint64_t>(k)) >= target) return k;
  }
}

}  // namespace metricdim
