#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

inline constexpr int max_enumeration_order = 7;

/// Walks every labeled connected simple graph on n vertices (1 <= n <= 7),
/// one edge mask at a time. Not isomorph-free.
class ConnectedGraphEnumerator {
public:
  explicit ConnectedGraphEnumerator(int n) : n_(n) {
    if (n < 1 || n > max_enumeration_order)
      throw InvalidArgument("enumeration supports 1 <= n <= " + std::to_string(max_enumeration_order));
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    end_ = std::uint64_t{1} << pairs_.size();
  }

  /// Number of candidate edge masks, 2^(n(n-1)/2).
  std::uint64_t candidate_count() const noexcept { return end_; }

  std::optional<Graph> next() {
    while (mask_ < end_) {
      const std::uint64_t m = mask_++;
      if (connected(m)) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs_.size(); ++b)
          if ((m >> b) & 1U) edges.push_back(pairs_[b]);
        return Graph(n_, edges);
      }
    }
    return std::nullopt;
  }

private:
  bool connected(std::uint64_t m) const {
    std::uint32_t adj[max_enumeration_order] = {};
    for (std::size_t b = 0; b < pairs_.size(); ++b)
      if ((m >> b) & 1U) {
        adj[pairs_[b].first] |= 1U << pairs_[b].second;
        adj[pairs_[b].second] |= 1U << pairs_[b].first;
      }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1U << n_) - 1;
  }

  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

template <typename Fn>
void for_each_connected(int n, Fn&& fn) {
  ConnectedGraphEnumerator it(n);
  while (auto g = it.next()) fn(*g);
}

inline std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace metricdim
