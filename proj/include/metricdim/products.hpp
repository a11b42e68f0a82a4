#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

/// Row-major pairing of V1 x V2 onto 0..n1*n2-1. Every product, construction
/// and report addresses product vertices through this bijection.
struct VertexPairing {
  int n1 = 1;
  int n2 = 1;

  int encode(int i, int j) const noexcept { return i * n2 + j; }
  std::pair<int, int> decode(int v) const noexcept { return {v / n2, v % n2}; }
  int size() const noexcept { return n1 * n2; }
};

namespace detail {

enum class ProductKind { strong, cartesian };

inline Graph make_product(const Graph& g, const Graph& h, ProductKind kind) {
  const long long total = static_cast<long long>(g.order()) * h.order();
  if (total > static_cast<long long>(max_graph_order))
    throw InvalidArgument("product order " + std::to_string(total) + " exceeds limit " +
                          std::to_string(max_graph_order));
  const VertexPairing p{g.order(), h.order()};
  const auto un = static_cast<std::size_t>(p.size());
  std::vector<VertexSet> adj(un, VertexSet(un));
  std::vector<std::string> labels(un);
  for (int a = 0; a < p.n1; ++a) {
    for (int b = 0; b < p.n2; ++b) {
      const int v = p.encode(a, b);
      labels[v] = "(" + g.label(a) + "," + h.label(b) + ")";
      auto& row = adj[v];
      h.neighbors(b).for_each([&](std::size_t d) { row.set(static_cast<std::size_t>(p.encode(a, static_cast<int>(d)))); });
      g.neighbors(a).for_each([&](std::size_t c) {
        row.set(static_cast<std::size_t>(p.encode(static_cast<int>(c), b)));
        if (kind == ProductKind::strong)
          h.neighbors(b).for_each(
              [&](std::size_t d) { row.set(static_cast<std::size_t>(p.encode(static_cast<int>(c), static_cast<int>(d)))); });
      });
    }
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

}  // namespace detail

/// G ⊠ H: adjacent when each coordinate is equal-or-adjacent and the pair differs.
inline Graph strong_product(const Graph& g, const Graph& h) {
  return detail::make_product(g, h, detail::ProductKind::strong);
}

/// G □ H: adjacent when one coordinate is equal and the other adjacent.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  return detail::make_product(g, h, detail::ProductKind::cartesian);
}

struct DistanceLawMismatch {
  int a, b, c, d;
  int product_distance;
  int expected;
};

/// First pair of g⊠h whose BFS distance differs from the coordinatewise maximum.
inline std::optional<DistanceLawMismatch> find_distance_law_mismatch(const Graph& g, const Graph& h) {
  const auto dg = all_pairs_distances(g);
  const auto dh = all_pairs_distances(h);
  dg.require_connected();
  dh.require_connected();
  const auto dp = all_pairs_distances(strong_product(g, h));
  const VertexPairing p{g.order(), h.order()};
  for (int x = 0; x < p.size(); ++x) {
    const auto [a, b] = p.decode(x);
    for (int y = 0; y < p.size(); ++y) {
      const auto [c, d] = p.decode(y);
      const int expected = std::max(dg(a, c), dh(b, d));
      if (dp(x, y) != expected) return DistanceLawMismatch{a, b, c, d, dp(x, y), expected};
    }
  }
  return std::nullopt;
}

inline bool verify_distance_law(const Graph& g, const Graph& h) {
  return !find_distance_law_mismatch(g, h).has_value();
}

}  // namespace metricdim
