#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/products.hpp"
#include "metricdim/resolving.hpp"
#include "metricdim/self_resolved.hpp"

namespace metricdim {

/// A landmark set on a product graph, in the row-major pairing.
struct ConstructionOutput {
  LandmarkSet landmarks;
  int claimed_size = 0;
  bool preconditions_met = true;
  /// Name of the first hypothesis that failed, when !preconditions_met.
  std::string failed_precondition;
  std::vector<std::string> warnings;
};

/// Product vertex (u_i, v_j) for 1-based factor labels.
inline int one_based_vertex(const VertexPairing& p, int i, int j) { return p.encode(i - 1, j - 1); }

namespace detail {

inline ConstructionOutput finish(std::vector<int> vertices, int claimed) {
  ConstructionOutput out;
  std::vector<int> unique = vertices;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() != vertices.size())
    out.warnings.push_back("construction produced " + std::to_string(vertices.size() - unique.size()) +
                           " duplicate landmark(s); removed");
  out.landmarks = LandmarkSet(std::move(unique));
  out.claimed_size = claimed;
  if (static_cast<int>(out.landmarks.size()) != claimed)
    out.warnings.push_back("landmark count " + std::to_string(out.landmarks.size()) + " differs from claimed size " +
                           std::to_string(claimed));
  return out;
}

inline void fail(ConstructionOutput& out, std::string what) {
  if (out.preconditions_met) {
    out.preconditions_met = false;
    out.failed_precondition = std::move(what);
  }
}

}  // namespace detail

/// (V1 × S2) ∪ (S1 × V2) on g ⊠ h.
inline ConstructionOutput upper_bound_generator(const Graph& g, const Graph& h, const LandmarkSet& s1,
                                                const LandmarkSet& s2) {
  s1.check_range(g.order());
  s2.check_range(h.order());
  const VertexPairing p{g.order(), h.order()};
  std::vector<int> vs;
  for (int i = 0; i < p.n1; ++i)
    for (int j = 0; j < p.n2; ++j)
      if (s1.contains(i) || s2.contains(j)) vs.push_back(p.encode(i, j));
  const int a = static_cast<int>(s1.size()), b = static_cast<int>(s2.size());
  auto out = detail::finish(std::move(vs), p.n1 * b + p.n2 * a - a * b);

  const auto dg = all_pairs_distances(g);
  const auto dh = all_pairs_distances(h);
  if (!dg.connected() || !dh.connected()) detail::fail(out, "factors connected");
  if (p.n1 < 2) detail::fail(out, "n1 >= 2");
  if (dg.connected() && !is_metric_generator(dg, s1)) detail::fail(out, "s1 generates G");
  if (dh.connected() && !is_metric_generator(dh, s2)) detail::fail(out, "s2 generates H");
  return out;
}

/// S1 × V2 on g ⊠ h, for h self k-resolved and diam(g) < k.
inline ConstructionOutput resolved_generator(const Graph& g, const Graph& h, const LandmarkSet& s1, int k) {
  s1.check_range(g.order());
  const VertexPairing p{g.order(), h.order()};
  std::vector<int> vs;
  for (int i : s1)
    for (int j = 0; j < p.n2; ++j) vs.push_back(p.encode(i, j));
  auto out = detail::finish(std::move(vs), static_cast<int>(s1.size()) * p.n2);

  const auto dg = all_pairs_distances(g);
  const auto dh = all_pairs_distances(h);
  if (!dg.connected() || !dh.connected()) {
    detail::fail(out, "factors connected");
    return out;
  }
  if (!is_self_k_resolved(dh, k)) detail::fail(out, "H self k-resolved");
  if (dg.diameter() >= k) detail::fail(out, "diam(G) < k");
  if (!is_metric_generator(dg, s1)) detail::fail(out, "s1 generates G");
  return out;
}

/// Zig-zag set on P_{n1} ⊠ P_{n2}: landmarks alternate between rows u_1 and
/// u_{n1} at columns v_{t(n1-1)+1}, closed by one landmark at column v_{n2}.
inline ConstructionOutput path_path_generator(int n1, int n2) {
  if (n1 < 2 || n1 >= n2) throw InvalidArgument("path_path_generator needs 2 <= n1 < n2");
  const VertexPairing p{n1, n2};
  const int step = n1 - 1;
  const int blocks = (n2 - 1 + step - 1) / step;  // ceil((n2-1)/(n1-1))
  const int alpha = blocks - 1;
  std::vector<int> vs;
  for (int t = 0; t <= alpha; ++t) vs.push_back(one_based_vertex(p, t % 2 == 0 ? 1 : n1, t * step + 1));
  vs.push_back(one_based_vertex(p, blocks % 2 == 1 ? n1 : 1, n2));
  return detail::finish(std::move(vs), (n1 + n2 - 2 + step - 1) / step);
}

/// {(u_1,v_1), (u_n,v_1), (u_n,v_n)} on P_n ⊠ P_n.
inline ConstructionOutput path_path_corner_generator(int n) {
  if (n < 2) throw InvalidArgument("corner generator needs n >= 2");
  const VertexPairing p{n, n};
  return detail::finish({one_based_vertex(p, 1, 1), one_based_vertex(p, n, 1), one_based_vertex(p, n, n)}, 3);
}

inline bool diagonal_hypothesis(int n1, int n2) { return n2 >= 4 && n1 - 1 >= 2 * (n2 / 2); }

/// {(u_i, v_{i mod n2}) : 0 <= i < n1} on P_{n1} ⊠ C_{n2} (0-based labels).
inline ConstructionOutput path_cycle_diagonal_generator(int n1, int n2) {
  if (n1 < 1 || n2 < 3) throw InvalidArgument("diagonal generator needs n1 >= 1 and n2 >= 3");
  const VertexPairing p{n1, n2};
  std::vector<int> vs;
  for (int i = 0; i < n1; ++i) vs.push_back(p.encode(i, i % n2));
  auto out = detail::finish(std::move(vs), n1);
  if (!diagonal_hypothesis(n1, n2)) detail::fail(out, "(n1-1)/2 >= floor(n2/2) >= 2");
  return out;
}

/// floor((n1+n2-2)/(n1-1)) <= dim(P_{n1} ⊠ P_{n2}).
inline int path_path_lower_bound(int n1, int n2) {
  if (n1 < 2 || n1 >= n2) throw InvalidArgument("path_path_lower_bound needs 2 <= n1 < n2");
  return (n1 + n2 - 2) / (n1 - 1);
}

}  // namespace metricdim
