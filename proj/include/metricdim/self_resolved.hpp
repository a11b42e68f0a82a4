#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/resolving.hpp"

namespace metricdim {

/// Witness that the pair {x, y} is resolved at level k.
struct ResolutionCertificate {
  int x = 0;
  int y = 0;
  int witness = 0;
  /// through_x: d(y,w) >= k and x ∈ I[y,w].  Otherwise d(x,w) >= k and y ∈ I[x,w].
  bool through_x = true;
  int k = 0;
};

struct SelfResolvedResult {
  bool holds = false;
  std::optional<std::pair<int, int>> failing_pair;
  std::vector<ResolutionCertificate> certificates;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

// Smallest witness for {x,y}; the x-side disjunct is tried first for each w.
inline std::optional<ResolutionCertificate> find_resolution(const DistanceMatrix& dm, int x, int y, int k) {
  const int dxy = dm(x, y);
  for (int w = 0; w < dm.order(); ++w) {
    const int dyw = dm(y, w);
    if (dyw >= k && dxy + dm(x, w) == dyw) return ResolutionCertificate{x, y, w, true, k};
    const int dxw = dm(x, w);
    if (dxw >= k && dxy + dyw == dxw) return ResolutionCertificate{x, y, w, false, k};
  }
  return std::nullopt;
}

}  // namespace detail

/// Whether every pair of distinct vertices is resolved at level k.
inline SelfResolvedResult is_self_k_resolved(const DistanceMatrix& dm, int k, bool want_certificates = false) {
  dm.require_connected();
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  SelfResolvedResult res;
  for (int x = 0; x < dm.order(); ++x)
    for (int y = x + 1; y < dm.order(); ++y) {
      auto cert = detail::find_resolution(dm, x, y, k);
      if (!cert) {
        res.failing_pair = std::pair{x, y};
        res.certificates.clear();
        return res;
      }
      if (want_certificates) res.certificates.push_back(*cert);
    }
  res.holds = true;
  return res;
}

inline SelfResolvedResult is_self_k_resolved(const Graph& g, int k, bool want_certificates = false) {
  return is_self_k_resolved(all_pairs_distances(g), k, want_certificates);
}

/// Largest k for which the graph is self k-resolved. The predicate is
/// monotone in k and fails above the diameter, so scan down from it.
inline int max_self_resolution(const DistanceMatrix& dm) {
  dm.require_connected();
  if (dm.order() < 2) throw InvalidArgument("max self resolution needs at least two vertices");
  for (int k = dm.diameter(); k > 1; --k)
    if (is_self_k_resolved(dm, k)) return k;
  return 1;
}

inline int max_self_resolution(const Graph& g) { return max_self_resolution(all_pairs_distances(g)); }

/// True when "self 2-resolved" and "no true twins" agree on g.
inline bool check_lemma_2resolved(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("lemma check needs a nontrivial graph");
  const auto dm = all_pairs_distances(g);
  dm.require_connected();
  const bool resolved = is_self_k_resolved(dm, 2).holds;
  const bool no_true_twins = twin_partition(g, TwinMode::true_twin).all_singletons();
  return resolved == no_true_twins;
}

/// On C_n: for adjacent x,y and u != v with d(u,x) = d(v,x), d(u,y) != d(v,y).
/// Returns the number of violating (x, y, u, v) tuples.
inline int cycle_claim_violations(int n) {
  if (n < 3) throw InvalidArgument("cycle claim needs n >= 3");
  const auto d = all_pairs_distances(cycle_graph(n));
  int violations = 0;
  for (int x = 0; x < n; ++x)
    for (int y : {(x + 1) % n, (x + n - 1) % n})
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && d(u, x) == d(v, x) && d(u, y) == d(v, y)) ++violations;
  return violations;
}

inline bool check_cycle_claim(int n) { return cycle_claim_violations(n) == 0; }

}  // namespace metricdim
