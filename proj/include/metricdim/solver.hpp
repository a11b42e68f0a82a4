#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/parallel.hpp"
#include "metricdim/resolving.hpp"

namespace metricdim {

struct SolverOptions {
  /// Search-node limit; unset means unlimited.
  std::optional<std::uint64_t> budget;
  /// 0 selects default_worker_count().
  int workers = 0;
  /// Orders above this need an explicit budget.
  int vertex_limit = 64;
};

struct DimResult {
  /// Exact dimension when `exact`, otherwise the proven lower bound.
  int dimension = 0;
  /// Lexicographically smallest minimum generator (empty when inexact).
  LandmarkSet basis;
  bool exact = false;
  int lower_bound = 0;
  int upper_bound = 0;
  int twin_bound = 0;
  int counting_bound = 0;
  std::uint64_t nodes_explored = 0;
};

struct LowerBounds {
  int twin = 0;
  int counting = 0;
  int best() const noexcept { return std::max(twin, counting); }
};

inline LowerBounds lower_bounds(const Graph& g, const DistanceMatrix& dm) {
  if (g.order() < 2) return {0, 0};
  return {twin_lower_bound(g), counting_lower_bound(g.order(), dm.diameter())};
}

namespace detail {

// Set operations shared by the single-word and multi-word searches.
inline std::uint64_t set_and(std::uint64_t a, std::uint64_t b) noexcept { return a & b; }
inline int set_count(std::uint64_t a) noexcept { return std::popcount(a); }
template <typename Set>
Set make_set(std::size_t n) {
  if constexpr (std::is_same_v<Set, std::uint64_t>)
    return 0;
  else
    return VertexSet(n);
}
inline void set_insert(std::uint64_t& s, std::size_t i) noexcept { s |= std::uint64_t{1} << i; }
template <typename Fn>
void set_for_each(std::uint64_t s, Fn&& fn) {
  for (; s; s &= s - 1) fn(static_cast<std::size_t>(std::countr_zero(s)));
}

inline VertexSet set_and(const VertexSet& a, const VertexSet& b) { return a & b; }
inline int set_count(const VertexSet& a) noexcept { return static_cast<int>(a.count()); }
inline void set_insert(VertexSet& s, std::size_t i) noexcept { s.set(i); }
template <typename Fn>
void set_for_each(const VertexSet& s, Fn&& fn) {
  s.for_each(fn);
}

struct BranchOutcome {
  std::optional<std::vector<int>> basis;
  std::uint64_t nodes = 0;
  bool capped = false;
};

/// Lexicographic k-subset search. The partition induced by the chosen
/// landmarks is kept as its non-singleton cells; choosing landmark s splits
/// each cell by the distance layers of s.
template <typename Set>
class SubsetSearch {
public:
  SubsetSearch(const Graph& g, const DistanceMatrix& dm) : n_(g.order()), diameter_(dm.diameter()) {
    const auto un = static_cast<std::size_t>(n_);
    layers_.assign(un, std::vector<Set>(static_cast<std::size_t>(diameter_) + 1, make_set<Set>(un)));
    for (int s = 0; s < n_; ++s)
      for (int v = 0; v < n_; ++v) set_insert(layers_[s][dm(s, v)], static_cast<std::size_t>(v));

    // Largest vertex index distinguishing each pair; a pair whose value is
    // below the next candidate can no longer be separated.
    last_distinguisher_.assign(un * un, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        int w = n_ - 1;
        while (w >= 0 && dm(a, w) == dm(b, w)) --w;
        last_distinguisher_[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = w;
      }

    const auto tp = twin_partition(g, TwinMode::mixed);
    class_of_.assign(un, -1);
    for (const auto& c : tp.classes) {
      if (c.size() < 2) continue;
      const int id = static_cast<int>(class_size_.size());
      class_size_.push_back(static_cast<int>(c.size()));
      for (int v : c) class_of_[v] = id;
    }

    root_cell_ = make_set<Set>(un);
    for (int v = 0; v < n_; ++v) set_insert(root_cell_, static_cast<std::size_t>(v));
  }

  BranchOutcome run_branch(int k, int first, std::uint64_t cap) const {
    State st(*this, k, cap);
    st.cells[0].push_back(root_cell_);
    st.search(0, first, first);
    BranchOutcome out;
    out.nodes = st.nodes;
    out.capped = st.capped;
    if (st.found) out.basis = st.chosen;
    return out;
  }

private:
  struct State {
    const SubsetSearch& s;
    int k;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    bool capped = false;
    bool found = false;
    std::vector<int> chosen;
    std::vector<std::vector<Set>> cells;
    std::vector<int> class_chosen;

    State(const SubsetSearch& search, int k_, std::uint64_t cap_)
        : s(search), k(k_), cap(cap_), cells(static_cast<std::size_t>(k_) + 1), class_chosen(search.class_size_.size(), 0) {
      chosen.reserve(static_cast<std::size_t>(k_));
    }

    // Tries candidates in [lo, hi] for position `depth`.
    void search(int depth, int lo, int hi) {
      const int remaining = k - depth;
      for (int v = lo; v <= hi && !found && !capped; ++v) {
        if (++nodes > cap) {
          capped = true;
          return;
        }
        auto& next = cells[static_cast<std::size_t>(depth) + 1];
        next.clear();
        int largest = 0;
        for (const auto& cell : cells[static_cast<std::size_t>(depth)]) {
          for (const auto& layer : s.layers_[static_cast<std::size_t>(v)]) {
            auto part = set_and(cell, layer);
            const int c = set_count(part);
            if (c >= 2) {
              largest = std::max(largest, c);
              next.push_back(std::move(part));
            }
          }
        }
        chosen.push_back(v);
        if (s.class_of_[v] >= 0) ++class_chosen[static_cast<std::size_t>(s.class_of_[v])];

        if (next.empty()) {
          // Every superset of a generator is one; the first completion in
          // lexicographic order appends the next consecutive vertices.
          if (v + remaining - 1 < s.n_) {
            for (int extra = 1; extra < remaining; ++extra) chosen.push_back(v + extra);
            found = true;
            return;
          }
        } else if (remaining > 1 && feasible(v + 1, remaining - 1, largest, next)) {
          search(depth + 1, v + 1, s.n_ - (remaining - 1));
        }
        if (found) return;
        chosen.pop_back();
        if (s.class_of_[v] >= 0) --class_chosen[static_cast<std::size_t>(s.class_of_[v])];
      }
    }

    bool feasible(int next_candidate, int left, int largest_cell, const std::vector<Set>& open) const {
      if (static_cast<std::uint64_t>(largest_cell) > distinct_vectors(left)) return false;

      // Each twin class needs all but one member; count the shortfall.
      int need = 0;
      for (std::size_t c = 0; c < s.class_size_.size(); ++c) {
        const int short_by = s.class_size_[c] - 1 - class_chosen[c];
        if (short_by > 0) need += short_by;
      }
      if (need > left) return false;
      if (need > 0) {
        std::vector<int> available(s.class_size_.size(), 0);
        for (int v = next_candidate; v < s.n_; ++v)
          if (s.class_of_[v] >= 0) ++available[static_cast<std::size_t>(s.class_of_[v])];
        for (std::size_t c = 0; c < s.class_size_.size(); ++c)
          if (s.class_size_[c] - 1 - class_chosen[c] > available[c]) return false;
      }

      const auto un = static_cast<std::size_t>(s.n_);
      for (const auto& cell : open) {
        std::vector<std::size_t> members;
        set_for_each(cell, [&](std::size_t m) { members.push_back(m); });
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            if (s.last_distinguisher_[members[i] * un + members[j]] < next_candidate) return false;
      }
      return true;
    }

    // Distinct vectors over {0..D}^r with at most one zero coordinate.
    std::uint64_t distinct_vectors(int r) const {
      const auto d = static_cast<std::uint64_t>(s.diameter_);
      const auto limit = static_cast<std::uint64_t>(s.n_);
      std::uint64_t p = 1;
      for (int i = 0; i < r - 1 && p <= limit; ++i) p *= d;
      if (p > limit) return limit;
      return std::min(limit, p * (d + static_cast<std::uint64_t>(r)));
    }
  };

  int n_;
  int diameter_;
  std::vector<std::vector<Set>> layers_;
  std::vector<int> last_distinguisher_;
  std::vector<int> class_of_;
  std::vector<int> class_size_;
  Set root_cell_{};
};

template <typename Set>
DimResult solve(const Graph& g, const DistanceMatrix& dm, const SolverOptions& opt, const LowerBounds& lb) {
  DimResult res;
  res.twin_bound = lb.twin;
  res.counting_bound = lb.counting;
  const int n = g.order();
  res.upper_bound = n - 1;
  const std::uint64_t budget = opt.budget.value_or(std::numeric_limits<std::uint64_t>::max());
  const int workers = opt.workers > 0 ? opt.workers : default_worker_count();
  const SubsetSearch<Set> search(g, dm);

  std::uint64_t used = 0;
  for (int k = std::max(1, lb.best()); k <= n - 1; ++k) {
    res.lower_bound = k;
    const std::uint64_t remaining = budget - used;
    const int branches = n - k + 1;
    std::vector<BranchOutcome> outcomes(static_cast<std::size_t>(branches));
    std::atomic<int> best_success{branches};
    parallel_for(static_cast<std::size_t>(branches), workers, [&](std::size_t b) {
      const int first = static_cast<int>(b);
      if (first > best_success.load()) return;
      auto out = search.run_branch(k, first, remaining);
      if (out.basis) {
        int cur = best_success.load();
        while (first < cur && !best_success.compare_exchange_weak(cur, first)) {
        }
      }
      outcomes[b] = std::move(out);
    });

    // Ordered reduction: identical for every worker count.
    std::uint64_t level_nodes = 0;
    for (int b = 0; b < branches; ++b) {
      const auto& out = outcomes[static_cast<std::size_t>(b)];
      level_nodes += out.nodes;
      if (out.capped || level_nodes > remaining) {
        res.nodes_explored = used + std::min(level_nodes, remaining);
        res.dimension = k;
        res.exact = false;
        return res;
      }
      if (out.basis) {
        res.nodes_explored = used + level_nodes;
        res.dimension = k;
        res.basis = LandmarkSet(*out.basis);
        res.exact = true;
        res.upper_bound = k;
        return res;
      }
    }
    used += level_nodes;
  }
  // Unreachable for n >= 2: V minus one vertex always resolves.
  throw Error("metric dimension search exhausted without a generator");
}

}  // namespace detail

/// Exact metric dimension with the lexicographically smallest basis.
inline DimResult metric_dimension_exact(const Graph& g, const DistanceMatrix& dm, const SolverOptions& opt = {}) {
  dm.require_connected();
  if (dm.order() != g.order()) throw InvalidArgument("distance matrix does not match graph");
  const int n = g.order();
  if (n > opt.vertex_limit && !opt.budget)
    throw InvalidArgument("order " + std::to_string(n) + " exceeds solver limit " + std::to_string(opt.vertex_limit) +
                          "; set a budget to search anyway");
  if (n == 1) {
    DimResult r;
    r.exact = true;
    return r;
  }
  const auto lb = lower_bounds(g, dm);
  if (n <= 64) return detail::solve<std::uint64_t>(g, dm, opt, lb);
  return detail::solve<VertexSet>(g, dm, opt, lb);
}

inline DimResult metric_dimension_exact(const Graph& g, const SolverOptions& opt = {}) {
  return metric_dimension_exact(g, all_pairs_distances(g), opt);
}

}  // namespace metricdim
