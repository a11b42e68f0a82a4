#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "metricdim/constructions.hpp"
#include "metricdim/distance.hpp"
#include "metricdim/enumerate.hpp"
#include "metricdim/families.hpp"
#include "metricdim/harness/report.hpp"
#include "metricdim/io.hpp"
#include "metricdim/products.hpp"
#include "metricdim/resolving.hpp"
#include "metricdim/self_resolved.hpp"
#include "metricdim/solver.hpp"

namespace metricdim::harness {

inline constexpr std::uint64_t default_budget = 100'000'000;

struct Context {
  SolverOptions solver{default_budget, 0, 64};
  /// Record wall-clock runtime; off keeps report files reproducible.
  bool timing = false;
};

using ParamMap = std::map<std::string, std::string>;

/// Parses "k=v,k=v". Values may not contain commas.
inline ParamMap parse_params(std::string_view text) {
  ParamMap out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw InvalidArgument("malformed parameter '" + std::string(item) + "' (expected name=value)");
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

class Params {
public:
  explicit Params(const ParamMap& m) : m_(m) {}

  int integer(const std::string& name) const {
    const auto& v = value(name);
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty()) throw InvalidArgument("parameter " + name + "='" + v + "' is not an integer");
    return x;
  }
  Graph graph(const std::string& name) const { return family_from_spec(value(name)); }
  bool has(const std::string& name) const { return m_.count(name) != 0; }

private:
  const std::string& value(const std::string& name) const {
    auto it = m_.find(name);
    if (it == m_.end()) throw InvalidArgument("missing parameter '" + name + "'");
    return it->second;
  }
  const ParamMap& m_;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  /// Accepted parameter names; alternatives are separated by '|'
  /// (e.g. L1 takes either G or n).
  std::vector<std::string> params;
  std::function<void(const Params&, const Context&, VerificationReport&)> evaluate;
};

namespace detail {

struct Measured {
  long long lo = 0;
  long long hi = 0;
  std::optional<LandmarkSet> basis;
};

// Brackets dim(g) between the solver's lower bounds and the smallest known
// generator, then lets the exact search narrow it within the budget.
inline Measured measure_dimension(const Graph& g, const Context& ctx, std::optional<long long> verified_upper = {}) {
  const auto dm = all_pairs_distances(g);
  dm.require_connected();
  Measured m;
  m.lo = lower_bounds(g, dm).best();
  m.hi = g.order() - 1;
  if (verified_upper) m.hi = std::min(m.hi, *verified_upper);
  if (g.order() <= ctx.solver.vertex_limit || ctx.solver.budget) {
    const auto res = metric_dimension_exact(g, dm, ctx.solver);
    if (res.exact) {
      m.lo = m.hi = res.dimension;
      m.basis = res.basis;
    } else {
      m.lo = std::max<long long>(m.lo, res.dimension);
    }
  }
  return m;
}

inline nlohmann::json pair_json(const VertexPairing& p, int v) {
  const auto [i, j] = p.decode(v);
  return nlohmann::json::array({i, j});
}

inline nlohmann::json landmarks_json(const VertexPairing& p, const LandmarkSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int v : s) arr.push_back(pair_json(p, v));
  return arr;
}

// Checks a construction on the product; records it as evidence and returns
// its size when it generates, or marks the report violated.
inline std::optional<long long> check_construction(const Graph& product, const VertexPairing& p,
                                                   const ConstructionOutput& c, VerificationReport& r) {
  r.evidence["construction"] = landmarks_json(p, c.landmarks);
  if (!c.warnings.empty()) r.evidence["construction_warnings"] = c.warnings;
  const auto check = check_metric_generator(all_pairs_distances(product), c.landmarks);
  if (check.is_generator) return static_cast<long long>(c.landmarks.size());
  r.status = Status::violated;
  r.witness = nlohmann::json{{"construction", landmarks_json(p, c.landmarks)},
                             {"undistinguished", {pair_json(p, check.undistinguished->first),
                                                  pair_json(p, check.undistinguished->second)}}};
  r.note = "construction is not a metric generator";
  return std::nullopt;
}

inline void conclude(VerificationReport& r, const Measured& m, const VertexPairing* p = nullptr) {
  r.measured_lo = m.lo;
  r.measured_hi = m.hi;
  if (m.basis) r.evidence["basis"] = p ? landmarks_json(*p, *m.basis) : nlohmann::json(m.basis->vertices());
  if (r.status == Status::violated) return;  // construction failure already recorded
  r.status = r.claimed->judge(m.lo, m.hi);
  if (r.status == Status::violated)
    r.witness = nlohmann::json{{"measured_lo", m.lo},
                               {"measured_hi", m.hi},
                               {"basis", m.basis ? nlohmann::json(m.basis->vertices()) : nlohmann::json(nullptr)}};
}

inline bool skip(VerificationReport& r, bool hypothesis, const char* what) {
  if (hypothesis) return false;
  r.status = Status::skipped_precondition;
  r.note = std::string("hypothesis fails: ") + what;
  return true;
}

inline int true_twin_classes(const Graph& g) {
  return static_cast<int>(twin_partition(g, TwinMode::true_twin).class_count());
}

// Exact factor basis, or nullopt after marking the report inexact.
inline std::optional<DimResult> factor_dimension(const Graph& g, const Context& ctx, VerificationReport& r,
                                                 const char* which) {
  if (g.order() == 1) return DimResult{0, {}, true, 0, 0, 0, 0, 0};
  auto res = metric_dimension_exact(g, ctx.solver);
  if (res.exact) return res;
  r.status = Status::inexact_budget;
  r.note = std::string("budget exhausted on factor ") + which;
  return std::nullopt;
}

inline void set_orders(VerificationReport& r, const Graph& g, const Graph& h) {
  r.n1 = g.order();
  r.n2 = h.order();
}

// Shared body of the K_{n1} ⊠ H equalities: claimed n2(n1-1), with
// K_{n1} ⊠ H resolved by (all but one row) × V(H).
inline void complete_times(const Graph& h, int n1, int k, const Context& ctx, VerificationReport& r) {
  const Graph g = complete_graph(n1);
  r.claimed = Claim::equals(static_cast<long long>(h.order()) * (n1 - 1));
  const auto prod = strong_product(g, h);
  const VertexPairing p{n1, h.order()};
  std::vector<int> rows(static_cast<std::size_t>(n1 - 1));
  for (int i = 0; i < n1 - 1; ++i) rows[i] = i;
  const auto c = resolved_generator(g, h, LandmarkSet(rows), k);
  const auto upper = check_construction(prod, p, c, r);
  detail::conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_T1(const Params& ps, const Context& ctx, VerificationReport& r) {
  const auto g = ps.graph("G"), h = ps.graph("H");
  set_orders(r, g, h);
  if (skip(r, is_connected(g) && is_connected(h), "G and H connected") || skip(r, g.order() >= 2, "n1 >= 2")) return;
  const auto dg = factor_dimension(g, ctx, r, "G");
  const auto dh = dg ? factor_dimension(h, ctx, r, "H") : std::nullopt;
  if (!dg || !dh) return;
  const long long n1 = g.order(), n2 = h.order(), a = dg->dimension, b = dh->dimension;
  r.claimed = Claim::at_most(n1 * b + n2 * a - a * b);
  const auto prod = strong_product(g, h);
  const VertexPairing p{g.order(), h.order()};
  const auto upper = check_construction(prod, p, upper_bound_generator(g, h, dg->basis, dh->basis), r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_T2(const Params& ps, const Context& ctx, VerificationReport& r) {
  const auto g = ps.graph("G"), h = ps.graph("H");
  const int k = ps.integer("k");
  set_orders(r, g, h);
  if (skip(r, is_connected(g) && is_connected(h), "G and H connected")) return;
  const auto dmg = all_pairs_distances(g);
  if (skip(r, is_self_k_resolved(h, k).holds, "H self k-resolved") || skip(r, dmg.diameter() < k, "diam(G) < k")) return;
  const auto dg = factor_dimension(g, ctx, r, "G");
  if (!dg) return;
  r.claimed = Claim::at_most(static_cast<long long>(h.order()) * dg->dimension);
  const auto prod = strong_product(g, h);
  const VertexPairing p{g.order(), h.order()};
  const auto upper = check_construction(prod, p, resolved_generator(g, h, dg->basis, k), r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_C1(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
  r.n1 = n1;
  r.n2 = n2;
  if (skip(r, n1 >= 2 && n2 >= 4 && n1 - 1 < n2 / 2, "n1 >= 2, n2 >= 4, n1-1 < floor(n2/2)")) return;
  const auto g = path_graph(n1), h = cycle_graph(n2);
  r.claimed = Claim::at_most(n2);
  const auto prod = strong_product(g, h);
  const VertexPairing p{n1, n2};
  const auto upper = check_construction(prod, p, resolved_generator(g, h, LandmarkSet({0}), n2 / 2), r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_T3(const Params& ps, const Context& ctx, VerificationReport& r) {
  const auto g = ps.graph("G"), h = ps.graph("H");
  set_orders(r, g, h);
  if (skip(r, g.order() >= 2 && h.order() >= 2, "G and H nontrivial") ||
      skip(r, is_connected(g) && is_connected(h), "G and H connected"))
    return;
  const long long n1 = g.order(), n2 = h.order();
  const long long t1 = true_twin_classes(g), t2 = true_twin_classes(h);
  const long long bound = n1 * n2 - t1 * t2;
  r.claimed = Claim::at_least(bound);
  const auto dg = factor_dimension(g, ctx, r, "G");
  const auto dh = dg ? factor_dimension(h, ctx, r, "H") : std::nullopt;
  if (!dg || !dh) return;
  std::optional<long long> upper;
  const auto prod = strong_product(g, h);
  const VertexPairing p{g.order(), h.order()};
  if (dg->dimension == n1 - t1 && dh->dimension == n2 - t2) {
    r.claimed = Claim::equals(bound);
    r.note = "equality case: dim(G)=n1-t1 and dim(H)=n2-t2";
    upper = check_construction(prod, p, upper_bound_generator(g, h, dg->basis, dh->basis), r);
  }
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_C2(const Params& ps, const Context& ctx, VerificationReport& r) {
  const auto g = ps.graph("G"), h = ps.graph("H");
  set_orders(r, g, h);
  if (skip(r, g.order() >= 2, "G nontrivial") || skip(r, is_connected(g) && is_connected(h), "G and H connected"))
    return;
  r.claimed = Claim::at_least(static_cast<long long>(h.order()) * (g.order() - true_twin_classes(g)));
  const VertexPairing p{g.order(), h.order()};
  conclude(r, measure_dimension(strong_product(g, h), ctx), &p);
}

inline void eval_T4(const Params& ps, const Context& ctx, VerificationReport& r) {
  const auto g = ps.graph("G"), h = ps.graph("H");
  const int k = ps.integer("k");
  set_orders(r, g, h);
  if (skip(r, g.order() >= 2, "G nontrivial") || skip(r, is_connected(g) && is_connected(h), "G and H connected") ||
      skip(r, is_self_k_resolved(h, k).holds, "H self k-resolved") ||
      skip(r, all_pairs_distances(g).diameter() < k, "diam(G) < k"))
    return;
  const int t1 = true_twin_classes(g);
  const auto dg = factor_dimension(g, ctx, r, "G");
  if (!dg) return;
  if (skip(r, dg->dimension == g.order() - t1, "dim(G) = n1 - t1")) return;
  r.claimed = Claim::equals(static_cast<long long>(h.order()) * (g.order() - t1));
  const auto prod = strong_product(g, h);
  const VertexPairing p{g.order(), h.order()};
  const auto upper = check_construction(prod, p, resolved_generator(g, h, dg->basis, k), r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_L1(const Params& ps, const Context&, VerificationReport& r) {
  r.claimed = Claim::equals(0);
  if (ps.has("G")) {
    const auto g = ps.graph("G");
    r.n1 = g.order();
    if (skip(r, g.order() >= 2, "G nontrivial") || skip(r, is_connected(g), "G connected")) return;
    const bool ok = check_lemma_2resolved(g);
    r.measured_lo = r.measured_hi = ok ? 0 : 1;
    r.status = ok ? Status::holds : Status::violated;
    if (!ok) r.witness = nlohmann::json{{"graph6", graph6_write(g)}};
    return;
  }
  const int n = ps.integer("n");
  r.n1 = n;
  if (skip(r, n >= 2 && n <= max_enumeration_order, "2 <= n <= 7 for exhaustive enumeration")) return;
  long long bad = 0, graphs = 0;
  std::optional<std::string> first_bad;
  for_each_connected(n, [&](const Graph& g) {
    ++graphs;
    if (!check_lemma_2resolved(g)) {
      ++bad;
      if (!first_bad) first_bad = graph6_write(g);
    }
  });
  r.measured_lo = r.measured_hi = bad;
  r.evidence["graphs_checked"] = graphs;
  r.status = bad == 0 ? Status::holds : Status::violated;
  if (bad) r.witness = nlohmann::json{{"graph6", *first_bad}};
}

inline void eval_C3(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1");
  const auto h = ps.graph("H");
  r.n1 = n1;
  r.n2 = h.order();
  if (skip(r, n1 >= 2, "n1 >= 2") || skip(r, h.order() >= 3, "n2 >= 3") || skip(r, is_connected(h), "H connected") ||
      skip(r, twin_partition(h, TwinMode::true_twin).all_singletons(), "H has no true twins"))
    return;
  complete_times(h, n1, 2, ctx, r);
}

/// R2a tree sample: 0 = path, 1 = star, s >= 2 = seeded random tree (seed s-2).
inline Graph sample_tree(int n, int which) {
  if (which == 0) return path_graph(n);
  if (which == 1) return star_graph(n);
  return random_tree(n, static_cast<std::uint64_t>(which - 2));
}

inline void eval_R2a(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
  const int tree = ps.has("tree") ? ps.integer("tree") : 0;
  r.n1 = n1;
  r.n2 = n2;
  if (skip(r, n1 >= 2 && n2 >= 3 && tree >= 0, "n1 >= 2, n2 >= 3")) return;
  const auto t = sample_tree(n2, tree);
  r.evidence["tree_graph6"] = graph6_write(t);
  complete_times(t, n1, 2, ctx, r);
}

inline void eval_R2b(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
  r.n1 = n1;
  r.n2 = n2;
  if (skip(r, n1 >= 2 && n2 >= 4, "n1 >= 2, n2 >= 4")) return;
  complete_times(cycle_graph(n2), n1, 2, ctx, r);
}

inline void eval_R2c(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), dim = ps.integer("r");
  r.n1 = n1;
  if (skip(r, n1 >= 2 && dim >= 2, "n1 >= 2, r >= 2")) return;
  const auto q = hypercube_graph(dim);
  r.n2 = q.order();
  complete_times(q, n1, 2, ctx, r);
}

inline void eval_R2d(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), n = ps.integer("n"), m = ps.integer("m");
  r.n1 = n1;
  if (skip(r, n1 >= 2 && n >= 2 && m >= 2, "n1 >= 2, n, m >= 2")) return;
  const auto grid = grid_graph(n, m);
  r.n2 = grid.order();
  complete_times(grid, n1, 2, ctx, r);
}

inline void eval_T5(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
  r.n1 = n1;
  r.n2 = n2;
  if (skip(r, 2 <= n1 && n1 < n2, "2 <= n1 < n2")) return;
  const auto c = path_path_generator(n1, n2);
  r.claimed = Claim::within(path_path_lower_bound(n1, n2), c.claimed_size);
  const auto prod = strong_product(path_graph(n1), path_graph(n2));
  const VertexPairing p{n1, n2};
  const auto upper = check_construction(prod, p, c, r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_T6(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n = ps.integer("n");
  r.n1 = r.n2 = n;
  if (skip(r, n >= 2, "n >= 2")) return;
  r.claimed = Claim::equals(3);
  const auto prod = strong_product(path_graph(n), path_graph(n));
  const VertexPairing p{n, n};
  const auto upper = check_construction(prod, p, path_path_corner_generator(n), r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_T7(const Params& ps, const Context& ctx, VerificationReport& r) {
  const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
  r.n1 = n1;
  r.n2 = n2;
  if (skip(r, diagonal_hypothesis(n1, n2), "(n1-1)/2 >= floor(n2/2) >= 2")) return;
  r.claimed = Claim::at_most(n1);
  const auto prod = strong_product(path_graph(n1), cycle_graph(n2));
  const VertexPairing p{n1, n2};
  const auto upper = check_construction(prod, p, path_cycle_diagonal_generator(n1, n2), r);
  conclude(r, measure_dimension(prod, ctx, upper), &p);
}

inline void eval_CL1(const Params& ps, const Context&, VerificationReport& r) {
  const int n = ps.integer("n");
  r.n1 = n;
  if (skip(r, n >= 3, "n >= 3")) return;
  r.claimed = Claim::equals(0);
  const long long bad = cycle_claim_violations(n);
  r.measured_lo = r.measured_hi = bad;
  r.status = bad == 0 ? Status::holds : Status::violated;
  if (bad) r.witness = nlohmann::json{{"violations", bad}};
}

inline void eval_RM1(const Params& ps, const Context&, VerificationReport& r) {
  const auto g = ps.graph("G"), h = ps.graph("H");
  set_orders(r, g, h);
  if (skip(r, is_connected(g) && is_connected(h), "G and H connected")) return;
  r.claimed = Claim::equals(0);
  const auto mismatch = find_distance_law_mismatch(g, h);
  r.measured_lo = r.measured_hi = mismatch ? 1 : 0;
  r.status = mismatch ? Status::violated : Status::holds;
  if (mismatch)
    r.witness = nlohmann::json{{"pair", {{mismatch->a, mismatch->b}, {mismatch->c, mismatch->d}}},
                               {"product_distance", mismatch->product_distance},
                               {"max_of_factors", mismatch->expected}};
}

}  // namespace detail

inline const std::vector<TheoremInfo>& registry() {
  using namespace detail;
  static const std::vector<TheoremInfo> entries = {
      {"T1", "dim(G⊠H) <= n1·dim(H) + n2·dim(G) - dim(G)·dim(H)", {"G", "H"}, eval_T1},
      {"T2", "H self k-resolved, diam(G) < k  =>  dim(G⊠H) <= n2·dim(G)", {"G", "H", "k"}, eval_T2},
      {"C1", "n1-1 < floor(n2/2), n2 >= 4  =>  dim(P_n1 ⊠ C_n2) <= n2", {"n1", "n2"}, eval_C1},
      {"T3", "dim(G⊠H) >= n1·n2 - t1·t2 (equality when both factors meet n-t)", {"G", "H"}, eval_T3},
      {"C2", "dim(G⊠H) >= n2·(n1 - t1)", {"G", "H"}, eval_C2},
      {"T4", "H self k-resolved, diam(G) < k, dim(G) = n1-t1  =>  dim(G⊠H) = n2·(n1-t1)", {"G", "H", "k"}, eval_T4},
      {"L1", "self 2-resolved  <=>  no true twins (G, or every labeled connected graph of order n)", {"G|n"}, eval_L1},
      {"C3", "H without true twins, n2 >= 3  =>  dim(K_n1 ⊠ H) = n2·(n1-1)", {"n1", "H"}, eval_C3},
      {"R2a", "dim(K_n1 ⊠ T) = n2·(n1-1) for trees T (tree=0 path, 1 star, s>=2 random seed s-2)",
       {"n1", "n2", "tree?"}, eval_R2a},
      {"R2b", "dim(K_n1 ⊠ C_n2) = n2·(n1-1), n2 >= 4", {"n1", "n2"}, eval_R2b},
      {"R2c", "dim(K_n1 ⊠ Q_r) = 2^r·(n1-1)", {"n1", "r"}, eval_R2c},
      {"R2d", "dim(K_n1 ⊠ (P_n □ P_m)) = n·m·(n1-1)", {"n1", "n", "m"}, eval_R2d},
      {"T5", "floor((n1+n2-2)/(n1-1)) <= dim(P_n1 ⊠ P_n2) <= ceil((n1+n2-2)/(n1-1))", {"n1", "n2"}, eval_T5},
      {"T6", "dim(P_n ⊠ P_n) = 3", {"n"}, eval_T6},
      {"T7", "(n1-1)/2 >= floor(n2/2) >= 2  =>  dim(P_n1 ⊠ C_n2) <= n1", {"n1", "n2"}, eval_T7},
      {"CL1", "on C_n, adjacent x,y: d(u,x) = d(v,x) => d(u,y) != d(v,y)", {"n"}, eval_CL1},
      {"RM1", "d_{G⊠H}((a,b),(c,d)) = max(d_G(a,c), d_H(b,d))", {"G", "H"}, eval_RM1},
  };
  return entries;
}

inline const TheoremInfo& find_theorem(std::string_view id) {
  for (const auto& t : registry())
    if (t.id == id) return t;
  throw InvalidArgument("unknown theorem id '" + std::string(id) + "'");
}

namespace detail {

inline void check_param_names(const TheoremInfo& t, const ParamMap& params) {
  std::set<std::string> allowed;
  std::vector<std::vector<std::string>> required;
  for (const auto& spec : t.params) {
    std::string s = spec;
    const bool optional = !s.empty() && s.back() == '?';
    if (optional) s.pop_back();
    std::vector<std::string> alts;
    for (std::size_t start = 0;;) {
      const auto bar = s.find('|', start);
      alts.push_back(s.substr(start, bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    allowed.insert(alts.begin(), alts.end());
    if (!optional) required.push_back(alts);
  }
  for (const auto& [k, v] : params)
    if (!allowed.count(k)) throw InvalidArgument("theorem " + t.id + " does not take parameter '" + k + "'");
  for (const auto& alts : required) {
    const bool present = std::any_of(alts.begin(), alts.end(), [&](const auto& a) { return params.count(a) != 0; });
    if (!present) throw InvalidArgument("theorem " + t.id + " requires parameter '" + alts.front() + "'");
  }
}

}  // namespace detail

/// Evaluates one registered result at one parameter point. Hypotheses are
/// checked before the claim; failing points come back skipped-precondition.
inline VerificationReport verify(std::string_view id, const ParamMap& params, const Context& ctx = {}) {
  const auto& t = find_theorem(id);
  detail::check_param_names(t, params);
  VerificationReport r;
  r.theorem_id = t.id;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  t.evaluate(Params(params), ctx, r);
  if (ctx.timing)
    r.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace metricdim::harness
