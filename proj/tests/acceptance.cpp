// Acceptance checks. One PASS/FAIL line per criterion; exits non-zero when any
// criterion fails. Time limits are wall-clock and fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "metricdim/harness/report.hpp"
#include "metricdim/harness/sweep.hpp"
#include "metricdim/harness/theorems.hpp"
#include "metricdim/metricdim.hpp"
#include "oracle.hpp"

using namespace metricdim;

namespace {

constexpr double limit_distance_law_s = 5;
constexpr double limit_path_square_s = 10;
constexpr double limit_complete_times_s = 60;
constexpr double limit_sandwich_s = 300;
constexpr double limit_lemma_s = 120;
constexpr double limit_oracle_s = 120;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += " (over " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-34s %6.2f s  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
}

int max_workers() { return std::max(2, static_cast<int>(std::thread::hardware_concurrency())); }

SolverOptions unlimited() { return SolverOptions{std::nullopt, 0, 64}; }

harness::Context context(int solver_workers) {
  harness::Context c;
  c.solver.workers = solver_workers;
  return c;
}

Outcome distance_law() {
  std::vector<Graph> factors{path_graph(2),      path_graph(5),       path_graph(10),      cycle_graph(3),
                             cycle_graph(6),     cycle_graph(9),      complete_graph(4),   complete_graph(7),
                             hypercube_graph(2), hypercube_graph(3),  pseudo_sphere(3, 2), pseudo_sphere(3, 3),
                             pseudo_sphere(4, 2)};
  int instances = 0, bad = 0;
  for (const auto& g : factors) {
    if (g.order() > 10) return {false, "factor order above 10"};
    for (const auto& h : factors) {
      ++instances;
      if (!verify_distance_law(g, h)) ++bad;
    }
  }
  return {bad == 0 && instances >= 25,
          std::to_string(instances) + " products, " + std::to_string(bad) + " mismatches"};
}

Outcome path_square() {
  std::string values;
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const auto r = metric_dimension_exact(strong_product(path_graph(n), path_graph(n)), unlimited());
    ok = ok && r.exact && r.dimension == 3;
    values += (values.empty() ? "" : " ") + std::to_string(r.dimension);
  }
  return {ok, "dims n=2..6: " + values};
}

Outcome complete_times() {
  struct Case {
    const char* name;
    Graph h;
    int n1;
    int expected;
  };
  const std::vector<Case> cases{
      {"K2xP3", path_graph(3), 2, 3 * 1},
      {"K2xC4", cycle_graph(4), 2, 4 * 1},
      {"K3xC4", cycle_graph(4), 3, 4 * 2},
      {"K2xQ2", hypercube_graph(2), 2, (1 << 2) * 1},
      {"K2x(P2xP3)", grid_graph(2, 3), 2, 2 * 3 * 1},
  };
  std::string detail;
  bool ok = true;
  for (const auto& c : cases) {
    const auto r = metric_dimension_exact(strong_product(complete_graph(c.n1), c.h), unlimited());
    const bool hit = r.exact && r.dimension == c.expected;
    ok = ok && hit;
    detail += std::string(detail.empty() ? "" : ", ") + c.name + "=" + std::to_string(r.dimension) +
              (hit ? "" : "!=" + std::to_string(c.expected));
  }
  return {ok, detail};
}

std::vector<harness::ConjectureRow> sandwich_rows;

Outcome sandwich() {
  sandwich_rows = harness::conjecture_sweep(8, 8, context(0), max_workers());
  int violations = 0, inexact = 0;
  for (const auto& r : sandwich_rows) {
    if (!r.exact()) ++inexact;
    if (r.dim_lo < r.floor_bound || r.dim_hi > r.ceil_bound) ++violations;
  }
  return {violations == 0 && inexact == 0 && sandwich_rows.size() == 21,
          std::to_string(sandwich_rows.size()) + " points, " + std::to_string(violations) + " violations, " +
              std::to_string(inexact) + " inexact"};
}

Outcome conjecture_evidence() {
  if (sandwich_rows.empty()) return {false, "criterion 4 produced no rows"};
  int gap = 0, at_ceil = 0, outside = 0;
  std::string points;
  for (const auto& r : sandwich_rows) {
    if (r.floor_bound >= r.ceil_bound) continue;
    ++gap;
    if (!r.exact() || r.dim_lo < r.floor_bound || r.dim_lo > r.ceil_bound) ++outside;
    if (r.exact() && r.dim_lo == r.ceil_bound) ++at_ceil;
    points += " (" + std::to_string(r.n1) + "," + std::to_string(r.n2) + ")=" + std::to_string(r.dim_lo);
  }
  return {outside == 0, std::to_string(gap) + " gap points, " + std::to_string(at_ceil) + " equal ceil;" + points};
}

Outcome lemma() {
  long long graphs = 0, bad = 0;
  for (int n = 2; n <= 6; ++n)
    for_each_connected(n, [&](const Graph& g) {
      ++graphs;
      if (!check_lemma_2resolved(g)) ++bad;
    });
  return {bad == 0, std::to_string(graphs) + " connected graphs, " + std::to_string(bad) + " counterexamples"};
}

Outcome twin_bound() {
  std::string detail;
  bool ok = true;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const auto r = metric_dimension_exact(strong_product(complete_graph(a), complete_graph(b)), unlimited());
      const bool hit = r.exact && r.dimension == a * b - 1;
      ok = ok && hit;
      if (!hit) detail += " K" + std::to_string(a) + "xK" + std::to_string(b) + "=" + std::to_string(r.dimension);
    }
  const auto fan = clique_fan({2, 2});
  const auto r = metric_dimension_exact(fan, unlimited());
  const int t = static_cast<int>(twin_partition(fan, TwinMode::mixed).class_count());
  const bool fan_ok = r.exact && r.dimension == 2 && fan.order() - t == 2;
  ok = ok && fan_ok;
  return {ok, "9 clique products" + detail + "; K1+(K2uK2) dim=" + std::to_string(r.dimension) +
                  " n-t=" + std::to_string(fan.order() - t)};
}

Outcome diagonal() {
  int points = 0, bad = 0;
  for (int n1 = 1; n1 <= 11; ++n1)
    for (int n2 = 3; n2 <= 6; ++n2) {
      if (!(n2 / 2 >= 2 && (n1 - 1) / 2.0 >= n2 / 2)) continue;
      ++points;
      const auto c = path_cycle_diagonal_generator(n1, n2);
      const auto dm = all_pairs_distances(strong_product(path_graph(n1), cycle_graph(n2)));
      if (!c.preconditions_met || !is_metric_generator(dm, c.landmarks)) ++bad;
    }
  return {bad == 0 && points > 0, std::to_string(points) + " points, " + std::to_string(bad) + " failures"};
}

Outcome self_resolution() {
  int checked = 0;
  std::string failed;
  auto check = [&](const std::string& name, const Graph& g, int k) {
    ++checked;
    if (!is_self_k_resolved(g, k).holds) failed += " " + name + "@" + std::to_string(k);
  };
  for (int n = 2; n <= 12; ++n) check("P" + std::to_string(n), path_graph(n), (n + 1) / 2);
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m)
      check("P" + std::to_string(n) + "xP" + std::to_string(m), grid_graph(n, m), (n + 1) / 2 + (m + 1) / 2);
  for (int r = 1; r <= 4; ++r) check("Q" + std::to_string(r), hypercube_graph(r), r);
  for (int k = 2; k <= 5; ++k)
    for (int r = 2; r <= 4; ++r)
      check("S" + std::to_string(k) + "," + std::to_string(r), pseudo_sphere(k, r), k);
  int cycle_bad = 0;
  for (int n = 3; n <= 50; ++n) cycle_bad += cycle_claim_violations(n);
  const bool ok = failed.empty() && cycle_bad == 0;
  std::string detail = std::to_string(checked) + " family checks, cycle claim n=3..50 violations " +
                       std::to_string(cycle_bad);
  if (!failed.empty()) detail += "; not resolved:" + failed;
  return {ok, detail};
}

Outcome oracle_cross_check() {
  long long graphs = 0, bad = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_connected(n, [&](const Graph& g) {
      ++graphs;
      const auto want = oracle::brute_force_dimension(g);
      const auto got = metric_dimension_exact(g, SolverOptions{std::nullopt, 1, 64});
      if (!got.exact || got.dimension != want.dimension || got.basis.vertices() != want.basis) ++bad;
    });
  return {bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " mismatches"};
}

std::string t6_reports(int sweep_workers, int solver_workers) {
  const auto rs = harness::sweep("T6", {}, {harness::parse_range("n=2..6")}, context(solver_workers), sweep_workers);
  std::ostringstream os;
  harness::write_csv(os, rs);
  return os.str() + harness::to_json(rs).dump(2);
}

std::string conjecture_report(int sweep_workers, int solver_workers) {
  const auto rows = harness::conjecture_sweep(8, 8, context(solver_workers), sweep_workers);
  std::ostringstream os;
  harness::write_csv(os, rows);
  return os.str();
}

Outcome determinism() {
  const int w = max_workers();
  const auto t6 = t6_reports(1, 1);
  const bool t6_same = t6 == t6_reports(w, w) && t6 == t6_reports(1, w);
  const auto conj = conjecture_report(1, 1);
  const bool conj_same = conj == conjecture_report(w, w);
  return {t6_same && conj_same, "workers 1 vs " + std::to_string(w) + ": T6 reports " +
                                    (t6_same ? "identical" : "differ") + ", conjecture CSV " +
                                    (conj_same ? "identical" : "differ")};
}

}  // namespace

int main() {
  run(1, "distance law", limit_distance_law_s, distance_law);
  run(2, "dim(Pn x Pn) = 3", limit_path_square_s, path_square);
  run(3, "complete-times closed forms", limit_complete_times_s, complete_times);
  run(4, "path-path sandwich", limit_sandwich_s, sandwich);
  run(5, "conjecture evidence", 0, conjecture_evidence);
  run(6, "2-resolved iff no true twins", limit_lemma_s, lemma);
  run(7, "twin lower bound", 0, twin_bound);
  run(8, "path-cycle diagonal generator", 0, diagonal);
  run(9, "self-resolution family claims", 0, self_resolution);
  run(10, "pruned solver vs brute force", limit_oracle_s, oracle_cross_check);
  run(11, "report determinism", 0, determinism);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
