#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metricdim/constructions.hpp"
#include "metricdim/families.hpp"
#include "metricdim/harness/report.hpp"
#include "metricdim/harness/theorems.hpp"
#include "metricdim/parallel.hpp"
#include "metricdim/products.hpp"

namespace metricdim::harness {

/// One swept parameter and its values, in sweep order.
struct Range {
  std::string name;
  std::vector<std::string> values;
};

/// "name=a..b" (inclusive integers) or "name=v1|v2|..." (literal values).
inline Range parse_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw InvalidArgument("malformed range '" + std::string(text) + "'");
  Range r{std::string(text.substr(0, eq)), {}};
  const auto body = text.substr(eq + 1);
  const auto dots = body.find("..");
  if (dots != std::string_view::npos && body.find('|') == std::string_view::npos) {
    int lo = 0, hi = 0;
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string a(body.substr(0, dots)), b(body.substr(dots + 2));
      lo = std::stoi(a, &u1);
      hi = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("malformed integer range '" + std::string(text) + "'");
    }
    if (hi < lo) throw InvalidArgument("empty range '" + std::string(text) + "'");
    for (int v = lo; v <= hi; ++v) r.values.push_back(std::to_string(v));
    return r;
  }
  for (std::size_t start = 0;;) {
    const auto bar = body.find('|', start);
    auto item = body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    if (item.empty()) throw InvalidArgument("empty value in range '" + std::string(text) + "'");
    r.values.emplace_back(item);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return r;
}

/// Cartesian product of the ranges over the fixed parameters; the first
/// range varies slowest.
inline std::vector<ParamMap> expand_points(const ParamMap& fixed, const std::vector<Range>& ranges) {
  std::vector<ParamMap> points{fixed};
  for (const auto& r : ranges) {
    std::vector<ParamMap> next;
    next.reserve(points.size() * r.values.size());
    for (const auto& p : points)
      for (const auto& v : r.values) {
        auto q = p;
        q[r.name] = v;
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

/// One report per point, in point order regardless of scheduling.
inline std::vector<VerificationReport> sweep(std::string_view id, const ParamMap& fixed,
                                             const std::vector<Range>& ranges, const Context& ctx = {},
                                             int workers = 0) {
  find_theorem(id);
  const auto points = expand_points(fixed, ranges);
  if (workers <= 0) workers = default_worker_count();
  Context point_ctx = ctx;
  if (workers > 1 && points.size() > 1) point_ctx.solver.workers = 1;
  std::vector<VerificationReport> reports(points.size());
  std::vector<std::string> errors(points.size());
  parallel_for(points.size(), workers, [&](std::size_t i) {
    try {
      reports[i] = verify(id, points[i], point_ctx);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  });
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!errors[i].empty()) throw InvalidArgument("sweep point " + std::to_string(i) + ": " + errors[i]);
  return reports;
}

/// One row of the P_{n1} ⊠ P_{n2} conjecture table.
struct ConjectureRow {
  int n1 = 0;
  int n2 = 0;
  int floor_bound = 0;
  int ceil_bound = 0;
  int dim_lo = 0;
  int dim_hi = 0;
  /// matches-ceil | matches-floor-only | violates-bounds | inconclusive
  std::string verdict;
  bool exact() const noexcept { return dim_lo == dim_hi; }
};

inline ConjectureRow conjecture_point(int n1, int n2, const Context& ctx) {
  ConjectureRow row{n1, n2, path_path_lower_bound(n1, n2), 0, 0, 0, {}};
  const auto c = path_path_generator(n1, n2);
  row.ceil_bound = c.claimed_size;
  const auto prod = strong_product(path_graph(n1), path_graph(n2));
  const auto dm = all_pairs_distances(prod);
  std::optional<long long> upper;
  if (is_metric_generator(dm, c.landmarks)) upper = static_cast<long long>(c.landmarks.size());
  const auto m = detail::measure_dimension(prod, ctx, upper);
  row.dim_lo = static_cast<int>(m.lo);
  row.dim_hi = static_cast<int>(m.hi);
  if (row.dim_hi < row.floor_bound || row.dim_lo > row.ceil_bound)
    row.verdict = "violates-bounds";
  else if (!row.exact())
    row.verdict = "inconclusive";
  else if (row.dim_lo == row.ceil_bound)
    row.verdict = "matches-ceil";
  else if (row.dim_lo >= row.floor_bound)
    row.verdict = "matches-floor-only";
  else
    row.verdict = "violates-bounds";
  return row;
}

inline std::vector<ConjectureRow> conjecture_sweep(int max_n1, int max_n2, const Context& ctx = {}, int workers = 0) {
  std::vector<std::pair<int, int>> points;
  for (int n1 = 2; n1 <= max_n1; ++n1)
    for (int n2 = n1 + 1; n2 <= max_n2; ++n2) points.emplace_back(n1, n2);
  if (workers <= 0) workers = default_worker_count();
  Context point_ctx = ctx;
  if (workers > 1 && points.size() > 1) point_ctx.solver.workers = 1;
  std::vector<ConjectureRow> rows(points.size());
  parallel_for(points.size(), workers,
               [&](std::size_t i) { rows[i] = conjecture_point(points[i].first, points[i].second, point_ctx); });
  return rows;
}

inline const char* conjecture_csv_header() { return "n1,n2,floor,ceil,dimension,exact,verdict"; }

inline std::string to_csv_row(const ConjectureRow& r) {
  const std::string dim =
      r.exact() ? std::to_string(r.dim_lo) : std::to_string(r.dim_lo) + ".." + std::to_string(r.dim_hi);
  return std::to_string(r.n1) + "," + std::to_string(r.n2) + "," + std::to_string(r.floor_bound) + "," +
         std::to_string(r.ceil_bound) + "," + dim + "," + (r.exact() ? "true" : "false") + "," + r.verdict;
}

inline void write_csv(std::ostream& os, const std::vector<ConjectureRow>& rows) {
  os << conjecture_csv_header() << '\n';
  for (const auto& r : rows) os << to_csv_row(r) << '\n';
}

/// 2 when a row leaves [floor, ceil], 3 when rows remain inconclusive, else 0.
inline int conjecture_exit_code(const std::vector<ConjectureRow>& rows) {
  bool inconclusive = false;
  for (const auto& r : rows) {
    if (r.verdict == "violates-bounds") return 2;
    if (r.verdict == "inconclusive") inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

}  // namespace metricdim::harness
