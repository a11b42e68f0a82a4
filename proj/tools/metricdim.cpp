// Command-line front end: graph utilities, the exact solver, constructions
// and the theorem harness.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "metricdim/harness/sweep.hpp"
#include "metricdim/harness/theorems.hpp"
#include "metricdim/metricdim.hpp"

namespace md = metricdim;
namespace mh = metricdim::harness;
using nlohmann::json;

namespace {

// A graph argument is a file (graph6 lines or JSON), "-" for stdin, or a
// family spec such as "grid:2x3".
std::vector<md::Graph> load_graphs(const std::string& arg) {
  if (arg == "-") return md::read_graphs(std::cin);
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw md::Error("cannot open " + arg);
    return md::read_graphs(in);
  }
  if (arg.find(':') != std::string::npos) return {md::family_from_spec(arg)};
  throw md::Error("no such file or family spec: " + arg);
}

md::Graph load_graph(const std::string& arg) { return load_graphs(arg).front(); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw md::InvalidArgument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw md::Error("cannot write " + path);
  out << text;
}

json generator_json(const md::VertexPairing& p, const md::LandmarkSet& s) {
  json arr = json::array();
  for (int v : s) {
    const auto [i, j] = p.decode(v);
    arr.push_back({i, j});
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric dimension of graphs and strong products"};
  app.require_subcommand(1);

  // family
  auto* fam = app.add_subcommand("family", "emit a family instance as graph6");
  std::string fam_kind;
  std::vector<int> fam_params;
  bool fam_json = false;
  fam->add_option("kind", fam_kind,
                  "path|cycle|complete|star|caterpillar|random_tree|hypercube|grid|pseudo_sphere|clique_fan")
      ->required();
  fam->add_option("params", fam_params, "integer parameters");
  fam->add_flag("--json", fam_json, "emit {\"n\",\"edges\"} instead of graph6");

  // product
  auto* prod = app.add_subcommand("product", "strong or Cartesian product of two graphs");
  std::string prod_kind = "strong", prod_g, prod_h;
  prod->add_option("--kind", prod_kind)->check(CLI::IsMember({"strong", "cartesian"}));
  prod->add_option("first", prod_g, "left factor")->required();
  prod->add_option("second", prod_h, "right factor")->required();

  // dim
  auto* dim = app.add_subcommand("dim", "metric dimension (one line per input graph)");
  std::string dim_g;
  bool dim_exact = false, dim_bounds = false, dim_json = false;
  std::uint64_t dim_budget = 0;
  int dim_workers = 0;
  dim->add_option("graph", dim_g)->required();
  auto* ex = dim->add_flag("--exact", dim_exact, "run the exact search (default)");
  dim->add_flag("--bounds", dim_bounds, "report lower bounds only")->excludes(ex);
  dim->add_option("--budget", dim_budget, "search-node limit (0 = unlimited)");
  dim->add_option("--workers", dim_workers, "worker threads (default METRICDIM_WORKERS or all cores)");
  dim->add_flag("--json", dim_json);

  // check-generator
  auto* chk = app.add_subcommand("check-generator", "test whether a vertex set resolves a graph");
  std::string chk_g, chk_set;
  chk->add_option("graph", chk_g)->required();
  chk->add_option("--set", chk_set, "comma-separated landmark list")->required();

  // twins
  auto* tw = app.add_subcommand("twins", "twin equivalence classes");
  std::string tw_g, tw_mode = "true";
  tw->add_option("graph", tw_g)->required();
  tw->add_option("--mode", tw_mode)->check(CLI::IsMember({"true", "mixed"}));

  // self-resolved
  auto* sr = app.add_subcommand("self-resolved", "self k-resolved predicate");
  std::string sr_g;
  int sr_k = -1;
  bool sr_max = false, sr_certs = false;
  sr->add_option("graph", sr_g)->required();
  auto* sr_k_opt = sr->add_option("--k", sr_k);
  sr->add_flag("--max", sr_max, "largest k")->excludes(sr_k_opt);
  sr->add_flag("--certificates", sr_certs, "dump per-pair witnesses as JSON");

  // construct
  auto* con = app.add_subcommand("construct", "build a generator construction and verify it");
  std::string con_which, con_params;
  con->add_option("--which", con_which)->required()->check(CLI::IsMember({"thm1", "thm2", "pathpath", "corner", "diag"}));
  con->add_option("--params", con_params, "k=v,...  thm1: G,H  thm2: G,H,k  pathpath/diag: n1,n2  corner: n");

  // verify / sweep / conjecture
  std::uint64_t budget = mh::default_budget;
  bool timing = false;
  auto* ver = app.add_subcommand("verify", "check one theorem at one parameter point");
  std::string ver_id, ver_params, ver_json;
  ver->add_option("id", ver_id)->required();
  ver->add_option("--params", ver_params);
  ver->add_option("--budget", budget);
  ver->add_option("--json", ver_json, "also write the report to this file");
  ver->add_flag("--timing", timing, "record runtime_ms");

  auto* sw = app.add_subcommand("sweep", "check a theorem over parameter ranges");
  std::string sw_id, sw_params, sw_out, sw_json;
  std::vector<std::string> sw_ranges;
  sw->add_option("id", sw_id)->required();
  sw->add_option("--range", sw_ranges, "name=a..b or name=v1|v2");
  sw->add_option("--params", sw_params, "fixed parameters");
  sw->add_option("--out", sw_out, "CSV report path");
  sw->add_option("--json", sw_json, "JSON report path");
  sw->add_option("--budget", budget);
  sw->add_flag("--timing", timing, "record runtime_ms");

  auto* cj = app.add_subcommand("conjecture", "exact dim(P_n1 ⊠ P_n2) against the ceiling formula");
  int cj_n1 = 6, cj_n2 = 12;
  std::string cj_out, cj_json;
  cj->add_option("--max-n1", cj_n1);
  cj->add_option("--max-n2", cj_n2);
  cj->add_option("--out", cj_out, "CSV path");
  cj->add_option("--json", cj_json, "JSON path");
  cj->add_option("--budget", budget);

  app.add_subcommand("theorems", "list registered theorem ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fam) {
      const auto g = md::family(fam_kind, fam_params);
      std::cout << (fam_json ? md::graph_to_json(g).dump() : md::graph6_write(g)) << '\n';
      return 0;
    }
    if (*prod) {
      const auto g = load_graph(prod_g), h = load_graph(prod_h);
      std::cout << md::graph6_write(prod_kind == "strong" ? md::strong_product(g, h) : md::cartesian_product(g, h))
                << '\n';
      return 0;
    }
    if (*dim) {
      int rc = 0;
      for (const auto& g : load_graphs(dim_g)) {
        const auto dm = md::all_pairs_distances(g);
        dm.require_connected();
        const auto lb = md::lower_bounds(g, dm);
        json out{{"n", g.order()}, {"lower_bounds", {{"twin", lb.twin}, {"counting", lb.counting}}}};
        if (dim_bounds) {
          out["dimension"] = lb.best();
          out["basis"] = json::array();
          out["exact"] = false;
        } else {
          md::SolverOptions opt;
          if (dim_budget > 0) opt.budget = dim_budget;
          opt.workers = dim_workers;
          const auto res = md::metric_dimension_exact(g, dm, opt);
          out["dimension"] = res.dimension;
          out["basis"] = res.basis.vertices();
          out["exact"] = res.exact;
          if (!res.exact) {
            out["upper_bound"] = res.upper_bound;
            rc = 3;
          }
        }
        if (dim_json) {
          std::cout << out.dump() << '\n';
        } else {
          std::cout << "n=" << g.order() << " dimension=" << out["dimension"].get<int>()
                    << (out["exact"].get<bool>() ? "" : " (lower bound)") << " basis=";
          const auto b = out["basis"].get<std::vector<int>>();
          for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i];
          std::cout << " twin_bound=" << lb.twin << " counting_bound=" << lb.counting << '\n';
        }
      }
      return rc;
    }
    if (*chk) {
      const auto g = load_graph(chk_g);
      const auto res = md::check_metric_generator(md::all_pairs_distances(g), md::LandmarkSet(parse_int_list(chk_set)));
      json out{{"is_generator", res.is_generator}};
      if (res.undistinguished) out["undistinguished"] = {res.undistinguished->first, res.undistinguished->second};
      std::cout << out.dump() << '\n';
      return res.is_generator ? 0 : 1;
    }
    if (*tw) {
      const auto g = load_graph(tw_g);
      const auto tp = md::twin_partition(g, tw_mode == "true" ? md::TwinMode::true_twin : md::TwinMode::mixed);
      std::cout << json{{"mode", tw_mode}, {"classes", tp.classes}, {"t", tp.class_count()}}.dump() << '\n';
      return 0;
    }
    if (*sr) {
      const auto g = load_graph(sr_g);
      const auto dm = md::all_pairs_distances(g);
      if (sr_max) {
        std::cout << json{{"max_k", md::max_self_resolution(dm)}}.dump() << '\n';
        return 0;
      }
      if (sr_k < 0) throw md::InvalidArgument("self-resolved needs --k or --max");
      const auto res = md::is_self_k_resolved(dm, sr_k, sr_certs);
      json out{{"k", sr_k}, {"self_resolved", res.holds}};
      if (res.failing_pair) out["failing_pair"] = {res.failing_pair->first, res.failing_pair->second};
      if (sr_certs && res.holds) {
        json certs = json::array();
        for (const auto& c : res.certificates)
          certs.push_back({{"x", c.x}, {"y", c.y}, {"w", c.witness}, {"through", c.through_x ? "x" : "y"}, {"k", c.k}});
        out["certificates"] = certs;
      }
      std::cout << out.dump() << '\n';
      return res.holds ? 0 : 1;
    }
    if (*con) {
      const auto pm = mh::parse_params(con_params);
      const mh::Params ps(pm);
      md::Graph g, h;
      md::ConstructionOutput c;
      if (con_which == "thm1" || con_which == "thm2") {
        g = ps.graph("G");
        h = ps.graph("H");
        const auto bg = md::metric_dimension_exact(g);
        if (con_which == "thm1")
          c = md::upper_bound_generator(g, h, bg.basis, md::metric_dimension_exact(h).basis);
        else
          c = md::resolved_generator(g, h, bg.basis, ps.integer("k"));
      } else if (con_which == "pathpath") {
        const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
        g = md::path_graph(n1);
        h = md::path_graph(n2);
        c = md::path_path_generator(n1, n2);
      } else if (con_which == "corner") {
        const int n = ps.integer("n");
        g = h = md::path_graph(n);
        c = md::path_path_corner_generator(n);
      } else {
        const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
        g = md::path_graph(n1);
        h = md::cycle_graph(n2);
        c = md::path_cycle_diagonal_generator(n1, n2);
      }
      const md::VertexPairing p{g.order(), h.order()};
      const auto check = md::check_metric_generator(md::all_pairs_distances(md::strong_product(g, h)), c.landmarks);
      json out{{"which", con_which},
               {"params", pm},
               {"landmarks", c.landmarks.vertices()},
               {"landmark_pairs", generator_json(p, c.landmarks)},
               {"claimed_size", c.claimed_size},
               {"preconditions_met", c.preconditions_met},
               {"is_generator", check.is_generator}};
      if (!c.preconditions_met) out["failed_precondition"] = c.failed_precondition;
      if (!c.warnings.empty()) out["warnings"] = c.warnings;
      if (check.undistinguished) out["undistinguished"] = {check.undistinguished->first, check.undistinguished->second};
      std::cout << out.dump(2) << '\n';
      return check.is_generator ? 0 : 2;
    }

    mh::Context ctx;
    ctx.solver.budget = budget;
    ctx.timing = timing;
    if (*ver) {
      const auto r = mh::verify(ver_id, mh::parse_params(ver_params), ctx);
      const auto j = mh::to_json(r);
      std::cout << j.dump(2) << '\n';
      if (!ver_json.empty()) write_text(ver_json, j.dump(2) + "\n");
      return mh::summarize({r}).exit_code();
    }
    if (*sw) {
      std::vector<mh::Range> ranges;
      for (const auto& r : sw_ranges) ranges.push_back(mh::parse_range(r));
      const auto reports = mh::sweep(sw_id, mh::parse_params(sw_params), ranges, ctx);
      std::ostringstream csv;
      mh::write_csv(csv, reports);
      if (!sw_out.empty()) write_text(sw_out, csv.str());
      if (!sw_json.empty()) write_text(sw_json, mh::to_json(reports).dump(2) + "\n");
      if (sw_out.empty() && sw_json.empty()) std::cout << csv.str();
      const auto s = mh::summarize(reports);
      std::cerr << sw_id << ": " << reports.size() << " points, " << s.str() << '\n';
      return s.exit_code();
    }
    if (*cj) {
      const auto rows = mh::conjecture_sweep(cj_n1, cj_n2, ctx);
      std::ostringstream csv;
      mh::write_csv(csv, rows);
      if (!cj_out.empty()) write_text(cj_out, csv.str());
      if (!cj_json.empty()) {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"n1", r.n1}, {"n2", r.n2}, {"floor", r.floor_bound}, {"ceil", r.ceil_bound},
                         {"dim_lo", r.dim_lo}, {"dim_hi", r.dim_hi}, {"exact", r.exact()}, {"verdict", r.verdict}});
        write_text(cj_json, arr.dump(2) + "\n");
      }
      if (cj_out.empty()) std::cout << csv.str();
      int ceil_hits = 0, floor_only = 0;
      for (const auto& r : rows) {
        ceil_hits += r.verdict == "matches-ceil";
        floor_only += r.verdict == "matches-floor-only";
      }
      std::cerr << "conjecture: " << rows.size() << " points, matches-ceil=" << ceil_hits
                << " matches-floor-only=" << floor_only << '\n';
      return mh::conjecture_exit_code(rows);
    }
    for (const auto& t : mh::registry()) {
      std::cout << t.id << "  [";
      for (std::size_t i = 0; i < t.params.size(); ++i) std::cout << (i ? "," : "") << t.params[i];
      std::cout << "]  " << t.statement << '\n';
    }
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
}
