#include <gtest/gtest.h>

#include <sstream>

#include "metricdim/metricdim.hpp"
#include "oracle.hpp"

using namespace metricdim;

namespace {

void expect_distances_match_oracle(const Graph& g) {
  const auto dm = all_pairs_distances(g);
  const auto fw = oracle::floyd_warshall(g);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const int want = fw[a][b] >= oracle::inf ? DistanceMatrix::unreachable : fw[a][b];
      ASSERT_EQ(dm(a, b), want) << a << "," << b;
    }
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(0, {}), InvalidArgument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Families, OrdersAndEdgeCounts) {
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(cycle_graph(6).edge_count(), 6u);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(star_graph(5).degree(0), 4);
  EXPECT_EQ(caterpillar_graph(3, 2).order(), 9);
  EXPECT_EQ(caterpillar_graph(3, 2).edge_count(), 8u);
  for (int r = 1; r <= 5; ++r) {
    const auto q = hypercube_graph(r);
    EXPECT_EQ(q.order(), 1 << r);
    EXPECT_EQ(q.edge_count(), static_cast<std::size_t>(r) << (r - 1));
  }
  EXPECT_EQ(grid_graph(2, 3).edge_count(), 7u);
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
}

TEST(Families, RandomTreesAreTreesAndSeeded) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_tree(9, seed);
    EXPECT_EQ(t.edge_count(), 8u);
    EXPECT_TRUE(is_connected(t));
    EXPECT_EQ(t, random_tree(9, seed));
  }
}

TEST(Families, PseudoSphereThreeTwoIsHexagon) {
  const auto s = pseudo_sphere(3, 2);
  EXPECT_EQ(s.order(), 6);
  EXPECT_TRUE(oracle::isomorphic_distances(s, cycle_graph(6)));
}

TEST(Families, CliqueFanDimensionTwoShape) {
  const auto g = clique_fan({2, 2});
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_EQ(g.edge_count(), 6u);
}

TEST(Families, SpecStrings) {
  EXPECT_EQ(family_from_spec("grid:2x3"), grid_graph(2, 3));
  EXPECT_EQ(family_from_spec("pseudo_sphere:3x2"), pseudo_sphere(3, 2));
  EXPECT_EQ(family_from_spec("path:4"), path_graph(4));
  EXPECT_THROW(family_from_spec("nosuch:3"), InvalidArgument);
  EXPECT_THROW(family_from_spec("path:x"), InvalidArgument);
}

TEST(Distances, MatchFloydWarshallOnFamilies) {
  for (const auto& g : {path_graph(7), cycle_graph(9), complete_graph(4), hypercube_graph(4), pseudo_sphere(4, 3),
                        grid_graph(3, 5), clique_fan({3, 2, 4}), random_tree(15, 3)})
    expect_distances_match_oracle(g);
}

TEST(Distances, LargeGraphWordBoundaries) {
  expect_distances_match_oracle(cycle_graph(130));
  expect_distances_match_oracle(grid_graph(9, 9));
}

TEST(Distances, Examples) {
  const auto p = all_pairs_distances(path_graph(5));
  EXPECT_EQ(p(0, 4), 4);
  EXPECT_EQ(p.diameter(), 4);
  EXPECT_EQ(all_pairs_distances(cycle_graph(6))(0, 3), 3);
  EXPECT_EQ(all_pairs_distances(complete_graph(5)).diameter(), 1);
}

TEST(Distances, DisconnectedDetected) {
  Graph g(4, {{0, 1}, {2, 3}});
  const auto dm = all_pairs_distances(g);
  EXPECT_FALSE(dm.connected());
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(dm(0, 2), DistanceMatrix::unreachable);
  EXPECT_THROW(dm.require_connected(), DisconnectedGraph);
}

TEST(Intervals, MatchGeodesicEnumeration) {
  for (const auto& g : {cycle_graph(4), cycle_graph(7), grid_graph(3, 3), hypercube_graph(3), pseudo_sphere(3, 3)}) {
    const auto dm = all_pairs_distances(g);
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) {
        const auto want = oracle::geodesic_vertices(g, x, y);
        const auto got = interval(dm, x, y).to_vector();
        EXPECT_EQ(std::vector<int>(want.begin(), want.end()), got);
      }
  }
}

TEST(Intervals, Examples) {
  const auto c4 = all_pairs_distances(cycle_graph(4));
  EXPECT_EQ(interval(c4, 0, 2).count(), 4u);
  const auto p4 = all_pairs_distances(path_graph(4));
  EXPECT_EQ(interval(p4, 0, 3).count(), 4u);
  EXPECT_EQ(interval(p4, 2, 2).to_vector(), std::vector<int>{2});
  EXPECT_THROW(interval(p4, 0, 4), InvalidArgument);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_write(complete_graph(3)), "Bw");
  EXPECT_EQ(graph6_write(Graph(1, {})), "@");
  EXPECT_EQ(graph6_read("Bw"), complete_graph(3));
  EXPECT_EQ(graph6_read(">>graph6<<Bw"), complete_graph(3));
}

TEST(Graph6, RoundTrip) {
  for (const auto& g : {path_graph(2), cycle_graph(5), hypercube_graph(3), grid_graph(4, 5), cycle_graph(63),
                        cycle_graph(100), random_tree(70, 1)})
    EXPECT_EQ(graph6_read(graph6_write(g)), g);
}

TEST(Graph6, RejectsGarbage) {
  EXPECT_THROW(graph6_read(""), ParseError);
  EXPECT_THROW(graph6_read("B"), ParseError);
  EXPECT_THROW(graph6_read("Bww"), ParseError);
  EXPECT_THROW(graph6_read("B\x01"), ParseError);
  EXPECT_THROW(graph6_read("Bx"), ParseError);  // padding bits set
}

TEST(Json, RoundTripAndErrors) {
  const auto g = grid_graph(2, 3);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,5]]})")), InvalidArgument);
  EXPECT_ANY_THROW(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")));
}

TEST(ReadGraphs, MixedInputs) {
  std::istringstream lines("Bw\nCr\n\n");
  const auto gs = read_graphs(lines);
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0], complete_graph(3));
  std::istringstream arr(R"([{"n":2,"edges":[[0,1]]},{"n":3,"edges":[[0,1],[1,2]]}])");
  const auto js = read_graphs(arr);
  ASSERT_EQ(js.size(), 2u);
  EXPECT_EQ(js[1], path_graph(3));
}

TEST(Enumerate, ConnectedCountsMatchBruteForce) {
  EXPECT_EQ(enumerate_connected(1).size(), 1u);
  EXPECT_EQ(enumerate_connected(2).size(), 1u);
  EXPECT_EQ(enumerate_connected(3).size(), 4u);
  EXPECT_EQ(enumerate_connected(4).size(), 38u);
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(static_cast<int>(enumerate_connected(n).size()), oracle::count_connected_labeled(n)) << n;
}

TEST(Enumerate, AllConnectedAndDistinct) {
  const auto gs = enumerate_connected(4);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    EXPECT_TRUE(is_connected(gs[i]));
    for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(gs[i] == gs[j]);
  }
  EXPECT_THROW(ConnectedGraphEnumerator(8), InvalidArgument);
  EXPECT_THROW(ConnectedGraphEnumerator(0), InvalidArgument);
}
