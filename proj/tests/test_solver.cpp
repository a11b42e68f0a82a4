#include <gtest/gtest.h>

#include "metricdim/metricdim.hpp"
#include "oracle.hpp"

using namespace metricdim;

namespace {

SolverOptions unlimited(int workers = 1) { return SolverOptions{std::nullopt, workers, 64}; }

}  // namespace

TEST(Solver, Examples) {
  EXPECT_EQ(metric_dimension_exact(complete_graph(5)).dimension, 4);
  EXPECT_EQ(metric_dimension_exact(path_graph(7)).dimension, 1);
  const auto c6 = metric_dimension_exact(cycle_graph(6));
  EXPECT_EQ(c6.dimension, 2);
  EXPECT_EQ(c6.basis.vertices(), (std::vector<int>{0, 1}));
  const auto fan = metric_dimension_exact(clique_fan({2, 2}));
  EXPECT_EQ(fan.dimension, 2);
  EXPECT_EQ(fan.basis.vertices(), (std::vector<int>{1, 3}));
  const auto pp = metric_dimension_exact(strong_product(path_graph(3), path_graph(3)));
  EXPECT_TRUE(pp.exact);
  EXPECT_EQ(pp.dimension, 3);
  EXPECT_EQ(pp.basis.vertices(), (std::vector<int>{0, 1, 8}));
}

TEST(Solver, SingleVertex) {
  const auto r = metric_dimension_exact(Graph(1, {}));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.dimension, 0);
  EXPECT_EQ(r.basis.size(), 0u);
}

TEST(Solver, MatchesOracleOnAllGraphsUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      const auto want = oracle::brute_force_dimension(g);
      const auto got = metric_dimension_exact(g, unlimited());
      ASSERT_TRUE(got.exact);
      ASSERT_EQ(got.dimension, want.dimension) << graph6_write(g);
      ASSERT_EQ(got.basis.vertices(), want.basis) << graph6_write(g);
      ASSERT_TRUE(oracle::resolves(oracle::floyd_warshall(g), got.basis.vertices()));
    });
  }
}

TEST(Solver, MatchesOracleOnFamilies) {
  for (const auto& g : {hypercube_graph(3), hypercube_graph(4), pseudo_sphere(3, 3), pseudo_sphere(4, 2),
                        grid_graph(3, 4), caterpillar_graph(3, 2), random_tree(11, 5), clique_fan({3, 2, 2}),
                        strong_product(complete_graph(2), cycle_graph(4)), cycle_graph(11)}) {
    const auto want = oracle::brute_force_dimension(g);
    const auto got = metric_dimension_exact(g, unlimited(2));
    EXPECT_EQ(got.dimension, want.dimension) << graph6_write(g);
    EXPECT_EQ(got.basis.vertices(), want.basis) << graph6_write(g);
  }
}

TEST(Solver, ReportsBounds) {
  const auto r = metric_dimension_exact(complete_graph(6));
  EXPECT_EQ(r.twin_bound, 5);
  EXPECT_EQ(r.counting_bound, 5);
  EXPECT_EQ(r.lower_bound, 5);
  EXPECT_EQ(r.upper_bound, 5);
  EXPECT_GT(metric_dimension_exact(cycle_graph(9)).nodes_explored, 0u);
}

TEST(Solver, DeterministicAcrossWorkerCounts) {
  for (const auto& g : {strong_product(path_graph(4), path_graph(5)), hypercube_graph(4), grid_graph(4, 4),
                        strong_product(path_graph(3), cycle_graph(6))}) {
    const auto one = metric_dimension_exact(g, unlimited(1));
    for (int w : {2, 3, 8}) {
      const auto many = metric_dimension_exact(g, unlimited(w));
      EXPECT_EQ(one.dimension, many.dimension);
      EXPECT_EQ(one.basis, many.basis);
      EXPECT_EQ(one.nodes_explored, many.nodes_explored);
    }
  }
}

TEST(Solver, BudgetExhaustionIsInexactAndDeterministic) {
  const auto g = strong_product(path_graph(5), cycle_graph(7));
  SolverOptions tight{std::uint64_t{50}, 1, 64};
  const auto r = metric_dimension_exact(g, tight);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.lower_bound, r.dimension);
  EXPECT_EQ(r.basis.size(), 0u);
  for (int w : {2, 4}) {
    tight.workers = w;
    const auto again = metric_dimension_exact(g, tight);
    EXPECT_EQ(again.dimension, r.dimension);
    EXPECT_EQ(again.exact, r.exact);
    EXPECT_EQ(again.nodes_explored, r.nodes_explored);
  }
}

TEST(Solver, InexactLowerBoundIsSound) {
  const auto g = hypercube_graph(4);
  const int truth = metric_dimension_exact(g, unlimited()).dimension;
  for (std::uint64_t budget : {1u, 10u, 100u, 1000u}) {
    const auto r = metric_dimension_exact(g, SolverOptions{budget, 1, 64});
    EXPECT_LE(r.dimension, truth);
    if (r.exact) {
      EXPECT_EQ(r.dimension, truth);
    }
  }
}

TEST(Solver, LargeOrderUsesWideSets) {
  const auto g = cycle_graph(80);
  EXPECT_THROW(metric_dimension_exact(g), InvalidArgument);
  const auto r = metric_dimension_exact(g, SolverOptions{std::uint64_t{1'000'000}, 2, 64});
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.dimension, 2);
  EXPECT_EQ(r.basis.vertices(), (std::vector<int>{0, 1}));
  const auto p = metric_dimension_exact(path_graph(100), SolverOptions{std::uint64_t{1000}, 1, 64});
  EXPECT_EQ(p.dimension, 1);
}

TEST(Solver, DisconnectedInputRejected) {
  EXPECT_THROW(metric_dimension_exact(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
}
