#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "vebo/error.hpp"
#include "vebo/metrics.hpp"

namespace vebo {
namespace {

TEST(SummarizeCounts, PopulationStatistics) {
  const std::vector<std::uint64_t> v = {5, 3};
  const auto s = summarize_counts(v);
  EXPECT_EQ(s.min, 3u);
  EXPECT_EQ(s.max, 5u);
  EXPECT_DOUBLE_EQ(s.median, 4.0);
  EXPECT_DOUBLE_EQ(s.mean, 4.0);
  EXPECT_DOUBLE_EQ(s.stddev, 1.0);
  EXPECT_EQ(s.spread(), 2u);

  const std::vector<std::uint64_t> odd = {9, 1, 2};
  const auto t = summarize_counts(odd);
  EXPECT_DOUBLE_EQ(t.median, 2.0);
  EXPECT_NEAR(t.stddev, std::sqrt(38.0 / 3.0), 1e-12);
}

TEST(Report, SyntheticAssignment) {
  std::mt19937_64 rng(1);
  const Graph g = fixtures::with_in_degrees({5, 1, 1, 1}, rng);
  const auto r = report(g, make_assignment(g, {0, 1, 1, 1}, 2));
  EXPECT_EQ(r.edge_counts, (std::vector<std::uint64_t>{5, 3}));
  EXPECT_EQ(r.vertex_counts, (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(r.edge_imbalance, 2u);
  EXPECT_EQ(r.vertex_imbalance, 2u);
  EXPECT_DOUBLE_EQ(r.edges.stddev, 1.0);
  EXPECT_DOUBLE_EQ(r.vertices.stddev, 1.0);
  EXPECT_DOUBLE_EQ(*r.edge_spread_ratio, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(*r.vertex_spread_ratio, 3.0);
  EXPECT_FALSE(r.preconditions.has_value());
}

TEST(Report, UniformAlgorithmOneIsBalanced) {
  const Graph g = fixtures::directed_cycle(8);
  const auto r = report(g, partition_by_destination(g, 4));
  EXPECT_EQ(r.edge_imbalance, 0u);
  EXPECT_EQ(r.vertex_imbalance, 0u);
}

TEST(Report, EmptyPartitionLeavesRatioUnset) {
  const Graph g = fixtures::star_into_center(5);
  const auto r = report(g, partition_by_destination(g, 3), 1.0);
  EXPECT_FALSE(r.edge_spread_ratio.has_value());
  EXPECT_FALSE(r.vertex_spread_ratio.has_value());
  ASSERT_TRUE(r.preconditions.has_value());
  EXPECT_EQ(r.preconditions->partitions, 3u);
}

TEST(Report, VeboOnPreconditionZipf) {
  const std::uint32_t big_n = 200;
  const auto n = static_cast<std::uint64_t>(
      std::ceil(big_n * harmonic_number(big_n, 1.0)));
  const Graph g = generate_zipf_graph({n, big_n, 1.0, 4});
  const auto r = vebo_reorder(g, 8);
  const auto rep = report(apply_permutation(g, r.permutation), r.assignment, 1.0);
  ASSERT_TRUE(rep.preconditions->vertex_balance_applies());
  EXPECT_LE(rep.edge_imbalance, 1u);
  EXPECT_LE(rep.vertex_imbalance, 1u);
  EXPECT_EQ(rep.num_edges, g.num_edges());
  EXPECT_EQ(rep.num_vertices, n);
}

TEST(Report, RejectsMismatchedAssignment) {
  const Graph g = fixtures::directed_cycle(3);
  const auto a = partition_by_destination(fixtures::directed_cycle(4), 2);
  EXPECT_THROW(report(g, a), InvalidArgument);
}

TEST(WorkSpreadTest, MaxMinusMin) {
  WorkStats s;
  s.partitions = {{4, 1, 4}, {0, 2, 0}, {3, 3, 1}};
  const auto w = work_spread(s);
  EXPECT_EQ(w.active_edges, 4u);
  EXPECT_EQ(w.unique_destinations, 2u);
  EXPECT_EQ(w.unique_sources, 4u);
}

TEST(CompareOrderings, RowsAndVeboBalance) {
  const Graph g = generate_zipf_graph({3000, 150, 1.0, 8});
  const auto rows = compare_orderings(g, 8);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].name, "original");
  EXPECT_EQ(rows[1].name, "random");
  EXPECT_EQ(rows[2].name, "vebo");
  EXPECT_EQ(rows[3].name, "vebo-random");
  for (const auto& row : rows) {
    EXPECT_EQ(row.report.num_edges, g.num_edges());
    EXPECT_EQ(row.report.partitions, 8u);
  }
  EXPECT_LE(rows[2].report.edge_imbalance, 1u);
  EXPECT_LE(rows[2].dense_work.active_edges, 1u);
  EXPECT_EQ(rows[0].report.edge_counts,
            partition_by_destination(g, 8).edge_counts);
}

TEST(CompareOrderings, EmptyGraphHasZeroEdgeWork) {
  const Graph g = Graph::from_edge_list({}, 4);
  for (const auto& row : compare_orderings(g, 2)) {
    EXPECT_EQ(row.report.edge_counts, (std::vector<std::uint64_t>{0, 0}));
    EXPECT_EQ(row.report.edge_imbalance, 0u);
    EXPECT_EQ(row.dense_work.active_edges, 0u);
    EXPECT_EQ(row.dense_work.unique_sources, 0u);
  }
}

TEST(CompareOrderings, RejectsBadPartitionCounts) {
  EXPECT_THROW(compare_orderings(fixtures::directed_cycle(3), 0), InvalidArgument);
  EXPECT_THROW(compare_orderings(fixtures::directed_cycle(3), 4), InvalidArgument);
}

// VEBO only sees the degree multiset, so relabeling the input must not move
// the per-partition counts.
TEST(MetricsProperty, VeboCountsIgnoreInputLabels) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t big_n = 2 + rng() % 80;
    const Graph g = generate_zipf_graph(
        {big_n + rng() % 2000, big_n, 0.5 + (rng() % 4) * 0.5, rng()});
    const std::uint32_t parts = 1 + rng() % 16;
    const Graph h = apply_permutation(g, random_permutation(g.num_vertices(), rng()));
    const auto a = vebo_reorder(g, parts).assignment;
    const auto b = vebo_reorder(h, parts).assignment;
    EXPECT_EQ(a.edge_counts, b.edge_counts);
    EXPECT_EQ(a.vertex_counts, b.vertex_counts);

    const auto rows = compare_orderings(g, parts, {static_cast<std::uint64_t>(trial)});
    EXPECT_EQ(rows[2].report.edge_counts, rows[3].report.edge_counts);
    EXPECT_EQ(rows[2].report.vertex_counts, rows[3].report.vertex_counts);
  }
}

TEST(RandomPermutation, SeededAndBijective) {
  const auto p = random_permutation(100, 5);
  EXPECT_EQ(p, random_permutation(100, 5));
  EXPECT_NE(p, random_permutation(100, 6));
  EXPECT_EQ(p.size(), 100u);
}

}  // namespace
}  // namespace vebo
