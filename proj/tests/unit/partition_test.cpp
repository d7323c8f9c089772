#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "vebo/error.hpp"
#include "vebo/generate.hpp"
#include "vebo/partition.hpp"

namespace vebo {
namespace {

Graph uniform_degree_one(std::uint32_t n) { return fixtures::directed_cycle(n); }

TEST(PartitionByDestination, UniformDegreesSplitEvenly) {
  const auto a = partition_by_destination(uniform_degree_one(8), 4);
  ASSERT_TRUE(a.boundaries.has_value());
  EXPECT_EQ(*a.boundaries, (std::vector<VertexId>{0, 2, 4, 6, 8}));
  EXPECT_EQ(a.edge_counts, (std::vector<std::uint64_t>{2, 2, 2, 2}));
  EXPECT_EQ(a.vertex_counts, (std::vector<std::uint64_t>{2, 2, 2, 2}));
}

TEST(PartitionByDestination, HeavyFirstVertexClosesFirstPartition) {
  std::mt19937_64 rng(3);
  const Graph g = fixtures::with_in_degrees({5, 1, 1, 1}, rng);
  const auto a = partition_by_destination(g, 2);
  EXPECT_EQ(a.labels, (std::vector<std::uint32_t>{0, 1, 1, 1}));
  EXPECT_EQ(a.edge_counts, (std::vector<std::uint64_t>{5, 3}));
  EXPECT_EQ(a.vertex_counts, (std::vector<std::uint64_t>{1, 3}));

  const auto views = induce_edge_partitions(g, a);
  ASSERT_EQ(views.size(), 2u);
  EXPECT_EQ(views[0].num_edges(), 5u);
  EXPECT_EQ(views[1].num_edges(), 3u);
}

TEST(PartitionByDestination, SinglePartitionHoldsEverything) {
  const Graph g = fixtures::star_into_center(4);
  const auto a = partition_by_destination(g, 1);
  EXPECT_EQ(a.vertex_counts, (std::vector<std::uint64_t>{5}));
  EXPECT_EQ(a.edge_counts, (std::vector<std::uint64_t>{4}));
  const auto views = induce_edge_partitions(g, a);
  ASSERT_EQ(views.size(), 1u);
  EXPECT_EQ(views[0].edges(), g.to_edge_list());
}

TEST(PartitionByDestination, RejectsBadPartitionCounts) {
  const Graph g = uniform_degree_one(3);
  EXPECT_THROW(partition_by_destination(g, 0), InvalidArgument);
  EXPECT_THROW(partition_by_destination(g, 4), InvalidArgument);
  EXPECT_NO_THROW(partition_by_destination(g, 3));
}

TEST(PartitionByDestination, TrailingPartitionsMayBeEmpty) {
  // Every edge lands on vertex 0, so avg is reached immediately and all
  // remaining vertices go to partition 1; partition 2 stays empty.
  const Graph g = fixtures::star_into_center(5);
  const auto a = partition_by_destination(g, 3);
  EXPECT_EQ(a.edge_counts, (std::vector<std::uint64_t>{5, 0, 0}));
  EXPECT_EQ(std::accumulate(a.vertex_counts.begin(), a.vertex_counts.end(),
                            std::uint64_t{0}),
            6u);
}

TEST(InduceEdgePartitions, TwoCycleOneEdgeEach) {
  const Graph g = fixtures::directed_cycle(2);
  const auto a = make_assignment(g, {0, 1}, 2);
  const auto views = induce_edge_partitions(g, a);
  EXPECT_EQ(views[0].edges(), (std::vector<Edge>{{1, 0}}));
  EXPECT_EQ(views[1].edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(MakeAssignment, BoundariesOnlyForSortedLabels) {
  const Graph g = uniform_degree_one(4);
  EXPECT_TRUE(make_assignment(g, {0, 0, 1, 1}, 2).boundaries.has_value());
  EXPECT_FALSE(make_assignment(g, {0, 1, 0, 1}, 2).boundaries.has_value());
  EXPECT_THROW(make_assignment(g, {0, 2, 0, 1}, 2), InvalidArgument);
  EXPECT_THROW(make_assignment(g, {0, 1}, 2), InvalidArgument);
}

TEST(PartitionLayout, ListsMembersInIdOrder) {
  const Graph g = uniform_degree_one(5);
  const PartitionLayout layout(make_assignment(g, {1, 0, 1, 0, 1}, 2));
  EXPECT_EQ(layout.num_partitions(), 2u);
  const auto p0 = layout.vertices(0);
  const auto p1 = layout.vertices(1);
  EXPECT_EQ(std::vector<VertexId>(p0.begin(), p0.end()),
            (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(std::vector<VertexId>(p1.begin(), p1.end()),
            (std::vector<VertexId>{0, 2, 4}));
  EXPECT_EQ(layout.partition_of(4), 1u);
}

TEST(ValidateAssignment, RejectsWrongSize) {
  const Graph g = uniform_degree_one(3);
  const auto a = make_assignment(uniform_degree_one(4), {0, 0, 1, 1}, 2);
  EXPECT_THROW(validate_assignment(g, a), InvalidArgument);
  EXPECT_THROW(induce_edge_partitions(g, a), InvalidArgument);
}

TEST(PartitionProperty, ConservationGuardAndContiguity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g;
    if (trial % 2 == 0) {
      const std::uint32_t n = 1 + rng() % 60;
      g = fixtures::random_graph(n, rng() % 300, rng);
    } else {
      const std::uint32_t big_n = 1 + rng() % 30;
      g = generate_zipf_graph({big_n + rng() % 200, big_n, 1.0, rng()});
    }
    const std::uint32_t n = static_cast<std::uint32_t>(g.num_vertices());
    const std::uint32_t parts = 1 + rng() % n;
    const auto a = partition_by_destination(g, parts);
    const auto degrees = in_degrees(g);

    // Conservation over the induced views.
    EdgeId total = 0;
    for (const auto& view : induce_edge_partitions(g, a)) total += view.num_edges();
    EXPECT_EQ(total, g.num_edges());
    EXPECT_EQ(std::accumulate(a.vertex_counts.begin(), a.vertex_counts.end(),
                              std::uint64_t{0}),
              n);

    // Contiguity.
    ASSERT_TRUE(a.boundaries.has_value());
    const auto& b = *a.boundaries;
    ASSERT_EQ(b.size(), parts + 1u);
    EXPECT_EQ(b.front(), 0u);
    EXPECT_EQ(b.back(), n);
    for (std::uint32_t p = 0; p < parts; ++p) {
      std::uint64_t w = 0;
      for (VertexId v = b[p]; v < b[p + 1]; ++v) {
        EXPECT_EQ(a.labels[v], p);
        w += degrees[v];
      }
      EXPECT_EQ(a.edge_counts[p], w);
    }

    // A partition was only left behind once it held avg edges.
    const std::uint64_t avg = g.num_edges() / parts;
    for (std::uint32_t p = 0; p + 1 < parts; ++p)
      if (a.vertex_counts[p + 1] > 0) EXPECT_GE(a.edge_counts[p], avg);
  }
}

}  // namespace
}  // namespace vebo
