#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vebo/engine.hpp"
#include "vebo/generate.hpp"
#include "vebo/graph.hpp"
#include "vebo/order.hpp"
#include "vebo/partition.hpp"
#include "vebo/summary.hpp"

namespace vebo {

struct ImbalanceReport {
  std::uint32_t partitions = 0;
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::vector<std::uint64_t> edge_counts;    // w[p]
  std::vector<std::uint64_t> vertex_counts;  // u[p]
  std::uint64_t edge_imbalance = 0;          // Delta(n)
  std::uint64_t vertex_imbalance = 0;        // delta(n)
  CountSummary edges;
  CountSummary vertices;
  // max/min; empty when some partition has a zero count.
  std::optional<double> edge_spread_ratio;
  std::optional<double> vertex_spread_ratio;
  std::optional<PreconditionReport> preconditions;
};

// Throws InvalidArgument if a does not cover g. Preconditions are evaluated
// only when s_hint is given.
ImbalanceReport report(const Graph& g, const PartitionAssignment& a,
                       std::optional<double> s_hint = std::nullopt);

// Max - min of each dense-frontier work counter.
struct WorkSpread {
  std::uint64_t active_edges = 0;
  std::uint64_t unique_destinations = 0;
  std::uint64_t unique_sources = 0;
};

WorkSpread work_spread(const WorkStats& stats);

struct OrderingRow {
  std::string name;
  ImbalanceReport report;
  WorkSpread dense_work;
};

struct CompareOptions {
  std::uint64_t seed = 1;  // for the random relabeling
  VeboMode mode = VeboMode::kBlockLocality;
  std::optional<double> s_hint;
};

// Rows, in order:
//   original      partition_by_destination on g as given
//   random        partition_by_destination on a seeded random relabeling
//   vebo          VEBO on g, using the ranges VEBO emits
//   vebo-random   VEBO on the random relabeling
// Throws InvalidArgument unless 1 <= P <= n.
std::vector<OrderingRow> compare_orderings(const Graph& g,
                                           std::uint32_t partitions,
                                           const CompareOptions& options = {});

// Seeded uniformly random permutation of n vertices.
Permutation random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace vebo
