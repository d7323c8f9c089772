#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vebo/graph.hpp"
#include "vebo/partition.hpp"

namespace vebo {

// Vertex IDs by nonincreasing in-degree, ascending ID within equal degree.
struct DegreeSortedOrder {
  std::vector<VertexId> order;
};

// Counting sort over degree buckets: O(n + max degree).
DegreeSortedOrder sort_by_degree_desc(std::span<const EdgeId> degrees);
DegreeSortedOrder sort_by_degree_desc(const Graph& g);

enum class VeboMode {
  kStrict,         // new IDs in placement order within each partition
  kBlockLocality,  // equal-degree runs of consecutive IDs kept together
};

// One Phase-1 placement (nonzero-degree vertex). max/min are the largest and
// smallest partition edge counts just before and just after the placement.
struct PlacementStep {
  std::uint64_t step = 0;
  VertexId vertex = 0;
  std::uint32_t partition = 0;
  EdgeId degree = 0;
  std::uint64_t max_before = 0;
  std::uint64_t min_before = 0;
  std::uint64_t max_after = 0;
  std::uint64_t min_after = 0;

  std::uint64_t imbalance_before() const { return max_before - min_before; }
  std::uint64_t imbalance_after() const { return max_after - min_after; }
};

struct PlacementTrace {
  std::vector<PlacementStep> steps;
  std::vector<std::uint64_t> vertex_counts_after_phase1;
  std::uint64_t vertex_imbalance_after_phase1 = 0;  // delta(m)
};

struct VeboOptions {
  VeboMode mode = VeboMode::kBlockLocality;
  bool record_trace = false;
};

struct VeboResult {
  // Old ID -> new ID.
  Permutation permutation;
  // Indexed by NEW vertex ID; partitions are contiguous new-ID ranges.
  PartitionAssignment assignment;
  // Partition of each ORIGINAL vertex ID.
  std::vector<std::uint32_t> original_labels;
  std::optional<PlacementTrace> trace;
  // Key comparisons performed by the argmin heaps.
  std::uint64_t heap_comparisons = 0;
};

// Vertex- and edge-balanced ordering. Nonzero-degree vertices are placed in
// decreasing degree order on the partition with the fewest edges, then
// zero-degree vertices on the partition with the fewest vertices, then each
// partition receives a contiguous range of new IDs.
// Throws InvalidArgument unless 1 <= P <= n.
VeboResult vebo_reorder(std::span<const EdgeId> degrees,
                        std::uint32_t num_partitions, VeboOptions options = {});
VeboResult vebo_reorder(const Graph& g, std::uint32_t num_partitions,
                        VeboOptions options = {});

struct Imbalance {
  std::uint64_t edges = 0;     // Delta = max w - min w
  std::uint64_t vertices = 0;  // delta = max u - min u

  friend bool operator==(const Imbalance&, const Imbalance&) = default;
};

Imbalance imbalance_after_placement(const PartitionAssignment& a);

}  // namespace vebo
