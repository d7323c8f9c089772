#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vebo/graph.hpp"

namespace vebo {

// Destination-side home partition of every vertex. An edge (u, v) belongs to
// the partition of v.
struct PartitionAssignment {
  std::uint32_t num_partitions = 0;
  std::vector<std::uint32_t> labels;          // per vertex
  std::vector<std::uint64_t> vertex_counts;   // u[p]
  std::vector<std::uint64_t> edge_counts;     // w[p], in-edges landing in p
  // Present when partition p is exactly [boundaries[p], boundaries[p+1]).
  std::optional<std::vector<VertexId>> boundaries;

  friend bool operator==(const PartitionAssignment&,
                         const PartitionAssignment&) = default;
};

// Builds counts from labels; boundaries are filled in when labels are
// nondecreasing. Throws InvalidArgument on a label >= P or size mismatch.
PartitionAssignment make_assignment(const Graph& g,
                                    std::vector<std::uint32_t> labels,
                                    std::uint32_t num_partitions);

// Locality-preserving edge-balanced chunking: vertices are walked in ID
// order and partition i is closed once it holds at least floor(|E|/P) edges
// (unless it is the last one). Throws InvalidArgument unless 1 <= P <= n.
PartitionAssignment partition_by_destination(const Graph& g,
                                             std::uint32_t num_partitions);

// Vertices of each partition in ascending ID order, stored CSR-style.
class PartitionLayout {
 public:
  PartitionLayout() = default;
  explicit PartitionLayout(const PartitionAssignment& a);

  std::uint32_t num_partitions() const noexcept {
    return static_cast<std::uint32_t>(offsets_.size() - 1);
  }
  std::span<const VertexId> vertices(std::uint32_t p) const noexcept {
    return {members_.data() + offsets_[p], members_.data() + offsets_[p + 1]};
  }
  std::uint32_t partition_of(VertexId v) const noexcept { return labels_[v]; }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> members_;
  std::vector<std::uint32_t> labels_;
};

// The in-edges owned by one partition.
class EdgePartitionView {
 public:
  EdgePartitionView(const Graph& g, std::vector<VertexId> destinations);

  std::span<const VertexId> destinations() const noexcept {
    return destinations_;
  }
  EdgeId num_edges() const noexcept { return num_edges_; }

  template <class F>
  void for_each_edge(F&& f) const {
    for (VertexId v : destinations_)
      for (VertexId u : graph_->in_neighbors(v)) f(Edge{u, v});
  }

  std::vector<Edge> edges() const;

 private:
  const Graph* graph_;
  std::vector<VertexId> destinations_;
  EdgeId num_edges_ = 0;
};

// One view per partition; together they cover every edge exactly once.
// Throws InvalidArgument if the assignment does not cover g.
std::vector<EdgePartitionView> induce_edge_partitions(
    const Graph& g, const PartitionAssignment& a);

// Throws InvalidArgument unless a has one in-range label per vertex of g.
void validate_assignment(const Graph& g, const PartitionAssignment& a);

}  // namespace vebo
