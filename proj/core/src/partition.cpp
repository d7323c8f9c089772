#include "vebo/partition.hpp"

#include <algorithm>
#include <string>

#include "vebo/error.hpp"

namespace vebo {

PartitionAssignment make_assignment(const Graph& g,
                                    std::vector<std::uint32_t> labels,
                                    std::uint32_t num_partitions) {
  if (labels.size() != g.num_vertices())
    throw InvalidArgument("assignment has " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(g.num_vertices()) +
                          " vertices");
  PartitionAssignment a;
  a.num_partitions = num_partitions;
  a.vertex_counts.assign(num_partitions, 0);
  a.edge_counts.assign(num_partitions, 0);
  const auto offsets = g.in_offsets();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto p = labels[v];
    if (p >= num_partitions)
      throw InvalidArgument("label " + std::to_string(p) + " of vertex " +
                            std::to_string(v) + " >= P");
    ++a.vertex_counts[p];
    a.edge_counts[p] += offsets[v + 1] - offsets[v];
  }
  if (std::is_sorted(labels.begin(), labels.end())) {
    std::vector<VertexId> b(num_partitions + 1, 0);
    for (std::uint32_t p = 0; p < num_partitions; ++p)
      b[p + 1] = b[p] + static_cast<VertexId>(a.vertex_counts[p]);
    a.boundaries = std::move(b);
  }
  a.labels = std::move(labels);
  return a;
}

PartitionAssignment partition_by_destination(const Graph& g,
                                             std::uint32_t num_partitions) {
  const std::size_t n = g.num_vertices();
  if (num_partitions == 0) throw InvalidArgument("partition count must be >= 1");
  if (num_partitions > n)
    throw InvalidArgument("partition count " + std::to_string(num_partitions) +
                          " exceeds vertex count " + std::to_string(n));
  const EdgeId avg = g.num_edges() / num_partitions;
  std::vector<std::uint32_t> labels(n);
  EdgeId current = 0;
  std::uint32_t i = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (current >= avg && i < num_partitions - 1) {
      ++i;
      current = 0;
    }
    labels[v] = i;
    current += g.in_degree(v);
  }
  return make_assignment(g, std::move(labels), num_partitions);
}

PartitionLayout::PartitionLayout(const PartitionAssignment& a)
    : offsets_(a.num_partitions + 1, 0),
      members_(a.labels.size()),
      labels_(a.labels) {
  for (auto p : labels_) ++offsets_[p + 1];
  for (std::uint32_t p = 0; p < a.num_partitions; ++p)
    offsets_[p + 1] += offsets_[p];
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t v = 0; v < labels_.size(); ++v)
    members_[cursor[labels_[v]]++] = static_cast<VertexId>(v);
}

EdgePartitionView::EdgePartitionView(const Graph& g,
                                     std::vector<VertexId> destinations)
    : graph_(&g), destinations_(std::move(destinations)) {
  for (VertexId v : destinations_) num_edges_ += g.in_degree(v);
}

std::vector<Edge> EdgePartitionView::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for_each_edge([&](Edge e) { out.push_back(e); });
  return out;
}

void validate_assignment(const Graph& g, const PartitionAssignment& a) {
  if (a.labels.size() != g.num_vertices())
    throw InvalidArgument("assignment does not cover the graph");
  for (auto p : a.labels)
    if (p >= a.num_partitions)
      throw InvalidArgument("assignment label out of range");
}

std::vector<EdgePartitionView> induce_edge_partitions(
    const Graph& g, const PartitionAssignment& a) {
  validate_assignment(g, a);
  const PartitionLayout layout(a);
  std::vector<EdgePartitionView> views;
  views.reserve(a.num_partitions);
  for (std::uint32_t p = 0; p < a.num_partitions; ++p) {
    auto vs = layout.vertices(p);
    views.emplace_back(g, std::vector<VertexId>(vs.begin(), vs.end()));
  }
  return views;
}

}  // namespace vebo
