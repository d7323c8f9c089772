#include "vebo/order.hpp"

#include <algorithm>
#include <string>

#include "vebo/error.hpp"
#include "vebo/partition_heap.hpp"

namespace vebo {

PartitionHeap::PartitionHeap(std::uint32_t num_partitions)
    : heap_(num_partitions), load_(num_partitions, 0) {
  for (std::uint32_t p = 0; p < num_partitions; ++p) heap_[p] = p;
}

PartitionHeap::PartitionHeap(std::span<const std::uint64_t> loads)
    : heap_(loads.size()), load_(loads.begin(), loads.end()) {
  for (std::uint32_t p = 0; p < heap_.size(); ++p) heap_[p] = p;
  for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
}

void PartitionHeap::add_to_top(std::uint64_t delta) {
  load_[heap_.front()] += delta;
  sift_down(0);
}

void PartitionHeap::sift_down(std::size_t i) noexcept {
  const std::size_t size = heap_.size();
  for (;;) {
    const std::size_t left = 2 * i + 1;
    if (left >= size) return;
    std::size_t child = left;
    if (left + 1 < size && before(heap_[left + 1], heap_[left])) child = left + 1;
    if (!before(heap_[child], heap_[i])) return;
    std::swap(heap_[i], heap_[child]);
    i = child;
  }
}

DegreeSortedOrder sort_by_degree_desc(std::span<const EdgeId> degrees) {
  EdgeId max_degree = 0;
  for (EdgeId d : degrees) max_degree = std::max(max_degree, d);
  // start[b] = first output slot of bucket b, buckets emitted high to low.
  std::vector<std::size_t> start(max_degree + 2, 0);
  for (EdgeId d : degrees) ++start[max_degree - d + 1];
  for (std::size_t b = 1; b < start.size(); ++b) start[b] += start[b - 1];
  DegreeSortedOrder out;
  out.order.resize(degrees.size());
  for (std::size_t v = 0; v < degrees.size(); ++v)
    out.order[start[max_degree - degrees[v]]++] = static_cast<VertexId>(v);
  return out;
}

DegreeSortedOrder sort_by_degree_desc(const Graph& g) {
  return sort_by_degree_desc(in_degrees(g));
}

namespace {

// Within each run of equal degree in `order`, hand out the partition labels
// chosen by the greedy in sorted order, so that each partition receives a
// block of consecutive original IDs per degree.
void group_equal_degree_runs(std::span<const EdgeId> degrees,
                             std::span<const VertexId> order,
                             std::vector<std::uint32_t>& labels) {
  std::vector<std::uint32_t> run_labels;
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() &&
           degrees[order[end]] == degrees[order[begin]])
      ++end;
    run_labels.clear();
    for (std::size_t i = begin; i < end; ++i)
      run_labels.push_back(labels[order[i]]);
    std::sort(run_labels.begin(), run_labels.end());
    for (std::size_t i = begin; i < end; ++i)
      labels[order[i]] = run_labels[i - begin];
    begin = end;
  }
}

}  // namespace

VeboResult vebo_reorder(std::span<const EdgeId> degrees,
                        std::uint32_t num_partitions, VeboOptions options) {
  const std::size_t n = degrees.size();
  if (num_partitions == 0) throw InvalidArgument("partition count must be >= 1");
  if (num_partitions > n)
    throw InvalidArgument("partition count " + std::to_string(num_partitions) +
                          " exceeds vertex count " + std::to_string(n));

  const auto sorted = sort_by_degree_desc(degrees);
  const auto& order = sorted.order;
  std::vector<std::uint32_t> labels(n);
  std::vector<std::uint64_t> vertex_counts(num_partitions, 0);

  VeboResult result;
  if (options.record_trace) result.trace.emplace();

  // Phase 1: nonzero degrees onto the partition with the fewest edges.
  PartitionHeap edge_heap(num_partitions);
  std::uint64_t max_load = 0;
  std::size_t t = 0;
  for (; t < n && degrees[order[t]] > 0; ++t) {
    const VertexId v = order[t];
    const std::uint32_t p = edge_heap.top();
    const std::uint64_t min_before = edge_heap.top_load();
    const std::uint64_t max_before = max_load;
    labels[v] = p;
    edge_heap.add_to_top(degrees[v]);
    ++vertex_counts[p];
    max_load = std::max(max_load, edge_heap.load(p));
    if (result.trace) {
      result.trace->steps.push_back({t, v, p, degrees[v], max_before,
                                     min_before, max_load,
                                     edge_heap.top_load()});
    }
  }
  if (result.trace) {
    auto& tr = *result.trace;
    tr.vertex_counts_after_phase1 = vertex_counts;
    const auto [lo, hi] =
        std::minmax_element(vertex_counts.begin(), vertex_counts.end());
    tr.vertex_imbalance_after_phase1 = *hi - *lo;
  }
  result.heap_comparisons = edge_heap.comparisons();

  // Phase 2: zero degrees onto the partition with the fewest vertices.
  if (t < n) {
    PartitionHeap vertex_heap(vertex_counts);
    for (; t < n; ++t) {
      labels[order[t]] = vertex_heap.top();
      vertex_heap.add_to_top(1);
    }
    vertex_counts.assign(vertex_heap.loads().begin(), vertex_heap.loads().end());
    result.heap_comparisons += vertex_heap.comparisons();
  }

  if (options.mode == VeboMode::kBlockLocality)
    group_equal_degree_runs(degrees, order, labels);

  // Phase 3: contiguous new-ID ranges per partition.
  std::vector<VertexId> next(num_partitions, 0);
  for (std::uint32_t p = 1; p < num_partitions; ++p)
    next[p] = next[p - 1] + static_cast<VertexId>(vertex_counts[p - 1]);
  std::vector<VertexId> seq(n);
  if (options.mode == VeboMode::kStrict) {
    for (VertexId v : order) seq[v] = next[labels[v]]++;
  } else {
    for (VertexId v = 0; v < n; ++v) seq[v] = next[labels[v]]++;
  }

  auto& a = result.assignment;
  a.num_partitions = num_partitions;
  a.labels.resize(n);
  for (std::size_t v = 0; v < n; ++v) a.labels[seq[v]] = labels[v];
  a.vertex_counts = std::move(vertex_counts);
  a.edge_counts.assign(edge_heap.loads().begin(), edge_heap.loads().end());
  std::vector<VertexId> bounds(num_partitions + 1, 0);
  for (std::uint32_t p = 0; p < num_partitions; ++p)
    bounds[p + 1] = bounds[p] + static_cast<VertexId>(a.vertex_counts[p]);
  a.boundaries = std::move(bounds);

  result.permutation = Permutation(std::move(seq));
  result.original_labels = std::move(labels);
  return result;
}

VeboResult vebo_reorder(const Graph& g, std::uint32_t num_partitions,
                        VeboOptions options) {
  return vebo_reorder(in_degrees(g), num_partitions, options);
}

Imbalance imbalance_after_placement(const PartitionAssignment& a) {
  Imbalance out;
  if (!a.edge_counts.empty()) {
    const auto [lo, hi] =
        std::minmax_element(a.edge_counts.begin(), a.edge_counts.end());
    out.edges = *hi - *lo;
  }
  if (!a.vertex_counts.empty()) {
    const auto [lo, hi] =
        std::minmax_element(a.vertex_counts.begin(), a.vertex_counts.end());
    out.vertices = *hi - *lo;
  }
  return out;
}

}  // namespace vebo
