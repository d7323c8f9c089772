#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "vebo/graph.hpp"
#include "vebo/partition.hpp"
#include "vebo/summary.hpp"

namespace vebo {

// Set of active vertices, kept both as a sorted ID list and a membership map.
class Frontier {
 public:
  Frontier() = default;

  static Frontier none(std::size_t n);
  static Frontier all(std::size_t n);
  // Sorts and deduplicates; throws OutOfRange for IDs >= n.
  static Frontier from_vertices(std::size_t n, std::vector<VertexId> ids);

  std::size_t universe() const noexcept { return member_.size(); }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(VertexId v) const noexcept { return member_[v] != 0; }
  std::span<const VertexId> vertices() const noexcept { return ids_; }

  // (active vertices + their out-edges) / |E|; |E| = 0 is treated as 1.
  double density(const Graph& g) const;

  friend bool operator==(const Frontier& a, const Frontier& b) {
    return a.ids_ == b.ids_ && a.member_.size() == b.member_.size();
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::uint8_t> member_;
};

// Work done for one partition during one edgemap.
struct PartitionWork {
  std::uint64_t active_edges = 0;         // in-edges with an active source
  std::uint64_t unique_destinations = 0;  // destinations visited
  std::uint64_t unique_sources = 0;       // distinct active sources read

  friend bool operator==(const PartitionWork&, const PartitionWork&) = default;
};

struct WorkStats {
  std::vector<PartitionWork> partitions;
  double frontier_density = 0;
  bool dense = false;
  // Wall-clock telemetry, only filled when requested. Never deterministic.
  std::vector<double> partition_seconds;

  std::uint64_t total_active_edges() const;
  std::vector<std::uint64_t> active_edges() const;
  std::vector<std::uint64_t> unique_destinations() const;
  std::vector<std::uint64_t> unique_sources() const;
};

enum class TraversalMode {
  kAuto,    // dense above the density threshold, sparse otherwise
  kDense,   // pull: every owned destination is visited
  kSparse,  // only destinations with an active in-neighbor are visited
};

enum class Execution { kSequential, kParallel };

struct EdgeMapOptions {
  TraversalMode mode = TraversalMode::kAuto;
  Execution execution = Execution::kSequential;
  unsigned workers = 0;  // parallel only; 0 picks max(2, hardware threads)
  double dense_threshold = 0.05;
  bool record_timing = false;
};

struct EdgeMapResult {
  Frontier next;
  WorkStats stats;
};

struct AlwaysTrue {
  bool operator()(VertexId) const noexcept { return true; }
};

namespace detail {

std::vector<std::vector<VertexId>> sparse_candidates(
    const Graph& g, const PartitionLayout& layout, const Frontier& f);

unsigned resolve_workers(const EdgeMapOptions& options, std::uint32_t parts);

}  // namespace detail

// Applies update(src, dst) to every in-edge whose source is active, one
// partition at a time. Each partition only ever passes its own destinations
// to update/cond, so an update that writes only to dst-indexed slots is
// race-free under Execution::kParallel. Within a destination, sources are
// visited in ascending order; results do not depend on the mode or the
// execution policy. dst joins the returned frontier when any update returned
// true for it. Destinations for which cond(dst) is false are skipped.
template <class Update, class Cond = AlwaysTrue>
EdgeMapResult edgemap(const Graph& g, const PartitionLayout& layout,
                      const Frontier& frontier, Update&& update,
                      Cond&& cond = {}, const EdgeMapOptions& options = {}) {
  const std::uint32_t parts = layout.num_partitions();
  const std::size_t n = g.num_vertices();

  EdgeMapResult result;
  auto& stats = result.stats;
  stats.partitions.assign(parts, {});
  stats.frontier_density = frontier.density(g);
  stats.dense = options.mode == TraversalMode::kDense ||
                (options.mode == TraversalMode::kAuto &&
                 stats.frontier_density > options.dense_threshold);
  if (options.record_timing) stats.partition_seconds.assign(parts, 0.0);

  std::vector<std::vector<VertexId>> candidates;
  if (!stats.dense && !frontier.empty())
    candidates = detail::sparse_candidates(g, layout, frontier);

  std::vector<std::vector<VertexId>> activated(parts);

  auto run_partition = [&](std::uint32_t p, std::vector<std::uint32_t>& seen) {
    const auto start = std::chrono::steady_clock::now();
    std::span<const VertexId> dests;
    if (stats.dense) {
      dests = layout.vertices(p);
    } else if (!candidates.empty()) {
      dests = candidates[p];
    }
    PartitionWork& work = stats.partitions[p];
    const std::uint32_t stamp = p + 1;
    for (VertexId v : dests) {
      if (!cond(v)) continue;
      bool touched = false;
      bool active = false;
      for (VertexId u : g.in_neighbors(v)) {
        if (!frontier.contains(u)) continue;
        touched = true;
        ++work.active_edges;
        if (seen[u] != stamp) {
          seen[u] = stamp;
          ++work.unique_sources;
        }
        if (update(u, v)) active = true;
      }
      if (stats.dense || touched) ++work.unique_destinations;
      if (active) activated[p].push_back(v);
    }
    if (options.record_timing) {
      stats.partition_seconds[p] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
    }
  };

  if (frontier.empty()) {
    result.next = Frontier::none(n);
    return result;
  }

  if (options.execution == Execution::kParallel && parts > 1) {
    const unsigned workers = detail::resolve_workers(options, parts);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::vector<std::uint32_t> seen(n, 0);
        for (std::uint32_t p = w; p < parts; p += workers) run_partition(p, seen);
      });
    }
  } else {
    std::vector<std::uint32_t> seen(n, 0);
    for (std::uint32_t p = 0; p < parts; ++p) run_partition(p, seen);
  }

  std::vector<VertexId> next;
  for (auto& list : activated) next.insert(next.end(), list.begin(), list.end());
  result.next = Frontier::from_vertices(n, std::move(next));
  return result;
}

template <class Update, class Cond = AlwaysTrue>
EdgeMapResult edgemap(const Graph& g, const PartitionAssignment& a,
                      const Frontier& frontier, Update&& update,
                      Cond&& cond = {}, const EdgeMapOptions& options = {}) {
  validate_assignment(g, a);
  return edgemap(g, PartitionLayout(a), frontier, std::forward<Update>(update),
                 std::forward<Cond>(cond), options);
}

// Vertices of `frontier` for which fn(v) is true.
template <class F>
Frontier vertexmap(const Frontier& frontier, F&& fn) {
  std::vector<VertexId> keep;
  for (VertexId v : frontier.vertices())
    if (fn(v)) keep.push_back(v);
  return Frontier::from_vertices(frontier.universe(), std::move(keep));
}

// Dense frontier over all vertices, one edgemap: the per-partition work of a
// full sweep such as one PageRank iteration.
WorkStats dense_work(const Graph& g, const PartitionAssignment& a);

struct PageRankResult {
  std::vector<double> scores;
  std::vector<WorkStats> iterations;
};

// Power iteration pulled along in-edges, starting from the uniform vector.
// Mass of vertices without out-edges is spread uniformly, so scores sum to 1.
// Throws InvalidArgument unless iterations >= 1 and 0 < damping < 1.
PageRankResult pagerank(const Graph& g, const PartitionAssignment& a,
                        std::uint32_t iterations, double damping = 0.85,
                        const EdgeMapOptions& options = {});

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();
inline constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

struct BfsResult {
  std::vector<std::uint32_t> levels;  // hops along out-edges, or kUnreachable
  std::vector<VertexId> parents;      // kNoParent for the source/unreached
  std::vector<WorkStats> iterations;
};

// Throws OutOfRange if source >= n.
BfsResult bfs(const Graph& g, const PartitionAssignment& a, VertexId source,
              const EdgeMapOptions& options = {});

struct ComponentsResult {
  std::vector<VertexId> labels;  // smallest vertex ID in the weak component
  std::vector<WorkStats> iterations;
};

// Synchronous min-label propagation over edges taken in both directions.
ComponentsResult connected_components(const Graph& g,
                                      const PartitionAssignment& a,
                                      const EdgeMapOptions& options = {});

struct SpmvResult {
  std::vector<double> y;
  WorkStats stats;
};

// y[v] = sum over in-edges (u, v) of x[u]; parallel edges count once each.
// Throws InvalidArgument if x.size() != n.
SpmvResult spmv(const Graph& g, const PartitionAssignment& a,
                std::span<const double> x, const EdgeMapOptions& options = {});

}  // namespace vebo
