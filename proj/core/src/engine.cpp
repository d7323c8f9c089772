#include "vebo/engine.hpp"

#include <numeric>
#include <string>

#include "vebo/error.hpp"

namespace vebo {

Frontier Frontier::none(std::size_t n) {
  Frontier f;
  f.member_.assign(n, 0);
  return f;
}

Frontier Frontier::all(std::size_t n) {
  Frontier f;
  f.ids_.resize(n);
  std::iota(f.ids_.begin(), f.ids_.end(), VertexId{0});
  f.member_.assign(n, 1);
  return f;
}

Frontier Frontier::from_vertices(std::size_t n, std::vector<VertexId> ids) {
  Frontier f;
  f.member_.assign(n, 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= n)
      throw OutOfRange("frontier vertex " + std::to_string(ids[i]) +
                           " out of range",
                       i, ids[i]);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (VertexId v : ids) f.member_[v] = 1;
  f.ids_ = std::move(ids);
  return f;
}

double Frontier::density(const Graph& g) const {
  std::uint64_t work = ids_.size();
  for (VertexId v : ids_) work += g.out_degree(v);
  const double edges =
      g.num_edges() == 0 ? 1.0 : static_cast<double>(g.num_edges());
  return static_cast<double>(work) / edges;
}

namespace {
template <class Field>
std::vector<std::uint64_t> collect(const std::vector<PartitionWork>& parts,
                                   Field field) {
  std::vector<std::uint64_t> out;
  out.reserve(parts.size());
  for (const auto& w : parts) out.push_back(w.*field);
  return out;
}
}  // namespace

std::uint64_t WorkStats::total_active_edges() const {
  std::uint64_t total = 0;
  for (const auto& w : partitions) total += w.active_edges;
  return total;
}

std::vector<std::uint64_t> WorkStats::active_edges() const {
  return collect(partitions, &PartitionWork::active_edges);
}
std::vector<std::uint64_t> WorkStats::unique_destinations() const {
  return collect(partitions, &PartitionWork::unique_destinations);
}
std::vector<std::uint64_t> WorkStats::unique_sources() const {
  return collect(partitions, &PartitionWork::unique_sources);
}

namespace detail {

std::vector<std::vector<VertexId>> sparse_candidates(
    const Graph& g, const PartitionLayout& layout, const Frontier& f) {
  std::vector<std::vector<VertexId>> buckets(layout.num_partitions());
  for (VertexId u : f.vertices())
    for (VertexId v : g.out_neighbors(u))
      buckets[layout.partition_of(v)].push_back(v);
  for (auto& b : buckets) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  return buckets;
}

unsigned resolve_workers(const EdgeMapOptions& options, std::uint32_t parts) {
  unsigned w = options.workers;
  if (w == 0) w = std::max(2u, std::thread::hardware_concurrency());
  return std::min<unsigned>(w, parts);
}

}  // namespace detail

WorkStats dense_work(const Graph& g, const PartitionAssignment& a) {
  EdgeMapOptions options;
  options.mode = TraversalMode::kDense;
  return edgemap(
             g, a, Frontier::all(g.num_vertices()),
             [](VertexId, VertexId) { return false; }, AlwaysTrue{}, options)
      .stats;
}

PageRankResult pagerank(const Graph& g, const PartitionAssignment& a,
                        std::uint32_t iterations, double damping,
                        const EdgeMapOptions& options) {
  if (iterations < 1) throw InvalidArgument("pagerank needs >= 1 iteration");
  if (!(damping > 0 && damping < 1))
    throw InvalidArgument("pagerank damping must lie in (0, 1)");
  validate_assignment(g, a);
  const std::size_t n = g.num_vertices();
  PageRankResult result;
  if (n == 0) return result;

  const PartitionLayout layout(a);
  const Frontier everyone = Frontier::all(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> score(n, inv_n);
  std::vector<double> contrib(n);
  std::vector<double> acc(n);

  for (std::uint32_t it = 0; it < iterations; ++it) {
    double dangling = 0;
    for (VertexId u = 0; u < n; ++u) {
      const auto deg = g.out_degree(u);
      if (deg == 0) {
        dangling += score[u];
        contrib[u] = 0;
      } else {
        contrib[u] = score[u] / static_cast<double>(deg);
      }
    }
    std::fill(acc.begin(), acc.end(), 0.0);
    auto step = edgemap(
        g, layout, everyone,
        [&](VertexId u, VertexId v) {
          acc[v] += contrib[u];
          return true;
        },
        AlwaysTrue{}, options);
    const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
    for (VertexId v = 0; v < n; ++v) score[v] = base + damping * acc[v];
    result.iterations.push_back(std::move(step.stats));
  }
  result.scores = std::move(score);
  return result;
}

BfsResult bfs(const Graph& g, const PartitionAssignment& a, VertexId source,
              const EdgeMapOptions& options) {
  const std::size_t n = g.num_vertices();
  if (source >= n)
    throw OutOfRange("bfs source " + std::to_string(source) + " out of range",
                     0, source);
  validate_assignment(g, a);
  const PartitionLayout layout(a);
  BfsResult result;
  result.levels.assign(n, kUnreachable);
  result.parents.assign(n, kNoParent);
  result.levels[source] = 0;

  Frontier frontier = Frontier::from_vertices(n, {source});
  for (std::uint32_t level = 1; !frontier.empty(); ++level) {
    auto step = edgemap(
        g, layout, frontier,
        [&](VertexId u, VertexId v) {
          if (result.levels[v] != kUnreachable) return false;
          result.levels[v] = level;
          result.parents[v] = u;
          return true;
        },
        [&](VertexId v) { return result.levels[v] == kUnreachable; }, options);
    frontier = std::move(step.next);
    result.iterations.push_back(std::move(step.stats));
  }
  return result;
}

ComponentsResult connected_components(const Graph& g,
                                      const PartitionAssignment& a,
                                      const EdgeMapOptions& options) {
  validate_assignment(g, a);
  const std::size_t n = g.num_vertices();
  const Graph both = mirror_edges(g);
  const PartitionLayout layout(a);
  ComponentsResult result;
  std::vector<VertexId> current(n);
  std::iota(current.begin(), current.end(), VertexId{0});
  std::vector<VertexId> next = current;

  Frontier frontier = Frontier::all(n);
  while (!frontier.empty()) {
    auto step = edgemap(
        both, layout, frontier,
        [&](VertexId u, VertexId v) {
          if (current[u] < next[v]) {
            next[v] = current[u];
            return true;
          }
          return false;
        },
        AlwaysTrue{}, options);
    current = next;
    frontier = std::move(step.next);
    result.iterations.push_back(std::move(step.stats));
  }
  result.labels = std::move(current);
  return result;
}

SpmvResult spmv(const Graph& g, const PartitionAssignment& a,
                std::span<const double> x, const EdgeMapOptions& options) {
  const std::size_t n = g.num_vertices();
  if (x.size() != n)
    throw InvalidArgument("spmv input has " + std::to_string(x.size()) +
                          " entries for " + std::to_string(n) + " vertices");
  SpmvResult result;
  result.y.assign(n, 0.0);
  auto step = edgemap(
      g, a, Frontier::all(n),
      [&](VertexId u, VertexId v) {
        result.y[v] += x[u];
        return false;
      },
      AlwaysTrue{}, options);
  result.stats = std::move(step.stats);
  return result;
}

}  // namespace vebo
