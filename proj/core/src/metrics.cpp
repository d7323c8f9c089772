#include "vebo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rng.hpp"
#include "vebo/engine.hpp"
#include "vebo/error.hpp"

namespace vebo {

CountSummary summarize_counts(std::span<const std::uint64_t> values) {
  CountSummary s;
  if (values.empty()) return s;
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t k = sorted.size();
  s.median = k % 2 ? static_cast<double>(sorted[k / 2])
                   : (static_cast<double>(sorted[k / 2 - 1]) +
                      static_cast<double>(sorted[k / 2])) /
                         2.0;
  double sum = 0;
  for (auto x : sorted) sum += static_cast<double>(x);
  s.mean = sum / static_cast<double>(k);
  double sq = 0;
  for (auto x : sorted) {
    const double d = static_cast<double>(x) - s.mean;
    sq += d * d;
  }
  s.stddev = std::sqrt(sq / static_cast<double>(k));
  return s;
}

namespace {
std::optional<double> spread_ratio(const CountSummary& s) {
  if (s.min == 0) return std::nullopt;
  return static_cast<double>(s.max) / static_cast<double>(s.min);
}
}  // namespace

ImbalanceReport report(const Graph& g, const PartitionAssignment& a,
                       std::optional<double> s_hint) {
  validate_assignment(g, a);
  ImbalanceReport r;
  r.partitions = a.num_partitions;
  r.num_vertices = g.num_vertices();
  r.num_edges = g.num_edges();
  // Recount from the graph rather than trusting the cached counts.
  const auto fresh = make_assignment(g, a.labels, a.num_partitions);
  r.edge_counts = fresh.edge_counts;
  r.vertex_counts = fresh.vertex_counts;
  r.edges = summarize_counts(r.edge_counts);
  r.vertices = summarize_counts(r.vertex_counts);
  r.edge_imbalance = r.edges.spread();
  r.vertex_imbalance = r.vertices.spread();
  r.edge_spread_ratio = spread_ratio(r.edges);
  r.vertex_spread_ratio = spread_ratio(r.vertices);
  if (s_hint) r.preconditions = check_theorem_preconditions(g, a.num_partitions, *s_hint);
  return r;
}

WorkSpread work_spread(const WorkStats& stats) {
  WorkSpread s;
  s.active_edges = summarize_counts(stats.active_edges()).spread();
  s.unique_destinations = summarize_counts(stats.unique_destinations()).spread();
  s.unique_sources = summarize_counts(stats.unique_sources()).spread();
  return s;
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  detail::Rng rng(seed, 0);
  rng.shuffle(std::span<VertexId>(seq));
  return Permutation(std::move(seq));
}

std::vector<OrderingRow> compare_orderings(const Graph& g,
                                           std::uint32_t partitions,
                                           const CompareOptions& options) {
  if (partitions == 0 || partitions > g.num_vertices())
    throw InvalidArgument("partition count must lie in [1, n]");
  const Graph shuffled =
      apply_permutation(g, random_permutation(g.num_vertices(), options.seed));

  std::vector<OrderingRow> rows;
  auto add = [&](std::string name, const Graph& graph,
                 const PartitionAssignment& a) {
    rows.push_back({std::move(name), report(graph, a, options.s_hint),
                    work_spread(dense_work(graph, a))});
  };
  add("original", g, partition_by_destination(g, partitions));
  add("random", shuffled, partition_by_destination(shuffled, partitions));

  VeboOptions vo;
  vo.mode = options.mode;
  for (const auto& [name, graph] :
       {std::pair<const char*, const Graph*>{"vebo", &g},
        std::pair<const char*, const Graph*>{"vebo-random", &shuffled}}) {
    const auto result = vebo_reorder(*graph, partitions, vo);
    add(name, apply_permutation(*graph, result.permutation), result.assignment);
  }
  return rows;
}

}  // namespace vebo
