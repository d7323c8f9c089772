#include "vebo/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rng.hpp"
#include "vebo/error.hpp"

namespace vebo {

namespace {
constexpr std::uint64_t kShuffleStream = 1;
constexpr std::uint64_t kSourceStream = 2;
}  // namespace

void ZipfParams::validate() const {
  if (rank_count < 1) throw InvalidArgument("Zipf rank count N must be >= 1");
  if (n < rank_count)
    throw InvalidArgument("vertex count n=" + std::to_string(n) +
                          " must be >= N=" + std::to_string(rank_count));
  if (!(s >= 0) || !std::isfinite(s))
    throw InvalidArgument("Zipf exponent s must be finite and >= 0");
  if (n > std::numeric_limits<VertexId>::max())
    throw InvalidArgument("vertex count exceeds 32-bit vertex ids");
}

double harmonic_number(std::uint64_t rank_count, double s) {
  double sum = 0;
  // Smallest terms first.
  for (std::uint64_t i = rank_count; i >= 1; --i)
    sum += std::pow(static_cast<double>(i), -s);
  return sum;
}

double zipf_pmf(std::uint64_t k, std::uint64_t rank_count, double s) {
  if (k < 1 || k > rank_count)
    throw InvalidArgument("Zipf rank " + std::to_string(k) +
                          " outside [1, " + std::to_string(rank_count) + "]");
  return std::pow(static_cast<double>(k), -s) / harmonic_number(rank_count, s);
}

std::vector<std::uint64_t> zipf_rank_counts(const ZipfParams& params) {
  params.validate();
  const std::uint32_t ranks = params.rank_count;
  const double h = harmonic_number(ranks, params.s);
  const double n = static_cast<double>(params.n);

  std::vector<std::uint64_t> counts(ranks);
  std::vector<double> remainder(ranks);
  std::uint64_t assigned = 0;
  for (std::uint32_t k = 1; k <= ranks; ++k) {
    const double target = n * std::pow(static_cast<double>(k), -params.s) / h;
    const double whole = std::floor(target);
    counts[k - 1] = static_cast<std::uint64_t>(whole);
    remainder[k - 1] = target - whole;
    assigned += counts[k - 1];
  }
  // Rounding in the targets can leave assigned a hair above n.
  while (assigned > params.n) {
    auto it = std::max_element(counts.begin(), counts.end());
    --*it;
    --assigned;
  }
  std::vector<std::uint32_t> by_remainder(ranks);
  std::iota(by_remainder.begin(), by_remainder.end(), 0u);
  std::stable_sort(by_remainder.begin(), by_remainder.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return remainder[a] > remainder[b];
                   });
  for (std::uint64_t i = 0; assigned < params.n; ++i, ++assigned)
    ++counts[by_remainder[i % ranks]];
  return counts;
}

std::vector<EdgeId> zipf_degree_sequence(const ZipfParams& params) {
  const auto counts = zipf_rank_counts(params);
  std::vector<EdgeId> degrees;
  degrees.reserve(params.n);
  for (std::size_t k = 0; k < counts.size(); ++k)
    degrees.insert(degrees.end(), counts[k], static_cast<EdgeId>(k));
  detail::Rng rng(params.seed, kShuffleStream);
  rng.shuffle(std::span<EdgeId>(degrees));
  return degrees;
}

Graph generate_zipf_graph(const ZipfParams& params) {
  const auto degrees = zipf_degree_sequence(params);
  std::vector<EdgeId> offsets(degrees.size() + 1, 0);
  std::partial_sum(degrees.begin(), degrees.end(), offsets.begin() + 1);
  std::vector<VertexId> sources(offsets.back());
  detail::Rng rng(params.seed, kSourceStream);
  for (auto& src : sources) src = static_cast<VertexId>(rng.below(params.n));
  return Graph::from_in_adjacency(std::move(offsets), std::move(sources));
}

PreconditionReport check_theorem_preconditions(
    const Graph& g, std::uint32_t partitions, double s,
    std::optional<std::uint64_t> rank_count) {
  if (partitions == 0) throw InvalidArgument("partition count must be >= 1");
  PreconditionReport r;
  r.partitions = partitions;
  if (rank_count) {
    r.rank_count = *rank_count;
  } else {
    EdgeId max_degree = 0;
    for (EdgeId d : in_degrees(g)) max_degree = std::max(max_degree, d);
    r.rank_count = max_degree + 1;
  }
  r.num_edges = g.num_edges();
  r.edge_threshold = r.rank_count * (partitions - 1);
  r.edge_condition = r.num_edges >= r.edge_threshold;
  r.partitions_below_ranks = partitions < r.rank_count;
  r.num_vertices = g.num_vertices();
  r.vertex_threshold =
      static_cast<double>(r.rank_count) * harmonic_number(r.rank_count, s);
  r.vertex_condition =
      static_cast<double>(r.num_vertices) >= r.vertex_threshold;
  return r;
}

}  // namespace vebo
