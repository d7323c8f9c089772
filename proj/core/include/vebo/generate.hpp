#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vebo/graph.hpp"

namespace vebo {

// Zipf in-degree model: a vertex has in-degree k-1 with probability
// k^-s / H_{N,s}, k = 1..N.
struct ZipfParams {
  std::uint64_t n = 0;          // vertex count
  std::uint32_t rank_count = 0; // N, one more than the largest in-degree
  double s = 1.0;               // skew exponent
  std::uint64_t seed = 0;

  // Throws InvalidArgument unless N >= 1, n >= N and s >= 0.
  void validate() const;
};

// Sum_{i=1..N} i^-s by direct summation.
double harmonic_number(std::uint64_t rank_count, double s);

// Throws InvalidArgument unless 1 <= k <= N.
double zipf_pmf(std::uint64_t k, std::uint64_t rank_count, double s);

// Vertices per rank (index k-1 holds the count for in-degree k-1), from
// largest-remainder apportionment of n*p_k. Ties in the fractional part go to
// the smaller degree. Sums to n; every entry is within 1 of n*p_k.
std::vector<std::uint64_t> zipf_rank_counts(const ZipfParams& params);

// In-degree per vertex ID: the apportioned degree multiset in seeded random
// vertex order.
std::vector<EdgeId> zipf_degree_sequence(const ZipfParams& params);

// Graph whose in-degrees are zipf_degree_sequence(params) and whose edge
// sources are drawn uniformly with replacement. Pure function of params.
Graph generate_zipf_graph(const ZipfParams& params);

struct PreconditionReport {
  std::uint32_t partitions = 0;
  std::uint64_t rank_count = 0;      // N
  std::uint64_t num_edges = 0;       // |E|
  std::uint64_t edge_threshold = 0;  // N (P-1)
  bool edge_condition = false;       // |E| >= N (P-1)
  bool partitions_below_ranks = false;  // P < N
  std::uint64_t num_vertices = 0;
  double vertex_threshold = 0;       // N H_{N,s}
  bool vertex_condition = false;     // n >= N H_{N,s}

  // Hypotheses of the edge-balance guarantee (Delta(n) <= 1).
  bool edge_balance_applies() const {
    return edge_condition && partitions_below_ranks;
  }
  // Hypotheses of the vertex-balance guarantee (delta(n) <= 1).
  bool vertex_balance_applies() const {
    return edge_balance_applies() && vertex_condition;
  }
};

// N defaults to the graph's largest in-degree + 1; pass rank_count to
// evaluate against the generator's N instead. Throws InvalidArgument if P=0.
PreconditionReport check_theorem_preconditions(
    const Graph& g, std::uint32_t partitions, double s,
    std::optional<std::uint64_t> rank_count = std::nullopt);

}  // namespace vebo
