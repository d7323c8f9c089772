#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace vebo {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;

struct Edge {
  VertexId src;
  VertexId dst;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable directed multigraph stored twice: grouped by destination (CSC,
// the in-edge view) and grouped by source (CSR, the out-edge view). Both views
// are canonical: in-edge groups are sorted by source and out-edge groups by
// target, so two graphs with the same edge multiset compare equal.
// Parallel edges and self-loops are kept.
class Graph {
 public:
  Graph() : in_offsets_{0}, out_offsets_{0} {}

  // Throws OutOfRange when an endpoint is >= n.
  static Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

  // Builds from a destination-grouped adjacency. Groups need not be sorted.
  static Graph from_in_adjacency(std::vector<EdgeId> offsets,
                                 std::vector<VertexId> sources);
  // Builds from a source-grouped adjacency. Groups need not be sorted.
  static Graph from_out_adjacency(std::vector<EdgeId> offsets,
                                  std::vector<VertexId> targets);

  std::size_t num_vertices() const noexcept { return in_offsets_.size() - 1; }
  EdgeId num_edges() const noexcept { return in_sources_.size(); }

  // Range-checked; throws OutOfRange.
  EdgeId in_degree(VertexId v) const;
  EdgeId out_degree(VertexId v) const;

  std::span<const VertexId> in_neighbors(VertexId v) const noexcept {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  std::span<const VertexId> out_neighbors(VertexId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }

  std::span<const EdgeId> in_offsets() const noexcept { return in_offsets_; }
  std::span<const VertexId> in_sources() const noexcept { return in_sources_; }
  std::span<const EdgeId> out_offsets() const noexcept { return out_offsets_; }
  std::span<const VertexId> out_targets() const noexcept {
    return out_targets_;
  }

  // Edges ordered by (src, dst).
  std::vector<Edge> to_edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<EdgeId> in_offsets_;
  std::vector<VertexId> in_sources_;
  std::vector<EdgeId> out_offsets_;
  std::vector<VertexId> out_targets_;
};

// Bijective old-ID -> new-ID map.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless seq is a bijection on [0, seq.size()).
  explicit Permutation(std::vector<VertexId> seq);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  VertexId operator[](VertexId old_id) const noexcept { return seq_[old_id]; }
  std::span<const VertexId> sequence() const noexcept { return seq_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<VertexId> seq_;
};

struct DegreeHistogram {
  std::map<EdgeId, std::size_t> counts;  // in-degree -> number of vertices
  EdgeId max_degree = 0;
  std::size_t nonzero_vertex_count = 0;
};

std::vector<EdgeId> in_degrees(const Graph& g);

DegreeHistogram degree_histogram(const Graph& g);

// Relabels every vertex v as p[v]. Throws InvalidArgument on size mismatch.
Graph apply_permutation(const Graph& g, const Permutation& p);

// Adds the reverse of every arc (self-loops included), for undirected inputs.
Graph mirror_edges(const Graph& g);

}  // namespace vebo
