#include "vebo/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vebo/error.hpp"

namespace vebo {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kBadToken: return "bad token";
    case ParseErrorKind::kCountMismatch: return "count mismatch";
    case ParseErrorKind::kNonMonotonicOffsets: return "non-monotonic offsets";
    case ParseErrorKind::kTargetOutOfRange: return "target out of range";
    case ParseErrorKind::kIo: return "i/o error";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& detail)
    : Error(std::string(to_string(kind)) +
            (line ? " at line " + std::to_string(line) : std::string()) +
            ": " + detail),
      kind_(kind),
      line_(line) {}

namespace {

void check_offsets(const std::vector<EdgeId>& offsets, std::size_t num_items) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != num_items)
    throw InvalidArgument("adjacency offsets must start at 0 and end at |E|");
  if (!std::is_sorted(offsets.begin(), offsets.end()))
    throw InvalidArgument("adjacency offsets must be nondecreasing");
}

void check_ids(const std::vector<VertexId>& ids, std::size_t n) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= n)
      throw OutOfRange("vertex id " + std::to_string(ids[i]) +
                           " out of range for n=" + std::to_string(n),
                       i, ids[i]);
  }
}

void sort_groups(const std::vector<EdgeId>& offsets,
                 std::vector<VertexId>& ids) {
  for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
    const auto first = ids.begin() + offsets[v];
    const auto last = ids.begin() + offsets[v + 1];
    if (!std::is_sorted(first, last)) std::sort(first, last);
  }
}

// Transposes a grouped adjacency whose groups are sorted. Iterating owners in
// ascending order makes every transposed group sorted as well.
void transpose(const std::vector<EdgeId>& offsets,
               const std::vector<VertexId>& ids, std::vector<EdgeId>& t_offsets,
               std::vector<VertexId>& t_ids) {
  const std::size_t n = offsets.size() - 1;
  t_offsets.assign(n + 1, 0);
  for (VertexId x : ids) ++t_offsets[x + 1];
  std::partial_sum(t_offsets.begin(), t_offsets.end(), t_offsets.begin());
  t_ids.resize(ids.size());
  std::vector<EdgeId> cursor(t_offsets.begin(), t_offsets.end() - 1);
  for (std::size_t owner = 0; owner < n; ++owner) {
    for (EdgeId e = offsets[owner]; e < offsets[owner + 1]; ++e)
      t_ids[cursor[ids[e]]++] = static_cast<VertexId>(owner);
  }
}

}  // namespace

Graph Graph::from_edge_list(std::span<const Edge> edges, std::size_t n) {
  std::vector<EdgeId> offsets(n + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.src >= n || e.dst >= n) {
      const VertexId bad = e.src >= n ? e.src : e.dst;
      throw OutOfRange("edge " + std::to_string(i) + " endpoint " +
                           std::to_string(bad) + " >= n=" + std::to_string(n),
                       i, bad);
    }
    ++offsets[e.src + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<VertexId> targets(edges.size());
  std::vector<EdgeId> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) targets[cursor[e.src]++] = e.dst;
  return from_out_adjacency(std::move(offsets), std::move(targets));
}

Graph Graph::from_in_adjacency(std::vector<EdgeId> offsets,
                               std::vector<VertexId> sources) {
  check_offsets(offsets, sources.size());
  check_ids(sources, offsets.size() - 1);
  Graph g;
  sort_groups(offsets, sources);
  g.in_offsets_ = std::move(offsets);
  g.in_sources_ = std::move(sources);
  transpose(g.in_offsets_, g.in_sources_, g.out_offsets_, g.out_targets_);
  return g;
}

Graph Graph::from_out_adjacency(std::vector<EdgeId> offsets,
                                std::vector<VertexId> targets) {
  check_offsets(offsets, targets.size());
  check_ids(targets, offsets.size() - 1);
  Graph g;
  sort_groups(offsets, targets);
  g.out_offsets_ = std::move(offsets);
  g.out_targets_ = std::move(targets);
  transpose(g.out_offsets_, g.out_targets_, g.in_offsets_, g.in_sources_);
  return g;
}

EdgeId Graph::in_degree(VertexId v) const {
  if (v >= num_vertices())
    throw OutOfRange("vertex " + std::to_string(v) + " out of range", v, v);
  return in_offsets_[v + 1] - in_offsets_[v];
}

EdgeId Graph::out_degree(VertexId v) const {
  if (v >= num_vertices())
    throw OutOfRange("vertex " + std::to_string(v) + " out of range", v, v);
  return out_offsets_[v + 1] - out_offsets_[v];
}

std::vector<Edge> Graph::to_edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : out_neighbors(u)) edges.push_back({u, v});
  return edges;
}

Permutation::Permutation(std::vector<VertexId> seq) : seq_(std::move(seq)) {
  std::vector<bool> seen(seq_.size(), false);
  for (VertexId x : seq_) {
    if (x >= seq_.size() || seen[x])
      throw InvalidArgument("permutation is not a bijection on [0, " +
                            std::to_string(seq_.size()) + ")");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return Permutation(std::move(seq));
}

Permutation Permutation::inverse() const {
  std::vector<VertexId> inv(seq_.size());
  for (std::size_t v = 0; v < seq_.size(); ++v)
    inv[seq_[v]] = static_cast<VertexId>(v);
  return Permutation(std::move(inv));
}

std::vector<EdgeId> in_degrees(const Graph& g) {
  const auto offsets = g.in_offsets();
  std::vector<EdgeId> deg(g.num_vertices());
  for (std::size_t v = 0; v < deg.size(); ++v)
    deg[v] = offsets[v + 1] - offsets[v];
  return deg;
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (EdgeId d : in_degrees(g)) {
    ++h.counts[d];
    h.max_degree = std::max(h.max_degree, d);
    if (d > 0) ++h.nonzero_vertex_count;
  }
  return h;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  const std::size_t n = g.num_vertices();
  if (p.size() != n)
    throw InvalidArgument("permutation size " + std::to_string(p.size()) +
                          " does not match vertex count " + std::to_string(n));
  const auto inv = p.inverse();
  std::vector<EdgeId> offsets(n + 1, 0);
  for (std::size_t nv = 0; nv < n; ++nv)
    offsets[nv + 1] = offsets[nv] + g.in_degree(inv[static_cast<VertexId>(nv)]);
  // Scattering sources in ascending new ID leaves every group sorted.
  std::vector<EdgeId> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<VertexId> sources(g.num_edges());
  for (std::size_t nu = 0; nu < n; ++nu)
    for (VertexId t : g.out_neighbors(inv[static_cast<VertexId>(nu)]))
      sources[cursor[p[t]]++] = static_cast<VertexId>(nu);
  return Graph::from_in_adjacency(std::move(offsets), std::move(sources));
}

Graph mirror_edges(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> offsets(n + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    offsets[v + 1] = offsets[v] + g.in_degree(v) + g.out_degree(v);
  std::vector<VertexId> sources(offsets.back());
  for (VertexId v = 0; v < n; ++v) {
    auto out = sources.begin() + offsets[v];
    auto in = g.in_neighbors(v);
    auto outn = g.out_neighbors(v);
    out = std::copy(in.begin(), in.end(), out);
    std::copy(outn.begin(), outn.end(), out);
  }
  return Graph::from_in_adjacency(std::move(offsets), std::move(sources));
}

}  // namespace vebo
