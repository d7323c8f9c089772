#include "support/fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace vebo::fixtures {

Graph star_into_center(std::uint32_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({v, 0});
  return Graph::from_edge_list(edges, leaves + 1);
}

Graph directed_cycle(std::uint32_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edge_list(edges, n);
}

Graph directed_path(std::uint32_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edge_list(edges, n);
}

Graph six_vertex_example() {
  const std::vector<Edge> edges = {
      {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0},  // vertex 0: 5
      {0, 1}, {2, 1}, {3, 1}, {4, 1},          // vertex 1: 4
      {0, 2}, {1, 2},                          // vertex 2: 2
      {0, 3}, {0, 4}, {0, 5},                  // vertices 3-5: 1 each
  };
  return Graph::from_edge_list(edges, 6);
}

Graph with_in_degrees(const std::vector<EdgeId>& degrees,
                      std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<VertexId> pick(
      0, static_cast<VertexId>(degrees.size() - 1));
  for (VertexId v = 0; v < degrees.size(); ++v)
    for (EdgeId k = 0; k < degrees[v]; ++k) edges.push_back({pick(rng), v});
  return Graph::from_edge_list(edges, degrees.size());
}

Graph random_graph(std::uint32_t n, std::uint64_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<Edge> edges(m);
  for (auto& e : edges) e = {pick(rng), pick(rng)};
  return Graph::from_edge_list(edges, n);
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("vebo-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace vebo::fixtures
