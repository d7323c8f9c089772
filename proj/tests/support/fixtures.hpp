#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "vebo/graph.hpp"

namespace vebo::fixtures {

// Center 0 receives one edge from each leaf 1..leaves.
Graph star_into_center(std::uint32_t leaves);
Graph directed_cycle(std::uint32_t n);
Graph directed_path(std::uint32_t n);

// Six vertices with in-degrees (5, 4, 2, 1, 1, 1), 14 edges.
Graph six_vertex_example();

// Graph with the given in-degrees; sources drawn from rng.
Graph with_in_degrees(const std::vector<EdgeId>& degrees, std::mt19937_64& rng);

// Uniformly random multigraph.
Graph random_graph(std::uint32_t n, std::uint64_t m, std::mt19937_64& rng);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p);

}  // namespace vebo::fixtures
