#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vebo/engine.hpp"
#include "vebo/graph.hpp"
#include "vebo/metrics.hpp"

namespace vebo::io {

// Adjacency text format (out-edge orientation), one value per line:
//   AdjacencyGraph
//   <n>
//   <m>
//   <n offsets>
//   <m targets>
// Parse failures throw ParseError carrying a kind and the 1-based line.
Graph parse_adjacency(std::istream& in);
Graph read_adjacency(const std::filesystem::path& path);

// Byte-deterministic: '\n' line endings, no trailing whitespace.
void write_adjacency(const Graph& g, std::ostream& out);
void write_adjacency(const Graph& g, const std::filesystem::path& path);

// "src dst" per line, '#' starts a comment. n defaults to 1 + largest ID.
Graph parse_edge_list(std::istream& in,
                      std::optional<std::size_t> n = std::nullopt);
Graph read_edge_list(const std::filesystem::path& path,
                     std::optional<std::size_t> n = std::nullopt);

// One new ID per line, line i holding the new ID of old vertex i.
void write_permutation(const Permutation& p, std::ostream& out);
void write_permutation(const Permutation& p, const std::filesystem::path& path);
Permutation parse_permutation(std::istream& in);

// Line-oriented key=value documents; keys are listed in docs/formats.md.
void write_report(const ImbalanceReport& r, std::ostream& out,
                  const std::string& prefix = "");
void write_comparison(std::span<const OrderingRow> rows, std::ostream& out);
void write_work_stats(const std::string& algorithm,
                      std::span<const WorkStats> iterations, std::ostream& out);

// Shortest round-trip decimal form; "inf"/"nan" for non-finite values.
std::string format_double(double x);

}  // namespace vebo::io
