#include "vebo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "vebo/error.hpp"

namespace vebo::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw ParseError(ParseErrorKind::kBadToken, line,
                     "expected a nonnegative integer, got '" +
                         std::string(token) + "'");
  return value;
}

// Reads the one-value-per-line body of an adjacency file.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string_view& out) {
    if (!std::getline(in_, buffer_)) return false;
    ++line_;
    out = trim(buffer_);
    return true;
  }

  std::uint64_t value(const char* what) {
    std::string_view s;
    if (!next(s))
      throw ParseError(ParseErrorKind::kCountMismatch, line_ + 1,
                       std::string("file ends before ") + what);
    return parse_uint(s, line_);
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(ParseErrorKind::kIo, 0,
                     "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

// Appends integers separated by newlines without going through iostreams'
// per-item formatting.
class NumberWriter {
 public:
  explicit NumberWriter(std::ostream& out) : out_(out) { buf_.reserve(1 << 16); }
  ~NumberWriter() { flush(); }

  void line(std::uint64_t v) {
    char tmp[24];
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
    buf_.append(tmp, ptr);
    buf_.push_back('\n');
    if (buf_.size() >= (1 << 16) - 32) flush();
  }
  void text(std::string_view s) { buf_.append(s); }
  void flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
  }

 private:
  std::ostream& out_;
  std::string buf_;
};

template <class T>
std::string join(std::span<const T> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(values[i]);
  }
  return s;
}

std::string join(const std::vector<std::uint64_t>& v) {
  return join(std::span<const std::uint64_t>(v));
}

void write_summary(std::ostream& out, const std::string& key,
                   const CountSummary& s) {
  out << key << ".min=" << s.min << '\n'
      << key << ".max=" << s.max << '\n'
      << key << ".median=" << format_double(s.median) << '\n'
      << key << ".mean=" << format_double(s.mean) << '\n'
      << key << ".stddev=" << format_double(s.stddev) << '\n';
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char tmp[64];
  auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof tmp, x);
  return std::string(tmp, ptr);
}

Graph parse_adjacency(std::istream& in) {
  LineReader reader(in);
  std::string_view header;
  if (!reader.next(header) || header != "AdjacencyGraph")
    throw ParseError(ParseErrorKind::kMalformedHeader, 1,
                     "first line must be 'AdjacencyGraph'");
  const std::uint64_t n = reader.value("vertex count");
  const std::uint64_t m = reader.value("edge count");
  if (n > std::numeric_limits<VertexId>::max())
    throw ParseError(ParseErrorKind::kBadToken, 2, "vertex count too large");

  std::vector<EdgeId> offsets(n + 1);
  for (std::uint64_t v = 0; v < n; ++v) {
    offsets[v] = reader.value("offsets");
    if (v == 0 && offsets[0] != 0)
      throw ParseError(ParseErrorKind::kNonMonotonicOffsets, reader.line(),
                       "first offset must be 0");
    if (v > 0 && offsets[v] < offsets[v - 1])
      throw ParseError(ParseErrorKind::kNonMonotonicOffsets, reader.line(),
                       "offset decreases");
    if (offsets[v] > m)
      throw ParseError(ParseErrorKind::kCountMismatch, reader.line(),
                       "offset exceeds edge count " + std::to_string(m));
  }
  offsets[n] = m;

  std::vector<VertexId> targets(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    const std::uint64_t t = reader.value("targets");
    if (t >= n)
      throw ParseError(ParseErrorKind::kTargetOutOfRange, reader.line(),
                       "target " + std::to_string(t) + " >= n=" +
                           std::to_string(n));
    targets[e] = static_cast<VertexId>(t);
  }
  std::string_view rest;
  while (reader.next(rest)) {
    if (!rest.empty())
      throw ParseError(ParseErrorKind::kCountMismatch, reader.line(),
                       "unexpected data after " + std::to_string(m) +
                           " targets");
  }
  return Graph::from_out_adjacency(std::move(offsets), std::move(targets));
}

Graph read_adjacency(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_adjacency(in);
}

void write_adjacency(const Graph& g, std::ostream& out) {
  NumberWriter w(out);
  w.text("AdjacencyGraph\n");
  w.line(g.num_vertices());
  w.line(g.num_edges());
  const auto offsets = g.out_offsets();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) w.line(offsets[v]);
  for (VertexId t : g.out_targets()) w.line(t);
}

void write_adjacency(const Graph& g, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_adjacency(g, out);
  finish(out, path);
}

Graph parse_edge_list(std::istream& in, std::optional<std::size_t> n) {
  std::vector<Edge> edges;
  std::string buffer;
  std::size_t line = 0;
  std::uint64_t max_id = 0;
  while (std::getline(in, buffer)) {
    ++line;
    std::string_view s = buffer;
    if (const auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    std::uint64_t ids[2];
    std::size_t count = 0;
    for (std::size_t pos = 0;;) {
      pos = s.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      const auto end = std::min(s.find_first_of(" \t\r", pos), s.size());
      if (count == 2)
        throw ParseError(ParseErrorKind::kCountMismatch, line,
                         "expected 2 tokens per edge");
      ids[count++] = parse_uint(s.substr(pos, end - pos), line);
      pos = end;
    }
    if (count == 0) continue;
    if (count != 2)
      throw ParseError(ParseErrorKind::kCountMismatch, line,
                       "expected 2 tokens per edge");
    for (auto id : ids) {
      if (n ? id >= *n : id >= std::numeric_limits<VertexId>::max())
        throw ParseError(ParseErrorKind::kTargetOutOfRange, line,
                         "vertex " + std::to_string(id) + " out of range");
      max_id = std::max(max_id, id);
    }
    edges.push_back({static_cast<VertexId>(ids[0]),
                     static_cast<VertexId>(ids[1])});
  }
  const std::size_t vertices = n ? *n : (edges.empty() ? 0 : max_id + 1);
  return Graph::from_edge_list(edges, vertices);
}

Graph read_edge_list(const std::filesystem::path& path,
                     std::optional<std::size_t> n) {
  auto in = open_in(path);
  return parse_edge_list(in, n);
}

void write_permutation(const Permutation& p, std::ostream& out) {
  NumberWriter w(out);
  for (VertexId x : p.sequence()) w.line(x);
}

void write_permutation(const Permutation& p,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  write_permutation(p, out);
  finish(out, path);
}

Permutation parse_permutation(std::istream& in) {
  LineReader reader(in);
  std::vector<VertexId> seq;
  std::string_view s;
  while (reader.next(s)) {
    if (s.empty()) continue;
    const auto v = parse_uint(s, reader.line());
    if (v > std::numeric_limits<VertexId>::max())
      throw ParseError(ParseErrorKind::kTargetOutOfRange, reader.line(),
                       "id too large");
    seq.push_back(static_cast<VertexId>(v));
  }
  return Permutation(std::move(seq));
}

void write_report(const ImbalanceReport& r, std::ostream& out,
                  const std::string& prefix) {
  const auto ratio = [](const std::optional<double>& x) {
    return x ? format_double(*x) : std::string("inf");
  };
  out << prefix << "partitions=" << r.partitions << '\n'
      << prefix << "vertices=" << r.num_vertices << '\n'
      << prefix << "edges=" << r.num_edges << '\n'
      << prefix << "edge_imbalance=" << r.edge_imbalance << '\n'
      << prefix << "vertex_imbalance=" << r.vertex_imbalance << '\n'
      << prefix << "edge_counts=" << join(r.edge_counts) << '\n'
      << prefix << "vertex_counts=" << join(r.vertex_counts) << '\n';
  write_summary(out, prefix + "edge_counts", r.edges);
  write_summary(out, prefix + "vertex_counts", r.vertices);
  out << prefix << "edge_spread_ratio=" << ratio(r.edge_spread_ratio) << '\n'
      << prefix << "vertex_spread_ratio=" << ratio(r.vertex_spread_ratio)
      << '\n';
  if (r.preconditions) {
    const auto& p = *r.preconditions;
    const std::string k = prefix + "precondition.";
    out << k << "rank_count=" << p.rank_count << '\n'
        << k << "edge_threshold=" << p.edge_threshold << '\n'
        << k << "edge_condition=" << boolean(p.edge_condition) << '\n'
        << k << "partitions_below_ranks=" << boolean(p.partitions_below_ranks)
        << '\n'
        << k << "vertex_threshold=" << format_double(p.vertex_threshold)
        << '\n'
        << k << "vertex_condition=" << boolean(p.vertex_condition) << '\n'
        << k << "edge_balance_applies=" << boolean(p.edge_balance_applies())
        << '\n'
        << k << "vertex_balance_applies="
        << boolean(p.vertex_balance_applies()) << '\n';
  }
}

void write_comparison(std::span<const OrderingRow> rows, std::ostream& out) {
  out << "orderings=";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << (i ? "," : "") << rows[i].name;
  out << '\n';
  for (const auto& row : rows) {
    const std::string prefix = row.name + ".";
    write_report(row.report, out, prefix);
    out << prefix << "dense.active_edges_spread=" << row.dense_work.active_edges
        << '\n'
        << prefix << "dense.unique_destinations_spread="
        << row.dense_work.unique_destinations << '\n'
        << prefix << "dense.unique_sources_spread="
        << row.dense_work.unique_sources << '\n';
  }
}

void write_work_stats(const std::string& algorithm,
                      std::span<const WorkStats> iterations,
                      std::ostream& out) {
  out << "algorithm=" << algorithm << '\n'
      << "iterations=" << iterations.size() << '\n';
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    const auto& s = iterations[i];
    const std::string k = "iteration." + std::to_string(i) + ".";
    out << k << "partitions=" << s.partitions.size() << '\n'
        << k << "frontier_density=" << format_double(s.frontier_density)
        << '\n'
        << k << "mode=" << (s.dense ? "dense" : "sparse") << '\n';
    const std::pair<const char*, std::vector<std::uint64_t>> fields[] = {
        {"active_edges", s.active_edges()},
        {"unique_destinations", s.unique_destinations()},
        {"unique_sources", s.unique_sources()},
    };
    for (const auto& [name, values] : fields) {
      out << k << name << '=' << join(values) << '\n';
      write_summary(out, k + name, summarize_counts(values));
    }
    if (!s.partition_seconds.empty()) {
      out << k << "seconds=";
      for (std::size_t p = 0; p < s.partition_seconds.size(); ++p)
        out << (p ? "," : "") << format_double(s.partition_seconds[p]);
      out << '\n';
    }
  }
}

}  // namespace vebo::io
