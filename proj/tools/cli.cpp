#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vebo/engine.hpp"
#include "vebo/error.hpp"
#include "vebo/generate.hpp"
#include "vebo/io.hpp"
#include "vebo/metrics.hpp"
#include "vebo/order.hpp"
#include "vebo/partition.hpp"

namespace vebo::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string format = "adj";
  bool undirected = false;
  std::optional<std::size_t> vertices;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", path, "Input graph")->required();
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"adj", "edgelist"}));
    cmd->add_flag("--undirected", undirected,
                  "Treat every arc as undirected (adds its reverse)");
    cmd->add_option("--vertices", vertices,
                    "Vertex count for edge lists (default: 1 + largest id)");
  }

  Graph load() const {
    Graph g = format == "adj" ? io::read_adjacency(path)
                              : io::read_edge_list(path, vertices);
    return undirected ? mirror_edges(g) : g;
  }
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

void write_values(const std::string& path, const std::vector<std::string>& values) {
  auto out = open_output(path);
  for (const auto& v : values) out << v << '\n';
}

void print_imbalance(std::ostream& out, const ImbalanceReport& r) {
  out << "edge_imbalance=" << r.edge_imbalance << '\n'
      << "vertex_imbalance=" << r.vertex_imbalance << '\n';
}

std::string fixed3(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << x;
  return s.str();
}

void print_table(std::ostream& out, const std::vector<OrderingRow>& rows) {
  out << std::left << std::setw(13) << "ordering" << std::right
      << std::setw(10) << "Delta" << std::setw(10) << "delta"
      << std::setw(14) << "edges_sd" << std::setw(14) << "verts_sd"
      << std::setw(14) << "act_edges" << std::setw(14) << "uniq_dsts"
      << std::setw(14) << "uniq_srcs" << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(13) << row.name << std::right
        << std::setw(10) << row.report.edge_imbalance << std::setw(10)
        << row.report.vertex_imbalance << std::setw(14)
        << fixed3(row.report.edges.stddev) << std::setw(14)
        << fixed3(row.report.vertices.stddev) << std::setw(14)
        << row.dense_work.active_edges << std::setw(14)
        << row.dense_work.unique_destinations << std::setw(14)
        << row.dense_work.unique_sources << '\n';
  }
  out << "(act_edges/uniq_dsts/uniq_srcs: max-min over partitions, dense "
         "frontier)\n";
}

// Kernel run on a graph whose results are reported in the caller's IDs.
struct RunSetup {
  Graph graph;
  PartitionAssignment assignment;
  std::optional<Permutation> relabel;  // caller ID -> graph ID
};

RunSetup prepare(Graph g, std::uint32_t parts, const std::string& partitioner) {
  if (partitioner == "destination") {
    auto a = partition_by_destination(g, parts);
    return {std::move(g), std::move(a), std::nullopt};
  }
  auto result = vebo_reorder(g, parts);
  Graph reordered = apply_permutation(g, result.permutation);
  return {std::move(reordered), std::move(result.assignment),
          std::move(result.permutation)};
}

int run_generate(const ZipfParams& params, const std::string& out_path,
                 std::ostream& out) {
  const Graph g = generate_zipf_graph(params);
  io::write_adjacency(g, out_path);
  out << "vertices=" << g.num_vertices() << '\n'
      << "edges=" << g.num_edges() << '\n';
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex- and edge-balanced graph ordering toolkit", "vebo"};
  app.require_subcommand(1);

  // generate
  ZipfParams zipf;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a synthetic Zipf graph");
  gen->add_option("--n", zipf.n, "Vertex count")->required();
  gen->add_option("--N", zipf.rank_count, "Ranks (max in-degree + 1)")
      ->required();
  gen->add_option("--s", zipf.s, "Skew exponent")->required();
  gen->add_option("--seed", zipf.seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output adjacency file")->required();

  // reorder
  InputOptions reorder_in;
  std::uint32_t reorder_parts = 0;
  std::string mode = "block";
  std::string reorder_out, perm_path, reorder_report;
  std::optional<double> reorder_s;
  auto* reorder = app.add_subcommand("reorder", "Apply the VEBO ordering");
  reorder_in.attach(reorder);
  reorder->add_option("--parts", reorder_parts, "Partition count")->required();
  reorder->add_option("--mode", mode, "strict or block")
      ->check(CLI::IsMember({"strict", "block"}));
  reorder->add_option("--out", reorder_out, "Reordered adjacency file")
      ->required();
  reorder->add_option("--emit-permutation", perm_path,
                      "Write old->new IDs, one per line");
  reorder->add_option("--report", reorder_report, "Write imbalance report");
  reorder->add_option("--s", reorder_s,
                      "Zipf exponent for the precondition section");

  // partition
  InputOptions part_in;
  std::uint32_t part_parts = 0;
  std::string part_report;
  std::optional<double> part_s;
  auto* part = app.add_subcommand(
      "partition", "Edge-balanced contiguous partitioning by destination");
  part_in.attach(part);
  part->add_option("--parts", part_parts, "Partition count")->required();
  part->add_option("--report", part_report, "Write imbalance report")
      ->required();
  part->add_option("--s", part_s, "Zipf exponent for the precondition section");

  // stats
  InputOptions stats_in;
  std::uint32_t stats_parts = 0;
  CompareOptions compare;
  std::string stats_mode = "block";
  std::string stats_report;
  auto* stats = app.add_subcommand(
      "stats", "Compare original, random and VEBO orderings");
  stats_in.attach(stats);
  stats->add_option("--parts", stats_parts, "Partition count")->required();
  stats->add_option("--seed", compare.seed, "Seed of the random relabeling");
  stats->add_option("--s", compare.s_hint,
                    "Zipf exponent for the precondition section");
  stats->add_option("--mode", stats_mode, "strict or block")
      ->check(CLI::IsMember({"strict", "block"}));
  stats->add_option("--report", stats_report, "Write comparison document");

  // run
  InputOptions run_in;
  std::string algo;
  std::uint32_t run_parts = 0;
  std::uint32_t iters = 10;
  double damping = 0.85;
  VertexId source = 0;
  std::string partitioner = "destination";
  std::string work_path, output_path;
  bool parallel = false, timing = false;
  auto* runcmd = app.add_subcommand("run", "Run a kernel and record WorkStats");
  run_in.attach(runcmd);
  runcmd->add_option("--algo", algo, "pr, bfs, cc or spmv")
      ->required()
      ->check(CLI::IsMember({"pr", "bfs", "cc", "spmv"}));
  runcmd->add_option("--parts", run_parts, "Partition count")->required();
  runcmd->add_option("--iters", iters, "PageRank iterations");
  runcmd->add_option("--damping", damping, "PageRank damping");
  runcmd->add_option("--source", source, "BFS source vertex");
  runcmd->add_option("--partitioner", partitioner, "destination or vebo")
      ->check(CLI::IsMember({"destination", "vebo"}));
  runcmd->add_option("--work-stats", work_path, "Write per-iteration WorkStats")
      ->required();
  runcmd->add_option("--output", output_path, "Write the result vector");
  runcmd->add_flag("--parallel", parallel, "Process partitions on threads");
  runcmd->add_flag("--timing", timing,
                   "Add wall-clock seconds per partition to WorkStats");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) return run_generate(zipf, gen_out, out);

    if (*reorder) {
      const Graph g = reorder_in.load();
      VeboOptions options;
      options.mode = mode == "strict" ? VeboMode::kStrict
                                      : VeboMode::kBlockLocality;
      const auto result = vebo_reorder(g, reorder_parts, options);
      const Graph reordered = apply_permutation(g, result.permutation);
      io::write_adjacency(reordered, reorder_out);
      if (!perm_path.empty()) io::write_permutation(result.permutation, perm_path);
      const auto r = report(reordered, result.assignment, reorder_s);
      if (!reorder_report.empty()) {
        auto f = open_output(reorder_report);
        io::write_report(r, f);
      }
      print_imbalance(out, r);
      return 0;
    }

    if (*part) {
      const Graph g = part_in.load();
      const auto a = partition_by_destination(g, part_parts);
      const auto r = report(g, a, part_s);
      auto f = open_output(part_report);
      io::write_report(r, f);
      print_imbalance(out, r);
      return 0;
    }

    if (*stats) {
      const Graph g = stats_in.load();
      compare.mode = stats_mode == "strict" ? VeboMode::kStrict
                                            : VeboMode::kBlockLocality;
      const auto rows = compare_orderings(g, stats_parts, compare);
      print_table(out, rows);
      if (!stats_report.empty()) {
        auto f = open_output(stats_report);
        io::write_comparison(rows, f);
      }
      return 0;
    }

    if (*runcmd) {
      const Graph input = run_in.load();
      const RunSetup setup = prepare(input, run_parts, partitioner);
      EdgeMapOptions options;
      options.execution = parallel ? Execution::kParallel : Execution::kSequential;
      options.record_timing = timing;
      const auto n = input.num_vertices();
      // Graph ID of caller vertex v.
      auto to_graph = [&](VertexId v) {
        return setup.relabel ? (*setup.relabel)[v] : v;
      };

      std::vector<WorkStats> work;
      std::vector<std::string> values(n);
      if (algo == "pr") {
        auto r = pagerank(setup.graph, setup.assignment, iters, damping, options);
        for (VertexId v = 0; v < n; ++v)
          values[v] = io::format_double(r.scores[to_graph(v)]);
        work = std::move(r.iterations);
      } else if (algo == "bfs") {
        if (source >= n)
          throw InvalidArgument("bfs source " + std::to_string(source) +
                                " out of range");
        auto r = bfs(setup.graph, setup.assignment, to_graph(source), options);
        for (VertexId v = 0; v < n; ++v) {
          const auto level = r.levels[to_graph(v)];
          values[v] =
              level == kUnreachable ? "unreachable" : std::to_string(level);
        }
        work = std::move(r.iterations);
      } else if (algo == "cc") {
        auto r = connected_components(setup.graph, setup.assignment, options);
        // Name each component by its smallest caller ID.
        std::map<VertexId, VertexId> smallest;
        for (VertexId v = 0; v < n; ++v)
          smallest.try_emplace(r.labels[to_graph(v)], v);
        for (VertexId v = 0; v < n; ++v)
          values[v] = std::to_string(smallest.at(r.labels[to_graph(v)]));
        work = std::move(r.iterations);
      } else {
        std::vector<double> x(n, 1.0);
        auto r = spmv(setup.graph, setup.assignment, x, options);
        for (VertexId v = 0; v < n; ++v)
          values[v] = io::format_double(r.y[to_graph(v)]);
        work.push_back(std::move(r.stats));
      }
      {
        auto f = open_output(work_path);
        f << "partitioner=" << partitioner << '\n';
        io::write_work_stats(algo, work, f);
      }
      if (!output_path.empty()) write_values(output_path, values);
      out << "iterations=" << work.size() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace vebo::cli
