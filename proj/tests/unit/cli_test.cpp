#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "support/fixtures.hpp"
#include "vebo/io.hpp"

namespace vebo {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fixtures::TempDir dir_;
};

TEST_F(Cli, ReorderWorkedExampleIsBalanced) {
  io::write_adjacency(fixtures::six_vertex_example(), path("six.adj"));
  for (const char* mode : {"block", "strict"}) {
    const auto r = run_cli({"reorder", "--parts", "2", "--mode", mode, "--in",
                            path("six.adj"), "--out", path("six.out.adj"),
                            "--emit-permutation", path("six.perm"), "--report",
                            path("six.report")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "edge_imbalance=0\nvertex_imbalance=0\n");
    EXPECT_EQ(fixtures::read_file(path("six.perm")), "0\n3\n4\n1\n2\n5\n");
    const auto report = fixtures::read_file(path("six.report"));
    EXPECT_NE(report.find("edge_counts=7,7\n"), std::string::npos);
    EXPECT_NE(report.find("vertex_counts=3,3\n"), std::string::npos);
  }
}

TEST_F(Cli, GenerateIsByteDeterministic) {
  const std::vector<std::string> base = {"generate", "--n", "3000", "--N", "80",
                                         "--s", "1", "--seed", "9", "--out"};
  auto a = base, b = base;
  a.push_back(path("a.adj"));
  b.push_back(path("b.adj"));
  ASSERT_EQ(run_cli(a).status, 0);
  ASSERT_EQ(run_cli(b).status, 0);
  EXPECT_EQ(fixtures::read_file(path("a.adj")), fixtures::read_file(path("b.adj")));
  EXPECT_EQ(io::read_adjacency(path("a.adj")),
            generate_zipf_graph({3000, 80, 1.0, 9}));
}

TEST_F(Cli, UnknownSubcommandFails) {
  EXPECT_NE(run_cli({"frobnicate"}).status, 0);
  EXPECT_NE(run_cli({}).status, 0);
}

TEST_F(Cli, MissingRequiredOptionFails) {
  EXPECT_NE(run_cli({"reorder", "--parts", "2"}).status, 0);
  EXPECT_NE(run_cli({"run", "--algo", "pr", "--parts", "2", "--in", "x"}).status, 0);
}

TEST_F(Cli, BadInputReportsError) {
  std::ofstream(path("bad.adj")) << "AdjGraph\n";
  const auto r = run_cli({"partition", "--parts", "2", "--in", path("bad.adj"),
                          "--report", path("r.txt")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  const auto big = run_cli({"reorder", "--parts", "9", "--in", path("bad.adj"),
                            "--out", path("o.adj")});
  EXPECT_EQ(big.status, 1);
}

TEST_F(Cli, PartitionReport) {
  io::write_adjacency(fixtures::directed_cycle(8), path("c.adj"));
  const auto r = run_cli({"partition", "--parts", "4", "--in", path("c.adj"),
                          "--report", path("r.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "edge_imbalance=0\nvertex_imbalance=0\n");
  EXPECT_NE(fixtures::read_file(path("r.txt")).find("edge_counts=2,2,2,2\n"),
            std::string::npos);
}

TEST_F(Cli, EdgeListUndirectedInput) {
  std::ofstream(path("e.txt")) << "# pairs\n0 1\n2 3\n";
  const auto r = run_cli({"run", "--algo", "cc", "--parts", "2", "--in",
                          path("e.txt"), "--format", "edgelist", "--undirected",
                          "--vertices", "5", "--work-stats", path("w.txt"),
                          "--output", path("cc.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(fixtures::read_file(path("cc.txt")), "0\n0\n2\n2\n4\n");
}

TEST_F(Cli, RunResultsAreInCallerIds) {
  const Graph g = generate_zipf_graph({600, 30, 1.0, 4});
  io::write_adjacency(g, path("g.adj"));
  for (const char* algo : {"pr", "bfs", "cc", "spmv"}) {
    std::string outputs[2];
    int i = 0;
    for (const char* partitioner : {"destination", "vebo"}) {
      const std::string out = path(std::string(algo) + partitioner + ".txt");
      const auto r = run_cli({"run", "--algo", algo, "--parts", "4", "--in",
                              path("g.adj"), "--partitioner", partitioner,
                              "--iters", "3", "--source", "7", "--work-stats",
                              path("w.txt"), "--output", out});
      ASSERT_EQ(r.status, 0) << r.err;
      outputs[i++] = fixtures::read_file(out);
      const auto work = fixtures::read_file(path("w.txt"));
      EXPECT_EQ(work.rfind(std::string("partitioner=") + partitioner + "\n", 0), 0u);
    }
    if (std::string(algo) == "pr") continue;  // summation order may differ
    EXPECT_EQ(outputs[0], outputs[1]) << algo;
  }
}

TEST_F(Cli, StatsTableAndReport) {
  ASSERT_EQ(run_cli({"generate", "--n", "2000", "--N", "60", "--s", "1",
                     "--seed", "2", "--out", path("g.adj")})
                .status,
            0);
  const auto r = run_cli({"stats", "--in", path("g.adj"), "--parts", "8",
                          "--report", path("cmp.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  for (const char* name : {"original", "random", "vebo", "vebo-random"})
    EXPECT_NE(r.out.find(name), std::string::npos);
  EXPECT_NE(fixtures::read_file(path("cmp.txt")).find("vebo.edge_imbalance="),
            std::string::npos);
}

TEST_F(Cli, PipelineReproducesBalanceBounds) {
  // n = ceil(200 * H_{200,1}) meets every precondition at P = 8.
  ASSERT_EQ(run_cli({"generate", "--n", "1176", "--N", "200", "--s", "1",
                     "--seed", "5", "--out", path("g.adj")})
                .status,
            0);
  const auto r = run_cli({"reorder", "--parts", "8", "--in", path("g.adj"),
                          "--out", path("r.adj"), "--report", path("r.txt"),
                          "--s", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto report = fixtures::read_file(path("r.txt"));
  EXPECT_NE(report.find("precondition.vertex_balance_applies=true"), std::string::npos)
      << report;
  const auto stats = run_cli({"stats", "--in", path("r.adj"), "--parts", "8",
                              "--report", path("cmp.txt")});
  ASSERT_EQ(stats.status, 0) << stats.err;
  const auto cmp = fixtures::read_file(path("cmp.txt"));
  for (const char* key : {"vebo.edge_imbalance=", "vebo.vertex_imbalance="}) {
    const auto at = cmp.find(key);
    ASSERT_NE(at, std::string::npos);
    EXPECT_LE(std::stoul(cmp.substr(at + std::string(key).size())), 1u) << key;
  }
  for (const char* line : {"edge_imbalance=", "vertex_imbalance="}) {
    const auto at = r.out.find(line);
    ASSERT_NE(at, std::string::npos);
    EXPECT_LE(std::stoul(r.out.substr(at + std::string(line).size())), 1u);
  }
}

}  // namespace
}  // namespace vebo
