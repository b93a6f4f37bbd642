#include "dpf/harness.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <sstream>

#include "dpf/rng.hpp"

namespace dpf {
namespace {

std::vector<std::string> run_engine(std::string_view text) {
  const Workload w = parse_workload(text);
  auto backend = make_engine_backend(w.n);
  return run_single(w, *backend);
}

TEST(Run, Examples) {
  EXPECT_EQ(run_engine("n 3\nupdate 0 1\nupdate 1 2\nupdate 2 0\nquery 0 5"),
            std::vector<std::string>{"2"});
  EXPECT_EQ(run_engine("n 1\ncyclen 0"), std::vector<std::string>{"1"});
}

TEST(Run, OutputFormats) {
  const auto lines = run_engine(
      "n 4\nupdate 0 1\nupdate 1 0\noncycle 0\noncycle 2\ninv 2 0\ninv 0 1\n"
      "lca 0 2\nsubdivide 3\nprox 3\nroot 2\n");
  EXPECT_EQ(lines, (std::vector<std::string>{"true", "true", "none", "1", "none", "4", "0", "2"}));
}

TEST(Run, ErrorsBecomeLines) {
  const auto lines = run_engine("n 2\ndelete 0\nsucc 7\nquery 4294967296 1\npc_add 0 1\npc_add 0 1\npc_del 1 0\n");
  EXPECT_EQ(lines, (std::vector<std::string>{
                       "error node 0 has incoming edges",
                       "error invalid node 7",
                       "error invalid node 4294967296",
                       "error node 0 already has an outgoing edge",
                       "error no edge 1 -> 0",
                   }));
}

TEST(Run, OracleModeMatchesOnUnambiguousOutputs) {
  const Workload w = parse_workload(
      "n 3\nupdate 0 1\nupdate 1 2\nupdate 2 0\nquery 0 5\ncyclen 1\ninv 0 2\ndelete 0\n");
  auto oracle = make_oracle_backend(w.n);
  EXPECT_EQ(run_single(w, *oracle),
            (std::vector<std::string>{"2", "3", "2", "error node 0 has incoming edges"}));
}

TEST(RunBoth, AcceptsRepresentationDependentAnswers) {
  // Root and on-cycle meets may legitimately differ between the two sides.
  const Workload w = parse_workload(
      "n 6\nupdate 0 1\nupdate 1 2\nupdate 2 0\nupdate 4 1\nupdate 5 2\n"
      "root 4\nroot 0\nlca 4 5\nlca 5 4\nlca 4 4\n");
  const RunResult r = run_both(w);
  EXPECT_FALSE(r.divergence.has_value());
  EXPECT_EQ(r.lines.size(), 5u);
}

TEST(Fuzz, CleanRuns) {
  EXPECT_TRUE(fuzz(1, 16, 200, OpMix::defaults()).ok());
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 1 + seed % 64;
    const auto report = fuzz(seed, n, 300, OpMix::defaults());
    ASSERT_TRUE(report.ok()) << report.to_string();
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto report = fuzz(seed, 40, 400, OpMix::path_defaults());
    ASSERT_TRUE(report.ok()) << report.to_string();
  }
  EXPECT_EQ(fuzz(3, 16, 200, OpMix::defaults()).to_string(), "OK");
}

TEST(Fuzz, Deterministic) {
  const Workload a = generate_workload(42, 30, 500, OpMix::defaults());
  const Workload b = generate_workload(42, 30, 500, OpMix::defaults());
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_NE(a.to_text(), generate_workload(43, 30, 500, OpMix::defaults()).to_text());
}

TEST(Fuzz, MixWeightsAreRespected) {
  OpMix mix = OpMix::defaults();
  mix.weights[static_cast<std::size_t>(OpKind::remove)] = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const Command& c : generate_workload(seed, 10, 300, mix).ops) {
      ASSERT_NE(c.kind, OpKind::remove);
    }
  }
  const OpMix only = OpMix::parse("query=1");
  for (const Command& c : generate_workload(1, 10, 100, only).ops) EXPECT_EQ(c.kind, OpKind::query);
}

TEST(Fuzz, HugeJumpsAreGenerated) {
  bool huge = false;
  for (const Command& c : generate_workload(7, 64, 1000, OpMix::defaults()).ops) {
    if (c.kind == OpKind::query && c.args[1] > (std::uint64_t{1} << 40)) huge = true;
  }
  EXPECT_TRUE(huge);
}

TEST(OpMix, Parse) {
  const OpMix mix = OpMix::parse("update=4,query=2,delete=1");
  EXPECT_EQ(mix.weight(OpKind::update), 4u);
  EXPECT_EQ(mix.weight(OpKind::remove), 1u);
  EXPECT_EQ(mix.weight(OpKind::lca), 0u);
  EXPECT_FALSE(mix.path_mode());
  EXPECT_TRUE(OpMix::parse("pc_add=1,pc_conn=1").path_mode());
  EXPECT_THROW(OpMix::parse("update=1,pc_add=1"), std::invalid_argument);
  EXPECT_THROW(OpMix::parse("teleport=1"), std::invalid_argument);
  EXPECT_THROW(OpMix::parse("update"), std::invalid_argument);
  EXPECT_THROW(OpMix::parse("update=x"), std::invalid_argument);
  EXPECT_THROW(OpMix::parse("update=0"), std::invalid_argument);
}

// Engine wrapper that reports cycle lengths of 3 or more one short.
class OffByOneBackend final : public Backend {
 public:
  explicit OffByOneBackend(std::uint64_t n) : inner_(make_engine_backend(n)) {}
  std::optional<std::string> execute(const Command& c) override {
    auto out = inner_->execute(c);
    if (c.kind == OpKind::cyclen && out && std::stoull(*out) >= 3) {
      out = std::to_string(std::stoull(*out) - 1);
    }
    return out;
  }

 private:
  std::unique_ptr<Backend> inner_;
};

std::unique_ptr<Backend> make_buggy(std::uint64_t n) { return std::make_unique<OffByOneBackend>(n); }

TEST(Fuzz, FindsAndMinimizesDivergence) {
  const OpMix mix = OpMix::parse("update=5,cyclen=2");
  std::optional<FuzzReport> failing;
  for (std::uint64_t seed = 1; seed <= 50 && !failing; ++seed) {
    auto report = fuzz(seed, 8, 200, mix, make_buggy);
    if (!report.ok()) failing = std::move(report);
  }
  ASSERT_TRUE(failing.has_value());
  ASSERT_TRUE(failing->minimized.has_value());
  const Workload& small = *failing->minimized;
  EXPECT_LE(small.ops.size(), failing->divergence->op_index + 1);
  // Needs at least three updates to form a 3-cycle plus the cyclen.
  EXPECT_GE(small.ops.size(), 4u);
  EXPECT_LE(small.ops.size(), 8u);
  EXPECT_EQ(small.ops.back().kind, OpKind::cyclen);

  // Replay closure: the saved text reproduces the divergence.
  const Workload replay = parse_workload(small.to_text());
  const RunResult again = run_both(replay, make_buggy, make_oracle_backend);
  ASSERT_TRUE(again.divergence.has_value());
  EXPECT_EQ(again.divergence->op_index, replay.ops.size() - 1);
  EXPECT_NE(failing->to_string().find("minimized workload"), std::string::npos);
}

TEST(Bench, CsvShapeAndDeterministicRotations) {
  BenchOptions options;
  options.sizes = {64, 256};
  options.ops = 500;
  options.seed = 3;
  const auto a = bench(options);
  const auto b = bench(options);
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(a[i].op_kind, b[i].op_kind);
    EXPECT_EQ(a[i].total_rotations, b[i].total_rotations);
    EXPECT_GT(a[i].ops_executed, 0u);
  }
  EXPECT_EQ(a[0].op_kind, "update");
  EXPECT_EQ(a[1].op_kind, "query");
  EXPECT_EQ(a[0].ops_executed + a[1].ops_executed, 500u);

  const std::string csv = bench_csv(a);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,op_kind,ops_executed,total_ns,total_rotations");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 4u);

  options.ops = 0;
  options.ops_per_node = 10;
  const auto scaled = bench(options);
  EXPECT_EQ(scaled[2].ops_executed + scaled[3].ops_executed, 2560u);

  EXPECT_THROW(bench(BenchOptions{}), std::invalid_argument);
}

}  // namespace
}  // namespace dpf
