#include "dpf/workload.hpp"

#include <gtest/gtest.h>

#include "dpf/harness.hpp"

namespace dpf {
namespace {

TEST(ParseWorkload, Basic) {
  const Workload w = parse_workload("n 3\nupdate 0 1\nquery 0 5");
  EXPECT_EQ(w.n, 3u);
  ASSERT_EQ(w.ops.size(), 2u);
  EXPECT_EQ(w.ops[0].kind, OpKind::update);
  EXPECT_EQ(w.ops[1].kind, OpKind::query);
  EXPECT_EQ(w.ops[1].args[1], 5u);
  EXPECT_EQ(w.ops[1].line, 3u);
}

TEST(ParseWorkload, AllKeywords) {
  const Workload w = parse_workload(
      "n 4\nupdate 0 1\nquery 0 18446744073709551615\nsucc 0\ncyclen 0\noncycle 0\n"
      "inv 0 1\nlca 0 1\nprox 0\ndelete 0\nsubdivide 1\nroot 1\npc_add 2 3\n"
      "pc_del 2 3\npc_conn 2 3\n");
  ASSERT_EQ(w.ops.size(), kOpKindCount);
  for (std::size_t i = 0; i < kOpKindCount; ++i) {
    EXPECT_EQ(w.ops[i].kind, static_cast<OpKind>(i));
  }
  EXPECT_EQ(w.ops[1].args[1], UINT64_MAX);
}

TEST(ParseWorkload, SkipsBlankAndCommentLines) {
  const Workload w = parse_workload("# header comment\n\nn 2\n\n  succ 1  \n# done\n");
  EXPECT_EQ(w.n, 2u);
  ASSERT_EQ(w.ops.size(), 1u);
  EXPECT_EQ(w.ops[0].line, 5u);
}

TEST(ParseWorkload, Errors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_workload(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n 2\nbogus 1"), 2u);
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("update 0 1\n"), 1u);
  EXPECT_EQ(line_of("n 2\nupdate 0\n"), 2u);
  EXPECT_EQ(line_of("n 2\nsucc 0 1\n"), 2u);
  EXPECT_EQ(line_of("n 2\nsucc x\n"), 2u);
  EXPECT_EQ(line_of("n 2\nsucc -1\n"), 2u);
  EXPECT_EQ(line_of("n two\n"), 1u);
  EXPECT_EQ(line_of("n 2\nquery 0 99999999999999999999\n"), 2u);
}

// Serialization round-trips for generated workloads of every flavour.
TEST(ParseWorkload, RoundTripsGeneratedWorkloads) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (const OpMix& mix : {OpMix::defaults(), OpMix::path_defaults()}) {
      const Workload w = generate_workload(seed, 20, 100, mix);
      const Workload back = parse_workload(w.to_text());
      EXPECT_EQ(back.n, w.n);
      EXPECT_EQ(back.ops, w.ops);
      EXPECT_EQ(back.to_text(), w.to_text());
    }
  }
}

}  // namespace
}  // namespace dpf
