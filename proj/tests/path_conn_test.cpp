#include "dpf/path_conn.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "dpf/error.hpp"

namespace dpf {
namespace {

NodeId id(std::uint32_t v) { return NodeId(v); }

TEST(PathConn, Fresh) {
  PathConn two(2);
  EXPECT_FALSE(two.connected(id(0), id(1)));
  PathConn one(1);
  EXPECT_TRUE(one.connected(id(0), id(0)));
  PathConn none(0);
  EXPECT_EQ(none.engine().universe_size(), 0u);
}

TEST(PathConn, AddAndRemove) {
  PathConn pc(3);
  pc.add_edge(id(0), id(1));
  EXPECT_TRUE(pc.connected(id(0), id(1)));
  pc.add_edge(id(1), id(2));
  EXPECT_TRUE(pc.connected(id(0), id(2)));
  pc.remove_edge(id(0), id(1));
  EXPECT_FALSE(pc.connected(id(0), id(1)));
  EXPECT_TRUE(pc.connected(id(1), id(2)));
}

TEST(PathConn, Preconditions) {
  PathConn pc(3);
  pc.add_edge(id(0), id(1));
  try {
    pc.add_edge(id(0), id(2));
    FAIL() << "expected not_self_loop";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_self_loop);
  }
  try {
    pc.remove_edge(id(1), id(2));
    FAIL() << "expected missing_edge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::missing_edge);
  }
  EXPECT_THROW(pc.remove_edge(id(2), id(2)), Error);
  EXPECT_THROW(pc.connected(id(0), id(3)), Error);
}

TEST(PathConn, TerminalLaw) {
  // Paths 0 -> 1 -> 2 and 3 -> 4.
  PathConn pc(5);
  pc.add_edge(id(0), id(1));
  pc.add_edge(id(1), id(2));
  pc.add_edge(id(3), id(4));
  Pseudoforest& pf = pc.engine();
  for (std::uint32_t v : {0u, 1u, 2u}) EXPECT_EQ(pf.query(id(v), 5), id(2));
  for (std::uint32_t v : {3u, 4u}) EXPECT_EQ(pf.query(id(v), 5), id(4));
  EXPECT_FALSE(pc.connected(id(0), id(4)));
}

TEST(PathConn, AtMostTwoEngineOpsPerCall) {
  PathConn pc(4);
  auto cost = [&](auto&& op) {
    const auto before = pc.engine().operations();
    op();
    return pc.engine().operations() - before;
  };
  EXPECT_LE(cost([&] { pc.add_edge(id(0), id(1)); }), 2u);
  EXPECT_LE(cost([&] { pc.connected(id(0), id(1)); }), 2u);
  EXPECT_LE(cost([&] { pc.remove_edge(id(0), id(1)); }), 2u);
  EXPECT_LE(cost([&] { EXPECT_THROW(pc.remove_edge(id(0), id(1)), Error); }), 2u);
}

}  // namespace
}  // namespace dpf
