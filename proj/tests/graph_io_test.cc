// Copyright 2026 The active-scan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "active_scan/errors.h"
#include "active_scan/graph_io.h"
#include "oracles.h"
#include "test_util.h"

namespace active_scan {
namespace {

LoadedGraph Load(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

TEST(GraphIoTest, LoadsThreeCycle) {
  const LoadedGraph loaded = Load("0 1\n1 2\n2 0");
  EXPECT_EQ(loaded.graph, testing::Cycle3());
}

TEST(GraphIoTest, DropsSelfLoopWithCount) {
  const LoadedGraph loaded = Load("5 5\n5 6\n");
  EXPECT_EQ(loaded.graph.num_vertices(), 2u);
  EXPECT_EQ(loaded.graph.num_edges(), 1u);
  EXPECT_EQ(loaded.stats.self_loops_dropped, 1u);
  EXPECT_EQ(loaded.original_ids, (std::vector<std::uint64_t>{5, 6}));
}

TEST(GraphIoTest, DropsDuplicateWithCount) {
  const LoadedGraph loaded = Load("0 1\n0 1\n1 0\n");
  EXPECT_EQ(loaded.graph.num_vertices(), 2u);
  EXPECT_EQ(loaded.graph.num_edges(), 2u);
  EXPECT_EQ(loaded.stats.duplicates_dropped, 1u);
}

TEST(GraphIoTest, CommentsBlankLinesAndWhitespace) {
  const LoadedGraph loaded = Load("# header\n\n  10\t20  \n# 1 2\n20 30\r\n");
  EXPECT_EQ(loaded.graph.num_vertices(), 3u);
  EXPECT_EQ(loaded.graph.num_edges(), 2u);
  EXPECT_EQ(loaded.original_ids, (std::vector<std::uint64_t>{10, 20, 30}));
}

TEST(GraphIoTest, MalformedLineReportsLineNumber) {
  try {
    Load("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Load("0 1\n7\n"), ParseError);
  EXPECT_THROW(Load("0 1 2\n"), ParseError);
  EXPECT_THROW(Load("-1 2\n"), ParseError);
}

TEST(GraphIoTest, EmptyInputIsAnError) {
  EXPECT_THROW(Load(""), ParseError);
  EXPECT_THROW(Load("# only a comment\n"), ParseError);
}

TEST(GraphIoTest, CanonicalRoundTripKeepsIsolatedVertices) {
  std::mt19937_64 rng(21);
  // Sparse enough that some vertices are isolated.
  const Graph g = testing::ErdosRenyi(200, 0.002, rng);
  std::ostringstream out;
  write_edge_list(out, g);
  const LoadedGraph again = Load(out.str());
  EXPECT_EQ(again.graph, g);
  std::ostringstream out2;
  write_edge_list(out2, again.graph);
  EXPECT_EQ(out.str(), out2.str());
}

TEST(GraphIoTest, BinaryRoundTripAndLayout) {
  const Graph g = testing::Cycle3();
  std::ostringstream out;
  write_binary(out, g);
  const std::string bytes = out.str();
  // u64 n, u64 m, u64 offsets[n + 1], u32 targets[m].
  ASSERT_EQ(bytes.size(), 8u + 8u + 8u * 4 + 4u * 3);
  EXPECT_EQ(static_cast<unsigned char>(bytes[0]), 3);
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 3);
  // offsets[1] == 1, little-endian.
  EXPECT_EQ(static_cast<unsigned char>(bytes[24]), 1);
  // targets[0] == 1 (0 -> 1), targets[2] == 0 (2 -> 0).
  EXPECT_EQ(static_cast<unsigned char>(bytes[48]), 1);
  EXPECT_EQ(static_cast<unsigned char>(bytes[56]), 0);
  std::istringstream in(bytes);
  EXPECT_EQ(read_binary(in), g);
}

TEST(GraphIoTest, TruncatedBinaryIsRejected) {
  std::ostringstream out;
  write_binary(out, testing::Cycle3());
  const std::string bytes = out.str();
  std::istringstream in(bytes.substr(0, bytes.size() - 1));
  EXPECT_THROW(read_binary(in), ParseError);
}

TEST(GraphIoTest, LoadGraphDispatchesOnExtension) {
  testing::TempDir dir;
  std::mt19937_64 rng(4);
  const Graph g = testing::ErdosRenyi(50, 0.05, rng);
  {
    std::ofstream bin(dir / "g.bin", std::ios::binary);
    write_binary(bin, g);
    std::ofstream text(dir / "g.txt");
    write_edge_list(text, g);
  }
  EXPECT_EQ(load_graph(dir / "g.bin").graph, g);
  EXPECT_EQ(load_graph(dir / "g.txt").graph, g);
  EXPECT_THROW(load_graph(dir / "missing.txt"), std::runtime_error);
}

TEST(GraphIoTest, IdMapCsv) {
  std::ostringstream out;
  write_id_map(out, {7, 42});
  EXPECT_EQ(out.str(), "dense_id,original_id\n0,7\n1,42\n");
}

}  // namespace
}  // namespace active_scan
