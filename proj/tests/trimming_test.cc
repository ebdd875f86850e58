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

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "active_scan/locality.h"
#include "active_scan/sbm.h"
#include "active_scan/trimming.h"
#include "oracles.h"
#include "test_util.h"

namespace active_scan {
namespace {

using ::active_scan::testing::AddClique;

std::vector<EdgeCount> Values(const TopQResult& r, std::size_t q) {
  std::vector<EdgeCount> values;
  for (std::size_t i = 0; i < q; ++i) values.push_back(r.entries.at(i).value);
  return values;
}

std::vector<VertexId> AllVertices(const Graph& g) {
  std::vector<VertexId> all(g.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  return all;
}

// Records every callback; safe for concurrent use.
class RecordingObserver : public TrimObserver {
 public:
  void OnSkip(const SkipEvent& e) override {
    std::lock_guard lock(mu_);
    skips.push_back(e);
  }
  void OnMaxRaised(EdgeCount previous, EdgeCount current) override {
    std::lock_guard lock(mu_);
    raises.emplace_back(previous, current);
  }

  std::vector<SkipEvent> skips;
  std::vector<std::pair<EdgeCount, EdgeCount>> raises;

 private:
  std::mutex mu_;
};

TEST(TopLstatTest, ThreeCycleFindsMaximum) {
  const Graph g = testing::Cycle3();
  const auto found = top_lstat(g, AllVertices(g), 0);
  ASSERT_FALSE(found.empty());
  EdgeCount best = 0;
  for (const auto& s : found) best = std::max(best, s.value);
  EXPECT_EQ(best, 3u);
}

TEST(TopLstatTest, CliqueAmongPathsIsFoundCheaply) {
  std::vector<Edge> edges;
  AddClique(edges, 0, 5);
  VertexId next = 5;
  for (int i = 0; i < 100; ++i, next += 2) edges.emplace_back(next, next + 1);
  const Graph g = Graph::FromEdges(next, std::move(edges));
  const auto oracle = testing::PsiAllOracle(g, 1);
  const EdgeCount truth = *std::max_element(oracle.begin(), oracle.end());

  TrimCounters counters;
  const auto found = top_lstat(g, AllVertices(g), 0, &counters);
  EdgeCount best = 0;
  for (const auto& s : found) best = std::max(best, s.value);
  EXPECT_EQ(best, truth);
  EXPECT_EQ(truth, 20u);
  EXPECT_EQ(counters.computed, found.size());
  EXPECT_LE(counters.computed, 10u);
}

TEST(TopLstatTest, FloorAboveEveryBoundPrunesEverything) {
  std::mt19937_64 rng(1);
  const Graph g = testing::ErdosRenyi(50, 0.1, rng);
  EdgeCount top_bound = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    top_bound = std::max(top_bound, est_lstat1(g, v));
  }
  EXPECT_TRUE(top_lstat(g, AllVertices(g), top_bound + 1).empty());
}

TEST(TopLstatTest, ReturnedMaximumDominatesCandidates) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::PlantedClique(120, 0.03, 7, rng);
    const auto oracle = testing::PsiAllOracle(g, 1);
    for (EdgeCount floor : {EdgeCount{0}, EdgeCount{5}, EdgeCount{30}}) {
      const auto found = top_lstat(g, AllVertices(g), floor);
      EdgeCount best = floor;
      for (const auto& s : found) {
        EXPECT_EQ(s.value, oracle[s.vertex]);
        best = std::max(best, s.value);
      }
      for (EdgeCount value : oracle) EXPECT_LE(value, best);
    }
  }
}

TEST(TopLstatTest, EmptyCandidatesIsAnError) {
  const Graph g = testing::Cycle3();
  EXPECT_THROW(top_lstat(g, {}, 0), std::invalid_argument);
}

TEST(TrimStateTest, PendingIsDegreeDescendingWithIdTieBreak) {
  // Degrees: 0 -> 3, 1 -> 2, 2 -> 2, 3 -> 1, 4 -> 0.
  const Graph g = Graph::FromEdges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  TrimState state(g, AllVertices(g));
  ASSERT_EQ(state.pending_size(), 5u);
  EXPECT_EQ(state.pending_at(0), 0u);
  EXPECT_EQ(state.pending_at(1), 1u);
  EXPECT_EQ(state.pending_at(2), 2u);
  EXPECT_EQ(state.pending_at(3), 3u);
  EXPECT_EQ(state.pending_at(4), 4u);
}

TEST(TopQTest, ThreeCycle) {
  const TopQResult r = topq_lstat(testing::Cycle3(), 3);
  EXPECT_EQ(Values(r, 3), (std::vector<EdgeCount>{3, 3, 3}));
  EXPECT_EQ(r.computed_count, 3u);
}

TEST(TopQTest, RejectsOutOfRangeQ) {
  const Graph g = testing::Cycle3();
  EXPECT_THROW(topq_lstat(g, 0), std::invalid_argument);
  EXPECT_THROW(topq_lstat(g, 4), std::invalid_argument);
  EXPECT_THROW(topq_lstat_parallel(g, 4, 2), std::invalid_argument);
  EXPECT_THROW(topq_lstat_parallel(g, 1, 0), std::invalid_argument);
}

TEST(TopQTest, FullQEqualsSortedSweep) {
  std::mt19937_64 rng(3);
  const Graph g = testing::ErdosRenyi(100, 0.05, rng);
  const auto oracle = testing::PsiAllOracle(g, 1);
  const TopQResult r = topq_lstat(g, g.num_vertices());
  EXPECT_EQ(Values(r, g.num_vertices()),
            testing::TopValuesOracle(oracle, g.num_vertices()));
  EXPECT_EQ(r.computed_count, 100u);
}

TEST(TopQTest, SbmSampleTop60MatchesBruteForce) {
  SBMParams params = paper_params();
  params.seed = 2024;
  const Graph g = generate_sbm(params).graph;
  const auto oracle = testing::PsiAllOracle(g, 1);
  const TopQResult r = topq_lstat(g, 60);
  EXPECT_EQ(Values(r, 60), testing::TopValuesOracle(oracle, 60));
  const TopQResult parallel = topq_lstat_parallel(g, 60, 8);
  EXPECT_EQ(Values(parallel, 60), Values(r, 60));
}

TEST(TopQTest, EntriesIncludeEveryBoundaryTie) {
  // Four disjoint 4-cliques (Psi_1 = 12 each member) plus sparse noise.
  std::vector<Edge> edges;
  for (VertexId c = 0; c < 4; ++c) AddClique(edges, c * 4, 4);
  for (VertexId v = 16; v + 1 < 40; v += 2) edges.emplace_back(v, v + 1);
  const Graph g = Graph::FromEdges(40, std::move(edges));
  const TopQResult r = topq_lstat(g, 5);
  ASSERT_EQ(r.entries.size(), 16u);
  for (const auto& e : r.entries) EXPECT_EQ(e.value, 12u);
  for (std::size_t i = 1; i < r.entries.size(); ++i) {
    EXPECT_LT(r.entries[i - 1].vertex, r.entries[i].vertex);
  }
}

TEST(TopQTest, ZeroValuedVerticesFillWhenFewAreActive) {
  // A 3-cycle and five isolated vertices.
  const Graph g = Graph::FromEdges(8, {{0, 1}, {1, 2}, {2, 0}});
  const TopQResult r = topq_lstat(g, 6);
  EXPECT_EQ(Values(r, 6), (std::vector<EdgeCount>{3, 3, 3, 0, 0, 0}));
  ASSERT_EQ(r.entries.size(), 8u);
  EXPECT_EQ(r.entries[3].vertex, 3u);
  EXPECT_EQ(r.entries[7].vertex, 7u);
}

TEST(TopQTest, VertexIdentityWhenBoundaryIsStrict) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::PlantedClique(150, 0.04, 6, rng);
    const auto oracle = testing::PsiAllOracle(g, 1);
    std::vector<VertexId> order = AllVertices(g);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return oracle[a] != oracle[b] ? oracle[a] > oracle[b] : a < b;
    });
    for (std::size_t q : {1u, 5u, 15u}) {
      if (oracle[order[q - 1]] == oracle[order[q]]) continue;
      const TopQResult r = topq_lstat(g, q);
      ASSERT_EQ(r.entries.size(), q);
      std::set<VertexId> got, want;
      for (std::size_t i = 0; i < q; ++i) {
        got.insert(r.entries[i].vertex);
        want.insert(order[i]);
      }
      EXPECT_EQ(got, want);
    }
  }
}

TEST(TopQTest, SkipReplayIsSound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = trial % 2 ? testing::PlantedClique(200, 0.02, 8, rng)
                              : testing::ErdosRenyi(200, 0.03, rng);
    const auto oracle = testing::PsiAllOracle(g, 1);
    for (std::size_t q : {1u, 10u}) {
      RecordingObserver observer;
      TrimOptions options;
      options.observer = &observer;
      const TopQResult r = topq_lstat(g, q, options);
      const EdgeCount kth = r.entries[q - 1].value;
      for (const SkipEvent& e : observer.skips) {
        EXPECT_LT(e.bound, e.threshold);
        EXPECT_LE(oracle[e.vertex], e.bound);
        EXPECT_EQ(e.bound, e.bound_kind == 1 ? est_lstat1(g, e.vertex)
                                             : est_lstat2(g, e.vertex));
      }
      for (const auto& [previous, current] : observer.raises) {
        EXPECT_LT(previous, current);
      }
      // Whatever was never reported must lie strictly below the boundary.
      std::set<VertexId> reported;
      for (const auto& e : r.entries) reported.insert(e.vertex);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!reported.count(v)) {
          EXPECT_LT(oracle[v], kth);
        }
      }
    }
  }
}

TEST(TopQTest, CountersArePopulated) {
  std::mt19937_64 rng(6);
  const Graph g = testing::PlantedClique(300, 0.01, 10, rng);
  const TopQResult r = topq_lstat(g, 3);
  EXPECT_GT(r.computed_count, 0u);
  EXPECT_LE(r.computed_count, g.num_vertices());
  EXPECT_GE(r.est1_count, r.est2_count);
  EXPECT_GE(r.est2_count, r.computed_count);
  EXPECT_GE(r.scans, 1u);
  EXPECT_LT(r.computed_count, g.num_vertices());
}

TEST(ParallelTopQTest, ValueMultisetsAgreeAcrossWorkerCounts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = trial % 2 ? testing::PlantedClique(250, 0.02, 9, rng)
                              : testing::ErdosRenyi(250, 0.02, rng);
    for (std::size_t q : {1u, 7u, 25u, 250u}) {
      const auto serial = Values(topq_lstat(g, q), q);
      for (unsigned workers : {1u, 2u, 8u}) {
        EXPECT_EQ(Values(topq_lstat_parallel(g, q, workers), q), serial)
            << "q=" << q << " workers=" << workers;
      }
    }
  }
}

TEST(ParallelTopQTest, ChunkedHeavyVerticesGiveExactValues) {
  std::mt19937_64 rng(8);
  const Graph g = testing::PreferentialAttachment(3000, 4, rng);
  const auto oracle = testing::PsiAllOracle(g, 1);
  TrimOptions options;
  options.chunk_size = 8;
  for (unsigned workers : {1u, 3u, 8u}) {
    const TopQResult r = topq_lstat_parallel(g, 20, workers, options);
    EXPECT_EQ(Values(r, 20), testing::TopValuesOracle(oracle, 20));
    for (const auto& e : r.entries) EXPECT_EQ(e.value, oracle[e.vertex]);
    std::size_t chunks = 0;
    for (const WorkerStats& w : r.workers) chunks += w.chunks_processed;
    EXPECT_GT(chunks, 0u);
  }
}

TEST(ParallelTopQTest, SkewedGraphBalanceReport) {
  // One hub adjacent to everyone, plus a sparse background.
  std::mt19937_64 rng(9);
  const std::size_t n = 2000;
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
  std::uniform_int_distribution<VertexId> pick(1, n - 1);
  for (int i = 0; i < 6000; ++i) edges.emplace_back(pick(rng), pick(rng));
  const Graph g = Graph::FromEdges(n, std::move(edges));
  TrimOptions options;
  options.chunk_size = 64;
  const TopQResult r = topq_lstat_parallel(g, 10, 4, options);
  ASSERT_EQ(r.workers.size(), 4u);
  std::size_t exact = 0;
  std::size_t claimed = 0;
  for (const WorkerStats& w : r.workers) {
    exact += w.exact_computed;
    claimed += w.vertices_claimed;
  }
  EXPECT_EQ(exact, r.computed_count);
  EXPECT_GE(claimed, r.computed_count);
  const auto oracle = testing::PsiAllOracle(g, 1);
  EXPECT_EQ(Values(r, 10), testing::TopValuesOracle(oracle, 10));
}

TEST(MonotoneMaxTest, OnlyRaises) {
  MonotoneMax max(5);
  EdgeCount previous = 0;
  EXPECT_FALSE(max.Offer(3));
  EXPECT_FALSE(max.Offer(5));
  EXPECT_TRUE(max.Offer(9, &previous));
  EXPECT_EQ(previous, 5u);
  EXPECT_EQ(max.load(), 9u);
}

TEST(MonotoneMaxTest, ConcurrentOffersKeepTheMaximum) {
  MonotoneMax max(0);
  std::vector<std::jthread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&max, t] {
      for (EdgeCount v = 0; v < 5000; ++v) max.Offer(v * 4 + t);
    });
  }
  threads.clear();
  EXPECT_EQ(max.load(), 4999u * 4 + 3);
}

}  // namespace
}  // namespace active_scan
