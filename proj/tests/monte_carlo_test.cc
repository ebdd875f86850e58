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

#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "active_scan/monte_carlo.h"
#include "active_scan/sbm.h"

namespace active_scan {
namespace {

// Two dense planted blocks in an empty background.
SBMParams Planted() {
  SBMParams params;
  params.block_sizes = {100, 10, 10};
  params.P = {{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  return params;
}

SBMParams Small() {
  SBMParams params;
  params.block_sizes = {150, 12, 12};
  params.P = {{0.03, 0.03, 0.03}, {0.03, 0.5, 0.03}, {0.03, 0.03, 0.6}};
  return params;
}

TEST(MonteCarloRocTest, PlantedBlocksAreSeparated) {
  for (unsigned k : {0u, 1u}) {
    const RocSummary roc = monte_carlo_roc(Planted(), 3, k, 1);
    ASSERT_EQ(roc.aucs.size(), 3u);
    EXPECT_EQ(roc.mean_auc, 1.0);
    ASSERT_EQ(roc.fpr.size(), 101u);
    EXPECT_EQ(roc.mean_tpr.front(), 1.0);
  }
}

TEST(MonteCarloAriTest, PlantedBlocksAreRecovered) {
  const AriSummary s = monte_carlo_ari(Planted(), 2, 1, {20}, 1);
  ASSERT_EQ(s.rows.size(), 2u);
  for (const AriRow& row : s.rows) {
    EXPECT_EQ(row.ari, 1.0);
    EXPECT_EQ(row.clusters, 2u);
  }
  EXPECT_EQ(s.mean[0], 1.0);
  EXPECT_EQ(s.sd[0], 0.0);
}

TEST(MonteCarloTest, WorkerCountDoesNotChangeResults) {
  const RocSummary a = monte_carlo_roc(Small(), 6, 1, 9, 1);
  const RocSummary b = monte_carlo_roc(Small(), 6, 1, 9, 3);
  EXPECT_EQ(a.aucs, b.aucs);
  EXPECT_EQ(a.mean_tpr, b.mean_tpr);
  EXPECT_EQ(a.mean_auc, b.mean_auc);

  AriOptions one;
  AriOptions three;
  three.workers = 3;
  const AriSummary x = monte_carlo_ari(Small(), 4, 1, {10, 30}, 9, one);
  const AriSummary y = monte_carlo_ari(Small(), 4, 1, {10, 30}, 9, three);
  ASSERT_EQ(x.rows.size(), 8u);
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    EXPECT_EQ(x.rows[i].run, y.rows[i].run);
    EXPECT_EQ(x.rows[i].q, y.rows[i].q);
    EXPECT_EQ(x.rows[i].ari, y.rows[i].ari);
    EXPECT_EQ(x.rows[i].clusters, y.rows[i].clusters);
  }
  EXPECT_EQ(x.mean, y.mean);
  EXPECT_EQ(x.sd, y.sd);
}

TEST(MonteCarloTest, SeedChangesRuns) {
  const RocSummary a = monte_carlo_roc(Small(), 4, 1, 1);
  const RocSummary b = monte_carlo_roc(Small(), 4, 1, 2);
  EXPECT_NE(a.aucs, b.aucs);
}

TEST(MonteCarloTest, Errors) {
  EXPECT_THROW(monte_carlo_roc(Small(), 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(monte_carlo_ari(Small(), 0, 1, {10}, 1), std::invalid_argument);
  EXPECT_THROW(monte_carlo_ari(Small(), 1, 1, {}, 1), std::invalid_argument);
  EXPECT_THROW(monte_carlo_ari(Small(), 1, 1, {1}, 1), std::invalid_argument);
  EXPECT_THROW(monte_carlo_ari(Small(), 1, 1, {175}, 1), std::invalid_argument);
}

TEST(RankByScoreTest, DescendingWithIdTies) {
  const std::vector<EdgeCount> scores{3, 7, 3, 9, 0};
  EXPECT_EQ(rank_by_score(scores), (std::vector<VertexId>{3, 1, 0, 2, 4}));
}

TEST(MonteCarloCsvTest, Headers) {
  const RocSummary roc = monte_carlo_roc(Planted(), 1, 1, 1);
  std::ostringstream r, a;
  write_roc_csv(r, roc);
  write_auc_csv(a, roc);
  EXPECT_EQ(r.str().substr(0, 13), "fpr,mean_tpr\n");
  EXPECT_EQ(a.str().substr(0, 13), "run_id,k,auc\n");
  const AriSummary s = monte_carlo_ari(Planted(), 1, 1, {20}, 1);
  std::ostringstream runs, summary;
  write_ari_runs_csv(runs, s);
  write_ari_summary_csv(summary, s);
  EXPECT_EQ(runs.str().substr(0, 24), "run_id,Q,ari,clusters\n0,");
  EXPECT_EQ(summary.str().substr(0, 19), "Q,mean_ari,sd_ari\n2");
}

}  // namespace
}  // namespace active_scan
