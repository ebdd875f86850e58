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

// Monte Carlo evaluation on stochastic block model graphs. Every run draws a
// fresh graph from a seed derived from the base seed and the run index, so
// results do not depend on the worker count.

#ifndef ACTIVE_SCAN_MONTE_CARLO_H_
#define ACTIVE_SCAN_MONTE_CARLO_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "active_scan/graph.h"
#include "active_scan/metrics.h"
#include "active_scan/sbm.h"
#include "active_scan/spectral.h"

namespace active_scan {

struct RocSummary {
  unsigned k = 0;
  std::vector<double> fpr;       // the 101-point grid
  std::vector<double> mean_tpr;  // vertically averaged
  std::vector<double> aucs;      // per run
  double mean_auc = 0.0;
};

// Scores each vertex by Psi_k over a full sweep; blocks 2..B are positives.
// Throws std::invalid_argument for runs == 0.
RocSummary monte_carlo_roc(const SBMParams& params, std::size_t runs,
                           unsigned k, std::uint64_t seed,
                           unsigned workers = 1);

struct AriOptions {
  std::size_t max_clusters = 8;
  unsigned similarity_k = 1;
  GapRule gap_rule = GapRule::kRelative;
  unsigned workers = 1;
};

struct AriRow {
  std::size_t run = 0;
  std::size_t q = 0;
  double ari = 0.0;
  std::size_t clusters = 0;
};

struct AriSummary {
  std::vector<std::size_t> q_values;
  std::vector<double> mean;  // per Q
  std::vector<double> sd;    // sample standard deviation per Q
  std::vector<AriRow> rows;  // run-major, then Q in the given order
};

// For each run and Q: the top-Q vertices by Psi_k (ties by ascending id),
// their Jaccard matrix, RBF affinity with automatic sigma, spectral clustering
// with the eigengap count capped at max_clusters, and the ARI against the
// planted blocks of those vertices. Throws std::invalid_argument when runs is
// 0, q_values is empty, or a Q lies outside [2, n].
AriSummary monte_carlo_ari(const SBMParams& params, std::size_t runs,
                           unsigned k, const std::vector<std::size_t>& q_values,
                           std::uint64_t seed, const AriOptions& options = {});

// Vertices ordered by descending score, ties by ascending id.
std::vector<VertexId> rank_by_score(std::span<const EdgeCount> scores);

void write_roc_csv(std::ostream& out, const RocSummary& roc);
void write_auc_csv(std::ostream& out, const RocSummary& roc);
void write_ari_runs_csv(std::ostream& out, const AriSummary& summary);
void write_ari_summary_csv(std::ostream& out, const AriSummary& summary);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_MONTE_CARLO_H_
