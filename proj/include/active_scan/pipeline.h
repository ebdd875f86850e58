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

// End-to-end active community detection: top-Q selection by locality
// statistic, Jaccard similarity over the selection, spectral clustering, and
// a 2-D MDS layout of the selected vertices.

#ifndef ACTIVE_SCAN_PIPELINE_H_
#define ACTIVE_SCAN_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "active_scan/graph.h"
#include "active_scan/similarity.h"
#include "active_scan/spectral.h"
#include "active_scan/trimming.h"

namespace active_scan {

struct PipelineConfig {
  std::filesystem::path input;
  unsigned k = 1;
  std::size_t q = 2000;
  unsigned similarity_k = 1;
  std::optional<double> sigma;          // median heuristic when unset
  std::optional<std::size_t> clusters;  // eigengap estimate when unset
  std::size_t max_clusters = 8;
  GapRule gap_rule = GapRule::kRelative;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::size_t memory_budget_bytes = std::size_t{512} << 20;
  std::filesystem::path out_dir = ".";
  bool write_similarity = false;

  // Throws std::invalid_argument on k, Q, workers or cluster settings that
  // can never be valid.
  void Validate() const;
};

// Top-Q selection for any k. k = 1 runs the trimming search; other orders
// sweep every vertex. Entries follow (value desc, id asc) and include ties
// at the boundary.
TopQResult select_top_q(const Graph& g, std::size_t q, unsigned k,
                        unsigned workers);

struct DetectResult {
  std::size_t q_requested = 0;
  std::size_t q = 0;  // after clamping to the vertex count
  TopQResult top;
  SimilarityMatrix similarity;
  double sigma = 0.0;
  SpectralClustering clustering;
  MdsEmbedding mds;
};

DetectResult run_detect(const Graph& g, const PipelineConfig& config);

// Writes topq.csv, clusters.csv, mds.csv, diagnostics.json and, when
// requested, similarity.csv into config.out_dir, using original ids.
void write_detect_outputs(const DetectResult& result,
                          const std::vector<std::uint64_t>& original_ids,
                          const PipelineConfig& config);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_PIPELINE_H_
