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

// Directed stochastic block model. Every ordered pair (u, v), u != v, is an
// edge independently with probability P[block(u)][block(v)].

#ifndef ACTIVE_SCAN_SBM_H_
#define ACTIVE_SCAN_SBM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "active_scan/graph.h"

namespace active_scan {

struct SBMParams {
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<double>> P;  // B x B, symmetric, entries in [0, 1]
  std::uint64_t seed = 0;

  std::size_t num_blocks() const { return block_sizes.size(); }
  std::size_t num_vertices() const;

  // Throws std::invalid_argument describing the first violated invariant.
  void Validate() const;
};

// Four blocks of sizes 940, 20, 20, 20 with background rate 0.01 and
// within-block rates 0.01, 0.2, 0.3, 0.4.
SBMParams paper_params();

// JSON form: {"block_sizes": [...], "P": [[...], ...], "seed": N}. An optional
// "B" must agree with the number of blocks. Parsing errors and invalid
// parameters throw std::invalid_argument.
std::string sbm_params_to_json(const SBMParams& params);
SBMParams sbm_params_from_json(const std::string& text);

struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;  // block id in [1, B]; blocks are contiguous
};

// Samples with geometric skipping inside each ordered block pair, so the cost
// is proportional to the number of edges drawn. Deterministic in params.seed.
LabeledGraph generate_sbm(const SBMParams& params);

// Moments of the edge count, a sum of independent Bernoulli variables.
double expected_edge_count(const SBMParams& params);
double edge_count_variance(const SBMParams& params);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_SBM_H_
