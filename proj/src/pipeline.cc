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

#include "active_scan/pipeline.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>

#include "active_scan/csv.h"
#include "active_scan/locality.h"
#include "active_scan/seed.h"
#include "json.hpp"

namespace active_scan {
namespace {

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void PipelineConfig::Validate() const {
  if (q < 1) throw std::invalid_argument("Q must be >= 1");
  if (similarity_k < 1) throw std::invalid_argument("similarity-k must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (sigma && !(*sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (clusters && *clusters < 1) throw std::invalid_argument("clusters must be >= 1");
  if (max_clusters < 1) throw std::invalid_argument("max-clusters must be >= 1");
}

TopQResult select_top_q(const Graph& g, std::size_t q, unsigned k,
                        unsigned workers) {
  if (k == 1) return topq_lstat_parallel(g, q, workers);
  const std::size_t n = g.num_vertices();
  if (q < 1 || q > n) {
    throw std::invalid_argument("Q must lie in [1, " + std::to_string(n) + "]");
  }
  const std::vector<EdgeCount> values = psi_k_all(g, k, workers);
  TopQResult result;
  result.q = q;
  result.entries.reserve(n);
  for (VertexId v = 0; v < n; ++v) result.entries.push_back({v, values[v]});
  std::sort(result.entries.begin(), result.entries.end(), RanksBefore);
  const EdgeCount threshold = result.entries[q - 1].value;
  while (result.entries.back().value < threshold) result.entries.pop_back();
  result.computed_count = n;
  return result;
}

DetectResult run_detect(const Graph& g, const PipelineConfig& config) {
  config.Validate();
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  DetectResult result;
  result.q_requested = config.q;
  result.q = std::min(config.q, g.num_vertices());
  result.top = select_top_q(g, result.q, config.k, config.workers);

  std::vector<VertexId> selected;
  selected.reserve(result.q);
  for (std::size_t i = 0; i < result.q; ++i) {
    selected.push_back(result.top.entries[i].vertex);
  }
  SimilarityOptions sim_options;
  sim_options.memory_budget_bytes = config.memory_budget_bytes;
  sim_options.workers = config.workers;
  result.similarity =
      build_similarity_matrix(g, selected, config.similarity_k, sim_options);

  const Affinity affinity = rbf_affinity(result.similarity.values, config.sigma);
  result.sigma = affinity.sigma;
  const std::uint64_t cluster_seed = derive_seed(config.seed, "spectral");
  if (config.clusters) {
    if (*config.clusters > result.q) {
      throw std::invalid_argument("clusters (" + std::to_string(*config.clusters) +
                                  ") exceeds Q (" + std::to_string(result.q) + ")");
    }
    result.clustering =
        spectral_cluster(affinity.values, *config.clusters, cluster_seed);
  } else {
    result.clustering = spectral_cluster_auto(
        affinity.values, config.max_clusters, cluster_seed, {}, config.gap_rule);
  }
  result.clustering.diagnostics.sigma = affinity.sigma;
  result.mds = classical_mds(result.similarity.values,
                             std::min<std::size_t>(2, result.q));
  return result;
}

void write_detect_outputs(const DetectResult& result,
                          const std::vector<std::uint64_t>& original_ids,
                          const PipelineConfig& config) {
  std::filesystem::create_directories(config.out_dir);
  auto original = [&](VertexId v) {
    return std::to_string(original_ids.empty() ? v : original_ids[v]);
  };
  const auto& vertices = result.similarity.vertices;

  {
    auto out = OpenOutput(config.out_dir / "topq.csv");
    CsvWriter csv(out);
    csv.Row({"vertex", "psi"});
    for (std::size_t i = 0; i < result.q; ++i) {
      const ScoredVertex& e = result.top.entries[i];
      csv.Row({original(e.vertex), std::to_string(e.value)});
    }
  }
  {
    auto out = OpenOutput(config.out_dir / "clusters.csv");
    CsvWriter csv(out);
    csv.Row({"vertex_id", "cluster"});
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      csv.Row({original(vertices[i]),
               std::to_string(result.clustering.labels[i])});
    }
  }
  {
    auto out = OpenOutput(config.out_dir / "mds.csv");
    CsvWriter csv(out);
    csv.Row({"vertex_id", "x", "y"});
    const auto& x = result.mds.coordinates;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      csv.Row({original(vertices[i]), FormatDouble(x(row, 0)),
               FormatDouble(x.cols() > 1 ? x(row, 1) : 0.0)});
    }
  }
  if (config.write_similarity) {
    auto out = OpenOutput(config.out_dir / "similarity.csv");
    write_similarity_csv(out, result.similarity, original_ids);
  }

  const SpectralDiagnostics& d = result.clustering.diagnostics;
  nlohmann::ordered_json j;
  j["q_requested"] = result.q_requested;
  j["q"] = result.q;
  j["k"] = config.k;
  j["similarity_k"] = config.similarity_k;
  j["sigma"] = result.sigma;
  j["sigma_auto"] = !config.sigma.has_value();
  j["clusters_auto"] = !config.clusters.has_value();
  j["gap_rule"] = gap_rule_name(config.gap_rule);
  j["max_clusters"] = config.max_clusters;
  j["num_clusters"] = result.clustering.num_clusters;
  j["chosen_gap_index"] = d.chosen_gap_index;
  j["floor_applied"] = d.floor_applied;
  j["eigenvalues"] = d.eigenvalues;
  j["kmeans_inertia"] = d.kmeans_inertia;
  j["restarts_used"] = d.restarts_used;
  j["mds_eigenvalues"] = result.mds.eigenvalues;
  j["mds_clamped_negative"] = result.mds.clamped_negative;
  j["trim"] = {{"computed_count", result.top.computed_count},
               {"est1_count", result.top.est1_count},
               {"est2_count", result.top.est2_count},
               {"scans", result.top.scans}};
  j["seed"] = config.seed;
  auto out = OpenOutput(config.out_dir / "diagnostics.json");
  out << j.dump(2) << "\n";
}

}  // namespace active_scan
