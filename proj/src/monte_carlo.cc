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

#include "active_scan/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "active_scan/csv.h"
#include "active_scan/locality.h"
#include "active_scan/parallel.h"
#include "active_scan/seed.h"
#include "active_scan/similarity.h"
#include "active_scan/spectral.h"

namespace active_scan {
namespace {

SBMParams RunParams(const SBMParams& params, std::uint64_t seed,
                    std::size_t run) {
  SBMParams p = params;
  p.seed = derive_seed(seed, "sbm-run", run);
  return p;
}

// Runs are the unit of parallelism, so each sweep is single-threaded.
std::vector<EdgeCount> Scores(const Graph& g, unsigned k) {
  return psi_k_all(g, k, 1);
}

}  // namespace

std::vector<VertexId> rank_by_score(std::span<const EdgeCount> scores) {
  std::vector<VertexId> order(scores.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  });
  return order;
}

RocSummary monte_carlo_roc(const SBMParams& params, std::size_t runs,
                           unsigned k, std::uint64_t seed, unsigned workers) {
  if (runs == 0) throw std::invalid_argument("monte_carlo_roc: runs must be >= 1");
  params.Validate();
  RocSummary summary;
  summary.k = k;
  summary.fpr = fpr_grid();
  std::vector<std::vector<double>> tprs(runs);
  summary.aucs.resize(runs);

  parallel_for(runs, workers, [&](unsigned, std::size_t run) {
    const LabeledGraph sample = generate_sbm(RunParams(params, seed, run));
    const std::vector<EdgeCount> psi = Scores(sample.graph, k);
    std::vector<double> scores(psi.begin(), psi.end());
    std::vector<std::uint8_t> positive(scores.size());
    for (std::size_t v = 0; v < positive.size(); ++v) {
      positive[v] = sample.labels[v] >= 2;
    }
    const EvalCurve curve = roc_auc(scores, positive);
    summary.aucs[run] = curve.auc;
    tprs[run].reserve(summary.fpr.size());
    for (double x : summary.fpr) tprs[run].push_back(tpr_at(curve, x));
  });

  // Reduce in run order so the sums are identical for any worker count.
  summary.mean_tpr.assign(summary.fpr.size(), 0.0);
  for (std::size_t run = 0; run < runs; ++run) {
    for (std::size_t i = 0; i < summary.fpr.size(); ++i) {
      summary.mean_tpr[i] += tprs[run][i];
    }
    summary.mean_auc += summary.aucs[run];
  }
  for (double& t : summary.mean_tpr) t /= static_cast<double>(runs);
  summary.mean_auc /= static_cast<double>(runs);
  return summary;
}

AriSummary monte_carlo_ari(const SBMParams& params, std::size_t runs,
                           unsigned k, const std::vector<std::size_t>& q_values,
                           std::uint64_t seed, const AriOptions& options) {
  if (runs == 0) throw std::invalid_argument("monte_carlo_ari: runs must be >= 1");
  if (q_values.empty()) {
    throw std::invalid_argument("monte_carlo_ari: q_values is empty");
  }
  params.Validate();
  const std::size_t n = params.num_vertices();
  for (std::size_t q : q_values) {
    if (q < 2 || q > n) {
      throw std::invalid_argument("monte_carlo_ari: Q=" + std::to_string(q) +
                                  " outside [2, " + std::to_string(n) + "]");
    }
  }

  AriSummary summary;
  summary.q_values = q_values;
  summary.rows.resize(runs * q_values.size());
  parallel_for(runs, options.workers, [&](unsigned, std::size_t run) {
    const LabeledGraph sample = generate_sbm(RunParams(params, seed, run));
    const std::vector<EdgeCount> psi = Scores(sample.graph, k);
    const std::vector<VertexId> ranked = rank_by_score(psi);
    for (std::size_t qi = 0; qi < q_values.size(); ++qi) {
      const std::size_t q = q_values[qi];
      const std::span<const VertexId> selected(ranked.data(), q);
      const SimilarityMatrix s =
          build_similarity_matrix(sample.graph, selected, options.similarity_k);
      const Affinity w = rbf_affinity(s.values);
      const SpectralClustering clustering = spectral_cluster_auto(
          w.values, options.max_clusters,
          derive_seed(seed, "ari-cluster", run * q_values.size() + qi), {},
          options.gap_rule);
      std::vector<int> truth(q);
      for (std::size_t i = 0; i < q; ++i) truth[i] = sample.labels[selected[i]];
      summary.rows[run * q_values.size() + qi] = {
          run, q, ari(clustering.labels, truth), clustering.num_clusters};
    }
  });

  const std::size_t nq = q_values.size();
  summary.mean.assign(nq, 0.0);
  summary.sd.assign(nq, 0.0);
  for (std::size_t qi = 0; qi < nq; ++qi) {
    double sum = 0.0;
    for (std::size_t run = 0; run < runs; ++run) sum += summary.rows[run * nq + qi].ari;
    const double mean = sum / static_cast<double>(runs);
    double squares = 0.0;
    for (std::size_t run = 0; run < runs; ++run) {
      const double d = summary.rows[run * nq + qi].ari - mean;
      squares += d * d;
    }
    summary.mean[qi] = mean;
    summary.sd[qi] =
        runs > 1 ? std::sqrt(squares / static_cast<double>(runs - 1)) : 0.0;
  }
  return summary;
}

void write_roc_csv(std::ostream& out, const RocSummary& roc) {
  CsvWriter csv(out);
  csv.Row({"fpr", "mean_tpr"});
  for (std::size_t i = 0; i < roc.fpr.size(); ++i) {
    csv.Row({FormatDouble(roc.fpr[i]), FormatDouble(roc.mean_tpr[i])});
  }
}

void write_auc_csv(std::ostream& out, const RocSummary& roc) {
  CsvWriter csv(out);
  csv.Row({"run_id", "k", "auc"});
  for (std::size_t run = 0; run < roc.aucs.size(); ++run) {
    csv.Row({std::to_string(run), std::to_string(roc.k),
             FormatDouble(roc.aucs[run])});
  }
}

void write_ari_runs_csv(std::ostream& out, const AriSummary& summary) {
  CsvWriter csv(out);
  csv.Row({"run_id", "Q", "ari", "clusters"});
  for (const AriRow& row : summary.rows) {
    csv.Row({std::to_string(row.run), std::to_string(row.q),
             FormatDouble(row.ari), std::to_string(row.clusters)});
  }
}

void write_ari_summary_csv(std::ostream& out, const AriSummary& summary) {
  CsvWriter csv(out);
  csv.Row({"Q", "mean_ari", "sd_ari"});
  for (std::size_t qi = 0; qi < summary.q_values.size(); ++qi) {
    csv.Row({std::to_string(summary.q_values[qi]),
             FormatDouble(summary.mean[qi]), FormatDouble(summary.sd[qi])});
  }
}

}  // namespace active_scan
