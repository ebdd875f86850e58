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

// Spectral clustering of a similarity matrix.
//
// The similarity S is turned into an affinity with an RBF kernel on the
// Jaccard distance 1 - S. The affinity is normalized as
// L = D^{-1/2} W D^{-1/2}; the leading eigenvectors of L, with rows scaled
// to unit length, are clustered with k-means (k-means++ seeding, several
// restarts, best inertia kept). The cluster count can be chosen from the
// largest gap in the descending spectrum of L.

#ifndef ACTIVE_SCAN_SPECTRAL_H_
#define ACTIVE_SCAN_SPECTRAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "active_scan/graph.h"
#include "active_scan/similarity.h"

namespace active_scan {

struct Affinity {
  Eigen::MatrixXd values;
  double sigma = 1.0;
};

// W[i][j] = exp(-(1 - S[i][j])^2 / (2 sigma^2)), W[i][i] = 1. With no sigma
// given, sigma is the median of the off-diagonal distances 1 - S[i][j]
// (i < j), or 1 when that median is 0 or there are no off-diagonal entries.
// Throws std::invalid_argument for sigma <= 0.
Affinity rbf_affinity(const Eigen::MatrixXd& similarity,
                      std::optional<double> sigma = std::nullopt);

// Eigen-decomposition of the normalized affinity, eigenvalues descending
// with eigenvectors in matching columns.
struct NormalizedSpectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  Eigen::MatrixXd normalized;  // D^{-1/2} W D^{-1/2}
};

// Throws std::invalid_argument when w is not square and symmetric.
NormalizedSpectrum normalized_spectrum(const Eigen::MatrixXd& w);

struct ClusterCountEstimate {
  std::size_t count = 2;
  std::size_t largest_gap_index = 1;  // 1-based index i of the gap λ_i - λ_{i+1}
  bool floor_applied = false;
};

inline constexpr std::size_t kMinAutoClusters = 2;

enum class GapRule {
  // Largest λ_i - λ_{i+1} over i in [1, min(max_clusters, len - 1)], then
  // raised to kMinAutoClusters.
  kAbsolute,
  // Largest ratio λ_i / λ_{i+1} over i in [kMinAutoClusters,
  // min(max_clusters, len - 1)]. The leading eigenvalue of a normalized
  // affinity is always 1 and carries no cluster information, and on dense
  // noisy affinities the informative eigenvalues are small, so their
  // separation from the bulk shows on a log scale but not a linear one.
  // A step onto a (numerically) non-positive eigenvalue counts as infinite.
  kRelative,
};

// Eigengap estimate of the cluster count; 1-based indices, smallest i on
// ties. Requires at least two eigenvalues and max_clusters >= 1.
// floor_applied reports that the largest absolute gap is the leading one,
// i.e. the unconstrained choice would have been a single cluster.
ClusterCountEstimate estimate_num_clusters(std::span<const double> eigenvalues,
                                           std::size_t max_clusters,
                                           GapRule rule = GapRule::kAbsolute);

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 300;
};

struct KMeansResult {
  std::vector<int> labels;
  Eigen::MatrixXd centroids;
  double inertia = 0.0;
  int restarts_used = 0;
};

// Lloyd's k-means on the rows of `points`. Seeding is k-means++, each restart
// draws from a seed derived from `seed` and the restart index. An empty
// cluster is re-seeded with the point farthest from its centroid.
KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k,
                    std::uint64_t seed, const KMeansOptions& options = {});

struct SpectralDiagnostics {
  std::vector<double> eigenvalues;  // descending
  std::size_t chosen_gap_index = 1;
  bool floor_applied = false;
  double kmeans_inertia = 0.0;
  int restarts_used = 0;
  double sigma = 0.0;
};

struct SpectralClustering {
  // Compact labels in [0, num_clusters); every cluster is non-empty.
  std::vector<int> labels;
  std::size_t num_clusters = 0;
  SpectralDiagnostics diagnostics;
};

// Clusters with a fixed count. Throws std::invalid_argument when
// num_clusters is 0 or exceeds the order of w, or w is not symmetric.
SpectralClustering spectral_cluster(const Eigen::MatrixXd& w,
                                    std::size_t num_clusters,
                                    std::uint64_t seed,
                                    const KMeansOptions& options = {});
SpectralClustering spectral_cluster(const NormalizedSpectrum& spectrum,
                                    std::size_t num_clusters,
                                    std::uint64_t seed,
                                    const KMeansOptions& options = {});

// Chooses the count from the eigengap (capped at max_clusters) and clusters.
// The relative rule is the default here because the absolute one almost
// always stops at the leading gap on sparse-graph Jaccard affinities.
// A 1x1 affinity yields a single cluster.
SpectralClustering spectral_cluster_auto(const Eigen::MatrixXd& w,
                                         std::size_t max_clusters,
                                         std::uint64_t seed,
                                         const KMeansOptions& options = {},
                                         GapRule rule = GapRule::kRelative);

const char* gap_rule_name(GapRule rule);
// Accepts "absolute" or "relative"; throws std::invalid_argument otherwise.
GapRule parse_gap_rule(std::string_view name);

struct ClusterAssignment {
  std::vector<VertexId> vertices;
  std::vector<int> labels;
  std::size_t num_clusters = 0;
};

struct MdsEmbedding {
  Eigen::MatrixXd coordinates;       // order x dims
  std::vector<double> eigenvalues;   // top dims, descending, before clamping
  bool clamped_negative = false;
};

// Classical MDS on distances 1 - S: B = -1/2 J D² J, X = V Λ^{1/2} over the
// top `dims` eigenpairs, negative eigenvalues clamped to zero. Throws
// std::invalid_argument when dims is 0 or exceeds the order.
MdsEmbedding classical_mds(const Eigen::MatrixXd& similarity, std::size_t dims);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_SPECTRAL_H_
