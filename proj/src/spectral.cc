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

#include "active_scan/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "active_scan/seed.h"

namespace active_scan {
namespace {

void RequireSquare(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a non-empty square matrix");
  }
}

void RequireSymmetric(const Eigen::MatrixXd& m, const char* what) {
  RequireSquare(m, what);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument(std::string(what) + ": matrix is not symmetric");
  }
}

double Median(std::vector<double> values) {
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace

Affinity rbf_affinity(const Eigen::MatrixXd& similarity,
                      std::optional<double> sigma) {
  RequireSquare(similarity, "rbf_affinity");
  if (sigma && !(*sigma > 0.0)) {
    throw std::invalid_argument("rbf_affinity: sigma must be positive");
  }
  const Eigen::Index q = similarity.rows();
  Affinity result;
  if (sigma) {
    result.sigma = *sigma;
  } else {
    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(q * (q - 1) / 2));
    for (Eigen::Index i = 0; i < q; ++i) {
      for (Eigen::Index j = i + 1; j < q; ++j) {
        distances.push_back(1.0 - similarity(i, j));
      }
    }
    const double median = distances.empty() ? 0.0 : Median(std::move(distances));
    result.sigma = median > 0.0 ? median : 1.0;
  }
  const double denom = 2.0 * result.sigma * result.sigma;
  result.values.resize(q, q);
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = 0; j < q; ++j) {
      const double d = 1.0 - similarity(i, j);
      result.values(i, j) = i == j ? 1.0 : std::exp(-(d * d) / denom);
    }
  }
  return result;
}

NormalizedSpectrum normalized_spectrum(const Eigen::MatrixXd& w) {
  RequireSymmetric(w, "normalized_spectrum");
  const Eigen::VectorXd degree = w.rowwise().sum();
  if ((degree.array() <= 0.0).any()) {
    throw std::invalid_argument("normalized_spectrum: non-positive degree");
  }
  const Eigen::VectorXd inv_sqrt = degree.array().rsqrt();
  NormalizedSpectrum result;
  result.normalized = inv_sqrt.asDiagonal() * w * inv_sqrt.asDiagonal();
  // Symmetrize away round-off before the self-adjoint solver.
  result.normalized =
      0.5 * (result.normalized + result.normalized.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(result.normalized);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("normalized_spectrum: eigensolver failed");
  }
  // The solver returns ascending order.
  result.eigenvalues = solver.eigenvalues().reverse();
  result.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return result;
}

ClusterCountEstimate estimate_num_clusters(std::span<const double> eigenvalues,
                                           std::size_t max_clusters,
                                           GapRule rule) {
  if (eigenvalues.size() < 2) {
    throw std::invalid_argument("estimate_num_clusters: need >= 2 eigenvalues");
  }
  if (max_clusters < 1) {
    throw std::invalid_argument("estimate_num_clusters: max_clusters < 1");
  }
  const std::size_t last = std::min(max_clusters, eigenvalues.size() - 1);
  // eigenvalues[i - 1] is λ_i.
  auto argmax = [&](std::size_t first, auto&& score) {
    std::size_t best_index = first;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = first; i <= last; ++i) {
      const double g = score(i);
      if (g > best) {
        best = g;
        best_index = i;
      }
    }
    return best_index;
  };
  auto absolute = [&](std::size_t i) {
    return eigenvalues[i - 1] - eigenvalues[i];
  };

  ClusterCountEstimate estimate;
  const std::size_t leading = argmax(1, absolute);
  estimate.floor_applied = leading < kMinAutoClusters;
  if (rule == GapRule::kAbsolute || last < kMinAutoClusters) {
    estimate.largest_gap_index = leading;
  } else {
    const double eps = 1e-10 * std::max(1.0, std::abs(eigenvalues[0]));
    estimate.largest_gap_index = argmax(kMinAutoClusters, [&](std::size_t i) {
      if (eigenvalues[i - 1] <= eps) return 0.0;
      if (eigenvalues[i] <= eps) return std::numeric_limits<double>::infinity();
      return eigenvalues[i - 1] / eigenvalues[i];
    });
  }
  estimate.count = std::max(estimate.largest_gap_index,
                            std::min(kMinAutoClusters, eigenvalues.size()));
  return estimate;
}

const char* gap_rule_name(GapRule rule) {
  return rule == GapRule::kAbsolute ? "absolute" : "relative";
}

GapRule parse_gap_rule(std::string_view name) {
  if (name == "absolute") return GapRule::kAbsolute;
  if (name == "relative") return GapRule::kRelative;
  throw std::invalid_argument("unknown gap rule '" + std::string(name) +
                              "' (expected absolute or relative)");
}

KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k,
                    std::uint64_t seed, const KMeansOptions& options) {
  const Eigen::Index n = points.rows();
  if (k < 1 || static_cast<Eigen::Index>(k) > n) {
    throw std::invalid_argument("kmeans: need 1 <= k <= number of points");
  }
  const auto kk = static_cast<Eigen::Index>(k);
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    Rng rng(derive_seed(seed, "kmeans-restart", restart));

    // k-means++ seeding.
    Eigen::MatrixXd centroids(kk, points.cols());
    Eigen::VectorXd nearest(n);
    const auto first = static_cast<Eigen::Index>(uniform_below(rng, n));
    centroids.row(0) = points.row(first);
    for (Eigen::Index i = 0; i < n; ++i) {
      nearest(i) = (points.row(i) - centroids.row(0)).squaredNorm();
    }
    for (Eigen::Index c = 1; c < kk; ++c) {
      const double total = nearest.sum();
      Eigen::Index pick = 0;
      if (total > 0.0) {
        double target = uniform01(rng) * total;
        pick = n - 1;
        for (Eigen::Index i = 0; i < n; ++i) {
          target -= nearest(i);
          if (target < 0.0) {
            pick = i;
            break;
          }
        }
      } else {
        pick = static_cast<Eigen::Index>(uniform_below(rng, n));
      }
      centroids.row(c) = points.row(pick);
      for (Eigen::Index i = 0; i < n; ++i) {
        nearest(i) =
            std::min(nearest(i), (points.row(i) - centroids.row(c)).squaredNorm());
      }
    }

    std::vector<int> labels(n, -1);
    std::vector<int> previous;
    Eigen::VectorXd dist(n);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index arg = 0;
        double d = (points.row(i) - centroids.row(0)).squaredNorm();
        for (Eigen::Index c = 1; c < kk; ++c) {
          const double dc = (points.row(i) - centroids.row(c)).squaredNorm();
          if (dc < d) {
            d = dc;
            arg = c;
          }
        }
        labels[i] = static_cast<int>(arg);
        dist(i) = d;
      }

      std::vector<Eigen::Index> sizes(kk, 0);
      for (int l : labels) ++sizes[l];
      for (Eigen::Index c = 0; c < kk; ++c) {
        if (sizes[c] > 0) continue;
        // Move the point farthest from its centroid, taken from a cluster
        // that can spare it.
        Eigen::Index far = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
          if (sizes[labels[i]] > 1 && (far < 0 || dist(i) > dist(far))) far = i;
        }
        --sizes[labels[far]];
        labels[far] = static_cast<int>(c);
        sizes[c] = 1;
        dist(far) = 0.0;
      }

      centroids.setZero();
      for (Eigen::Index i = 0; i < n; ++i) centroids.row(labels[i]) += points.row(i);
      for (Eigen::Index c = 0; c < kk; ++c) {
        centroids.row(c) /= static_cast<double>(sizes[c]);
      }
      if (labels == previous) break;
      previous = labels;
    }

    double inertia = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      inertia += (points.row(i) - centroids.row(labels[i])).squaredNorm();
    }
    if (inertia < best.inertia) {
      best.inertia = inertia;
      best.labels = labels;
      best.centroids = centroids;
    }
    best.restarts_used = restart + 1;
  }
  return best;
}

SpectralClustering spectral_cluster(const NormalizedSpectrum& spectrum,
                                    std::size_t num_clusters,
                                    std::uint64_t seed,
                                    const KMeansOptions& options) {
  const Eigen::Index q = spectrum.eigenvalues.size();
  if (num_clusters < 1 || static_cast<Eigen::Index>(num_clusters) > q) {
    throw std::invalid_argument(
        "spectral_cluster: num_clusters must lie in [1, " + std::to_string(q) +
        "]");
  }
  Eigen::MatrixXd embedding =
      spectrum.eigenvectors.leftCols(static_cast<Eigen::Index>(num_clusters));
  for (Eigen::Index i = 0; i < q; ++i) {
    const double norm = embedding.row(i).norm();
    if (norm > 0.0) embedding.row(i) /= norm;
  }
  const KMeansResult km = kmeans(embedding, num_clusters, seed, options);

  SpectralClustering result;
  // Relabel in order of first appearance so labels are compact.
  std::vector<int> remap(num_clusters, -1);
  int next = 0;
  result.labels.reserve(km.labels.size());
  for (int l : km.labels) {
    if (remap[l] < 0) remap[l] = next++;
    result.labels.push_back(remap[l]);
  }
  result.num_clusters = static_cast<std::size_t>(next);
  result.diagnostics.eigenvalues.assign(spectrum.eigenvalues.begin(),
                                        spectrum.eigenvalues.end());
  result.diagnostics.chosen_gap_index = num_clusters;
  result.diagnostics.kmeans_inertia = km.inertia;
  result.diagnostics.restarts_used = km.restarts_used;
  return result;
}

SpectralClustering spectral_cluster(const Eigen::MatrixXd& w,
                                    std::size_t num_clusters,
                                    std::uint64_t seed,
                                    const KMeansOptions& options) {
  RequireSymmetric(w, "spectral_cluster");
  if (num_clusters < 1 || static_cast<Eigen::Index>(num_clusters) > w.rows()) {
    throw std::invalid_argument("spectral_cluster: num_clusters exceeds order");
  }
  return spectral_cluster(normalized_spectrum(w), num_clusters, seed, options);
}

SpectralClustering spectral_cluster_auto(const Eigen::MatrixXd& w,
                                         std::size_t max_clusters,
                                         std::uint64_t seed,
                                         const KMeansOptions& options,
                                         GapRule rule) {
  RequireSymmetric(w, "spectral_cluster_auto");
  if (w.rows() == 1) {
    SpectralClustering single;
    single.labels = {0};
    single.num_clusters = 1;
    single.diagnostics.eigenvalues = {1.0};
    return single;
  }
  const NormalizedSpectrum spectrum = normalized_spectrum(w);
  std::vector<double> eigenvalues(spectrum.eigenvalues.begin(),
                                  spectrum.eigenvalues.end());
  const ClusterCountEstimate estimate =
      estimate_num_clusters(eigenvalues, std::max<std::size_t>(1, max_clusters),
                            rule);
  SpectralClustering result =
      spectral_cluster(spectrum, estimate.count, seed, options);
  result.diagnostics.chosen_gap_index = estimate.largest_gap_index;
  result.diagnostics.floor_applied = estimate.floor_applied;
  return result;
}

}  // namespace active_scan
