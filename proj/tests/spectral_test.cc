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

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "active_scan/metrics.h"
#include "active_scan/spectral.h"

namespace active_scan {
namespace {

Eigen::MatrixXd BlockAffinity(const std::vector<int>& sizes, double inside,
                              double across) {
  int n = 0;
  for (int s : sizes) n += s;
  Eigen::MatrixXd w = Eigen::MatrixXd::Constant(n, n, across);
  int start = 0;
  for (int s : sizes) {
    w.block(start, start, s, s).setConstant(inside);
    start += s;
  }
  w.diagonal().setOnes();
  return w;
}

std::vector<int> Truth(const std::vector<int>& sizes) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    labels.insert(labels.end(), sizes[b], static_cast<int>(b));
  }
  return labels;
}

TEST(RbfTest, IdenticalNeighborhoodsGiveUnitAffinity) {
  const Eigen::MatrixXd s = Eigen::MatrixXd::Ones(4, 4);
  const Affinity a = rbf_affinity(s);
  EXPECT_EQ(a.sigma, 1.0);  // median distance 0 falls back to 1
  EXPECT_TRUE(a.values == Eigen::MatrixXd::Ones(4, 4));
}

TEST(RbfTest, DisjointNeighborhoodsWithUnitSigma) {
  const Eigen::MatrixXd s = Eigen::MatrixXd::Identity(3, 3);
  const Affinity a = rbf_affinity(s, 1.0);
  EXPECT_DOUBLE_EQ(a.values(0, 1), std::exp(-0.5));
  EXPECT_EQ(a.values(2, 2), 1.0);
}

TEST(RbfTest, AutomaticSigmaIsMedianDistance) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(3, 3);
  s(0, 1) = s(1, 0) = 0.8;  // distance 0.2
  s(0, 2) = s(2, 0) = 0.5;  // 0.5
  s(1, 2) = s(2, 1) = 0.1;  // 0.9
  const Affinity a = rbf_affinity(s);
  EXPECT_DOUBLE_EQ(a.sigma, 0.5);
  EXPECT_DOUBLE_EQ(a.values(1, 2), std::exp(-0.81 / 0.5));
}

TEST(RbfTest, NonPositiveSigmaRejected) {
  const Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_THROW(rbf_affinity(s, 0.0), std::invalid_argument);
  EXPECT_THROW(rbf_affinity(s, -1.0), std::invalid_argument);
}

TEST(EigengapTest, SecondGapWins) {
  const std::vector<double> eigs{1, 1, 0.1, 0.09};
  const auto est = estimate_num_clusters(eigs, 8);
  EXPECT_EQ(est.count, 2u);
  EXPECT_EQ(est.largest_gap_index, 2u);
  EXPECT_FALSE(est.floor_applied);
  EXPECT_EQ(estimate_num_clusters(eigs, 8, GapRule::kRelative).count, 2u);
}

TEST(EigengapTest, LeadingGapIsRaisedToTheFloor) {
  const std::vector<double> eigs{1, 0.2, 0.19, 0.18};
  const auto est = estimate_num_clusters(eigs, 8);
  EXPECT_EQ(est.count, 2u);
  EXPECT_TRUE(est.floor_applied);
}

TEST(EigengapTest, CapLimitsTheSearch) {
  const std::vector<double> eigs{1, 0.9, 0.85, 0.5, 0.1};
  EXPECT_EQ(estimate_num_clusters(eigs, 8).count, 4u);
  EXPECT_EQ(estimate_num_clusters(eigs, 3).count, 3u);
  EXPECT_EQ(estimate_num_clusters(eigs, 8, GapRule::kRelative).count, 4u);
  EXPECT_EQ(estimate_num_clusters(eigs, 3, GapRule::kRelative).count, 3u);
}

TEST(EigengapTest, RelativeRuleSeesSmallSeparatedEigenvalues) {
  // Linear gaps are dominated by the leading one; the ratio is not.
  const std::vector<double> eigs{1, 0.05, 0.04, 0.004, 0.0039, 0.0038};
  EXPECT_EQ(estimate_num_clusters(eigs, 8).count, 2u);
  const auto rel = estimate_num_clusters(eigs, 8, GapRule::kRelative);
  EXPECT_EQ(rel.count, 3u);
  EXPECT_TRUE(rel.floor_applied);
}

TEST(EigengapTest, InvalidInput) {
  const std::vector<double> one{1};
  const std::vector<double> two{1, 0.5};
  EXPECT_THROW(estimate_num_clusters(one, 8), std::invalid_argument);
  EXPECT_THROW(estimate_num_clusters(two, 0), std::invalid_argument);
  EXPECT_THROW(parse_gap_rule("log"), std::invalid_argument);
  EXPECT_EQ(parse_gap_rule("relative"), GapRule::kRelative);
  EXPECT_STREQ(gap_rule_name(GapRule::kAbsolute), "absolute");
}

TEST(SpectrumTest, EigenpairResiduals) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd w(30, 30);
  for (int i = 0; i < 30; ++i) {
    w(i, i) = 1.0;
    for (int j = i + 1; j < 30; ++j) w(i, j) = w(j, i) = unit(rng);
  }
  const NormalizedSpectrum spectrum = normalized_spectrum(w);
  for (int i = 0; i < 30; ++i) {
    const Eigen::VectorXd v = spectrum.eigenvectors.col(i);
    EXPECT_LT((spectrum.normalized * v - spectrum.eigenvalues(i) * v).norm(), 1e-8);
    if (i > 0) {
      EXPECT_GE(spectrum.eigenvalues(i - 1), spectrum.eigenvalues(i));
    }
  }
  EXPECT_NEAR(spectrum.eigenvalues(0), 1.0, 1e-10);
}

TEST(SpectrumTest, RejectsAsymmetric) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Ones(3, 3);
  w(0, 2) = 0.5;
  EXPECT_THROW(normalized_spectrum(w), std::invalid_argument);
  EXPECT_THROW(normalized_spectrum(Eigen::MatrixXd::Ones(2, 3)),
               std::invalid_argument);
}

TEST(SpectralClusterTest, IdealBlocksAreRecoveredWithTheirCount) {
  for (int c = 2; c <= 5; ++c) {
    const std::vector<int> sizes(c, 6);
    const Eigen::MatrixXd w = BlockAffinity(sizes, 1.0, 0.0);
    for (GapRule rule : {GapRule::kAbsolute, GapRule::kRelative}) {
      const SpectralClustering sc = spectral_cluster_auto(w, 8, 7, {}, rule);
      EXPECT_EQ(sc.num_clusters, static_cast<std::size_t>(c));
      EXPECT_EQ(ari(std::span<const int>(sc.labels), Truth(sizes)), 1.0);
    }
  }
}

TEST(SpectralClusterTest, NoisyTwoBlocks) {
  const std::vector<int> sizes{15, 10};
  const Eigen::MatrixXd w = BlockAffinity(sizes, 0.9, 0.1);
  const SpectralClustering sc = spectral_cluster(w, 2, 3);
  EXPECT_EQ(sc.labels[0], 0);  // compacted by first appearance
  EXPECT_EQ(ari(std::span<const int>(sc.labels), Truth(sizes)), 1.0);
}

TEST(SpectralClusterTest, SingleClusterIsAllZero) {
  const Eigen::MatrixXd w = BlockAffinity({4, 4}, 0.9, 0.1);
  const SpectralClustering sc = spectral_cluster(w, 1, 3);
  EXPECT_EQ(sc.labels, std::vector<int>(8, 0));
  EXPECT_EQ(sc.num_clusters, 1u);
}

TEST(SpectralClusterTest, SeedDeterminism) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd w(40, 40);
  for (int i = 0; i < 40; ++i) {
    w(i, i) = 1.0;
    for (int j = i + 1; j < 40; ++j) w(i, j) = w(j, i) = unit(rng);
  }
  const SpectralClustering a = spectral_cluster(w, 4, 17);
  const SpectralClustering b = spectral_cluster(w, 4, 17);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.diagnostics.kmeans_inertia, b.diagnostics.kmeans_inertia);
  std::set<int> used(a.labels.begin(), a.labels.end());
  EXPECT_EQ(used.size(), 4u);
}

TEST(SpectralClusterTest, InvalidCounts) {
  const Eigen::MatrixXd w = Eigen::MatrixXd::Ones(3, 3);
  EXPECT_THROW(spectral_cluster(w, 0, 1), std::invalid_argument);
  EXPECT_THROW(spectral_cluster(w, 4, 1), std::invalid_argument);
}

TEST(SpectralClusterTest, SingleVertexAuto) {
  const SpectralClustering sc =
      spectral_cluster_auto(Eigen::MatrixXd::Ones(1, 1), 8, 1);
  EXPECT_EQ(sc.num_clusters, 1u);
  EXPECT_EQ(sc.labels, std::vector<int>{0});
}

TEST(KMeansTest, DuplicatePointsStillFillEveryCluster) {
  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(6, 2);
  points(5, 0) = 1.0;
  const KMeansResult r = kmeans(points, 3, 5);
  std::set<int> used(r.labels.begin(), r.labels.end());
  EXPECT_EQ(used.size(), 3u);
}

TEST(MdsTest, SinglePointAtOrigin) {
  const MdsEmbedding e = classical_mds(Eigen::MatrixXd::Ones(1, 1), 1);
  EXPECT_EQ(e.coordinates.rows(), 1);
  EXPECT_NEAR(e.coordinates(0, 0), 0.0, 1e-12);
}

TEST(MdsTest, EquilateralTriangle) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Constant(3, 3, 0.4);
  s.diagonal().setOnes();
  const MdsEmbedding e = classical_mds(s, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double d = (e.coordinates.row(i) - e.coordinates.row(j)).norm();
      EXPECT_NEAR(d, 0.6, 1e-9);
    }
  }
  EXPECT_FALSE(e.clamped_negative);
}

TEST(MdsTest, PlanarPointsReproduceDistances) {
  const double pts[5][2] = {{0, 0}, {0.3, 0.1}, {0.1, 0.4}, {0.5, 0.5}, {0.2, 0.2}};
  Eigen::MatrixXd s(5, 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      s(i, j) = 1.0 - std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
    }
  }
  const MdsEmbedding e = classical_mds(s, 2);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_NEAR((e.coordinates.row(i) - e.coordinates.row(j)).norm(),
                  1.0 - s(i, j), 1e-9);
    }
  }
}

TEST(MdsTest, InvalidDims) {
  const Eigen::MatrixXd s = Eigen::MatrixXd::Ones(2, 2);
  EXPECT_THROW(classical_mds(s, 0), std::invalid_argument);
  EXPECT_THROW(classical_mds(s, 3), std::invalid_argument);
}

}  // namespace
}  // namespace active_scan
