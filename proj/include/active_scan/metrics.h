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

#ifndef ACTIVE_SCAN_METRICS_H_
#define ACTIVE_SCAN_METRICS_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace active_scan {

// Adjusted Rand index as an exact fraction. Both parts are integers scaled
// so that ari = numerator / denominator; the fraction is reduced and the
// denominator is positive.
struct AriFraction {
  __int128 numerator = 0;
  __int128 denominator = 1;

  double value() const {
    return static_cast<double>(static_cast<long double>(numerator) /
                               static_cast<long double>(denominator));
  }
};

// Permutation-model adjusted Rand index of two labelings of the same items.
// Two partitions that are both all-singletons or both a single cluster score
// 1. Throws std::invalid_argument on a length mismatch or fewer than 2 items.
AriFraction ari_exact(std::span<const std::int64_t> a,
                      std::span<const std::int64_t> b);
double ari(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
double ari(std::span<const int> a, std::span<const int> b);

struct EvalCurve {
  std::vector<std::pair<double, double>> points;  // (fpr, tpr), (0,0)..(1,1)
  double auc = 0.0;
};

// ROC over thresholds at the distinct score values, highest first. Tied
// scores move the curve along one diagonal segment. Throws
// std::invalid_argument when the labels are all positive or all negative or
// the lengths differ.
EvalCurve roc_auc(std::span<const double> scores,
                  std::span<const std::uint8_t> positive);

// TPR of the curve at `fpr`: the highest point at that exact FPR, else linear
// interpolation between the neighbouring points.
double tpr_at(const EvalCurve& curve, double fpr);

// The fixed FPR grid 0, 0.01, ..., 1 used for vertical averaging.
std::vector<double> fpr_grid();

}  // namespace active_scan

#endif  // ACTIVE_SCAN_METRICS_H_
