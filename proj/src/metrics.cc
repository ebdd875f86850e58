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

#include "active_scan/metrics.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace active_scan {
namespace {

__int128 Pairs(std::uint64_t count) {
  return static_cast<__int128>(count) * (count > 0 ? count - 1 : 0) / 2;
}

__int128 Abs(__int128 x) { return x < 0 ? -x : x; }

__int128 Gcd(__int128 a, __int128 b) {
  a = Abs(a);
  b = Abs(b);
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

AriFraction ari_exact(std::span<const std::int64_t> a,
                      std::span<const std::int64_t> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("ari: label sequences differ in length");
  }
  if (a.size() < 2) throw std::invalid_argument("ari: need at least 2 items");

  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> cells;
  std::map<std::int64_t, std::uint64_t> rows;
  std::map<std::int64_t, std::uint64_t> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++cells[{a[i], b[i]}];
    ++rows[a[i]];
    ++cols[b[i]];
  }
  __int128 index = 0;
  for (const auto& [key, c] : cells) index += Pairs(c);
  __int128 sum_a = 0;
  for (const auto& [key, c] : rows) sum_a += Pairs(c);
  __int128 sum_b = 0;
  for (const auto& [key, c] : cols) sum_b += Pairs(c);
  const __int128 total = Pairs(a.size());

  // (index - E) / (max - E) with E = sum_a sum_b / total and
  // max = (sum_a + sum_b) / 2, multiplied through by 2 total.
  AriFraction f;
  f.numerator = 2 * (index * total - sum_a * sum_b);
  f.denominator = (sum_a + sum_b) * total - 2 * sum_a * sum_b;
  if (f.denominator == 0) {
    // Only reachable when both partitions are all singletons or both are a
    // single cluster, i.e. they coincide.
    f.numerator = 1;
    f.denominator = 1;
    return f;
  }
  if (f.denominator < 0) {
    f.numerator = -f.numerator;
    f.denominator = -f.denominator;
  }
  const __int128 g = Gcd(f.numerator, f.denominator);
  if (g > 1) {
    f.numerator /= g;
    f.denominator /= g;
  }
  return f;
}

double ari(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return ari_exact(a, b).value();
}

double ari(std::span<const int> a, std::span<const int> b) {
  const std::vector<std::int64_t> wa(a.begin(), a.end());
  const std::vector<std::int64_t> wb(b.begin(), b.end());
  return ari(wa, wb);
}

EvalCurve roc_auc(std::span<const double> scores,
                  std::span<const std::uint8_t> positive) {
  if (scores.size() != positive.size()) {
    throw std::invalid_argument("roc_auc: scores and labels differ in length");
  }
  std::uint64_t total_pos = 0;
  for (std::uint8_t p : positive) total_pos += p != 0;
  const std::uint64_t total_neg = positive.size() - total_pos;
  if (total_pos == 0 || total_neg == 0) {
    throw std::invalid_argument(
        "roc_auc: need at least one positive and one negative");
  }

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return scores[x] > scores[y];
  });

  EvalCurve curve;
  curve.points.emplace_back(0.0, 0.0);
  // Twice the area in units of one (negative, positive) pair, kept integral
  // so the only rounding is the final division.
  __int128 doubled_area = 0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]];
    std::uint64_t step_tp = 0;
    std::uint64_t step_fp = 0;
    for (; i < order.size() && scores[order[i]] == s; ++i) {
      if (positive[order[i]]) {
        ++step_tp;
      } else {
        ++step_fp;
      }
    }
    doubled_area += static_cast<__int128>(step_fp) * (2 * tp + step_tp);
    tp += step_tp;
    fp += step_fp;
    curve.points.emplace_back(static_cast<double>(fp) / total_neg,
                              static_cast<double>(tp) / total_pos);
  }
  curve.auc = static_cast<double>(
      static_cast<long double>(doubled_area) /
      (2.0L * static_cast<long double>(total_pos) * total_neg));
  return curve;
}

double tpr_at(const EvalCurve& curve, double fpr) {
  const auto& pts = curve.points;
  if (pts.empty()) throw std::invalid_argument("tpr_at: empty curve");
  // Last point with x <= fpr; on a vertical run that is its top.
  auto it = std::upper_bound(
      pts.begin(), pts.end(), fpr,
      [](double x, const std::pair<double, double>& p) { return x < p.first; });
  if (it == pts.begin()) return pts.front().second;
  const auto& lo = *std::prev(it);
  if (lo.first == fpr || it == pts.end()) return lo.second;
  const auto& hi = *it;
  const double t = (fpr - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

std::vector<double> fpr_grid() {
  std::vector<double> grid(101);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = i / 100.0;
  return grid;
}

}  // namespace active_scan
