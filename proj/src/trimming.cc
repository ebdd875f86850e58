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

#include "active_scan/trimming.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "active_scan/locality.h"
#include "topq_driver.h"

namespace active_scan {

bool MonotoneMax::Offer(EdgeCount candidate, EdgeCount* previous) {
  if (candidate <= load()) return false;
  std::lock_guard lock(mu_);
  const EdgeCount current = value_.load(std::memory_order_relaxed);
  if (candidate <= current) return false;
  value_.store(candidate, std::memory_order_relaxed);
  if (previous != nullptr) *previous = current;
  return true;
}

TrimState::TrimState(const Graph& g, std::span<const VertexId> candidates)
    : graph_(&g),
      pending_(candidates.begin(), candidates.end()),
      known_flag_(g.num_vertices(), 0),
      est2_cache_(g.num_vertices(), kUnknown),
      workspace_(g) {
  // Ascending (degree, -id) so that the back of the vector is the highest
  // degree with the smallest id among equals.
  std::sort(pending_.begin(), pending_.end(), [&](VertexId a, VertexId b) {
    const EdgeCount da = degree_stat(g, a);
    const EdgeCount db = degree_stat(g, b);
    return da != db ? da < db : a > b;
  });
  if (std::adjacent_find(pending_.begin(), pending_.end()) != pending_.end()) {
    throw std::invalid_argument("candidate set contains duplicates");
  }
}

EdgeCount TrimState::Est2(VertexId v, LocalityWorkspace& ws,
                          bool* evaluated) {
  EdgeCount& cached = est2_cache_[v];
  *evaluated = cached == kUnknown;
  if (*evaluated) cached = est_lstat2(*graph_, v, ws);
  return cached;
}

void TrimState::Commit(std::span<const ScoredVertex> found,
                       std::size_t scanned) {
  for (const ScoredVertex& s : found) {
    if (known_flag_[s.vertex] == 0) {
      known_flag_[s.vertex] = 1;
      known_.push_back(s);
    }
  }
  scanned = std::min(scanned, pending_.size());
  // Ranks [0, scanned) occupy the tail of the vector.
  auto tail = pending_.end() - static_cast<std::ptrdiff_t>(scanned);
  auto kept = std::remove_if(tail, pending_.end(),
                             [&](VertexId v) { return known_flag_[v] != 0; });
  pending_.erase(kept, pending_.end());
}

std::vector<ScoredVertex> scan_pending(TrimState& state, EdgeCount floor,
                                       const TrimOptions& options) {
  const Graph& g = state.graph();
  LocalityWorkspace& ws = state.workspace();
  TrimCounters& counters = state.counters();
  std::vector<ScoredVertex> found;
  EdgeCount curr_max = floor;
  std::size_t scanned = 0;
  for (std::size_t rank = 0; rank < state.pending_size(); ++rank) {
    const VertexId v = state.pending_at(rank);
    scanned = rank + 1;
    const EdgeCount est1 = est_lstat1(g, v);
    ++counters.est1;
    if (est1 < curr_max) {
      if (options.observer) options.observer->OnSkip({v, 1, est1, curr_max});
      // est_lstat1 is monotone in degree, so every later vertex fails too.
      break;
    }
    bool evaluated = false;
    const EdgeCount est2 = state.Est2(v, ws, &evaluated);
    counters.est2 += evaluated;
    if (est2 < curr_max) {
      if (options.observer) options.observer->OnSkip({v, 2, est2, curr_max});
      continue;
    }
    const EdgeCount value = local_stat(g, v, ws);
    ++counters.computed;
    found.push_back({v, value});
    if (value > curr_max) {
      if (options.observer) options.observer->OnMaxRaised(curr_max, value);
      curr_max = value;
    }
  }
  ++state.scans;
  state.Commit(found, scanned);
  return found;
}

std::vector<ScoredVertex> top_lstat(const Graph& g,
                                    std::span<const VertexId> candidates,
                                    EdgeCount floor, TrimCounters* counters) {
  if (candidates.empty()) {
    throw std::invalid_argument("top_lstat: empty candidate set");
  }
  for (VertexId v : candidates) {
    if (v >= g.num_vertices()) {
      throw std::invalid_argument("top_lstat: vertex " + std::to_string(v) +
                                  " out of range");
    }
  }
  TrimState state(g, candidates);
  auto found = scan_pending(state, floor);
  if (counters != nullptr) *counters = state.counters();
  return found;
}

namespace internal {

TopQResult RunTopQ(const Graph& g, std::size_t q, unsigned workers,
                   const ScanFn& scan) {
  const std::size_t n = g.num_vertices();
  if (q < 1 || q > n) {
    throw std::invalid_argument("Q must lie in [1, " + std::to_string(n) +
                                "], got " + std::to_string(q));
  }
  TopQResult result;
  result.q = q;

  if (q == n) {
    // Nothing can be trimmed: every value is part of the answer.
    const auto values = psi_k_all(g, 1, workers);
    result.entries.reserve(n);
    for (VertexId v = 0; v < n; ++v) result.entries.push_back({v, values[v]});
    std::sort(result.entries.begin(), result.entries.end(), RanksBefore);
    result.computed_count = n;
    return result;
  }

  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  TrimState state(g, all);

  while (state.known().size() < q && state.pending_size() > 0) {
    scan(state, 0);
  }

  auto ranked = [&] {
    std::vector<ScoredVertex> sorted = state.known();
    std::sort(sorted.begin(), sorted.end(), RanksBefore);
    return sorted;
  };
  std::vector<ScoredVertex> sorted = ranked();
  while (state.pending_size() > 0) {
    const EdgeCount kth = sorted[q - 1].value;
    const auto found = scan(state, kth);
    const bool raised = std::any_of(
        found.begin(), found.end(),
        [&](const ScoredVertex& s) { return s.value > kth; });
    if (!found.empty()) sorted = ranked();
    if (!raised) break;
  }

  const EdgeCount threshold = sorted[q - 1].value;
  auto cut = std::find_if(sorted.begin(), sorted.end(),
                          [&](const ScoredVertex& s) {
                            return s.value < threshold;
                          });
  sorted.erase(cut, sorted.end());
  result.entries = std::move(sorted);
  result.computed_count = state.counters().computed;
  result.est1_count = state.counters().est1;
  result.est2_count = state.counters().est2;
  result.scans = state.scans;
  return result;
}

}  // namespace internal

TopQResult topq_lstat(const Graph& g, std::size_t q,
                      const TrimOptions& options) {
  return internal::RunTopQ(
      g, q, 1, [&](TrimState& state, EdgeCount floor) {
        return scan_pending(state, floor, options);
      });
}

}  // namespace active_scan
