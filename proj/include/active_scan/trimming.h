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

// Top-Q search over Psi_1 with bound-based trimming.
//
// A scan walks candidates in degree-descending order holding a running
// maximum. For each vertex the O(1) bound est_lstat1 is checked first, then
// the O(deg) bound est_lstat2, and only when both are >= the running maximum
// is the exact statistic computed. A bound equal to the threshold is never
// pruned.
//
// topq_lstat runs scans in two stages. Stage one repeats floor-0 scans over
// the still-unknown vertices until at least Q exact values are known. Stage
// two repeats scans with the floor set to the current Q-th largest value
// until a scan finds nothing strictly above that floor. At that point every
// vertex with Psi_1 >= the Q-th value has been computed, so the returned
// entries are exact, ties included.

#ifndef ACTIVE_SCAN_TRIMMING_H_
#define ACTIVE_SCAN_TRIMMING_H_

#include <atomic>
#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "active_scan/graph.h"
#include "active_scan/locality.h"

namespace active_scan {

struct ScoredVertex {
  VertexId vertex = 0;
  EdgeCount value = 0;

  bool operator==(const ScoredVertex&) const = default;
};

// Orders by value descending, then vertex id ascending.
inline bool RanksBefore(const ScoredVertex& a, const ScoredVertex& b) {
  return a.value != b.value ? a.value > b.value : a.vertex < b.vertex;
}

struct TrimCounters {
  std::size_t computed = 0;
  std::size_t est1 = 0;
  std::size_t est2 = 0;

  TrimCounters& operator+=(const TrimCounters& o) {
    computed += o.computed;
    est1 += o.est1;
    est2 += o.est2;
    return *this;
  }
};

struct SkipEvent {
  VertexId vertex;
  int bound_kind;  // 1 or 2
  EdgeCount bound;
  EdgeCount threshold;
};

// Hooks for instrumentation and tests. In the parallel search the callbacks
// run concurrently and must be thread-safe.
class TrimObserver {
 public:
  virtual ~TrimObserver() = default;
  virtual void OnSkip(const SkipEvent&) {}
  virtual void OnMaxRaised(EdgeCount /*previous*/, EdgeCount /*current*/) {}
};

struct TrimOptions {
  // Closed neighborhoods larger than this are split into chunks of this many
  // members that other workers may pick up.
  std::size_t chunk_size = 1024;
  TrimObserver* observer = nullptr;
};

struct WorkerStats {
  std::size_t vertices_claimed = 0;
  std::size_t vertices_stolen = 0;
  std::size_t exact_computed = 0;
  std::size_t chunks_processed = 0;
  // Incident-edge visits inside exact computations.
  std::uint64_t edges_scanned = 0;
};

struct TopQResult {
  std::size_t q = 0;
  // Every vertex with Psi_1 >= entries[q-1].value, ranked by RanksBefore.
  std::vector<ScoredVertex> entries;
  std::size_t computed_count = 0;
  std::size_t est1_count = 0;
  std::size_t est2_count = 0;
  std::size_t scans = 0;
  // Populated by the parallel search only.
  std::vector<WorkerStats> workers;
};

// Running maximum shared between scan workers. Reads are unsynchronized and
// may be stale; an update takes the lock only after an unlocked pre-check
// says it would raise the value, and re-checks under the lock.
class MonotoneMax {
 public:
  explicit MonotoneMax(EdgeCount initial) : value_(initial) {}

  EdgeCount load() const { return value_.load(std::memory_order_relaxed); }

  // Returns true when `candidate` raised the maximum; the value it replaced
  // is stored in `previous`.
  bool Offer(EdgeCount candidate, EdgeCount* previous = nullptr);

 private:
  std::atomic<EdgeCount> value_;
  std::mutex mu_;
};

// Search state shared by consecutive scans of one top-Q query.
//
// Invariants: a vertex is either known (exact value recorded) or pending;
// pending is kept in degree-descending order with ties by ascending id;
// est_lstat2 is evaluated at most once per vertex and cached.
class TrimState {
 public:
  TrimState(const Graph& g, std::span<const VertexId> candidates);

  const Graph& graph() const { return *graph_; }

  std::size_t pending_size() const { return pending_.size(); }
  // Rank 0 is the highest-degree pending vertex.
  VertexId pending_at(std::size_t rank) const {
    return pending_[pending_.size() - 1 - rank];
  }

  bool is_known(VertexId v) const { return known_flag_[v] != 0; }
  const std::vector<ScoredVertex>& known() const { return known_; }

  // Cached est_lstat2; `evaluated` is set when this call computed it.
  EdgeCount Est2(VertexId v, LocalityWorkspace& ws, bool* evaluated);

  // Records exact values and drops known vertices from the first `scanned`
  // ranks of the pending order.
  void Commit(std::span<const ScoredVertex> found, std::size_t scanned);

  TrimCounters& counters() { return counters_; }
  // Scratch for the serial scan, reused across scans.
  LocalityWorkspace& workspace() { return workspace_; }
  std::size_t scans = 0;

 private:
  static constexpr EdgeCount kUnknown = ~EdgeCount{0};

  const Graph* graph_;
  std::vector<VertexId> pending_;  // degree-ascending; back is rank 0
  std::vector<std::uint8_t> known_flag_;
  std::vector<EdgeCount> est2_cache_;
  std::vector<ScoredVertex> known_;
  TrimCounters counters_;
  LocalityWorkspace workspace_;
};

// One scan over the pending vertices of `state` starting from `floor`.
// Returns the vertices whose exact value was computed during the scan; they
// are also committed to `state`.
std::vector<ScoredVertex> scan_pending(TrimState& state, EdgeCount floor,
                                       const TrimOptions& options = {});
std::vector<ScoredVertex> scan_pending_parallel(
    TrimState& state, EdgeCount floor, unsigned workers,
    const TrimOptions& options, std::vector<WorkerStats>* stats);

// Single scan over `candidates`. Every candidate v has Psi_1(v) <= the
// maximum of `floor` and the returned values. Throws std::invalid_argument
// on an empty candidate set.
std::vector<ScoredVertex> top_lstat(const Graph& g,
                                    std::span<const VertexId> candidates,
                                    EdgeCount floor,
                                    TrimCounters* counters = nullptr);

// The Q vertices of largest Psi_1. Throws std::invalid_argument unless
// 1 <= q <= n.
TopQResult topq_lstat(const Graph& g, std::size_t q,
                      const TrimOptions& options = {});

// Same values as topq_lstat for any worker count. Vertices are dealt to
// per-worker partitions that idle workers steal from; exact computations on
// large neighborhoods are split into chunk tasks.
TopQResult topq_lstat_parallel(const Graph& g, std::size_t q,
                               unsigned workers,
                               const TrimOptions& options = {});

}  // namespace active_scan

#endif  // ACTIVE_SCAN_TRIMMING_H_
