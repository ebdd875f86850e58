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

// Parallel scan. The pending order is dealt round-robin into one partition
// per worker, so each partition is itself degree-descending. A partition is
// an atomic cursor; owners and thieves claim ranks from it with fetch_add.
// A vertex whose est_lstat1 falls below the running maximum closes the
// partition it came from.
//
// Exact computations on neighborhoods larger than the chunk size become a
// shared HeavyTask whose member list is cut into chunks. Chunks go on a
// shared queue that every worker drains before claiming new vertices; the
// worker finishing the last chunk publishes the value.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include "active_scan/locality.h"
#include "active_scan/trimming.h"
#include "topq_driver.h"

namespace active_scan {
namespace {

struct HeavyTask {
  std::uint64_t id = 0;
  VertexId vertex = 0;
  std::vector<VertexId> members;
  std::atomic<EdgeCount> doubled{0};
  std::atomic<std::size_t> remaining{0};
};

struct ChunkTask {
  std::shared_ptr<HeavyTask> task;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ChunkQueue {
 public:
  void Push(std::vector<ChunkTask>& chunks) {
    std::lock_guard lock(mu_);
    for (auto& c : chunks) queue_.push_back(std::move(c));
    size_.store(queue_.size(), std::memory_order_release);
  }

  std::optional<ChunkTask> Pop() {
    if (size_.load(std::memory_order_acquire) == 0) return std::nullopt;
    std::lock_guard lock(mu_);
    if (queue_.empty()) return std::nullopt;
    ChunkTask c = std::move(queue_.front());
    queue_.pop_front();
    size_.store(queue_.size(), std::memory_order_release);
    return c;
  }

  bool Empty() const { return size_.load(std::memory_order_acquire) == 0; }

 private:
  std::mutex mu_;
  std::deque<ChunkTask> queue_;
  std::atomic<std::size_t> size_{0};
};

struct WorkerContext {
  explicit WorkerContext(const Graph& g) : ws(g) {}

  LocalityWorkspace ws;
  // Id of the heavy task whose members are currently marked, 0 for none.
  std::uint64_t marked_for = 0;
  std::vector<ScoredVertex> found;
  TrimCounters counters;
  WorkerStats stats;
  std::size_t scanned = 0;
};

class ParallelScan {
 public:
  ParallelScan(TrimState& state, EdgeCount floor, unsigned workers,
               const TrimOptions& options)
      : state_(state),
        g_(state.graph()),
        options_(options),
        workers_(workers),
        ranks_(state.pending_size()),
        cursors_(workers),
        max_(floor) {}

  std::vector<ScoredVertex> Run(std::vector<WorkerStats>* stats) {
    std::vector<std::unique_ptr<WorkerContext>> contexts;
    for (unsigned w = 0; w < workers_; ++w) {
      contexts.push_back(std::make_unique<WorkerContext>(g_));
    }
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 1; w < workers_; ++w) {
        threads.emplace_back([this, w, &contexts] { Work(w, *contexts[w]); });
      }
      Work(0, *contexts[0]);
    }

    std::vector<ScoredVertex> found;
    std::size_t scanned = 0;
    if (stats != nullptr) stats->resize(workers_);
    for (unsigned w = 0; w < workers_; ++w) {
      WorkerContext& ctx = *contexts[w];
      found.insert(found.end(), ctx.found.begin(), ctx.found.end());
      state_.counters() += ctx.counters;
      scanned = std::max(scanned, ctx.scanned);
      if (stats != nullptr) {
        WorkerStats& total = (*stats)[w];
        total.vertices_claimed += ctx.stats.vertices_claimed;
        total.vertices_stolen += ctx.stats.vertices_stolen;
        total.exact_computed += ctx.stats.exact_computed;
        total.chunks_processed += ctx.stats.chunks_processed;
        total.edges_scanned += ctx.stats.edges_scanned;
      }
    }
    ++state_.scans;
    state_.Commit(found, scanned);
    return found;
  }

 private:
  // Claims the next rank of partition p, if any remain.
  std::optional<std::size_t> Claim(unsigned p) {
    const std::size_t step = cursors_[p].fetch_add(1);
    const std::size_t rank = p + step * workers_;
    if (step >= ranks_ || rank >= ranks_) return std::nullopt;
    return rank;
  }

  void Close(unsigned p) { cursors_[p].store(ranks_); }

  void Work(unsigned w, WorkerContext& ctx) {
    for (;;) {
      if (auto chunk = chunks_.Pop()) {
        RunChunk(ctx, *chunk);
        continue;
      }
      std::optional<std::size_t> rank;
      unsigned from = w;
      // Own partition first, then steal round-robin.
      for (unsigned i = 0; i < workers_ && !rank; ++i) {
        from = (w + i) % workers_;
        in_flight_.fetch_add(1);
        rank = Claim(from);
        if (!rank) in_flight_.fetch_sub(1);
      }
      if (!rank) {
        // Claimed vertices may still turn into chunk work.
        if (chunks_.Empty() && in_flight_.load() == 0) return;
        std::this_thread::yield();
        continue;
      }
      ++ctx.stats.vertices_claimed;
      if (from != w) ++ctx.stats.vertices_stolen;
      ctx.scanned = std::max(ctx.scanned, *rank + 1);
      ProcessVertex(ctx, state_.pending_at(*rank), from);
      in_flight_.fetch_sub(1);
    }
  }

  void ProcessVertex(WorkerContext& ctx, VertexId v, unsigned partition) {
    if (state_.is_known(v)) return;
    TrimObserver* observer = options_.observer;
    const EdgeCount est1 = est_lstat1(g_, v);
    ++ctx.counters.est1;
    EdgeCount threshold = max_.load();
    if (est1 < threshold) {
      if (observer) observer->OnSkip({v, 1, est1, threshold});
      Close(partition);
      return;
    }
    bool evaluated = false;
    ctx.marked_for = 0;  // Est2 may reuse the marks
    const EdgeCount est2 = state_.Est2(v, ctx.ws, &evaluated);
    ctx.counters.est2 += evaluated;
    threshold = max_.load();
    if (est2 < threshold) {
      if (observer) observer->OnSkip({v, 2, est2, threshold});
      return;
    }

    auto& members = ctx.ws.members();
    closed_neighborhood(g_, v, members);
    if (members.size() <= options_.chunk_size) {
      auto& marks = ctx.ws.marks();
      marks.Clear();
      for (VertexId u : members) marks.Mark(u);
      ctx.marked_for = 0;
      ctx.stats.edges_scanned += CountIncident(members);
      Publish(ctx, v, local_stat_partial(g_, members, marks) / 2);
      return;
    }

    auto task = std::make_shared<HeavyTask>();
    task->id = ++next_task_id_;
    task->vertex = v;
    task->members = members;
    const std::size_t chunk = std::max<std::size_t>(1, options_.chunk_size);
    const std::size_t count = (members.size() + chunk - 1) / chunk;
    task->remaining.store(count);
    std::vector<ChunkTask> rest;
    for (std::size_t c = 1; c < count; ++c) {
      rest.push_back({task, c * chunk, std::min(members.size(), (c + 1) * chunk)});
    }
    chunks_.Push(rest);
    RunChunk(ctx, {task, 0, std::min(members.size(), chunk)});
  }

  void RunChunk(WorkerContext& ctx, const ChunkTask& chunk) {
    HeavyTask& task = *chunk.task;
    auto& marks = ctx.ws.marks();
    if (ctx.marked_for != task.id) {
      marks.Clear();
      for (VertexId u : task.members) marks.Mark(u);
      ctx.marked_for = task.id;
    }
    std::span<const VertexId> part(task.members.data() + chunk.begin,
                                   chunk.end - chunk.begin);
    ctx.stats.edges_scanned += CountIncident(part);
    ++ctx.stats.chunks_processed;
    task.doubled.fetch_add(local_stat_partial(g_, part, marks));
    if (task.remaining.fetch_sub(1) == 1) {
      Publish(ctx, task.vertex, task.doubled.load() / 2);
    }
  }

  void Publish(WorkerContext& ctx, VertexId v, EdgeCount value) {
    ctx.found.push_back({v, value});
    ++ctx.counters.computed;
    ++ctx.stats.exact_computed;
    EdgeCount previous = 0;
    if (max_.Offer(value, &previous) && options_.observer) {
      options_.observer->OnMaxRaised(previous, value);
    }
  }

  std::uint64_t CountIncident(std::span<const VertexId> part) const {
    std::uint64_t total = 0;
    for (VertexId u : part) total += degree_stat(g_, u);
    return total;
  }

  TrimState& state_;
  const Graph& g_;
  const TrimOptions& options_;
  const unsigned workers_;
  const std::size_t ranks_;
  std::vector<std::atomic<std::size_t>> cursors_;
  MonotoneMax max_;
  ChunkQueue chunks_;
  std::atomic<int> in_flight_{0};
  std::atomic<std::uint64_t> next_task_id_{0};
};

}  // namespace

std::vector<ScoredVertex> scan_pending_parallel(
    TrimState& state, EdgeCount floor, unsigned workers,
    const TrimOptions& options, std::vector<WorkerStats>* stats) {
  ParallelScan scan(state, floor, std::max(1u, workers), options);
  return scan.Run(stats);
}

TopQResult topq_lstat_parallel(const Graph& g, std::size_t q,
                               unsigned workers,
                               const TrimOptions& options) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::vector<WorkerStats> stats(workers);
  TopQResult result = internal::RunTopQ(
      g, q, workers, [&](TrimState& state, EdgeCount floor) {
        return scan_pending_parallel(state, floor, workers, options, &stats);
      });
  result.workers = std::move(stats);
  return result;
}

}  // namespace active_scan
