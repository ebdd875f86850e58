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

#include "active_scan/graph.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace active_scan {

Graph Graph::FromEdges(std::size_t n, std::vector<Edge> edges,
                       BuildStats* stats) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("vertex count exceeds 32-bit id space");
  }
  BuildStats local;
  std::erase_if(edges, [&](const Edge& e) {
    if (e.first >= n || e.second >= n) {
      throw std::invalid_argument("edge endpoint " +
                                  std::to_string(std::max(e.first, e.second)) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (e.first == e.second) {
      ++local.self_loops_dropped;
      return true;
    }
    return false;
  });
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  local.duplicates_dropped = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  Graph g;
  g.num_vertices_ = n;
  g.out_offsets_.assign(n + 1, 0);
  for (const auto& [u, w] : edges) ++g.out_offsets_[u + 1];
  for (std::size_t v = 0; v < n; ++v) g.out_offsets_[v + 1] += g.out_offsets_[v];
  g.out_targets_.reserve(edges.size());
  for (const auto& e : edges) g.out_targets_.push_back(e.second);
  g.BuildTranspose();
  if (stats != nullptr) *stats = local;
  return g;
}

Graph Graph::FromOutCsr(std::vector<std::uint64_t> offsets,
                        std::vector<VertexId> targets) {
  if (offsets.empty() || offsets.front() != 0 ||
      offsets.back() != targets.size()) {
    throw std::invalid_argument("malformed CSR offsets");
  }
  const std::size_t n = offsets.size() - 1;
  if (n > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("vertex count exceeds 32-bit id space");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1]) {
      throw std::invalid_argument("CSR offsets not monotone at vertex " +
                                  std::to_string(v));
    }
    for (std::uint64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      const VertexId t = targets[i];
      if (t >= n) throw std::invalid_argument("CSR target out of range");
      if (t == v) throw std::invalid_argument("CSR contains a self-loop");
      if (i > offsets[v] && targets[i - 1] >= t) {
        throw std::invalid_argument("CSR adjacency not strictly increasing");
      }
    }
  }
  Graph g;
  g.num_vertices_ = n;
  g.out_offsets_ = std::move(offsets);
  g.out_targets_ = std::move(targets);
  g.BuildTranspose();
  return g;
}

void Graph::BuildTranspose() {
  const std::size_t n = num_vertices_;
  in_offsets_.assign(n + 1, 0);
  for (VertexId t : out_targets_) ++in_offsets_[t + 1];
  for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
  in_targets_.resize(out_targets_.size());
  std::vector<std::uint64_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  // Sources are visited in increasing order, so every in-list comes out sorted.
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId t : out_neighbors(u)) in_targets_[cursor[t]++] = u;
  }
}

bool Graph::has_edge(VertexId from, VertexId to) const {
  auto adj = out_neighbors(from);
  return std::binary_search(adj.begin(), adj.end(), to);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices_; ++u) {
    for (VertexId w : out_neighbors(u)) result.emplace_back(u, w);
  }
  return result;
}

void closed_neighborhood(const Graph& g, VertexId v,
                         std::vector<VertexId>& out) {
  out.clear();
  auto outs = g.out_neighbors(v);
  auto ins = g.in_neighbors(v);
  out.reserve(outs.size() + ins.size() + 1);
  std::set_union(outs.begin(), outs.end(), ins.begin(), ins.end(),
                 std::back_inserter(out));
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
}

void neighborhood(const Graph& g, VertexId v, unsigned k, VertexMarks& marks,
                  std::vector<VertexId>& out) {
  if (k == 1) {
    closed_neighborhood(g, v, out);
    return;
  }
  marks.Clear();
  out.clear();
  out.push_back(v);
  marks.Mark(v);
  std::size_t frontier_begin = 0;
  for (unsigned depth = 0; depth < k; ++depth) {
    const std::size_t frontier_end = out.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const VertexId u = out[i];
      for (VertexId w : g.out_neighbors(u)) {
        if (marks.Insert(w)) out.push_back(w);
      }
      for (VertexId w : g.in_neighbors(u)) {
        if (marks.Insert(w)) out.push_back(w);
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(out.begin(), out.end());
}

std::vector<VertexId> neighborhood(const Graph& g, VertexId v, unsigned k) {
  std::vector<VertexId> out;
  if (k == 1) {
    closed_neighborhood(g, v, out);
    return out;
  }
  VertexMarks marks(g.num_vertices());
  neighborhood(g, v, k, marks, out);
  return out;
}

EdgeCount induced_edge_count(const Graph& g,
                             std::span<const VertexId> members,
                             VertexMarks& marks) {
  marks.Clear();
  for (VertexId u : members) marks.Mark(u);
  EdgeCount doubled = 0;
  for (VertexId u : members) {
    for (VertexId w : g.out_neighbors(u)) doubled += marks.IsMarked(w);
    for (VertexId w : g.in_neighbors(u)) doubled += marks.IsMarked(w);
  }
  return doubled / 2;
}

EdgeCount induced_edge_count(const Graph& g,
                             std::span<const VertexId> members) {
  VertexMarks marks(g.num_vertices());
  return induced_edge_count(g, members, marks);
}

}  // namespace active_scan
