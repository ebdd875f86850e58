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

#include "active_scan/locality.h"

#include <algorithm>
#include <memory>

#include "active_scan/parallel.h"

namespace active_scan {

LocalityScore psi_k(const Graph& g, VertexId v, unsigned k,
                    LocalityWorkspace& ws) {
  if (k == 0) return {v, 0, degree_stat(g, v)};
  neighborhood(g, v, k, ws.marks(), ws.members());
  return {v, k, induced_edge_count(g, ws.members(), ws.marks())};
}

LocalityScore psi_k(const Graph& g, VertexId v, unsigned k) {
  if (k == 0) return {v, 0, degree_stat(g, v)};
  LocalityWorkspace ws(g);
  return psi_k(g, v, k, ws);
}

EdgeCount local_stat_partial(const Graph& g, std::span<const VertexId> part,
                             const VertexMarks& marks) {
  EdgeCount count = 0;
  for (VertexId u : part) {
    // u itself is in N_1[v], so an incident edge is internal iff its other
    // endpoint is.
    for (VertexId w : g.out_neighbors(u)) count += marks.IsMarked(w);
    for (VertexId w : g.in_neighbors(u)) count += marks.IsMarked(w);
  }
  return count;
}

EdgeCount local_stat(const Graph& g, VertexId v, LocalityWorkspace& ws) {
  auto& members = ws.members();
  closed_neighborhood(g, v, members);
  auto& marks = ws.marks();
  marks.Clear();
  for (VertexId u : members) marks.Mark(u);
  return local_stat_partial(g, members, marks) / 2;
}

EdgeCount local_stat(const Graph& g, VertexId v) {
  LocalityWorkspace ws(g);
  return local_stat(g, v, ws);
}

EdgeCount est_lstat2(const Graph& g, VertexId v, LocalityWorkspace& ws) {
  auto& members = ws.members();
  closed_neighborhood(g, v, members);
  const EdgeCount cap = 2 * static_cast<EdgeCount>(members.size());
  EdgeCount sum = 0;
  for (VertexId u : members) sum += std::min(degree_stat(g, u), cap);
  // The true doubled count is even and <= sum, so flooring stays an upper
  // bound.
  return sum / 2;
}

EdgeCount est_lstat2(const Graph& g, VertexId v) {
  std::vector<VertexId> members;
  closed_neighborhood(g, v, members);
  const EdgeCount cap = 2 * static_cast<EdgeCount>(members.size());
  EdgeCount sum = 0;
  for (VertexId u : members) sum += std::min(degree_stat(g, u), cap);
  return sum / 2;
}

std::vector<EdgeCount> psi_k_all(const Graph& g, unsigned k,
                                 unsigned workers) {
  const std::size_t n = g.num_vertices();
  std::vector<EdgeCount> values(n, 0);
  if (k == 0) {
    for (VertexId v = 0; v < n; ++v) values[v] = degree_stat(g, v);
    return values;
  }
  workers = std::max(1u, workers);
  std::vector<std::unique_ptr<LocalityWorkspace>> spaces(workers);
  parallel_for(n, workers, [&](unsigned w, std::size_t v) {
    if (!spaces[w]) spaces[w] = std::make_unique<LocalityWorkspace>(g);
    values[v] = psi_k(g, static_cast<VertexId>(v), k, *spaces[w]).value;
  });
  return values;
}

}  // namespace active_scan
