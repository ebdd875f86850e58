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

// Locality statistic Psi_k(v): the number of directed edges in the subgraph
// induced by the closed k-th order neighborhood of v, measured on the
// underlying undirected graph. Psi_0(v) is in-degree plus out-degree.
//
// For k = 1 two cheap upper bounds drive trimming:
//   est_lstat1(v) = d^2 + d with d = Psi_0(v)
//   est_lstat2(v) = floor(1/2 * sum_{u in N_1[v]} min(Psi_0(u), 2 |N_1[v]|))

#ifndef ACTIVE_SCAN_LOCALITY_H_
#define ACTIVE_SCAN_LOCALITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "active_scan/graph.h"
#include "active_scan/vertex_marks.h"

namespace active_scan {

struct LocalityScore {
  VertexId vertex = 0;
  unsigned k = 0;
  EdgeCount value = 0;

  bool operator==(const LocalityScore&) const = default;
};

// Per-thread scratch for the statistic kernels. Sized to the graph once and
// reused across calls so hot loops do not allocate.
class LocalityWorkspace {
 public:
  explicit LocalityWorkspace(const Graph& g) : marks_(g.num_vertices()) {}

  VertexMarks& marks() { return marks_; }
  std::vector<VertexId>& members() { return members_; }

 private:
  VertexMarks marks_;
  std::vector<VertexId> members_;
};

LocalityScore psi_k(const Graph& g, VertexId v, unsigned k);
LocalityScore psi_k(const Graph& g, VertexId v, unsigned k,
                    LocalityWorkspace& ws);

// Psi_1 by scanning the incident edges of every member of N_1[v] and keeping
// those with both endpoints inside; every internal edge is seen twice.
EdgeCount local_stat(const Graph& g, VertexId v);
EdgeCount local_stat(const Graph& g, VertexId v, LocalityWorkspace& ws);

// Doubled contribution of `part` (a subset of N_1[v]) to Psi_1(v): the number
// of incident edges of part members whose far endpoint is marked. `marks`
// must hold exactly N_1[v]. Summing over a partition of N_1[v] and halving
// gives local_stat(v).
EdgeCount local_stat_partial(const Graph& g, std::span<const VertexId> part,
                             const VertexMarks& marks);

inline EdgeCount est_lstat1(const Graph& g, VertexId v) {
  const EdgeCount d = degree_stat(g, v);
  return d * d + d;
}

EdgeCount est_lstat2(const Graph& g, VertexId v);
EdgeCount est_lstat2(const Graph& g, VertexId v, LocalityWorkspace& ws);

// Psi_k for every vertex, indexed by vertex id.
std::vector<EdgeCount> psi_k_all(const Graph& g, unsigned k,
                                 unsigned workers = 1);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_LOCALITY_H_
