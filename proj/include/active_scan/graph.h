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

#ifndef ACTIVE_SCAN_GRAPH_H_
#define ACTIVE_SCAN_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "active_scan/vertex_marks.h"

namespace active_scan {

using VertexId = std::uint32_t;
using EdgeCount = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

// Counts of input edges rejected while building a simple graph.
struct BuildStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

// Immutable directed simple graph stored as a pair of CSR arrays: one for
// out-neighbors and its exact transpose for in-neighbors. Every adjacency
// sequence is strictly increasing.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on vertices [0, n). Self-loops and repeated edges are
  // dropped and counted in `stats` when given. Throws std::invalid_argument
  // if an endpoint is >= n.
  static Graph FromEdges(std::size_t n, std::vector<Edge> edges,
                         BuildStats* stats = nullptr);

  // Builds directly from sorted out-CSR arrays, validating every invariant.
  static Graph FromOutCsr(std::vector<std::uint64_t> offsets,
                          std::vector<VertexId> targets);

  std::size_t num_vertices() const { return num_vertices_; }
  EdgeCount num_edges() const { return out_targets_.size(); }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_targets_.data() + in_offsets_[v],
            in_targets_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(VertexId v) const {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(VertexId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  std::span<const std::uint64_t> out_offsets() const { return out_offsets_; }
  std::span<const VertexId> out_targets() const { return out_targets_; }

  bool has_edge(VertexId from, VertexId to) const;

  // All edges in (source, target) lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void BuildTranspose();

  std::size_t num_vertices_ = 0;
  std::vector<std::uint64_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::uint64_t> in_offsets_{0};
  std::vector<VertexId> in_targets_;
};

// In-degree plus out-degree.
inline EdgeCount degree_stat(const Graph& g, VertexId v) {
  return g.out_degree(v) + g.in_degree(v);
}

// Closed neighborhood N_1[v] = {v} ∪ out(v) ∪ in(v), sorted, written into
// `out` (cleared first).
void closed_neighborhood(const Graph& g, VertexId v,
                         std::vector<VertexId>& out);

// Vertices within undirected distance k of v, sorted ascending. Always
// contains v. The marks-taking overload reuses caller scratch space.
std::vector<VertexId> neighborhood(const Graph& g, VertexId v, unsigned k);
void neighborhood(const Graph& g, VertexId v, unsigned k, VertexMarks& marks,
                  std::vector<VertexId>& out);

// Number of directed edges with both endpoints in `members`. Members must be
// distinct. Each edge is seen once from its source's out-list and once from
// its target's in-list; the doubled total is halved.
EdgeCount induced_edge_count(const Graph& g,
                             std::span<const VertexId> members);
EdgeCount induced_edge_count(const Graph& g,
                             std::span<const VertexId> members,
                             VertexMarks& marks);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_GRAPH_H_
