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

#ifndef ACTIVE_SCAN_SIMILARITY_H_
#define ACTIVE_SCAN_SIMILARITY_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "active_scan/graph.h"

namespace active_scan {

// |A ∩ B| / |A ∪ B| kept as exact counts.
struct JaccardIndex {
  std::uint64_t intersection = 0;
  std::uint64_t union_size = 0;

  double value() const {
    return union_size == 0 ? 0.0
                           : static_cast<double>(intersection) /
                                 static_cast<double>(union_size);
  }
};

// Jaccard index of two sorted vertex sets.
JaccardIndex jaccard_sorted(std::span<const VertexId> a,
                            std::span<const VertexId> b);

// Jaccard index of the closed k-th order neighborhoods of vi and vj.
JaccardIndex jaccard(const Graph& g, VertexId vi, VertexId vj, unsigned k);

struct SimilarityMatrix {
  std::vector<VertexId> vertices;  // row/column labels
  Eigen::MatrixXd values;          // symmetric, unit diagonal, in [0, 1]

  std::size_t order() const { return vertices.size(); }
};

struct SimilarityOptions {
  // Upper bound on bytes of materialized neighborhoods held at once. When the
  // selected set needs more, rows are processed in blocks.
  std::size_t memory_budget_bytes = std::size_t{512} << 20;
  unsigned workers = 1;
};

// Pairwise Jaccard matrix over `selected`, in the given order. Throws
// std::invalid_argument on an empty selection, duplicates, or k == 0.
SimilarityMatrix build_similarity_matrix(const Graph& g,
                                         std::span<const VertexId> selected,
                                         unsigned k,
                                         const SimilarityOptions& options = {});

// Row-major CSV: a header row of vertex labels, then one row of values per
// vertex. `labels` replaces the dense ids when non-empty.
void write_similarity_csv(std::ostream& out, const SimilarityMatrix& s,
                          std::span<const std::uint64_t> labels = {});
// Inverse of write_similarity_csv; vertex labels must fit a VertexId.
SimilarityMatrix read_similarity_csv(std::istream& in);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_SIMILARITY_H_
