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

#include "active_scan/similarity.h"

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include "active_scan/csv.h"
#include "active_scan/parallel.h"
#include "active_scan/vertex_marks.h"

namespace active_scan {

JaccardIndex jaccard_sorted(std::span<const VertexId> a,
                            std::span<const VertexId> b) {
  std::uint64_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return {common, a.size() + b.size() - common};
}

JaccardIndex jaccard(const Graph& g, VertexId vi, VertexId vj, unsigned k) {
  if (k == 0) throw std::invalid_argument("jaccard: k must be >= 1");
  return jaccard_sorted(neighborhood(g, vi, k), neighborhood(g, vj, k));
}

namespace {

using Neighborhoods = std::vector<std::vector<VertexId>>;

std::size_t Bytes(const std::vector<VertexId>& members) {
  return members.size() * sizeof(VertexId);
}

// Materializes the neighborhoods of selected[begin, end).
Neighborhoods Materialize(const Graph& g, std::span<const VertexId> selected,
                          std::size_t begin, std::size_t end, unsigned k,
                          unsigned workers) {
  Neighborhoods result(end - begin);
  std::vector<std::unique_ptr<VertexMarks>> marks(std::max(1u, workers));
  parallel_for(end - begin, workers, [&](unsigned w, std::size_t i) {
    if (!marks[w]) marks[w] = std::make_unique<VertexMarks>(g.num_vertices());
    neighborhood(g, selected[begin + i], k, *marks[w], result[i]);
  });
  return result;
}

void FillBlock(Eigen::MatrixXd& values, const Neighborhoods& rows,
               std::size_t row_offset, const Neighborhoods& cols,
               std::size_t col_offset, unsigned workers) {
  const bool diagonal = row_offset == col_offset;
  parallel_for(rows.size(), workers, [&](unsigned, std::size_t i) {
    const std::size_t r = row_offset + i;
    for (std::size_t j = diagonal ? i : 0; j < cols.size(); ++j) {
      const std::size_t c = col_offset + j;
      const double s = r == c ? 1.0 : jaccard_sorted(rows[i], cols[j]).value();
      // Each unordered pair is written by exactly one iteration.
      values(r, c) = s;
      values(c, r) = s;
    }
  });
}

}  // namespace

SimilarityMatrix build_similarity_matrix(const Graph& g,
                                         std::span<const VertexId> selected,
                                         unsigned k,
                                         const SimilarityOptions& options) {
  if (selected.empty()) {
    throw std::invalid_argument("similarity: empty vertex selection");
  }
  if (k == 0) throw std::invalid_argument("similarity: k must be >= 1");
  {
    std::vector<VertexId> sorted(selected.begin(), selected.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("similarity: duplicate vertex in selection");
    }
    if (sorted.back() >= g.num_vertices()) {
      throw std::invalid_argument("similarity: vertex out of range");
    }
  }
  const std::size_t q = selected.size();
  const unsigned workers = std::max(1u, options.workers);
  SimilarityMatrix result;
  result.vertices.assign(selected.begin(), selected.end());
  result.values.resize(static_cast<Eigen::Index>(q),
                       static_cast<Eigen::Index>(q));

  // Sizes first, so the resident set never exceeds the budget.
  std::vector<std::size_t> bytes(q);
  {
    std::vector<std::unique_ptr<VertexMarks>> marks(workers);
    std::vector<std::vector<VertexId>> scratch(workers);
    parallel_for(q, workers, [&](unsigned w, std::size_t i) {
      if (!marks[w]) marks[w] = std::make_unique<VertexMarks>(g.num_vertices());
      neighborhood(g, selected[i], k, *marks[w], scratch[w]);
      bytes[i] = Bytes(scratch[w]);
    });
  }
  std::size_t total = 0;
  for (std::size_t b : bytes) total += b;
  if (total <= options.memory_budget_bytes) {
    const Neighborhoods all = Materialize(g, selected, 0, q, k, workers);
    FillBlock(result.values, all, 0, all, 0, workers);
    return result;
  }

  // Blocked mode: two blocks are resident at a time, each within half the
  // budget (a single oversized neighborhood still gets its own block).
  std::vector<std::size_t> bounds{0};
  std::size_t block_bytes = 0;
  for (std::size_t i = 0; i < q; ++i) {
    if (block_bytes > 0 &&
        block_bytes + bytes[i] > options.memory_budget_bytes / 2) {
      bounds.push_back(i);
      block_bytes = 0;
    }
    block_bytes += bytes[i];
  }
  bounds.push_back(q);

  for (std::size_t bi = 0; bi + 1 < bounds.size(); ++bi) {
    const Neighborhoods rows =
        Materialize(g, selected, bounds[bi], bounds[bi + 1], k, workers);
    FillBlock(result.values, rows, bounds[bi], rows, bounds[bi], workers);
    for (std::size_t bj = bi + 1; bj + 1 < bounds.size(); ++bj) {
      const Neighborhoods cols =
          Materialize(g, selected, bounds[bj], bounds[bj + 1], k, workers);
      FillBlock(result.values, rows, bounds[bi], cols, bounds[bj], workers);
    }
  }
  return result;
}

void write_similarity_csv(std::ostream& out, const SimilarityMatrix& s,
                          std::span<const std::uint64_t> labels) {
  CsvWriter csv(out);
  std::vector<std::string> header;
  for (VertexId v : s.vertices) {
    header.push_back(std::to_string(labels.empty() ? v : labels[v]));
  }
  csv.Row(header);
  for (Eigen::Index i = 0; i < s.values.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index j = 0; j < s.values.cols(); ++j) {
      row.push_back(FormatDouble(s.values(i, j)));
    }
    csv.Row(row);
  }
}

SimilarityMatrix read_similarity_csv(std::istream& in) {
  const CsvTable table = read_csv(in, /*has_header=*/true);
  SimilarityMatrix s;
  const std::size_t q = table.header.size();
  if (table.rows.size() != q) {
    throw ParseError("similarity CSV is not square");
  }
  for (const auto& label : table.header) {
    s.vertices.push_back(static_cast<VertexId>(ParseUnsigned(label)));
  }
  s.values.resize(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(q));
  for (std::size_t i = 0; i < q; ++i) {
    if (table.rows[i].size() != q) {
      throw ParseError("similarity CSV row has wrong width", i + 2);
    }
    for (std::size_t j = 0; j < q; ++j) {
      s.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          ParseDouble(table.rows[i][j]);
    }
  }
  return s;
}

}  // namespace active_scan
