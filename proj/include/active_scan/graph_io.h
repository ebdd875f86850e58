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

#ifndef ACTIVE_SCAN_GRAPH_IO_H_
#define ACTIVE_SCAN_GRAPH_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "active_scan/graph.h"

namespace active_scan {

struct LoadedGraph {
  Graph graph;
  // original_ids[dense] is the id that appeared in the input.
  std::vector<std::uint64_t> original_ids;
  BuildStats stats;
};

// Reads "src dst" lines. Blank lines and lines starting with '#' are skipped,
// except for the directive "# vertices: N", which declares ids 0..N-1 so
// that isolated vertices survive a write/read cycle. Input ids are remapped
// to [0, n) in ascending order of the original id.
//
// Throws ParseError (with the offending line number) on a malformed line and
// on input that declares no vertices at all.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list(const std::filesystem::path& path);

// Canonical text form: the "# vertices: N" directive, then one "src dst" line
// per edge sorted by (src, dst). Reloading reproduces an identical Graph.
void write_edge_list(std::ostream& out, const Graph& g);

// "dense_id,original_id" CSV.
void write_id_map(std::ostream& out,
                  const std::vector<std::uint64_t>& original_ids);

// Binary CSR snapshot, all integers little-endian:
//   u64 n
//   u64 m
//   u64 offsets[n + 1]   out-adjacency offsets, offsets[0] = 0, offsets[n] = m
//   u32 targets[m]       out-neighbors, strictly increasing per vertex
// The in-adjacency is rebuilt on load.
void write_binary(std::ostream& out, const Graph& g);
Graph read_binary(std::istream& in);

// Dispatches on extension: ".bin" is the binary snapshot, anything else is a
// text edge list.
LoadedGraph load_graph(const std::filesystem::path& path);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_GRAPH_IO_H_
