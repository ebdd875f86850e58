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

#include "active_scan/graph_io.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "active_scan/errors.h"

namespace active_scan {
namespace {

constexpr std::string_view kVerticesDirective = "# vertices:";

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Pops the next whitespace-delimited token off `s`.
std::string_view NextToken(std::string_view& s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  std::size_t end = 0;
  while (end < s.size() && !IsSpace(s[end])) ++end;
  std::string_view token = s.substr(0, end);
  s.remove_prefix(end);
  return token;
}

std::uint64_t ParseId(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer vertex id, got '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

template <typename T>
void PutLittleEndian(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T GetLittleEndian(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw ParseError("truncated binary graph");
  }
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return value;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::uint64_t declared = 0;
  bool has_declaration = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = Trim(line);
    if (rest.empty()) continue;
    if (rest.front() == '#') {
      if (rest.starts_with(kVerticesDirective)) {
        std::string_view count = Trim(rest.substr(kVerticesDirective.size()));
        declared = std::max(declared, ParseId(count, line_no));
        has_declaration = true;
      }
      continue;
    }
    std::string_view src = NextToken(rest);
    std::string_view dst = NextToken(rest);
    if (dst.empty()) throw ParseError("expected 'src dst'", line_no);
    if (!Trim(rest).empty()) {
      throw ParseError("unexpected trailing token '" +
                           std::string(Trim(rest)) + "'",
                       line_no);
    }
    raw.emplace_back(ParseId(src, line_no), ParseId(dst, line_no));
  }
  if (raw.empty() && (!has_declaration || declared == 0)) {
    throw ParseError("empty edge list");
  }

  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2 + declared);
  for (std::uint64_t v = 0; v < declared; ++v) ids.push_back(v);
  for (const auto& [s, d] : raw) {
    ids.push_back(s);
    ids.push_back(d);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto dense = [&](std::uint64_t id) {
    return static_cast<VertexId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [s, d] : raw) edges.emplace_back(dense(s), dense(d));

  LoadedGraph result;
  result.graph = Graph::FromEdges(ids.size(), std::move(edges), &result.stats);
  result.original_ids = std::move(ids);
  return result;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << kVerticesDirective << ' ' << g.num_vertices() << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId w : g.out_neighbors(u)) out << u << ' ' << w << '\n';
  }
}

void write_id_map(std::ostream& out,
                  const std::vector<std::uint64_t>& original_ids) {
  out << "dense_id,original_id\n";
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    out << i << ',' << original_ids[i] << '\n';
  }
}

void write_binary(std::ostream& out, const Graph& g) {
  PutLittleEndian<std::uint64_t>(out, g.num_vertices());
  PutLittleEndian<std::uint64_t>(out, g.num_edges());
  for (std::uint64_t offset : g.out_offsets()) {
    PutLittleEndian<std::uint64_t>(out, offset);
  }
  for (VertexId t : g.out_targets()) PutLittleEndian<std::uint32_t>(out, t);
}

Graph read_binary(std::istream& in) {
  const auto n = GetLittleEndian<std::uint64_t>(in);
  const auto m = GetLittleEndian<std::uint64_t>(in);
  if (n >= (std::uint64_t{1} << 32)) {
    throw ParseError("binary graph vertex count exceeds 32-bit id space");
  }
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& o : offsets) o = GetLittleEndian<std::uint64_t>(in);
  if (offsets.back() != m) throw ParseError("binary graph offsets[n] != m");
  std::vector<VertexId> targets(m);
  for (auto& t : targets) t = GetLittleEndian<std::uint32_t>(in);
  try {
    return Graph::FromOutCsr(std::move(offsets), std::move(targets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid binary graph: ") + e.what());
  }
}

LoadedGraph load_graph(const std::filesystem::path& path) {
  if (path.extension() == ".bin") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    LoadedGraph result;
    result.graph = read_binary(in);
    result.original_ids.resize(result.graph.num_vertices());
    for (std::size_t i = 0; i < result.original_ids.size(); ++i) {
      result.original_ids[i] = i;
    }
    return result;
  }
  return load_edge_list(path);
}

}  // namespace active_scan
