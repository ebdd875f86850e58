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

#include "active_scan/sbm.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "active_scan/seed.h"
#include "json.hpp"

namespace active_scan {
namespace {

// Calls fn(p, pairs) for every ordered block pair with its rate and the
// number of candidate vertex pairs (self-loops excluded).
template <typename Fn>
void ForEachBlockPair(const SBMParams& params, Fn&& fn) {
  const std::size_t b = params.num_blocks();
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      const double ni = static_cast<double>(params.block_sizes[i]);
      const double nj = static_cast<double>(params.block_sizes[j]);
      fn(params.P[i][j], i == j ? ni * (ni - 1) : ni * nj);
    }
  }
}

}  // namespace

std::size_t SBMParams::num_vertices() const {
  std::size_t n = 0;
  for (std::size_t s : block_sizes) n += s;
  return n;
}

void SBMParams::Validate() const {
  const std::size_t b = num_blocks();
  if (b == 0) throw std::invalid_argument("sbm: no blocks");
  if (P.size() != b) throw std::invalid_argument("sbm: P must be B x B");
  for (std::size_t i = 0; i < b; ++i) {
    if (P[i].size() != b) throw std::invalid_argument("sbm: P must be B x B");
    for (std::size_t j = 0; j < b; ++j) {
      const double p = P[i][j];
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("sbm: probability P[" + std::to_string(i) +
                                    "][" + std::to_string(j) +
                                    "] outside [0, 1]");
      }
      if (p != P[j][i]) throw std::invalid_argument("sbm: P is not symmetric");
    }
  }
  if (num_vertices() > std::size_t{0xffffffffu}) {
    throw std::invalid_argument("sbm: too many vertices");
  }
}

SBMParams paper_params() {
  SBMParams params;
  params.block_sizes = {940, 20, 20, 20};
  // Background 0.01 plus diag(0, 0.19, 0.29, 0.39), written out so the
  // diagonal holds the exact literals rather than rounded sums.
  const double diagonal[] = {0.01, 0.2, 0.3, 0.4};
  params.P.assign(4, std::vector<double>(4, 0.01));
  for (std::size_t i = 0; i < 4; ++i) params.P[i][i] = diagonal[i];
  return params;
}

std::string sbm_params_to_json(const SBMParams& params) {
  nlohmann::ordered_json j;
  j["B"] = params.num_blocks();
  j["block_sizes"] = params.block_sizes;
  j["P"] = params.P;
  j["seed"] = params.seed;
  return j.dump(2);
}

SBMParams sbm_params_from_json(const std::string& text) {
  SBMParams params;
  try {
    const auto j = nlohmann::json::parse(text);
    params.block_sizes = j.at("block_sizes").get<std::vector<std::size_t>>();
    params.P = j.at("P").get<std::vector<std::vector<double>>>();
    if (j.contains("seed")) params.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("B") &&
        j.at("B").get<std::size_t>() != params.block_sizes.size()) {
      throw std::invalid_argument("sbm: B disagrees with block_sizes");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sbm params: ") + e.what());
  }
  params.Validate();
  return params;
}

LabeledGraph generate_sbm(const SBMParams& params) {
  params.Validate();
  const std::size_t b = params.num_blocks();
  std::vector<VertexId> start(b + 1, 0);
  for (std::size_t i = 0; i < b; ++i) {
    start[i + 1] = start[i] + static_cast<VertexId>(params.block_sizes[i]);
  }
  const VertexId n = start[b];

  Rng rng(derive_seed(params.seed, "sbm"));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      const double p = params.P[i][j];
      const std::uint64_t ni = params.block_sizes[i];
      const std::uint64_t nj = params.block_sizes[j];
      const std::uint64_t pairs = i == j ? ni * (ni > 0 ? ni - 1 : 0) : ni * nj;
      if (p <= 0.0 || pairs == 0) continue;
      // Pair t of block i x block j; within a block, column indices skip u.
      auto emit = [&](std::uint64_t t) {
        if (i == j) {
          const std::uint64_t u = t / (ni - 1);
          std::uint64_t v = t % (ni - 1);
          if (v >= u) ++v;
          edges.emplace_back(start[i] + static_cast<VertexId>(u),
                             start[i] + static_cast<VertexId>(v));
        } else {
          edges.emplace_back(start[i] + static_cast<VertexId>(t / nj),
                             start[j] + static_cast<VertexId>(t % nj));
        }
      };
      if (p >= 1.0) {
        for (std::uint64_t t = 0; t < pairs; ++t) emit(t);
        continue;
      }
      const double log_q = std::log1p(-p);
      std::uint64_t t = 0;
      for (;;) {
        // 1 - U lies in (0, 1], so the logarithm is finite.
        const double skip = std::floor(std::log(1.0 - uniform01(rng)) / log_q);
        if (skip >= static_cast<double>(pairs - t)) break;
        t += static_cast<std::uint64_t>(skip);
        emit(t);
        if (++t >= pairs) break;
      }
    }
  }

  LabeledGraph result{Graph::FromEdges(n, std::move(edges)), {}};
  result.labels.resize(n);
  for (std::size_t i = 0; i < b; ++i) {
    for (VertexId v = start[i]; v < start[i + 1]; ++v) {
      result.labels[v] = static_cast<int>(i + 1);
    }
  }
  return result;
}

double expected_edge_count(const SBMParams& params) {
  params.Validate();
  double total = 0.0;
  ForEachBlockPair(params, [&](double p, double pairs) { total += p * pairs; });
  return total;
}

double edge_count_variance(const SBMParams& params) {
  params.Validate();
  double total = 0.0;
  ForEachBlockPair(params,
                   [&](double p, double pairs) { total += p * (1 - p) * pairs; });
  return total;
}

}  // namespace active_scan
