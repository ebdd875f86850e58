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

#ifndef ACTIVE_SCAN_SEED_H_
#define ACTIVE_SCAN_SEED_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace active_scan {

std::uint64_t splitmix64(std::uint64_t x);

// Seed for a labeled stage, derived from the base seed by hashing. Adding a
// new label never changes the seeds of existing ones.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                          std::uint64_t index = 0);

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits of one draw. Independent of
// the standard library's distribution implementations.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection, bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_SEED_H_
