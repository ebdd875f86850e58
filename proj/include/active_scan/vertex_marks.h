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

#ifndef ACTIVE_SCAN_VERTEX_MARKS_H_
#define ACTIVE_SCAN_VERTEX_MARKS_H_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace active_scan {

// Epoch-stamped membership set over [0, n). Clearing is O(1): bumping the
// epoch invalidates every previous mark. Not thread-safe; one per worker.
class VertexMarks {
 public:
  VertexMarks() = default;
  explicit VertexMarks(std::size_t n) : stamps_(n, 0) {}

  std::size_t size() const { return stamps_.size(); }

  void Resize(std::size_t n) {
    if (stamps_.size() != n) {
      stamps_.assign(n, 0);
      epoch_ = 1;
    }
  }

  void Clear() {
    if (++epoch_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0);
      epoch_ = 1;
    }
  }

  void Mark(std::uint32_t v) { stamps_[v] = epoch_; }
  bool IsMarked(std::uint32_t v) const { return stamps_[v] == epoch_; }

  // Marks v and reports whether it was unmarked before.
  bool Insert(std::uint32_t v) {
    if (stamps_[v] == epoch_) return false;
    stamps_[v] = epoch_;
    return true;
  }

 private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t epoch_ = 1;
};

}  // namespace active_scan

#endif  // ACTIVE_SCAN_VERTEX_MARKS_H_
