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

#ifndef ACTIVE_SCAN_SRC_TOPQ_DRIVER_H_
#define ACTIVE_SCAN_SRC_TOPQ_DRIVER_H_

#include <functional>
#include <vector>

#include "active_scan/trimming.h"

namespace active_scan::internal {

using ScanFn =
    std::function<std::vector<ScoredVertex>(TrimState&, EdgeCount floor)>;

// Two-stage top-Q loop shared by the serial and parallel searches.
TopQResult RunTopQ(const Graph& g, std::size_t q, unsigned workers,
                   const ScanFn& scan);

}  // namespace active_scan::internal

#endif  // ACTIVE_SCAN_SRC_TOPQ_DRIVER_H_
