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

#ifndef ACTIVE_SCAN_COMMANDS_H_
#define ACTIVE_SCAN_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace active_scan {

// Runs the command line `argv` (argv[0] is the program name). Normal output
// goes to `out`; on failure a one-line JSON error object goes to `err` and
// the return value is nonzero: 2 for invalid arguments or input, 1 for other
// failures.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Parses "61,70,100" and inclusive ranges "start:stop[:step]" (mixable, comma
// separated). Throws std::invalid_argument on malformed or empty input.
std::vector<std::size_t> parse_q_values(std::string_view text);

// ACTIVE_SCAN_THREADS when set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned default_workers();

}  // namespace active_scan

#endif  // ACTIVE_SCAN_COMMANDS_H_
