// Copyright 2026 The guk Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "guk/dsl.hpp"
#include "guk/report.hpp"

namespace guk {

using Flags = std::map<std::string, std::string>;

struct RunOptions {
  std::uint64_t max_work = 10'000'000;
  bool timing = false;
};

// GUK_MAX_WORK from the environment, or 10^7 when unset or malformed.
std::uint64_t max_work_from_env();

const std::vector<std::string>& command_names();

// Exit codes: 0 when the property holds or a value was computed, 1 when it
// fails (the witness section names the counterexample), 2 for input and
// precondition errors. Never throws for guk errors.
Report run(const std::string& command, const Flags& flags, const Document& doc,
           const RunOptions& options = {});
// Parses `source` first; parse errors become exit-2 reports.
Report run_source(const std::string& command, const Flags& flags, const std::string& source,
                  const RunOptions& options = {});

}  // namespace guk
