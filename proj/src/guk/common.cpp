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

#include "guk/common.hpp"

namespace guk {

namespace {
thread_local WorkBudget* active_budget = nullptr;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotFinitelyClosed: return "NotFinitelyClosed";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotLex: return "NotLex";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::MissingPullback: return "MissingPullback";
    case ErrorKind::TriangleDoesNotCommute: return "TriangleDoesNotCommute";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::MissingFlag: return "MissingFlag";
    case ErrorKind::WorkLimit: return "WorkLimit";
  }
  return "Unknown";
}

WorkBudget::WorkBudget(std::uint64_t limit)
    : limit_(limit), previous_(active_budget) {
  active_budget = this;
}

WorkBudget::~WorkBudget() { active_budget = previous_; }

void charge_work(std::uint64_t units) {
  WorkBudget* budget = active_budget;
  if (budget == nullptr) return;
  budget->used_ += units;
  if (budget->used_ > budget->limit_) {
    throw Error(ErrorKind::WorkLimit,
                "search exceeded the work limit of " +
                    std::to_string(budget->limit_) + " nodes");
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace guk
