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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace guk {

enum class ErrorKind {
  UnknownId,
  InvalidArgument,
  NotFinitelyClosed,
  PreconditionFailed,
  NotLex,
  NotAPoset,
  NotATopology,
  MissingPullback,
  TriangleDoesNotCommute,
  ParseError,
  NameClash,
  UnresolvedReference,
  ValidationFailed,
  UnknownCommand,
  MissingFlag,
  WorkLimit,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Outcome of a property check. A failing verdict names the violated law and
// carries the ids that witness the failure.
struct Verdict {
  bool pass = true;
  std::string check;
  std::string law;
  std::vector<std::string> witness;
  std::string detail;
  std::vector<std::string> caveats;

  static Verdict ok(std::string check) {
    Verdict v;
    v.check = std::move(check);
    return v;
  }

  static Verdict fail(std::string check, std::string law,
                      std::vector<std::string> witness,
                      std::string detail = {}) {
    Verdict v;
    v.pass = false;
    v.check = std::move(check);
    v.law = std::move(law);
    v.witness = std::move(witness);
    v.detail = std::move(detail);
    return v;
  }

  explicit operator bool() const noexcept { return pass; }
};

// Caps the number of search nodes visited by every enumeration on the
// current thread while the guard is alive. Nesting restores the outer budget.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit);
  ~WorkBudget();

  WorkBudget(const WorkBudget&) = delete;
  WorkBudget& operator=(const WorkBudget&) = delete;

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  friend void charge_work(std::uint64_t);
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  WorkBudget* previous_;
};

// Throws Error(WorkLimit) when the active budget is exhausted; no-op when no
// budget is installed.
void charge_work(std::uint64_t units = 1);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace guk
