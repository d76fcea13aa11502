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

#include <string>
#include <vector>

#include "guk/limits.hpp"

namespace guk {

struct Clan {
  std::string name;
  CategoryRef base;
  ObjectId terminal = kNone;
  std::vector<ArrowId> display;  // sorted arrow ids

  bool is_display(ArrowId f) const;
};

// The unique arrow a -> terminal. Throws PreconditionFailed when the
// designated object is not terminal.
ArrowId terminal_projection(const FinCategory& c, ObjectId terminal, ObjectId a);

// Axioms in order: pullbacks of display maps along any arrow are display,
// composites of display maps are display, isomorphisms are display, terminal
// projections are display. Pullbacks are the canonical ones found by search;
// throws MissingPullback when one does not exist.
Verdict validate_clan(const Clan& k);

// Least display class containing the generators, on the first terminal
// object of c. Throws PreconditionFailed without a terminal object and
// MissingPullback when a needed pullback does not exist.
std::vector<ArrowId> display_closure(const CategoryRef& c, const std::vector<ArrowId>& generators);

// For r : A -> B, the composite of the terminal projection of B with r is a
// display map. Throws TriangleDoesNotCommute if it differs from the terminal
// projection of A.
Verdict check_section_composite(const Clan& k, ArrowId r);

}  // namespace guk
