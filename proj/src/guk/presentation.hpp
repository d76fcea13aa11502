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

#include "guk/category.hpp"

namespace guk {

// A composable word in the generators. Letters are generator indices in
// application order: {f, g} denotes g . f. The empty word is the identity on
// `source` (and then source == target).
struct PathWord {
  ObjectId source = 0;
  ObjectId target = 0;
  std::vector<int> letters;

  friend bool operator==(const PathWord&, const PathWord&) = default;
};

struct Generator {
  std::string name;
  ObjectId src;
  ObjectId tgt;
};

struct CategoryPresentation {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<std::pair<PathWord, PathWord>> relations;
  int bound = 12;
};

// Checks that generator endpoints exist, each relation side is composable
// and both sides are parallel.
Verdict validate_presentation(const CategoryPresentation& p);

// Quotient of the free category on the generator graph by the relation
// congruence. Runs Knuth-Bendix completion under the shortlex order on
// words (generator declaration order) and tabulates the normal forms.
// Morphisms are ordered by shortest-then-lexicographic normal form; a
// composite normal form {f, g} is named g_o_f.
//
// Throws NotFinitelyClosed if some normal form is longer than the bound or
// completion does not settle within its budget.
FinCategory compile_presentation(const CategoryPresentation& p);

// Shortlex comparison on letter sequences.
bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace guk
