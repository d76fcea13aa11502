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

#include "guk/sites.hpp"
#include "guk/topos.hpp"

namespace guk {

// Sets {0, ..., k-1} for k <= max_size and every function between them.
// Objects are S0, S1, ...; the function S2 -> S3 with table 0,2 is f23_02.
CategoryRef finset_category(int max_size = 3);

// Small categories used across the test suite, in a fixed order.
std::vector<CategoryRef> corpus_categories();
// The members of corpus_categories() with all finite limits.
std::vector<CategoryRef> lex_corpus();

CategoryRef chain_category(int n, const std::string& name);
// Subsets of {a, b} ordered by inclusion.
CategoryRef square_category();

FiniteSpace point_space();
FiniteSpace sierpinski_space();
FiniteSpace discrete2_space();

// F(U) = functions U -> values, restriction by restriction of functions. A
// function is labelled by its values in point order; the empty one by "*".
SetFunctor function_presheaf(const FiniteSpace& space, const Site& site,
                             const std::vector<std::string>& values, const std::string& name);
// labels on nonempty opens with identity restrictions, a singleton on the
// empty open.
SetFunctor constant_presheaf(const FiniteSpace& space, const Site& site,
                             const std::vector<std::string>& labels, const std::string& name);
// labels on every open, the empty one included, identity restrictions.
SetFunctor constant_everywhere(const Site& site, const std::vector<std::string>& labels,
                               const std::string& name);

// Bundles over the open-set sites of the spaces above; the last one is not
// lex at one stalk.
std::vector<SheafOfModels> bundle_corpus();

}  // namespace guk
