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

// A functor from an index category C into presheaves on a site base D,
// tabulated: a presheaf for each object of C and an element-level natural
// transformation for each arrow of C.
struct SheafOfModels {
  std::string name;
  CategoryRef index;
  CategoryRef site;
  CategoryRef site_op;              // domain of every presheaf
  std::vector<SetFunctor> at;       // per object of index
  std::vector<Components> maps;     // per arrow u : at[src u] => at[tgt u]
};

Verdict validate_bundle(const SheafOfModels& f);

// Constant singleton presheaves and identity maps.
SheafOfModels terminal_bundle(const CategoryRef& index, const CategoryRef& site,
                              const std::string& name = "Terminal");

// Gamma(P) as the limit of P over opposite(D), composed with the bundle.
SetFunctor global_sections(const SheafOfModels& f);
// Gamma(P) as natural transformations from the terminal presheaf.
SetFunctor global_sections_by_hom(const SheafOfModels& f);

// Evaluation at an object of D, composed with the bundle.
SetFunctor stalk(const SheafOfModels& f, ObjectId d);

// Limit over opposite(D) of the stalk functors, taken objectwise, compared
// with the global sections; also compares the two computations of Gamma.
Verdict gamma_is_limit_of_stalks(const SheafOfModels& f);

// Global sections and every stalk are lex. Throws NotLex when the index
// category is not lex.
Verdict check_lex_composite(const SheafOfModels& f);

}  // namespace guk
