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
#include <utility>
#include <vector>

#include "guk/limits.hpp"

namespace guk {

struct FilterednessWitness {
  struct Bound {
    ObjectId i;
    ObjectId j;
    ObjectId k;
    ArrowId fi;
    ArrowId fj;
  };
  struct Coequalizer {
    ArrowId f;
    ArrowId g;
    ArrowId w;
  };
  std::vector<Bound> bounds;              // one per pair i < j
  std::vector<Coequalizer> coequalizers;  // one per parallel pair f < g
};

struct FilteredVerdict {
  Verdict verdict;
  FilterednessWitness witness;
};

FilteredVerdict is_filtered(const CategoryRef& j);

// Throws NotAPoset unless p is thin and antisymmetric.
Verdict is_directed_poset(const CategoryRef& p);

// Same apex, labels and legs as set_colimit, computed by identifying elements
// that become equal at a common later stage. Throws PreconditionFailed when
// the shape is not filtered.
SetCone filtered_colimit(const SetFunctor& d);

// hom(a, D(-)) as a Set-valued diagram on the shape of d.
SetFunctor hom_diagram(const Functor& d, ObjectId a);

// Throws PreconditionFailed unless d has a filtered shape and colim is a
// colimit cocone.
Verdict check_hom_preserves_filtered_colimit(const Functor& d, ObjectId a, const Cone& colim);

struct FpEntry {
  std::string diagram;
  Cone colimit;
  Verdict verdict;
};

struct FpVerdict {
  ObjectId object = kNone;
  std::vector<FpEntry> entries;
  Verdict verdict;
  bool vacuous = false;
};

FpVerdict fp_witness(const CategoryRef& c, ObjectId a,
                     const std::vector<std::pair<Functor, Cone>>& diagrams);

// Small shapes: every poset up to isomorphism with at most max_objects
// elements, then a few non-thin filtered shapes; all within max_arrows.
std::vector<CategoryRef> shape_corpus(int max_objects = 4, int max_arrows = 12);

}  // namespace guk
