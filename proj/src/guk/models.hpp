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

#include "guk/filtered.hpp"

namespace guk {

// Lex Set-models of a lex category with carriers of size <= max_size, one per
// natural-isomorphism class, with all natural transformations between them.
struct ModelFragment {
  CategoryRef base;
  int max_size = 3;
  std::vector<SetFunctor> models;  // named M0, M1, ...
  FunctorFragment fragment;        // objects are the models
};

// Throws NotLex if c lacks a terminal object, a binary product or an
// equalizer, InvalidArgument if max_size < 1.
ModelFragment enumerate_lex_models(const CategoryRef& c, int max_size = 3);

// ev_a : fragment -> Set.
SetFunctor evaluation_functor(const ModelFragment& m, ObjectId a);

// Evaluation at a preserves the terminal object, products and equalizers
// that exist in the fragment, and colimits of diagrams drawn from the
// filtered shapes of the shape corpus.
Verdict evaluation_preservation_check(const ModelFragment& m, ObjectId a);

// Fails with the first non-invertible f : A -> B such that f_* : hom(K, A) ->
// hom(K, B) is a bijection for every K in the collection.
Verdict check_conservative(const CategoryRef& c, const std::vector<ObjectId>& collection);

// The full subcategory on s is dense: for every A the canonical cocone over
// the comma diagram s / A is a colimit. Fails with the first such A.
Verdict check_dense(const CategoryRef& c, const std::vector<ObjectId>& s);

// Comma category of objects (K, u : K -> A) with K in s, and its projection.
Functor comma_diagram(const CategoryRef& c, const std::vector<ObjectId>& s, ObjectId a);

struct DualityReport {
  ModelFragment models;
  // A |-> ev_A from c into the fragment of evaluation functors.
  Verdict epsilon;
  // A |-> C(A, -) from opposite(c) into the fragment of covariant homs.
  Verdict h;
  Verdict conservativity;
  Verdict density;
  // epsilon_counts[a][b] = |Nat(ev_a, ev_b)|, hom_counts[a][b] = |hom(a, b)|.
  std::vector<std::vector<std::size_t>> epsilon_counts;
  std::vector<std::vector<std::size_t>> hom_counts;
  // Models isomorphic to a representable C(A, -).
  std::vector<ObjectId> representables;
  std::vector<std::string> caveats;

  bool pass() const { return epsilon.pass && h.pass && conservativity.pass && density.pass; }
};

// Throws NotLex.
DualityReport duality_report(const CategoryRef& c, int max_size = 3);

}  // namespace guk
