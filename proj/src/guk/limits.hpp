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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "guk/functor.hpp"

namespace guk {

// A diagram in a FinCategory is a Functor from its shape. For a cone the legs
// run apex -> D(j); for a cocone they run D(j) -> apex.
struct Cone {
  ObjectId apex = kNone;
  std::vector<ArrowId> legs;

  friend bool operator==(const Cone&, const Cone&) = default;
};

// A (co)cone over a Set-valued diagram. For limits `tuples` holds the
// compatible families the apex consists of; legs[j][x] is the image of apex
// element x at j (or, for colimits, the class of x in D(j)).
struct SetCone {
  std::vector<std::string> apex;
  std::vector<std::vector<int>> legs;
  std::vector<std::vector<int>> tuples;
};

// All cones over d with the given apex, in canonical order.
std::vector<std::vector<ArrowId>> cones_at(const Functor& d, ObjectId apex);
std::size_t count_cones(const Functor& d, ObjectId apex);

Verdict check_cone(const Functor& d, const Cone& cone);
// Universality by search: for every object y, composing with the legs is a
// bijection hom(y, apex) -> cones(y).
bool is_limit_cone(const Functor& d, const Cone& cone);
bool is_colimit_cocone(const Functor& d, const Cone& cocone);

// First universal cone in canonical (apex, legs) order, if any.
std::optional<Cone> find_limit(const Functor& d);
std::optional<Cone> find_colimit(const Functor& d);

// Standard finite shapes and diagrams.
CategoryRef empty_shape();
CategoryRef pair_shape();      // objects 0 1, no arrows
CategoryRef parallel_shape();  // f, g : 0 -> 1
CategoryRef cospan_shape();    // f : 0 -> 2, g : 1 -> 2
Functor empty_diagram(const CategoryRef& c);
Functor pair_diagram(const CategoryRef& c, ObjectId a, ObjectId b);
Functor parallel_diagram(const CategoryRef& c, ArrowId f, ArrowId g);
Functor cospan_diagram(const CategoryRef& c, ArrowId f, ArrowId g);

std::optional<Cone> terminal_object(const CategoryRef& c);
std::optional<Cone> product(const CategoryRef& c, ObjectId a, ObjectId b);
std::optional<Cone> equalizer(const CategoryRef& c, ArrowId f, ArrowId g);
// Legs p1 : P -> src f, p2 : P -> src g, and the diagonal.
std::optional<Cone> pullback(const CategoryRef& c, ArrowId f, ArrowId g);

// Terminal object, binary products and equalizers.
Verdict has_all_finite_limits(const CategoryRef& c);

SetCone set_limit(const SetFunctor& d);
SetCone set_colimit(const SetFunctor& d);

// Preservation of the chosen terminal, product and equalizer cones. Throws
// PreconditionFailed if the domain lacks one of them.
Verdict check_lex_functor(const Functor& f);
Verdict check_lex_functor(const SetFunctor& f);

// f applied to the cone is a limit (resp. colimit) cone in Set: the
// comparison map with set_limit (set_colimit) of f . d is a bijection.
bool preserves_limit(const SetFunctor& f, const Functor& d, const Cone& cone);
bool preserves_colimit(const SetFunctor& f, const Functor& d, const Cone& cocone);

// Labelled diagrams whose limits make a category lex: the empty diagram,
// every pair of objects a <= b and every pair of distinct parallel arrows.
std::vector<std::pair<std::string, Functor>> lex_diagrams(const CategoryRef& c);

// A limit instance of a lex category: its diagram, a label and the chosen
// universal cone.
struct LimitInstance {
  std::string label;
  Functor diagram;
  Cone cone;
};
// Terminal, every binary product and every equalizer of distinct parallel
// arrows. Throws PreconditionFailed if one is missing.
std::vector<LimitInstance> lex_instances(const CategoryRef& c);
Verdict check_lex_functor(const SetFunctor& f, const std::vector<LimitInstance>& instances);

}  // namespace guk
