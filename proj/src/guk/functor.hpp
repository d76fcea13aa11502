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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "guk/category.hpp"

namespace guk {

// Functor between tabulated categories.
struct Functor {
  std::string name;
  CategoryRef dom;
  CategoryRef cod;
  std::vector<ObjectId> omap;
  std::vector<ArrowId> mmap;
};

// Natural transformation between parallel functors; components[a] is an
// arrow source.omap[a] -> target.omap[a] of the codomain.
struct NatTransform {
  std::string name;
  Functor source;
  Functor target;
  std::vector<ArrowId> components;
};

// Functor into finite sets. Elements of a carrier are indices into its label
// list; action[f][x] is the image of x under the function for arrow f.
// A presheaf on C is a SetFunctor whose domain is opposite(C).
struct SetFunctor {
  std::string name;
  CategoryRef dom;
  std::vector<std::vector<std::string>> carriers;
  std::vector<std::vector<int>> action;

  int size(ObjectId a) const { return static_cast<int>(carriers[a].size()); }
};

// Element-level transformation between SetFunctors: components[a][x].
using Components = std::vector<std::vector<int>>;

bool same_category(const CategoryRef& a, const CategoryRef& b);

// Tables equal (the names of the functors are ignored).
bool same_table(const SetFunctor& a, const SetFunctor& b);

Verdict validate_functor(const Functor& f);
Verdict validate_nat(const NatTransform& alpha);
Verdict validate_set_functor(const SetFunctor& f);
Verdict validate_set_nat(const SetFunctor& source, const SetFunctor& target,
                         const Components& components);

Functor identity_functor(const CategoryRef& c);
// g . f at the table level.
Functor compose(const Functor& g, const Functor& f);
// The same maps viewed between opposite categories.
Functor opposite(const Functor& f);

SetFunctor constant_set_functor(const CategoryRef& dom,
                                const std::vector<std::string>& labels,
                                const std::string& name = "const");
// F . D
SetFunctor precompose(const SetFunctor& f, const Functor& d);

Components identity_components(const SetFunctor& f);
// (beta . alpha) componentwise.
Components compose_components(const Components& beta, const Components& alpha);

// C(-, a) as a SetFunctor on opposite(C); carriers are hom-sets labelled by
// arrow names, action by precomposition.
SetFunctor yoneda(const CategoryRef& c, ObjectId a);
SetFunctor yoneda(const CategoryRef& c, const CategoryRef& c_op, ObjectId a);
// C(a, -) as a SetFunctor on C; action by postcomposition.
SetFunctor covariant_hom(const CategoryRef& c, ObjectId a);

// Every induced hom map must be a bijection; the witness is the first pair
// (a, b) where it is not.
Verdict check_fully_faithful(const Functor& f);

// All natural transformations source => target, enumerated element by element
// with naturality pruning, in lexicographic order of their component tables.
std::vector<Components> nat_transforms_between(const SetFunctor& source,
                                               const SetFunctor& target);
std::optional<Components> find_natural_iso(const SetFunctor& a, const SetFunctor& b);

// A finite full fragment of a functor category: the given SetFunctors as
// objects and every natural transformation between them as arrows.
struct FunctorFragment {
  CategoryRef category;
  std::vector<SetFunctor> functors;
  std::vector<Components> arrows;  // indexed by arrow id of `category`

  // Arrow of the fragment with these endpoints and components.
  std::optional<ArrowId> find(ObjectId source, ObjectId target,
                              const Components& components) const;

 private:
  friend FunctorFragment tabulate_fragment(const std::string&, std::vector<SetFunctor>);
  std::map<std::pair<std::pair<ObjectId, ObjectId>, Components>, ArrowId> index_;
};

FunctorFragment tabulate_fragment(const std::string& name, std::vector<SetFunctor> functors);

// Builds the functor dom -> fragment sending a to object omap[a] and each
// arrow f to the fragment arrow with components transform(f). Throws
// PreconditionFailed if some transform is not in the fragment.
Functor functor_into_fragment(const std::string& name, const CategoryRef& dom,
                              const FunctorFragment& fragment,
                              const std::vector<ObjectId>& omap,
                              const std::function<Components(ArrowId)>& transform);

// y : C -> fragment of the representable presheaves.
struct YonedaEmbedding {
  FunctorFragment fragment;
  Functor embedding;
};
YonedaEmbedding yoneda_embedding(const CategoryRef& c);

// Exhaustive functor search J -> C in canonical order. The callback returns
// false to stop early.
void enumerate_functors(const CategoryRef& shape, const CategoryRef& target,
                        const std::function<bool(const Functor&)>& visit);

// Every SetFunctor on c with carriers of size <= max_size (elements labelled
// 0, 1, ...), functoriality pruned as actions are chosen.
void enumerate_set_functors(const CategoryRef& c, int max_size,
                            const std::function<bool(const SetFunctor&)>& visit);
// As above, skipping carrier size vectors rejected by sizes_ok.
void enumerate_set_functors(const CategoryRef& c, int max_size,
                            const std::function<bool(const std::vector<int>&)>& sizes_ok,
                            const std::function<bool(const SetFunctor&)>& visit);

}  // namespace guk
