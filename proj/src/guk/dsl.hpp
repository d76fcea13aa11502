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

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "guk/clans.hpp"
#include "guk/presentation.hpp"
#include "guk/sites.hpp"
#include "guk/topos.hpp"

namespace guk {

// Errors from parse(): location plus, for syntax errors, the tokens that
// would have been accepted.
class DslError : public Error {
 public:
  DslError(ErrorKind kind, int line, int column, const std::string& message,
           std::vector<std::string> expected = {}, std::string found = {});

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }
  // Inner verdict for ValidationFailed.
  Verdict inner;

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

struct CategoryItem {
  CategoryRef category;
};

struct PresentationItem {
  CategoryPresentation presentation;
  CategoryRef category;
};

struct FunctorItem {
  Functor functor;
  std::string dom;
  std::string cod;
};

// Set-valued functor or presheaf. `on` is the item the domain came from; a
// presheaf over a site or space lives on the opposite of its base.
struct SetFunctorItem {
  SetFunctor functor;
  std::string on;
  bool presheaf = false;
};

struct NatItem {
  std::string source;
  std::string target;
  bool between_set_functors = true;
  // Set-functor case.
  SetFunctor set_source;
  SetFunctor set_target;
  Components components;
  // Functor case.
  NatTransform transform;
};

struct SpaceItem {
  FiniteSpace space;
  std::shared_ptr<const Site> site;
};

struct SiteItem {
  std::shared_ptr<const Site> site;
  std::string on;
  bool from_space = false;
};

struct ClanItem {
  Clan clan;
  std::string on;
};

struct BundleItem {
  SheafOfModels bundle;
  std::string over;
  std::vector<std::string> at;    // presheaf item per index object
  std::vector<std::string> maps;  // nat item per index arrow, "" for defaults
};

using Item = std::variant<CategoryItem, PresentationItem, FunctorItem, SetFunctorItem, NatItem,
                          SpaceItem, SiteItem, ClanItem, BundleItem>;

std::string item_kind(const Item& item);

// Named items in declaration order. Items refer only to items above them.
class Document {
 public:
  void add(const std::string& name, Item item);

  const std::vector<std::pair<std::string, Item>>& items() const noexcept { return items_; }
  const Item* find(const std::string& name) const;
  // Throws UnknownId for missing names and InvalidArgument for names of the
  // wrong kind.
  const Item& item(const std::string& name) const;

  // A category or a presentation.
  CategoryRef category(const std::string& name) const;
  // A category, or the base of a site or space.
  CategoryRef base_category(const std::string& name) const;
  const Functor& functor(const std::string& name) const;
  // A setfunctor or presheaf.
  const SetFunctorItem& set_functor(const std::string& name) const;
  const FiniteSpace& space(const std::string& name) const;
  // A site, or the open-set site of a space.
  const Site& site(const std::string& name) const;
  const Clan& clan(const std::string& name) const;
  const SheafOfModels& bundle(const std::string& name) const;

 private:
  std::vector<std::pair<std::string, Item>> items_;
  std::map<std::string, std::size_t> index_;
};

// Parses and validates. Throws DslError with kind ParseError, NameClash,
// UnresolvedReference or ValidationFailed.
//
//   category NAME { objects: A B; arrows: f: A -> B, g: B -> B; compose: g . f = f; }
//   presentation NAME { objects: ...; arrows: ...; relations: g . f = id_A; bound: 12; }
//   functor NAME : C -> D { object A => X; arrow f => u; }
//   setfunctor NAME on C { at A = {a1 a2}; map f : a1 -> b1, a2 -> b1; }
//   presheaf NAME on C { ... }          C a category, site or space
//   nat NAME : P => Q { at A : x -> y; }   or   { at A = f; } between functors
//   space NAME { points: p q; opens: {}, {p}, {p q}; }
//   site NAME on C { cover A by (f g); }   |   site NAME from-space S
//   clan NAME on C { terminal: T; display: f g; }
//   bundle NAME : C over S { at A = P; map u = alpha; }
//
// Identities are id_<object> and may be left out of maps. Element labels are
// identifiers or double-quoted strings. `#` comments run to end of line.
Document parse(const std::string& text);

// Canonical source text; parse(render(d)) renders to the same text.
std::string render(const Document& doc);
std::string render_item(const std::string& name, const Item& item);

}  // namespace guk
