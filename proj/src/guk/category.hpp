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
#include <optional>
#include <string>
#include <vector>

#include "guk/common.hpp"

namespace guk {

using ObjectId = int;
using ArrowId = int;
inline constexpr int kNone = -1;

// An explicitly tabulated finite category. Objects and arrows are dense
// indices with opaque names attached; composition is a full table,
// compose(g, f) = g . f, with kNone where undefined.
//
// Construction does not check the category laws so that broken tables can be
// represented and diagnosed; see validate_category.
class FinCategory {
 public:
  FinCategory(std::string name, std::vector<std::string> objects,
              std::vector<std::string> arrows, std::vector<ObjectId> src,
              std::vector<ObjectId> tgt, std::vector<ArrowId> identity,
              std::vector<ArrowId> composition);

  const std::string& name() const noexcept { return name_; }
  int num_objects() const noexcept { return static_cast<int>(objects_.size()); }
  int num_arrows() const noexcept { return static_cast<int>(arrows_.size()); }

  const std::string& object_name(ObjectId a) const { return objects_.at(a); }
  const std::string& arrow_name(ArrowId f) const { return arrows_.at(f); }
  const std::vector<std::string>& object_names() const noexcept { return objects_; }
  const std::vector<std::string>& arrow_names() const noexcept { return arrows_; }

  ObjectId src(ArrowId f) const { return src_[f]; }
  ObjectId tgt(ArrowId f) const { return tgt_[f]; }
  ArrowId identity(ObjectId a) const { return identity_[a]; }
  bool is_identity(ArrowId f) const { return identity_[src_[f]] == f; }

  // g . f, or kNone when the table has no entry.
  ArrowId compose(ArrowId g, ArrowId f) const {
    return composition_[static_cast<std::size_t>(g) * arrows_.size() + f];
  }

  // Arrows with the given source and target, in canonical (id) order.
  const std::vector<ArrowId>& hom(ObjectId a, ObjectId b) const {
    return hom_[static_cast<std::size_t>(a) * objects_.size() + b];
  }

  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  ObjectId object(const std::string& name) const;  // throws UnknownId
  ArrowId arrow(const std::string& name) const;    // throws UnknownId

  // True when f has a two-sided inverse.
  bool is_iso(ArrowId f) const;
  std::optional<ArrowId> inverse(ArrowId f) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> arrows_;
  std::vector<ObjectId> src_;
  std::vector<ObjectId> tgt_;
  std::vector<ArrowId> identity_;
  std::vector<ArrowId> composition_;
  std::vector<std::vector<ArrowId>> hom_;
  std::map<std::string, ObjectId> object_index_;
  std::map<std::string, ArrowId> arrow_index_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

// Incremental construction. Identity arrows are created with the objects and
// named id_<object>; they come first in the arrow order. Composites with an
// identity are filled in by build() unless set explicitly.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}

  ObjectId add_object(const std::string& name);
  ArrowId add_arrow(const std::string& name, ObjectId src, ObjectId tgt);
  // Builder-side id of the identity on a; only meaningful to this builder.
  static ArrowId identity_arrow(ObjectId a) { return -(a + 2); }
  void set_compose(ArrowId g, ArrowId f, ArrowId h);

  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  ObjectId arrow_src(ArrowId f) const;
  ObjectId arrow_tgt(ArrowId f) const;

  FinCategory build() const;
  CategoryRef build_ref() const { return std::make_shared<const FinCategory>(build()); }

 private:
  struct PendingArrow {
    std::string name;
    ObjectId src;
    ObjectId tgt;
  };

  ArrowId final_id(ArrowId pending) const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<PendingArrow> arrows_;
  // Builder ids: arrows count up from 0, identities are -(object + 2).
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> compose_;
};

// Checks identities, definedness/typing of composition, unit laws and
// associativity. The witness names the first offending ids.
Verdict validate_category(const FinCategory& c);

FinCategory opposite(const FinCategory& c);
CategoryRef opposite(const CategoryRef& c);

// Named-id hom set; throws UnknownId for unknown objects.
std::vector<std::string> hom_set(const FinCategory& c, const std::string& a,
                                 const std::string& b);

// Canonical small categories used throughout.
CategoryRef terminal_category(const std::string& name = "One");
CategoryRef arrow_category(const std::string& name = "Two");
CategoryRef discrete_category(int n, const std::string& name = "Disc");

// Thin category on the given elements; leq[i][j] says i <= j. The relation
// must be reflexive and transitive. Arrow i -> j is named le_<i>_<j>.
CategoryRef poset_category(const std::string& name,
                           const std::vector<std::string>& elements,
                           const std::vector<std::vector<bool>>& leq);

// Arrow names of a tuple of ids, used in witnesses.
std::vector<std::string> arrow_names(const FinCategory& c,
                                     const std::vector<ArrowId>& arrows);

}  // namespace guk
