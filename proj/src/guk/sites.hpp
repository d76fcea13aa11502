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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "guk/limits.hpp"

namespace guk {

// Arrows with a common target, in the order given.
using Family = std::vector<ArrowId>;

// A finite category with an assignment of covering families to each object.
// Pullbacks of every cospan are chosen once, at construction.
//
// Two families are identified when they have the same members up to
// reindexing, repetition and isomorphism over the common target.
class Site {
 public:
  Site(std::string name, CategoryRef base, std::vector<std::vector<Family>> cov);

  const std::string& name() const noexcept { return name_; }
  const CategoryRef& base() const noexcept { return base_; }
  const std::vector<Family>& covers(ObjectId a) const { return cov_[a]; }

  // Chosen pullback of the cospan (f, g); legs run to src f, src g and the
  // common target. Throws MissingPullback when there is none.
  const Cone& pullback(ArrowId f, ArrowId g) const;
  bool has_pullback(ArrowId f, ArrowId g) const;

  // Support of a family as a bit set over the isomorphism classes of arrows
  // into a.
  std::uint64_t key(ObjectId a, const Family& family) const;
  bool is_cover(ObjectId a, const Family& family) const;
  // g factors through f: g = f . h for some h.
  bool factors_through(ArrowId g, ArrowId f) const;
  // First h with f . h = g.
  std::optional<ArrowId> factor(ArrowId g, ArrowId f) const;
  // Representative arrow of each class bit of key(a, -).
  const std::vector<ArrowId>& classes(ObjectId a) const { return class_rep_[a]; }

 private:
  std::string name_;
  CategoryRef base_;
  std::vector<std::vector<Family>> cov_;
  std::map<std::pair<ArrowId, ArrowId>, Cone> pullbacks_;
  std::vector<int> class_bit_;                   // per arrow
  std::vector<std::vector<ArrowId>> class_rep_;  // per object
  std::vector<std::vector<std::uint64_t>> cover_keys_;
};

std::string family_label(const FinCategory& c, const Family& family);

// Axioms in order: isomorphisms cover, stability under pullback, closure under
// composition, monotonicity. Monotonicity is checked in the form: a family
// whose members all occur in covering families of A and which is refined by
// a covering family of A covers A. Throws MissingPullback.
Verdict validate_topology(const Site& s);

// Cov(A) = {{id_A}}.
Site chaotic_site(const CategoryRef& c, const std::string& name = "");

struct FiniteSpace {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<int>> opens;  // sorted point indices
};

// Throws NotATopology unless the opens contain the empty set and the whole
// set and are closed under binary unions and intersections.
void validate_space(const FiniteSpace& space);

std::string open_name(const FiniteSpace& space, const std::vector<int>& open);

// Opens ordered by inclusion, in declaration order; Cov(U) is every set of
// opens below U whose union is U, the empty family included when U is empty.
Site open_set_site(const FiniteSpace& space);

enum class SheafKind { Sheaf, SeparatedOnly, Neither };
std::string to_string(SheafKind kind);

struct SheafVerdict {
  SheafKind kind = SheafKind::Sheaf;
  // Counterexample when not a sheaf.
  ObjectId object = kNone;
  Family family;
  std::vector<std::string> witness;
  std::string detail;
};

// Compatible families of p over the family at a, in lexicographic order; p is
// a presheaf, i.e. a SetFunctor on opposite(base).
std::vector<std::vector<int>> compatible_families(const SetFunctor& p, const Site& s,
                                                  const Family& family);

SheafVerdict check_sheaf(const SetFunctor& p, const Site& s);
Verdict check_separated(const SetFunctor& p, const Site& s);

// Throws NotLex when the domain base lacks finite limits.
Verdict check_continuous(const Functor& f, const Site& from, const Site& to);

struct Sheafification {
  SetFunctor sheaf;
  Components unit;  // p => sheaf
};

// One plus construction: classes of matching families over covers.
Sheafification plus_construction(const SetFunctor& p, const Site& s);
// Plus construction applied twice.
Sheafification sheafify(const SetFunctor& p, const Site& s);

// Precomposition with the unit is a bijection Nat(sheaf, g) -> Nat(p, g) for
// every g in the list.
Verdict check_sheafification_universal(const SetFunctor& p, const Sheafification& a,
                                       const std::vector<SetFunctor>& sheaves);

}  // namespace guk
