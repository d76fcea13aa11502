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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "guk/clans.hpp"
#include "guk/fixtures.hpp"

using namespace guk;

namespace {

std::vector<ArrowId> all_arrows(const FinCategory& c) {
  std::vector<ArrowId> out(c.num_arrows());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

ObjectId first_terminal(const FinCategory& c) {
  for (ObjectId t = 0; t < c.num_objects(); ++t) {
    bool ok = true;
    for (ObjectId a = 0; a < c.num_objects(); ++a) ok = ok && c.hom(a, t).size() == 1;
    if (ok) return t;
  }
  return kNone;
}

std::vector<ArrowId> ids(const FinCategory& c, std::initializer_list<const char*> names) {
  std::vector<ArrowId> out;
  for (const char* n : names) out.push_back(c.arrow(n));
  std::sort(out.begin(), out.end());
  return out;
}

// The same category with arrows renumbered by perm (old id -> new id).
CategoryRef relabel(const FinCategory& c, const std::vector<int>& perm) {
  const int n = c.num_arrows();
  std::vector<std::string> names(n);
  std::vector<ObjectId> src(n), tgt(n);
  std::vector<ArrowId> identity(c.num_objects()), comp(static_cast<std::size_t>(n) * n, kNone);
  for (ArrowId f = 0; f < n; ++f) {
    names[perm[f]] = c.arrow_name(f);
    src[perm[f]] = c.src(f);
    tgt[perm[f]] = c.tgt(f);
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) identity[a] = perm[c.identity(a)];
  for (ArrowId g = 0; g < n; ++g)
    for (ArrowId f = 0; f < n; ++f)
      if (ArrowId h = c.compose(g, f); h != kNone) comp[static_cast<std::size_t>(perm[g]) * n + perm[f]] = perm[h];
  return std::make_shared<const FinCategory>(c.name(), c.object_names(), names, src, tgt, identity, comp);
}

}  // namespace

TEST_CASE("clan axioms") {
  for (const auto& c : lex_corpus()) {
    const Clan k{"All", c, first_terminal(*c), all_arrows(*c)};
    CHECK(validate_clan(k).pass);
  }
  const auto two = arrow_category();
  CHECK(validate_clan(Clan{"K", two, 1, ids(*two, {"id_0", "id_1", "a"})}).pass);
  const Verdict v = validate_clan(Clan{"K", two, 1, ids(*two, {"id_0", "id_1"})});
  CHECK_FALSE(v.pass);
  CHECK(v.law == "terminal-projections");
  CHECK(v.witness == std::vector<std::string>{"a"});
  CHECK(terminal_projection(*two, 1, 0) == two->arrow("a"));
  CHECK_THROWS_AS(terminal_projection(*two, 0, 1), Error);
}

TEST_CASE("display closure") {
  const auto two = arrow_category();
  CHECK(display_closure(two, {}) == ids(*two, {"id_0", "id_1", "a"}));
  const auto chain = chain_category(3, "Chain3");
  // Terminal projections le_0_2 and le_1_2; pulling le_0_2 back along le_1_2
  // gives le_0_1.
  CHECK(display_closure(chain, {}) == all_arrows(*chain));
  CHECK(display_closure(chain, {}).size() == 6);
  for (const auto& c : lex_corpus()) CHECK(display_closure(c, all_arrows(*c)) == all_arrows(*c));
  CHECK_THROWS_AS(display_closure(discrete_category(2), {}), Error);
}

TEST_CASE("display closure is idempotent and yields clans") {
  std::mt19937 rng(5150);
  const auto bases = lex_corpus();
  for (int round = 0; round < 50; ++round) {
    const auto& c = bases[rng() % bases.size()];
    std::vector<ArrowId> gens;
    for (ArrowId f = 0; f < c->num_arrows(); ++f)
      if (rng() % 3 == 0) gens.push_back(f);
    const auto once = display_closure(c, gens);
    CHECK(display_closure(c, once) == once);
    CHECK(std::includes(once.begin(), once.end(), gens.begin(), gens.end()));
    CHECK(validate_clan(Clan{"K", c, first_terminal(*c), once}).pass);
  }
}

TEST_CASE("clan verdicts are invariant under relabeling") {
  std::mt19937 rng(8);
  for (const auto& c : lex_corpus()) {
    for (int round = 0; round < 10; ++round) {
      std::vector<int> perm(c->num_arrows());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const CategoryRef r = relabel(*c, perm);
      REQUIRE(validate_category(*r).pass);
      std::vector<ArrowId> display, moved;
      for (ArrowId f = 0; f < c->num_arrows(); ++f)
        if (rng() % 2) display.push_back(f), moved.push_back(perm[f]);
      std::sort(moved.begin(), moved.end());
      const ObjectId t = first_terminal(*c);
      const Verdict a = validate_clan(Clan{"K", c, t, display});
      const Verdict b = validate_clan(Clan{"K", r, t, moved});
      CHECK(a.pass == b.pass);
      CHECK(a.law == b.law);
      std::vector<ArrowId> back;
      for (ArrowId f : display_closure(c, display)) back.push_back(perm[f]);
      std::sort(back.begin(), back.end());
      CHECK(display_closure(r, moved) == back);
    }
  }
}

TEST_CASE("section composites") {
  const auto two = arrow_category();
  const Clan all{"K", two, 1, all_arrows(*two)};
  for (ArrowId r = 0; r < two->num_arrows(); ++r) CHECK(check_section_composite(all, r).pass);
  const Clan broken{"K", two, 1, ids(*two, {"id_0", "id_1"})};
  CHECK_FALSE(check_section_composite(broken, two->identity(0)).pass);
  for (const auto& c : lex_corpus()) {
    const Clan k{"K", c, first_terminal(*c), display_closure(c, {})};
    for (ArrowId r = 0; r < c->num_arrows(); ++r) CHECK(check_section_composite(k, r).pass);
  }
}

TEST_CASE("open-set posets with every arrow displayed are clans") {
  for (const FiniteSpace& space : {point_space(), sierpinski_space(), discrete2_space()}) {
    const Site s = open_set_site(space);
    CHECK(validate_topology(s).pass);
    const Clan k{"K", s.base(), first_terminal(*s.base()), all_arrows(*s.base())};
    CHECK(validate_clan(k).pass);
  }
}
