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

#include "doctest.h"
#include "guk/fixtures.hpp"
#include "oracles.hpp"

using namespace guk;

namespace {

Family family(const Site& s, std::initializer_list<const char*> names) {
  Family f;
  for (const char* n : names) f.push_back(s.base()->arrow(n));
  return f;
}

std::vector<SetFunctor> presheaves(const Site& s, int max_size) {
  return oracle::all_set_functors(opposite(s.base()), max_size);
}

// An image family covers in an open-set site when the union of the opens
// equals the open it lands in.
bool open_cover(const FiniteSpace& space, const FinCategory& base, ObjectId u, const Family& fam) {
  std::set<int> points;
  for (ArrowId f : fam)
    for (int p : space.opens[base.src(f)]) points.insert(p);
  return std::vector<int>(points.begin(), points.end()) == space.opens[u];
}

}  // namespace

TEST_CASE("chaotic topologies") {
  for (const auto& c : lex_corpus()) CHECK(validate_topology(chaotic_site(c)).pass);
  const Site s = chaotic_site(arrow_category());
  CHECK(s.is_cover(1, {s.base()->identity(1)}));
  CHECK_FALSE(s.is_cover(1, {s.base()->arrow("a")}));
}

TEST_CASE("open-set sites") {
  const FiniteSpace disc = discrete2_space();
  const Site d = open_set_site(disc);
  CHECK(validate_topology(d).pass);
  const ObjectId x = d.base()->object("O_a_b");
  CHECK(d.is_cover(x, family(d, {"le_O_a_O_a_b", "le_O_b_O_a_b"})));
  CHECK(d.is_cover(d.base()->object("O"), {}));
  CHECK_FALSE(d.is_cover(x, family(d, {"le_O_a_O_a_b"})));

  const Site s = open_set_site(sierpinski_space());
  CHECK(validate_topology(s).pass);
  const ObjectId top = s.base()->object("O_a_b");
  REQUIRE_FALSE(s.covers(top).empty());
  for (const Family& f : s.covers(top))
    CHECK(std::any_of(f.begin(), f.end(), [&](ArrowId g) { return s.base()->is_iso(g); }));

  const Site p = open_set_site(point_space());
  CHECK(p.base()->num_objects() == 2);
  CHECK(validate_topology(p).pass);
  CHECK(p.is_cover(p.base()->object("O"), {}));

  FiniteSpace bad{"Bad", {"a", "b"}, {{}, {0}, {1}}};
  CHECK_THROWS_AS(validate_space(bad), Error);
}

TEST_CASE("a cover table without a composite of covers fails its axiom") {
  const Site d = open_set_site(discrete2_space());
  const FinCategory& c = *d.base();
  const ObjectId x = c.object("O_a_b");
  const Family ab = family(d, {"le_O_a_O_a_b", "le_O_b_O_a_b"});
  std::vector<std::vector<Family>> cov;
  for (ObjectId u = 0; u < c.num_objects(); ++u) {
    std::vector<Family> keep;
    for (const Family& f : d.covers(u))
      if (u != x || d.key(x, f) != d.key(x, ab)) keep.push_back(f);
    cov.push_back(keep);
  }
  const Site broken("Broken", d.base(), cov);
  const Verdict v = validate_topology(broken);
  CHECK_FALSE(v.pass);
  CHECK(v.law == "composition");
}

TEST_CASE("every topology on at most three points gives a site") {
  const std::size_t expected[] = {1, 1, 4, 29};
  for (int n = 0; n <= 3; ++n) {
    const auto spaces = oracle::all_topologies(n);
    CHECK(spaces.size() == expected[n]);
    for (const auto& space : spaces) {
      CHECK_NOTHROW(validate_space(space));
      CHECK(validate_topology(open_set_site(space)).pass);
    }
  }
}

TEST_CASE("sheaf verdicts on the discrete two-point space") {
  const FiniteSpace disc = discrete2_space();
  const Site d = open_set_site(disc);
  const ObjectId x = d.base()->object("O_a_b");

  const SetFunctor fun = function_presheaf(disc, d, {"0", "1"}, "Fun");
  REQUIRE(validate_set_functor(fun).pass);
  CHECK(check_sheaf(fun, d).kind == SheafKind::Sheaf);
  CHECK(compatible_families(fun, d, family(d, {"le_O_a_O_a_b", "le_O_b_O_a_b"})).size() == 4);
  CHECK(fun.size(x) == 4);

  const SheafVerdict big = check_sheaf(constant_everywhere(d, {"0", "1"}, "Big"), d);
  CHECK(big.kind == SheafKind::Neither);
  CHECK(d.base()->object_name(big.object) == "O");

  const SetFunctor c2 = constant_presheaf(disc, d, {"0", "1"}, "Const2");
  const SheafVerdict cv = check_sheaf(c2, d);
  CHECK(cv.kind == SheafKind::SeparatedOnly);
  CHECK(cv.object == x);
  CHECK(check_separated(c2, d).pass);

  // Two global elements with the same restrictions.
  SetFunctor twin = constant_presheaf(disc, d, {"0"}, "Twin");
  twin.carriers[x] = {"p", "q"};
  for (ArrowId g = 0; g < d.base()->num_arrows(); ++g)
    if (d.base()->tgt(g) == x) twin.action[g] = d.base()->is_identity(g) ? std::vector<int>{0, 1} : std::vector<int>{0, 0};
  REQUIRE(validate_set_functor(twin).pass);
  const Verdict sep = check_separated(twin, d);
  CHECK_FALSE(sep.pass);
  CHECK(std::find(sep.witness.begin(), sep.witness.end(), "p") != sep.witness.end());
  CHECK(std::find(sep.witness.begin(), sep.witness.end(), "q") != sep.witness.end());
}

TEST_CASE("chaotic sites make every presheaf a sheaf") {
  for (const auto& c : lex_corpus()) {
    if (c->num_arrows() > 6) continue;
    const Site s = chaotic_site(c);
    for (const SetFunctor& p : presheaves(s, 2)) CHECK(check_sheaf(p, s).kind == SheafKind::Sheaf);
  }
}

TEST_CASE("sheaf verdicts agree with the direct gluing search") {
  const FiniteSpace disc = discrete2_space();
  const Site d = open_set_site(disc);
  for (const SetFunctor& p : {function_presheaf(disc, d, {"0", "1"}, "Fun"),
                              constant_presheaf(disc, d, {"0", "1"}, "Const2"),
                              constant_everywhere(d, {"0", "1"}, "Big")})
    CHECK(check_sheaf(p, d).kind == oracle::gluing_kind(p, d));

  for (const FiniteSpace& space : {sierpinski_space(), discrete2_space(), point_space()}) {
    const Site s = open_set_site(space);
    std::size_t kinds[3] = {0, 0, 0};
    for (const SetFunctor& p : presheaves(s, 2)) {
      const SheafKind k = check_sheaf(p, s).kind;
      CHECK(k == oracle::gluing_kind(p, s));
      CHECK(check_separated(p, s).pass == (k != SheafKind::Neither));
      ++kinds[static_cast<int>(k)];
    }
    CHECK(kinds[0] > 0);
    CHECK(kinds[2] > 0);
  }
}

TEST_CASE("continuity") {
  const FiniteSpace disc = discrete2_space();
  const Site d = open_set_site(disc);
  CHECK(check_continuous(identity_functor(d.base()), d, d).pass);
  const Site chaotic = chaotic_site(d.base(), "ChaoticDisc2");
  const Verdict v = check_continuous(identity_functor(d.base()), d, chaotic);
  CHECK_FALSE(v.pass);
  CHECK(v.witness.size() >= 1);

  // U |-> U on the point space into the Sierpinski space, p |-> a.
  const FiniteSpace pt = point_space();
  const FiniteSpace sier = sierpinski_space();
  const Site ps = open_set_site(pt);
  const Site ss = open_set_site(sier);
  const FinCategory& pc = *ps.base();
  const FinCategory& sc = *ss.base();
  Functor f{"incl", ps.base(), ss.base(), {sc.object("O"), sc.object("O_a")}, {}};
  for (ArrowId g = 0; g < pc.num_arrows(); ++g)
    f.mmap.push_back(sc.hom(f.omap[pc.src(g)], f.omap[pc.tgt(g)]).front());
  REQUIRE(validate_functor(f).pass);
  bool expected = oracle::functor_is_lex(f);
  CHECK_FALSE(expected);
  for (ObjectId u = 0; u < pc.num_objects(); ++u)
    for (const Family& fam : ps.covers(u)) {
      Family image;
      for (ArrowId g : fam) image.push_back(f.mmap[g]);
      expected = expected && open_cover(sier, sc, f.omap[u], image);
    }
  CHECK(check_continuous(f, ps, ss).pass == expected);

  // U |-> U into the discrete space through the Sierpinski opens is lex
  // (meets and the top are kept) and sends covers to covers.
  Functor g{"sier_disc", ss.base(), d.base(), {}, {}};
  const FinCategory& dc = *d.base();
  g.omap = {dc.object("O"), dc.object("O_a"), dc.object("O_a_b")};
  for (ArrowId h = 0; h < sc.num_arrows(); ++h) g.mmap.push_back(dc.hom(g.omap[sc.src(h)], g.omap[sc.tgt(h)]).front());
  REQUIRE(validate_functor(g).pass);
  CHECK(oracle::functor_is_lex(g));
  CHECK(check_continuous(g, ss, d).pass);
}

TEST_CASE("sheafification") {
  const FiniteSpace disc = discrete2_space();
  const Site d = open_set_site(disc);
  const ObjectId x = d.base()->object("O_a_b");
  const ObjectId empty = d.base()->object("O");

  const SetFunctor fun = function_presheaf(disc, d, {"0", "1"}, "Fun");
  const Sheafification a = sheafify(fun, d);
  for (ObjectId u = 0; u < d.base()->num_objects(); ++u) {
    std::set<int> image(a.unit[u].begin(), a.unit[u].end());
    CHECK(image.size() == a.unit[u].size());
    CHECK(static_cast<int>(image.size()) == a.sheaf.size(u));
  }

  const Sheafification c = sheafify(constant_presheaf(disc, d, {"0", "1"}, "Const2"), d);
  CHECK(c.sheaf.size(x) == 4);
  CHECK(check_sheaf(c.sheaf, d).kind == SheafKind::Sheaf);
  CHECK(validate_set_nat(constant_presheaf(disc, d, {"0", "1"}, "Const2"), c.sheaf, c.unit).pass);

  const Sheafification b = sheafify(constant_everywhere(d, {"0", "1"}, "Big"), d);
  CHECK(b.sheaf.size(empty) == 1);
  CHECK(check_sheaf(b.sheaf, d).kind == SheafKind::Sheaf);
}
