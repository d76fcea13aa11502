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
#include <random>

#include "doctest.h"
#include "guk/fixtures.hpp"
#include "guk/limits.hpp"
#include "oracles.hpp"

using namespace guk;

namespace {

SetFunctor two_by_two(const CategoryRef& two) {
  return SetFunctor{"F", two, {{"x", "y"}, {"p", "q"}}, {{0, 1}, {0, 1}, {0, 1}}};
}

}  // namespace

TEST_CASE("identity functor and constant set functor validate") {
  for (const auto& c : corpus_categories()) CHECK(validate_functor(identity_functor(c)).pass);
  const auto two = arrow_category();
  CHECK(validate_set_functor(constant_set_functor(two, {"*"})).pass);
}

TEST_CASE("non-functorial tables are rejected") {
  const auto two = arrow_category();
  SetFunctor f = two_by_two(two);
  f.action[two->arrow("a")] = {0, 2};
  CHECK_FALSE(validate_set_functor(f).pass);
  Functor g = identity_functor(two);
  g.mmap[two->arrow("a")] = two->identity(0);
  CHECK_FALSE(validate_functor(g).pass);
}

TEST_CASE("a perturbed component breaks the square it sits in") {
  const auto two = arrow_category();
  const SetFunctor f = two_by_two(two);
  Components id = identity_components(f);
  CHECK(validate_set_nat(f, f, id).pass);
  id[1] = {1, 0};
  const Verdict v = validate_set_nat(f, f, id);
  CHECK_FALSE(v.pass);
  CHECK(std::find(v.witness.begin(), v.witness.end(), "a") != v.witness.end());
}

TEST_CASE("representables of the arrow category") {
  const auto two = arrow_category();
  const SetFunctor y0 = yoneda(two, 0);
  CHECK(y0.carriers == std::vector<std::vector<std::string>>{{"id_0"}, {}});
  const SetFunctor y1 = yoneda(two, 1);
  CHECK(y1.carriers == std::vector<std::vector<std::string>>{{"a"}, {"id_1"}});
  CHECK(y1.action[two->arrow("a")] == std::vector<int>{0});
  CHECK(validate_set_functor(y1).pass);
  const SetFunctor h0 = covariant_hom(two, 0);
  CHECK(h0.carriers == std::vector<std::vector<std::string>>{{"id_0"}, {"a"}});

  const auto one = terminal_category();
  CHECK(yoneda(one, 0).carriers == std::vector<std::vector<std::string>>{{"id_0"}});
  CHECK(covariant_hom(one, 0).carriers == std::vector<std::vector<std::string>>{{"id_0"}});
}

TEST_CASE("covariant and contravariant hom agree on carriers") {
  for (const auto& c : corpus_categories())
    for (ObjectId a = 0; a < c->num_objects(); ++a) {
      const SetFunctor h = covariant_hom(c, a);
      CHECK(validate_set_functor(h).pass);
      for (ObjectId b = 0; b < c->num_objects(); ++b) CHECK(h.carriers[b] == yoneda(c, b).carriers[a]);
    }
}

TEST_CASE("full faithfulness") {
  for (const auto& c : corpus_categories()) CHECK(check_fully_faithful(identity_functor(c)).pass);
  const auto two = arrow_category();
  const auto one = terminal_category();
  const Functor bang{"bang", two, one, {0, 0}, {0, 0, 0}};
  REQUIRE(validate_functor(bang).pass);
  const Verdict v = check_fully_faithful(bang);
  CHECK_FALSE(v.pass);
  CHECK(v.witness == std::vector<std::string>{"1", "0"});
}

TEST_CASE("the Yoneda embedding is fully faithful on the corpus") {
  for (const auto& c : corpus_categories()) {
    const YonedaEmbedding y = yoneda_embedding(c);
    CHECK(validate_functor(y.embedding).pass);
    CHECK(check_fully_faithful(y.embedding).pass);
  }
}

TEST_CASE("natural transformation counts") {
  const auto one = terminal_category();
  const auto two = arrow_category();
  CHECK(nat_transforms_between(constant_set_functor(one, {"*"}), constant_set_functor(one, {"*"})).size() == 1);
  CHECK(nat_transforms_between(yoneda(two, 0), yoneda(two, 1)).size() == 1);
  const SetFunctor f = constant_set_functor(one, {"0", "1"});
  CHECK(nat_transforms_between(f, f).size() == 4);
}

TEST_CASE("natural transformation enumeration matches the oracle") {
  for (const auto& c : corpus_categories()) {
    if (c->num_arrows() > 5) continue;
    const auto fs = oracle::all_set_functors(c, 2);
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
      const SetFunctor& s = fs[rng() % fs.size()];
      const SetFunctor& t = fs[rng() % fs.size()];
      CHECK(nat_transforms_between(s, t) == oracle::all_nats(s, t));
      CHECK(find_natural_iso(s, t).has_value() == oracle::isomorphic(s, t));
    }
  }
}

TEST_CASE("set functor enumeration matches the unpruned oracle") {
  for (const auto& c : corpus_categories()) {
    if (c->num_arrows() > 6) continue;
    std::vector<SetFunctor> lib;
    enumerate_set_functors(c, 2, [&](const SetFunctor& f) {
      lib.push_back(f);
      return true;
    });
    const auto brute = oracle::all_set_functors(c, 2);
    REQUIRE(lib.size() == brute.size());
    for (const auto& f : brute) {
      const bool found = std::any_of(lib.begin(), lib.end(), [&](const SetFunctor& g) { return same_table(f, g); });
      CHECK(found);
    }
  }
}

TEST_CASE("functor composition is associative and unital") {
  const auto cats = corpus_categories();
  std::mt19937 rng(11);
  for (int round = 0; round < 60; ++round) {
    const auto& a = cats[rng() % cats.size()];
    const auto& b = cats[rng() % cats.size()];
    const auto& c = cats[rng() % cats.size()];
    std::vector<Functor> ab, bc;
    enumerate_functors(a, b, [&](const Functor& f) {
      ab.push_back(f);
      return ab.size() < 20;
    });
    enumerate_functors(b, c, [&](const Functor& f) {
      bc.push_back(f);
      return bc.size() < 20;
    });
    if (ab.empty() || bc.empty()) continue;
    const Functor& f = ab[rng() % ab.size()];
    const Functor& g = bc[rng() % bc.size()];
    const Functor gf = compose(g, f);
    CHECK(validate_functor(gf).pass);
    const Functor idc = identity_functor(c);
    const Functor left = compose(idc, gf);
    const Functor right = compose(compose(idc, g), f);
    CHECK(left.omap == right.omap);
    CHECK(left.mmap == right.mmap);
    CHECK(compose(gf, identity_functor(a)).mmap == gf.mmap);
  }
}

TEST_CASE("functors into fragments") {
  const auto two = arrow_category();
  const FunctorFragment frag = tabulate_fragment("Rep", {yoneda(two, 0), yoneda(two, 1)});
  CHECK(validate_category(*frag.category).pass);
  CHECK(frag.category->num_arrows() == 3);
  CHECK_THROWS_AS(functor_into_fragment("bad", two, frag, {0, 1}, [&](ArrowId) { return Components{{}, {}}; }),
                  Error);
}
