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

#include "doctest.h"
#include "guk/fixtures.hpp"
#include "guk/models.hpp"
#include "oracles.hpp"

using namespace guk;

namespace {

CategoryRef named(const std::string& name) {
  for (const auto& c : corpus_categories())
    if (c->name() == name) return c;
  throw Error(ErrorKind::UnknownId, name);
}

// For every a, the cocone (K, u) |-> u over the objects of s above a is a
// colimit: for every y, g |-> (g . u) is a bijection from hom(a, y) onto the
// compatible families of arrows K -> y.
bool dense_oracle(const FinCategory& c, const std::vector<ObjectId>& s) {
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    std::vector<ArrowId> us;
    for (ObjectId k : s)
      for (ArrowId u : c.hom(k, a)) us.push_back(u);
    for (ObjectId y = 0; y < c.num_objects(); ++y) {
      std::vector<int> bounds;
      for (ArrowId u : us) bounds.push_back(static_cast<int>(c.hom(c.src(u), y).size()));
      std::set<std::vector<ArrowId>> cocones;
      auto visit = [&](const std::vector<int>& pick) {
        std::vector<ArrowId> v;
        for (std::size_t i = 0; i < us.size(); ++i) v.push_back(c.hom(c.src(us[i]), y)[pick[i]]);
        for (std::size_t i = 0; i < us.size(); ++i)
          for (std::size_t j = 0; j < us.size(); ++j)
            for (ArrowId h : c.hom(c.src(us[i]), c.src(us[j])))
              if (c.compose(us[j], h) == us[i] && c.compose(v[j], h) != v[i]) return;
        cocones.insert(v);
      };
      oracle::for_each_tuple(bounds, visit);
      std::set<std::vector<ArrowId>> image;
      for (ArrowId g : c.hom(a, y)) {
        std::vector<ArrowId> v;
        for (ArrowId u : us) v.push_back(c.compose(g, u));
        image.insert(v);
      }
      if (image.size() != c.hom(a, y).size() || image != cocones) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("lex model counts") {
  CHECK(enumerate_lex_models(terminal_category(), 3).models.size() == 1);
  for (int max = 1; max <= 3; ++max) CHECK(enumerate_lex_models(arrow_category(), max).models.size() == 2);
  CHECK_THROWS_AS(enumerate_lex_models(discrete_category(2), 3), Error);
  CHECK_THROWS_AS(enumerate_lex_models(arrow_category(), 0), Error);
}

TEST_CASE("lex model counts agree with the unpruned oracle") {
  for (const auto& c : lex_corpus()) {
    const int max = c->num_arrows() > 4 ? 2 : 3;
    CHECK(enumerate_lex_models(c, max).models.size() == oracle::count_lex_models(c, max));
  }
}

TEST_CASE("models send the terminal object to a singleton") {
  for (const auto& c : lex_corpus()) {
    const ModelFragment m = enumerate_lex_models(c, 2);
    const ObjectId t = *oracle::find_limits(*c).terminal;
    for (const auto& f : m.models) {
      CHECK(f.size(t) == 1);
      CHECK(validate_set_functor(f).pass);
    }
    CHECK(validate_category(*m.fragment.category).pass);
  }
}

TEST_CASE("evaluation functors") {
  const ModelFragment one = enumerate_lex_models(terminal_category(), 3);
  CHECK(evaluation_preservation_check(one, 0).pass);
  const ModelFragment two = enumerate_lex_models(arrow_category(), 3);
  CHECK(evaluation_preservation_check(two, 0).pass);
  CHECK(evaluation_preservation_check(two, 1).pass);
  const SetFunctor ev1 = evaluation_functor(two, 1);
  CHECK(ev1.size(0) == 1);
  CHECK(ev1.size(1) == 1);
  CHECK(validate_set_functor(evaluation_functor(two, 0)).pass);
}

TEST_CASE("conservativity") {
  const auto two = arrow_category();
  CHECK(check_conservative(two, {0, 1}).pass);
  const Verdict v = check_conservative(two, {});
  CHECK_FALSE(v.pass);
  CHECK(v.witness == std::vector<std::string>{"a"});
  for (const auto& c : corpus_categories()) {
    std::vector<ObjectId> all;
    for (ObjectId a = 0; a < c->num_objects(); ++a) all.push_back(a);
    CHECK(check_conservative(c, all).pass);
  }
}

TEST_CASE("density agrees with the direct colimit search") {
  for (const auto& name : {"One", "Two", "Chain3", "Cospan", "Span", "Par", "Idem", "Iso"}) {
    const auto c = named(name);
    const int n = c->num_objects();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<ObjectId> s;
      for (ObjectId a = 0; a < n; ++a)
        if ((mask >> a) & 1) s.push_back(a);
      CAPTURE(name);
      CAPTURE(mask);
      CHECK(check_dense(c, s).pass == dense_oracle(*c, s));
    }
  }
  const auto two = arrow_category();
  CHECK(check_dense(two, {0, 1}).pass);
  CHECK(check_dense(two, {1}).pass);
  CHECK_FALSE(check_dense(two, {0}).pass);
}

TEST_CASE("duality report") {
  const DualityReport one = duality_report(terminal_category(), 2);
  CHECK(one.pass());
  CHECK(one.epsilon_counts == std::vector<std::vector<std::size_t>>{{1}});
  const DualityReport two = duality_report(arrow_category(), 3);
  CHECK(two.pass());
  CHECK(two.epsilon_counts == two.hom_counts);
  CHECK(two.hom_counts == std::vector<std::vector<std::size_t>>{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(duality_report(discrete_category(2)), Error);
}

TEST_CASE("evaluation transformations are counted by hom-sets") {
  for (const auto& c : lex_corpus()) {
    const ModelFragment m = enumerate_lex_models(c, c->num_arrows() > 4 ? 2 : 3);
    for (ObjectId a = 0; a < c->num_objects(); ++a)
      for (ObjectId b = 0; b < c->num_objects(); ++b)
        CHECK(oracle::count_nats(evaluation_functor(m, a), evaluation_functor(m, b)) == c->hom(a, b).size());
  }
}
