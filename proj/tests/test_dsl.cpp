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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "guk/driver.hpp"
#include "guk/dsl.hpp"

using namespace guk;

namespace {

std::string corpus_text() {
  std::ifstream in(GUK_TEST_DATA "/corpus.guk");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses and returns the error, failing the test when there is none.
DslError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const DslError& e) {
    return e;
  }
  FAIL("expected a parse failure");
  return DslError(ErrorKind::ParseError, 0, 0, "");
}

}  // namespace

TEST_CASE("the arrow category") {
  const Document doc = parse("category C2 {\n  objects: 0 1;\n  arrows: a: 0 -> 1;\n}\n");
  REQUIRE(doc.items().size() == 1);
  const CategoryRef c = doc.category("C2");
  CHECK(c->num_arrows() == 3);
  CHECK(hom_set(*c, "0", "1") == std::vector<std::string>{"a"});
  CHECK(render(doc) == "category C2 {\n  objects: 0 1;\n  arrows: a: 0 -> 1;\n}\n");
}

TEST_CASE("duplicate names clash at the second definition") {
  const DslError e = parse_error("category A {\n  objects: x;\n}\n\ncategory A {\n  objects: y;\n}\n");
  CHECK(e.kind() == ErrorKind::NameClash);
  CHECK(e.line() == 5);
  CHECK(e.column() == 10);
  const DslError inner = parse_error("category A {\n  objects: x x;\n}\n");
  CHECK(inner.kind() == ErrorKind::NameClash);
  CHECK(inner.line() == 2);
  CHECK(inner.column() == 14);
}

TEST_CASE("undeclared names are unresolved references") {
  const DslError e = parse_error("category A {\n  objects: x;\n  arrows: f: x -> y;\n}\n");
  CHECK(e.kind() == ErrorKind::UnresolvedReference);
  CHECK(e.line() == 3);
  CHECK(e.column() == 19);
  CHECK(e.found() == "y");
  const DslError later = parse_error("functor F : A -> B {\n}\ncategory A {\n  objects: x;\n}\n");
  CHECK(later.kind() == ErrorKind::UnresolvedReference);
  CHECK(later.line() == 1);
  CHECK(later.column() == 13);
}

TEST_CASE("syntax errors report what was expected") {
  const DslError e = parse_error("category A {\n  objects x;\n}\n");
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.line() == 2);
  CHECK(e.column() == 11);
  CHECK(e.expected() == std::vector<std::string>{":"});
  CHECK(e.found() == "x");
  CHECK(std::string(e.what()) == "2:11: expected ':', found 'x'");
  const DslError top = parse_error("widget W {}\n");
  CHECK(top.kind() == ErrorKind::ParseError);
  CHECK(top.line() == 1);
  CHECK(top.column() == 1);
  CHECK(top.expected().size() > 5);
  const DslError eof = parse_error("category A {\n  objects: x;\n");
  CHECK(eof.kind() == ErrorKind::ParseError);
  CHECK(eof.line() == 3);
  const DslError str = parse_error("setfunctor F on A { at x = {\"open");
  CHECK(str.kind() == ErrorKind::ParseError);
}

TEST_CASE("invalid items fail validation with the inner verdict") {
  const DslError e = parse_error(
      "category C2 {\n  objects: 0 1;\n  arrows: a: 0 -> 1;\n}\n"
      "setfunctor F on C2 {\n  at 0 = {x y};\n  at 1 = {p};\n  map a : x -> p;\n}\n");
  CHECK(e.kind() == ErrorKind::ValidationFailed);
  CHECK(e.line() == 5);
  CHECK_FALSE(e.inner.pass);
  const DslError law = parse_error(
      "category M {\n  objects: 0;\n  arrows: e: 0 -> 0;\n}\n");
  CHECK(law.kind() == ErrorKind::ValidationFailed);
  const DslError infinite = parse_error("presentation L {\n  objects: 0;\n  arrows: e: 0 -> 0;\n  bound: 6;\n}\n");
  CHECK(infinite.kind() == ErrorKind::ValidationFailed);
  CHECK(infinite.inner.law == "NotFinitelyClosed");
}

TEST_CASE("the fixture document round-trips") {
  const std::string text = corpus_text();
  REQUIRE_FALSE(text.empty());
  const Document doc = parse(text);
  CHECK(doc.items().size() == 28);
  const std::string once = render(doc);
  const Document again = parse(once);
  CHECK(render(again) == once);
  REQUIRE(again.items().size() == doc.items().size());
  for (std::size_t i = 0; i < doc.items().size(); ++i) {
    CHECK(doc.items()[i].first == again.items()[i].first);
    CHECK(item_kind(doc.items()[i].second) == item_kind(again.items()[i].second));
  }
  CHECK(*doc.category("Chain3") == *again.category("Chain3"));
  CHECK(same_table(doc.set_functor("Fun").functor, again.set_functor("Fun").functor));
}

TEST_CASE("document lookups") {
  const Document doc = parse(corpus_text());
  CHECK(doc.base_category("DiscSite")->num_objects() == 4);
  CHECK(doc.base_category("Disc2")->num_objects() == 4);
  CHECK(doc.site("Disc2").covers(3).size() == doc.site("DiscSite").covers(3).size());
  CHECK(doc.category("Idem")->num_arrows() == 2);
  CHECK(doc.clan("KAll").display.size() == 3);
  CHECK(doc.bundle("Break").at.size() == 2);
  CHECK(doc.set_functor("Fun").presheaf);
  try {
    doc.functor("C2");
    FAIL("expected a kind error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
  try {
    doc.item("Nope");
    FAIL("expected UnknownId");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }
}

TEST_CASE("exported items parse back") {
  const std::string text = corpus_text();
  const Document doc = parse(text);
  for (const auto& [cmd, flags] : std::vector<std::pair<std::string, Flags>>{
           {"sheafify", {{"site", "Disc2"}, {"presheaf", "Const2"}, {"export", "dsl"}}},
           {"models", {{"category", "C2"}, {"export", "dsl"}}}}) {
    const Report r = run(cmd, flags, doc);
    REQUIRE(r.exit_code == 0);
    const Value* dsl = r.tree.get("result")->get("dsl");
    REQUIRE(dsl);
    std::string exported;
    for (const Value& line : dsl->items()) exported += line.text() + "\n";
    const Document extended = parse(text + "\n" + exported);
    CHECK(extended.items().size() > doc.items().size());
  }
}

TEST_CASE("quoted labels and comments") {
  const Document doc = parse(
      "# leading comment\ncategory One { objects: pt; }\n"
      "setfunctor S on One {\n  at pt = {\"a b\" \"\" x};\n}\n");
  const SetFunctor& s = doc.set_functor("S").functor;
  CHECK(s.carriers[0] == std::vector<std::string>{"a b", "", "x"});
  const Document back = parse(render(doc));
  CHECK(back.set_functor("S").functor.carriers[0] == s.carriers[0]);
}
