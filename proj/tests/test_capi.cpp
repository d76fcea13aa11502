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

#include <cstdlib>
#include <cstring>
#include <string>

#include "doctest.h"
#include "golden_runner.hpp"
#include "guk/guk.h"

namespace {

const std::string root = GUK_TEST_ROOT;

struct Run {
  int exit_code = -1;
  std::string text;
};

Run run(const std::string& source, const char* command, std::vector<const char*> names,
        std::vector<const char*> values, unsigned long long max_work = 0) {
  guk_report* report = nullptr;
  REQUIRE(guk_run_source(source.data(), source.size(), command, names.data(), values.data(), names.size(), max_work,
                         0, &report) == GUK_OK);
  char* text = nullptr;
  REQUIRE(guk_report_text(report, GUK_FORMAT_MACHINE, &text) == GUK_OK);
  Run r{guk_report_exit_code(report), text};
  guk_string_free(text);
  guk_report_free(report);
  return r;
}

}  // namespace

TEST_CASE("null arguments") {
  guk_document* doc = nullptr;
  CHECK(guk_document_parse(nullptr, 0, &doc, nullptr) == GUK_NULL_ARGUMENT);
  CHECK(guk_document_parse("", 0, nullptr, nullptr) == GUK_NULL_ARGUMENT);
  guk_report* report = nullptr;
  CHECK(guk_run(nullptr, "check", nullptr, nullptr, 0, 0, &report) == GUK_NULL_ARGUMENT);
  CHECK(guk_run_source("", 0, nullptr, nullptr, nullptr, 0, 0, 0, &report) == GUK_NULL_ARGUMENT);
  const char* name = nullptr;
  const char* value = "x";
  CHECK(guk_run_source("", 0, "check", &name, &value, 1, 0, 0, &report) == GUK_NULL_ARGUMENT);
  CHECK(guk_report_exit_code(nullptr) == 2);
  CHECK(guk_report_text(nullptr, GUK_FORMAT_MACHINE, nullptr) == GUK_NULL_ARGUMENT);
  guk_report_free(nullptr);
  guk_document_free(nullptr);
}

TEST_CASE("status strings") {
  CHECK(std::string(guk_status_string(GUK_OK)) == "ok");
  CHECK(std::string(guk_status_string(GUK_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(guk_status_string(GUK_WORK_LIMIT)) == "WorkLimit");
  CHECK(std::string(guk_status_string(GUK_INTERNAL)) == "Internal");
  CHECK(std::strlen(guk_version()) > 0);
}

TEST_CASE("documents") {
  const std::string text = golden::read_file(root + "/data/corpus.guk");
  guk_document* doc = nullptr;
  char* message = nullptr;
  REQUIRE(guk_document_parse(text.data(), text.size(), &doc, &message) == GUK_OK);
  CHECK(message == nullptr);
  CHECK(guk_document_item_count(doc) == 28);
  char* rendered = nullptr;
  REQUIRE(guk_document_render(doc, &rendered) == GUK_OK);
  guk_document* again = nullptr;
  REQUIRE(guk_document_parse(rendered, std::strlen(rendered), &again, nullptr) == GUK_OK);
  CHECK(guk_document_item_count(again) == 28);

  const char* names[] = {"item"};
  const char* values[] = {"C2"};
  guk_report* report = nullptr;
  REQUIRE(guk_run(again, "check", names, values, 1, 0, &report) == GUK_OK);
  CHECK(guk_report_exit_code(report) == 0);
  guk_report_free(report);
  guk_string_free(rendered);
  guk_document_free(again);
  guk_document_free(doc);

  const std::string bad = golden::read_file(root + "/data/clash.guk");
  REQUIRE(guk_document_parse(bad.data(), bad.size(), &doc, &message) == GUK_NAME_CLASH);
  CHECK(doc == nullptr);
  REQUIRE(message != nullptr);
  CHECK(std::string(message).rfind("19:10:", 0) == 0);
  guk_string_free(message);
}

TEST_CASE("exit codes follow verdicts") {
  const std::string text = golden::read_file(root + "/data/corpus.guk");
  const Run pass = run(text, "check", {"item"}, {"C2"});
  CHECK(pass.exit_code == 0);
  CHECK(pass.text.find("\nverdict: pass\n") != std::string::npos);
  const Run fail = run(text, "sheaf", {"site", "presheaf"}, {"Disc2", "Const2"});
  CHECK(fail.exit_code == 1);
  CHECK(fail.text.find("\nwitness:") != std::string::npos);
  const Run value = run(text, "models", {"category", "max-size"}, {"C2", "3"});
  CHECK(value.exit_code == 0);
  CHECK(value.text.find("count: 2") != std::string::npos);
  const Run error = run(text, "models", {"category"}, {"Pair"});
  CHECK(error.exit_code == 2);
  CHECK(error.text.find("kind: NotLex") != std::string::npos);
}

TEST_CASE("work limit") {
  const std::string text = golden::read_file(root + "/data/corpus.guk");
  const Run r = run(text, "duality", {"category"}, {"C2"}, 50);
  CHECK(r.exit_code == 2);
  CHECK(r.text.find("kind: WorkLimit") != std::string::npos);
}

TEST_CASE("golden reports") {
  for (const auto& o : golden::run_all(root, std::getenv("GUK_UPDATE_GOLDEN") != nullptr)) {
    CAPTURE(o.name);
    CAPTURE(o.detail);
    CHECK(o.ok);
  }
}
