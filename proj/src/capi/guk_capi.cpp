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

#include "guk/guk.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "guk/driver.hpp"

struct guk_document {
  guk::Document doc;
};

struct guk_report {
  guk::Report report;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

static_assert(static_cast<int>(guk::ErrorKind::WorkLimit) + 1 == GUK_WORK_LIMIT);

guk_status status_of(guk::ErrorKind kind) { return static_cast<guk_status>(static_cast<int>(kind) + 1); }

bool collect_flags(const char* const* names, const char* const* values, std::size_t count, guk::Flags& flags) {
  if (count > 0 && (!names || !values)) return false;
  for (std::size_t i = 0; i < count; ++i) {
    if (!names[i] || !values[i]) return false;
    flags[names[i]] = values[i];
  }
  return true;
}

guk::RunOptions options(unsigned long long max_work, bool timing) {
  guk::RunOptions o;
  o.max_work = max_work ? max_work : guk::max_work_from_env();
  o.timing = timing;
  return o;
}

}  // namespace

extern "C" {

const char* guk_version(void) { return "0.1.0"; }

const char* guk_status_string(guk_status status) {
  switch (status) {
    case GUK_OK: return "ok";
    case GUK_NULL_ARGUMENT: return "NullArgument";
    case GUK_INTERNAL: return "Internal";
    default: break;
  }
  if (status > GUK_OK && status <= GUK_WORK_LIMIT)
    return guk::to_string(static_cast<guk::ErrorKind>(static_cast<int>(status) - 1)).data();
  return "unknown status";
}

void guk_string_free(char* s) { std::free(s); }

guk_status guk_document_parse(const char* text, size_t length, guk_document** out, char** message) {
  if (!text || !out) return GUK_NULL_ARGUMENT;
  *out = nullptr;
  if (message) *message = nullptr;
  try {
    *out = new guk_document{guk::parse(std::string(text, length))};
    return GUK_OK;
  } catch (const guk::Error& e) {
    if (message) *message = copy_string(e.what());
    return status_of(e.kind());
  } catch (...) {
    return GUK_INTERNAL;
  }
}

void guk_document_free(guk_document* doc) { delete doc; }

guk_status guk_document_render(const guk_document* doc, char** out) {
  if (!doc || !out) return GUK_NULL_ARGUMENT;
  try {
    *out = copy_string(guk::render(doc->doc));
    return GUK_OK;
  } catch (...) {
    return GUK_INTERNAL;
  }
}

size_t guk_document_item_count(const guk_document* doc) { return doc ? doc->doc.items().size() : 0; }

guk_status guk_run(const guk_document* doc, const char* command, const char* const* names,
                   const char* const* values, size_t count, unsigned long long max_work, guk_report** out) {
  if (!doc || !command || !out) return GUK_NULL_ARGUMENT;
  *out = nullptr;
  guk::Flags flags;
  if (!collect_flags(names, values, count, flags)) return GUK_NULL_ARGUMENT;
  try {
    *out = new guk_report{guk::run(command, flags, doc->doc, options(max_work, false))};
    return GUK_OK;
  } catch (...) {
    return GUK_INTERNAL;
  }
}

guk_status guk_run_source(const char* text, size_t length, const char* command, const char* const* names,
                          const char* const* values, size_t count, unsigned long long max_work, int timing,
                          guk_report** out) {
  if (!text || !command || !out) return GUK_NULL_ARGUMENT;
  *out = nullptr;
  guk::Flags flags;
  if (!collect_flags(names, values, count, flags)) return GUK_NULL_ARGUMENT;
  try {
    *out = new guk_report{
        guk::run_source(command, flags, std::string(text, length), options(max_work, timing != 0))};
    return GUK_OK;
  } catch (...) {
    return GUK_INTERNAL;
  }
}

int guk_report_exit_code(const guk_report* report) { return report ? report->report.exit_code : 2; }

guk_status guk_report_text(const guk_report* report, guk_format format, char** out) {
  if (!report || !out) return GUK_NULL_ARGUMENT;
  try {
    *out = copy_string(format == GUK_FORMAT_PLAIN ? guk::render_plain(report->report)
                                                  : guk::render_machine(report->report.tree));
    return GUK_OK;
  } catch (...) {
    return GUK_INTERNAL;
  }
}

void guk_report_free(guk_report* report) { delete report; }

}  // extern "C"
