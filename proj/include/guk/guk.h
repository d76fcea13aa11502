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

#ifndef GUK_GUK_H
#define GUK_GUK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GUK_API __declspec(dllexport)
#else
#define GUK_API __attribute__((visibility("default")))
#endif

typedef enum guk_status {
  GUK_OK = 0,
  GUK_UNKNOWN_ID,
  GUK_INVALID_ARGUMENT,
  GUK_NOT_FINITELY_CLOSED,
  GUK_PRECONDITION_FAILED,
  GUK_NOT_LEX,
  GUK_NOT_A_POSET,
  GUK_NOT_A_TOPOLOGY,
  GUK_MISSING_PULLBACK,
  GUK_TRIANGLE_DOES_NOT_COMMUTE,
  GUK_PARSE_ERROR,
  GUK_NAME_CLASH,
  GUK_UNRESOLVED_REFERENCE,
  GUK_VALIDATION_FAILED,
  GUK_UNKNOWN_COMMAND,
  GUK_MISSING_FLAG,
  GUK_WORK_LIMIT,
  GUK_NULL_ARGUMENT,
  GUK_INTERNAL
} guk_status;

typedef enum guk_format { GUK_FORMAT_MACHINE = 0, GUK_FORMAT_PLAIN = 1 } guk_format;

typedef struct guk_document guk_document;
typedef struct guk_report guk_report;

/* Strings returned through out-parameters are owned by the caller and
   released with guk_string_free. */

GUK_API const char* guk_version(void);
GUK_API const char* guk_status_string(guk_status status);
GUK_API void guk_string_free(char* s);

/* Parses and validates a document. On failure *out is NULL and, if message
   is not NULL, *message receives a description with line and column. */
GUK_API guk_status guk_document_parse(const char* text, size_t length, guk_document** out, char** message);
GUK_API void guk_document_free(guk_document* doc);
/* Canonical source text of the document. */
GUK_API guk_status guk_document_render(const guk_document* doc, char** out);
GUK_API size_t guk_document_item_count(const guk_document* doc);

/* Runs a command with flags given as parallel name/value arrays (names
   without leading dashes). Input and precondition errors are reported
   inside the report with exit code 2; the status is only non-OK for
   invalid arguments to this function. max_work = 0 reads GUK_MAX_WORK. */
GUK_API guk_status guk_run(const guk_document* doc, const char* command, const char* const* names,
                           const char* const* values, size_t count, unsigned long long max_work,
                           guk_report** out);
/* As guk_run, parsing the source first; parse errors become reports. */
GUK_API guk_status guk_run_source(const char* text, size_t length, const char* command, const char* const* names,
                                  const char* const* values, size_t count, unsigned long long max_work,
                                  int timing, guk_report** out);

GUK_API int guk_report_exit_code(const guk_report* report);
GUK_API guk_status guk_report_text(const guk_report* report, guk_format format, char** out);
GUK_API void guk_report_free(guk_report* report);

#ifdef __cplusplus
}
#endif

#endif
