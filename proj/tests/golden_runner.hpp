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

// Runs the CLI golden cases through the C API. Each line of cases.txt is
//   name exit input format command [--flag value | --flag=value]...
// and the expected report is golden/<name>.out.

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "guk/guk.h"

namespace golden {

struct Case {
  std::string name;
  int exit_code = 0;
  std::string input;
  std::string format;
  std::string command;
  std::vector<std::string> names;
  std::vector<std::string> values;
};

struct Outcome {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<Case> load_cases(const std::string& root) {
  std::vector<Case> out;
  std::istringstream lines(read_file(root + "/golden/cases.txt"));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    Case c;
    words >> c.name >> c.exit_code >> c.input >> c.format >> c.command;
    std::vector<std::string> rest{std::istream_iterator<std::string>(words), std::istream_iterator<std::string>()};
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::string arg = rest[i].substr(2);
      if (const auto eq = arg.find('='); eq != std::string::npos) {
        c.names.push_back(arg.substr(0, eq));
        c.values.push_back(arg.substr(eq + 1));
      } else {
        c.names.push_back(arg);
        c.values.push_back(i + 1 < rest.size() ? rest[++i] : "");
      }
    }
    out.push_back(c);
  }
  return out;
}

// Exit code implied by the verdict line of a machine report.
inline int exit_for_verdict(const std::string& report) {
  const auto at = report.find("\nverdict: ");
  if (at == std::string::npos) return -1;
  const std::string v = report.substr(at + 10, report.find('\n', at + 1) - at - 10);
  if (v == "pass" || v == "value") return 0;
  if (v == "fail") return 1;
  if (v == "error") return 2;
  return -1;
}

inline std::string run_case(const Case& c, const std::string& root, int* exit_code,
                            guk_format format_override = GUK_FORMAT_MACHINE, bool use_override = false) {
  const std::string source = read_file(root + "/data/" + c.input);
  std::vector<const char*> names, values;
  for (std::size_t i = 0; i < c.names.size(); ++i) {
    names.push_back(c.names[i].c_str());
    values.push_back(c.values[i].c_str());
  }
  guk_report* report = nullptr;
  if (guk_run_source(source.data(), source.size(), c.command.c_str(), names.data(), values.data(), names.size(), 0,
                     0, &report) != GUK_OK)
    return "<run failed>";
  const guk_format format =
      use_override ? format_override : (c.format == "plain" ? GUK_FORMAT_PLAIN : GUK_FORMAT_MACHINE);
  char* text = nullptr;
  std::string out = "<render failed>";
  if (guk_report_text(report, format, &text) == GUK_OK) {
    out = text;
    guk_string_free(text);
  }
  *exit_code = guk_report_exit_code(report);
  guk_report_free(report);
  return out;
}

// Compares every case with its golden file; with update set, rewrites them.
inline std::vector<Outcome> run_all(const std::string& root, bool update = false) {
  std::vector<Outcome> out;
  for (const Case& c : load_cases(root)) {
    Outcome o{c.name, true, {}};
    int code = -1;
    const std::string text = run_case(c, root, &code);
    const std::string path = root + "/golden/" + c.name + ".out";
    if (update) std::ofstream(path, std::ios::binary) << text;
    int again_code = -1;
    int machine_code = -1;
    const std::string machine = run_case(c, root, &machine_code, GUK_FORMAT_MACHINE, true);
    if (code != c.exit_code) {
      o.ok = false;
      o.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code);
    } else if (text != read_file(path)) {
      o.ok = false;
      o.detail = "report differs from " + path;
    } else if (run_case(c, root, &again_code) != text || again_code != code) {
      o.ok = false;
      o.detail = "report not stable across runs";
    } else if (exit_for_verdict("\n" + machine) != code) {
      o.ok = false;
      o.detail = "exit code does not follow the verdict";
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace golden
