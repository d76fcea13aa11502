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

// guk [--input FILE] [--format plain|machine] [--timing] COMMAND --flag value ...

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "guk/guk.h"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite category engine"};
  std::string input;
  std::string format = "machine";
  bool timing = false;
  app.add_option("--input", input, "Document file (standard input when omitted)");
  app.add_option("--format", format, "Report rendering")->check(CLI::IsMember({"plain", "machine"}));
  app.add_flag("--timing", timing, "Append elapsed time to the report");
  app.set_version_flag("--version", std::string(guk_version()));
  app.prefix_command();
  app.footer("Commands: check limit colimit filtered fp models duality topology sheaf separated sheafify\n"
             "continuous gamma stalk gamma-limit-check clan clan-closure");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<std::string> rest = app.remaining();
  if (rest.empty()) {
    std::cerr << "guk: missing command\n" << app.help();
    return 2;
  }
  const std::string command = rest.front();
  std::vector<std::string> names, values;
  for (std::size_t i = 1; i < rest.size(); ++i) {
    std::string arg = rest[i];
    if (arg.rfind("--", 0) != 0) {
      std::cerr << "guk: unexpected argument '" << arg << "'\n";
      return 2;
    }
    arg.erase(0, 2);
    if (const auto eq = arg.find('='); eq != std::string::npos) {
      names.push_back(arg.substr(0, eq));
      values.push_back(arg.substr(eq + 1));
    } else if (i + 1 < rest.size()) {
      names.push_back(arg);
      values.push_back(rest[++i]);
    } else {
      std::cerr << "guk: flag --" << arg << " needs a value\n";
      return 2;
    }
  }

  std::string source;
  if (input.empty()) {
    source = read_all(std::cin);
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "guk: cannot read " << input << "\n";
      return 2;
    }
    source = read_all(in);
  }

  std::vector<const char*> name_ptrs, value_ptrs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    name_ptrs.push_back(names[i].c_str());
    value_ptrs.push_back(values[i].c_str());
  }
  guk_report* report = nullptr;
  guk_status status = guk_run_source(source.data(), source.size(), command.c_str(), name_ptrs.data(),
                                     value_ptrs.data(), names.size(), 0, timing ? 1 : 0, &report);
  if (status != GUK_OK) {
    std::cerr << "guk: " << guk_status_string(status) << "\n";
    return 2;
  }
  char* text = nullptr;
  status = guk_report_text(report, format == "plain" ? GUK_FORMAT_PLAIN : GUK_FORMAT_MACHINE, &text);
  const int code = guk_report_exit_code(report);
  guk_report_free(report);
  if (status != GUK_OK) {
    std::cerr << "guk: " << guk_status_string(status) << "\n";
    return 2;
  }
  std::cout << text;
  guk_string_free(text);
  return code;
}
