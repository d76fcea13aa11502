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

#include "guk/report.hpp"

#include <algorithm>
#include <sstream>

#include "guk/common.hpp"

namespace guk {

Value Value::scalar(std::string text) {
  Value v;
  v.kind_ = Kind::Scalar;
  v.text_ = std::move(text);
  return v;
}

Value Value::list() {
  Value v;
  v.kind_ = Kind::List;
  return v;
}

Value Value::list(const std::vector<std::string>& items) {
  Value v = list();
  for (const auto& s : items) v.push(s);
  return v;
}

Value& Value::set(const std::string& key, Value v) {
  fields_.emplace_back(key, std::move(v));
  return fields_.back().second;
}

Value& Value::push(Value v) {
  items_.push_back(std::move(v));
  return items_.back();
}

const Value* Value::get(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

namespace {

bool needs_quotes(const std::string& s) {
  return s.empty() || s == "{}" || s == "[]" || s.front() == '"' || s.front() == ' ' || s.back() == ' ' ||
         s.find('\n') != std::string::npos;
}

std::string scalar_text(const std::string& s) {
  if (!needs_quotes(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_list(std::ostringstream& out, const Value& v, int indent);

void emit_map(std::ostringstream& out, const Value& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, child] : v.fields()) {
    out << pad << key << ":";
    switch (child.kind()) {
      case Value::Kind::Scalar:
        out << " " << scalar_text(child.text()) << "\n";
        break;
      case Value::Kind::Map:
        if (child.fields().empty()) {
          out << " {}\n";
        } else {
          out << "\n";
          emit_map(out, child, indent + 2);
        }
        break;
      case Value::Kind::List:
        if (child.items().empty()) {
          out << " []\n";
        } else {
          out << "\n";
          emit_list(out, child, indent + 2);
        }
        break;
    }
  }
}

void emit_list(std::ostringstream& out, const Value& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& item : v.items()) {
    switch (item.kind()) {
      case Value::Kind::Scalar:
        out << pad << "- " << scalar_text(item.text()) << "\n";
        break;
      case Value::Kind::Map:
        if (item.fields().empty()) {
          out << pad << "- {}\n";
        } else {
          out << pad << "-\n";
          emit_map(out, item, indent + 2);
        }
        break;
      case Value::Kind::List:
        if (item.items().empty()) {
          out << pad << "- []\n";
        } else {
          out << pad << "-\n";
          emit_list(out, item, indent + 2);
        }
        break;
    }
  }
}

struct Line {
  int indent;
  std::string content;
  int number;
};

class MachineParser {
 public:
  explicit MachineParser(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (raw.find_first_not_of(' ') == std::string::npos) continue;
      const auto indent = static_cast<int>(raw.find_first_not_of(' '));
      lines_.push_back({indent, raw.substr(static_cast<std::size_t>(indent)), number});
    }
  }

  Value run() {
    Value root = lines_.empty() ? Value::map() : block(0);
    if (pos_ != lines_.size()) fail("unexpected indentation");
    return root;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    const int n = pos_ < lines_.size() ? lines_[pos_].number : static_cast<int>(lines_.size());
    throw Error(ErrorKind::ParseError, "report line " + std::to_string(n) + ": " + what);
  }

  static bool is_item(const std::string& content) { return content == "-" || content.rfind("- ", 0) == 0; }

  Value block(int indent) {
    return is_item(lines_[pos_].content) ? list(indent) : map(indent);
  }

  // Value written after a key or a dash, or the nested block below it.
  Value inline_or_nested(const std::string& rest, int indent) {
    if (!rest.empty()) {
      if (rest == "{}") return Value::map();
      if (rest == "[]") return Value::list();
      return Value::scalar(unquote(rest));
    }
    if (pos_ >= lines_.size() || lines_[pos_].indent <= indent) fail("missing nested block");
    return block(lines_[pos_].indent);
  }

  Value map(int indent) {
    Value v = Value::map();
    while (pos_ < lines_.size() && lines_[pos_].indent == indent && !is_item(lines_[pos_].content)) {
      const std::string& c = lines_[pos_].content;
      const auto colon = c.find(':');
      if (colon == std::string::npos) fail("expected key");
      std::string rest = c.substr(colon + 1);
      if (!rest.empty() && rest.front() != ' ') fail("expected space after ':'");
      if (!rest.empty()) rest.erase(0, 1);
      const std::string key = c.substr(0, colon);
      ++pos_;
      v.set(key, inline_or_nested(rest, indent));
    }
    return v;
  }

  Value list(int indent) {
    Value v = Value::list();
    while (pos_ < lines_.size() && lines_[pos_].indent == indent && is_item(lines_[pos_].content)) {
      const std::string rest = lines_[pos_].content.size() > 1 ? lines_[pos_].content.substr(2) : "";
      ++pos_;
      v.push(inline_or_nested(rest, indent));
    }
    return v;
  }

  std::string unquote(const std::string& s) const {
    if (s.front() != '"') return s;
    if (s.size() < 2 || s.back() != '"') fail("unterminated quoted scalar");
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) {
        ++i;
        out += s[i] == 'n' ? '\n' : s[i];
      } else {
        out += s[i];
      }
    }
    return out;
  }
};

void emit_plain(std::ostringstream& out, const Value& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.kind() == Value::Kind::List) {
    for (const auto& item : v.items()) {
      if (item.kind() == Value::Kind::Scalar) {
        out << pad << "* " << item.text() << "\n";
      } else {
        out << pad << "*\n";
        emit_plain(out, item, indent + 2);
      }
    }
    return;
  }
  for (const auto& [key, child] : v.fields()) {
    if (child.kind() == Value::Kind::Scalar) {
      out << pad << key << " = " << child.text() << "\n";
    } else if (child.fields().empty() && child.items().empty()) {
      out << pad << key << " = (none)\n";
    } else {
      out << pad << key << ":\n";
      emit_plain(out, child, indent + 2);
    }
  }
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace

std::string render_machine(const Value& v) {
  std::ostringstream out;
  emit_map(out, v, 0);
  return out.str();
}

Value parse_machine(const std::string& text) { return MachineParser(text).run(); }

std::string render_plain(const Report& r) {
  std::ostringstream out;
  const Value* command = r.tree.get("command");
  const Value* args = r.tree.get("args");
  const Value* verdict = r.tree.get("verdict");
  out << (command ? command->text() : "guk");
  if (args)
    for (const auto& [k, v] : args->fields()) out << " --" << k << " " << v.text();
  out << ": " << (verdict ? upper(verdict->text()) : "?") << " (exit " << r.exit_code << ")\n";
  Value rest = Value::map();
  for (const auto& [k, v] : r.tree.fields())
    if (k != "command" && k != "args" && k != "verdict" && k != "exit_code") rest.set(k, v);
  emit_plain(out, rest, 2);
  return out.str();
}

}  // namespace guk
