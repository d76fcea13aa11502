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

#include <string>
#include <utility>
#include <vector>

namespace guk {

// Ordered tree of scalars, maps and lists. Map keys keep insertion order.
class Value {
 public:
  enum class Kind { Scalar, Map, List };

  Value() : kind_(Kind::Map) {}
  static Value scalar(std::string text);
  static Value map() { return Value(); }
  static Value list();
  static Value list(const std::vector<std::string>& items);

  Kind kind() const noexcept { return kind_; }
  const std::string& text() const noexcept { return text_; }
  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
  const std::vector<Value>& items() const noexcept { return items_; }

  // Appends a map field; returns the stored value.
  Value& set(const std::string& key, Value v);
  Value& set(const std::string& key, const std::string& text) { return set(key, scalar(text)); }
  Value& set(const std::string& key, const char* text) { return set(key, scalar(text)); }
  Value& set(const std::string& key, long long n) { return set(key, scalar(std::to_string(n))); }
  Value& push(Value v);
  Value& push(const std::string& text) { return push(scalar(text)); }

  // Field lookup; nullptr when absent.
  const Value* get(const std::string& key) const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Kind kind_;
  std::string text_;
  std::vector<std::pair<std::string, Value>> fields_;
  std::vector<Value> items_;
};

// Indented `key: value` lines; list items start with `- `, nested maps and
// lists inside a list hang under a bare `-`. Empty containers are written
// {} and [], and scalars that could be misread are double-quoted.
std::string render_machine(const Value& v);
// Inverse of render_machine. Throws Error(ParseError) on malformed input.
Value parse_machine(const std::string& text);

struct Report {
  Value tree;
  int exit_code = 0;
};

// Human-oriented rendering: a headline with the verdict, then the remaining
// fields indented.
std::string render_plain(const Report& r);

}  // namespace guk
