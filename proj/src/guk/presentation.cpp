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

#include "guk/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace guk {

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Verdict validate_presentation(const CategoryPresentation& p) {
  const std::string check = "presentation " + p.name;
  const auto n = static_cast<ObjectId>(p.objects.size());
  if (p.bound < 1) {
    return Verdict::fail(check, "bound-positive", {std::to_string(p.bound)},
                         "saturation bound must be positive");
  }
  for (const auto& g : p.generators) {
    if (g.src < 0 || g.src >= n || g.tgt < 0 || g.tgt >= n)
      return Verdict::fail(check, "generator-endpoints", {g.name});
  }
  auto composable = [&](const PathWord& w) {
    if (w.letters.empty()) return w.source == w.target;
    ObjectId at = w.source;
    for (int x : w.letters) {
      if (x < 0 || x >= static_cast<int>(p.generators.size())) return false;
      if (p.generators[x].src != at) return false;
      at = p.generators[x].tgt;
    }
    return at == w.target;
  };
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& [lhs, rhs] = p.relations[r];
    if (!composable(lhs) || !composable(rhs)) {
      return Verdict::fail(check, "relation-composable", {"relation " + std::to_string(r + 1)},
                           "a side of the relation is not a composable word");
    }
    if (lhs.source != rhs.source || lhs.target != rhs.target) {
      return Verdict::fail(check, "relation-parallel", {"relation " + std::to_string(r + 1)},
                           "the two sides have different endpoints");
    }
  }
  return Verdict::ok(check);
}

namespace {

struct Rule {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(int bound) : bound_(bound) {}

  const std::vector<Rule>& rules() const { return rules_; }

  std::vector<int> reduce(std::vector<int> word) const { return reduce_except(std::move(word), -1); }

  // Orients and adds lhs = rhs if it is not already a consequence.
  bool add(std::vector<int> a, std::vector<int> b) {
    a = reduce(std::move(a));
    b = reduce(std::move(b));
    if (a == b) return false;
    if (shortlex_less(a, b)) std::swap(a, b);
    if (a.size() > static_cast<std::size_t>(3 * bound_ + 3) || rules_.size() > 4000) {
      throw Error(ErrorKind::NotFinitelyClosed,
                  "completion produced rules beyond the saturation bound " +
                      std::to_string(bound_));
    }
    rules_.push_back({std::move(a), std::move(b)});
    return true;
  }

  void complete() {
    bool changed = true;
    while (changed) {
      changed = false;
      interreduce();
      const std::size_t n = rules_.size();
      for (std::size_t i = 0; i < n && i < rules_.size(); ++i) {
        for (std::size_t j = 0; j < n && j < rules_.size(); ++j) {
          changed |= resolve_overlaps(rules_[i], rules_[j]);
        }
      }
    }
  }

 private:
  std::vector<int> reduce_except(std::vector<int> word, int skip) const {
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (static_cast<int>(r) == skip) continue;
        const auto& rule = rules_[r];
        auto it = std::search(word.begin(), word.end(), rule.lhs.begin(), rule.lhs.end());
        if (it == word.end()) continue;
        charge_work();
        std::vector<int> next(word.begin(), it);
        next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
        next.insert(next.end(), it + static_cast<std::ptrdiff_t>(rule.lhs.size()), word.end());
        word = std::move(next);
        again = true;
        break;
      }
    }
    return word;
  }

  void interreduce() {
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        auto reduced = reduce_except(rules_[r].lhs, static_cast<int>(r));
        if (reduced != rules_[r].lhs) {
          Rule old = rules_[r];
          rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(r));
          add(old.lhs, old.rhs);
          again = true;
          break;
        }
        rules_[r].rhs = reduce_except(rules_[r].rhs, -1);
      }
    }
  }

  // Critical pairs between the left sides of two rules (copied, since add()
  // may reallocate the rule list).
  bool resolve_overlaps(Rule a, Rule b) {
    bool added = false;
    const auto& x = a.lhs;
    const auto& y = b.lhs;
    // y inside x
    if (y.size() <= x.size() && !(x == y && a.rhs == b.rhs)) {
      for (std::size_t p = 0; p + y.size() <= x.size(); ++p) {
        charge_work();
        if (!std::equal(y.begin(), y.end(), x.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        std::vector<int> side(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p));
        side.insert(side.end(), b.rhs.begin(), b.rhs.end());
        side.insert(side.end(), x.begin() + static_cast<std::ptrdiff_t>(p + y.size()), x.end());
        added |= add(a.rhs, side);
      }
    }
    // proper suffix of x equal to a proper prefix of y
    for (std::size_t k = 1; k < x.size() && k < y.size(); ++k) {
      charge_work();
      if (!std::equal(x.end() - static_cast<std::ptrdiff_t>(k), x.end(), y.begin())) continue;
      std::vector<int> left = a.rhs;
      left.insert(left.end(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
      std::vector<int> right(x.begin(), x.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), b.rhs.begin(), b.rhs.end());
      added |= add(std::move(left), std::move(right));
    }
    return added;
  }

  int bound_;
  std::vector<Rule> rules_;
};

bool contains_lhs(const std::vector<Rule>& rules, const std::vector<int>& word) {
  for (const auto& rule : rules) {
    if (std::search(word.begin(), word.end(), rule.lhs.begin(), rule.lhs.end()) != word.end())
      return true;
  }
  return false;
}

}  // namespace

FinCategory compile_presentation(const CategoryPresentation& p) {
  if (auto v = validate_presentation(p); !v) {
    throw Error(ErrorKind::ValidationFailed, v.check + ": " + v.law);
  }
  RewriteSystem system(p.bound);
  for (const auto& [lhs, rhs] : p.relations) system.add(lhs.letters, rhs.letters);
  system.complete();

  // Breadth-first enumeration of irreducible words; each level is sorted so
  // the overall order is shortlex.
  std::vector<PathWord> forms;
  std::vector<PathWord> level;
  for (ObjectId a = 0; a < static_cast<ObjectId>(p.objects.size()); ++a) level.push_back({a, a, {}});
  int length = 0;
  constexpr std::size_t kMaxMorphisms = 2000;
  while (!level.empty()) {
    if (length > p.bound) {
      throw Error(ErrorKind::NotFinitelyClosed,
                  "presentation '" + p.name + "' has normal forms longer than the bound " +
                      std::to_string(p.bound));
    }
    forms.insert(forms.end(), level.begin(), level.end());
    if (forms.size() > kMaxMorphisms) {
      throw Error(ErrorKind::NotFinitelyClosed,
                  "presentation '" + p.name + "' exceeds " + std::to_string(kMaxMorphisms) +
                      " morphisms");
    }
    std::vector<PathWord> next;
    for (const auto& w : level) {
      for (int x = 0; x < static_cast<int>(p.generators.size()); ++x) {
        if (p.generators[x].src != w.target) continue;
        charge_work();
        PathWord longer{w.source, p.generators[x].tgt, w.letters};
        longer.letters.push_back(x);
        if (!contains_lhs(system.rules(), longer.letters)) next.push_back(std::move(longer));
      }
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const PathWord& a, const PathWord& b) { return a.letters < b.letters; });
    level = std::move(next);
    ++length;
  }

  const std::size_t m = forms.size();
  std::map<std::pair<ObjectId, std::vector<int>>, ArrowId> index;
  std::vector<std::string> names;
  std::set<std::string> used;
  std::vector<ObjectId> src, tgt;
  std::vector<ArrowId> identity(p.objects.size());
  for (std::size_t i = 0; i < m; ++i) {
    const auto& w = forms[i];
    index[{w.source, w.letters}] = static_cast<ArrowId>(i);
    std::string name;
    if (w.letters.empty()) {
      name = "id_" + p.objects[w.source];
      identity[w.source] = static_cast<ArrowId>(i);
    } else {
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (!name.empty()) name += "_o_";
        name += p.generators[*it].name;
      }
    }
    std::string unique = name;
    for (int k = 2; used.count(unique); ++k) unique = name + "_" + std::to_string(k);
    used.insert(unique);
    names.push_back(unique);
    src.push_back(w.source);
    tgt.push_back(w.target);
  }
  std::vector<ArrowId> comp(m * m, kNone);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (forms[f].target != forms[g].source) continue;
      std::vector<int> word = forms[f].letters;
      word.insert(word.end(), forms[g].letters.begin(), forms[g].letters.end());
      word = system.reduce(std::move(word));
      auto it = index.find({forms[f].source, word});
      if (it == index.end()) {
        throw Error(ErrorKind::NotFinitelyClosed,
                    "presentation '" + p.name + "': composite escapes the normal forms");
      }
      comp[g * m + f] = it->second;
    }
  }
  return FinCategory(p.name, p.objects, std::move(names), std::move(src), std::move(tgt),
                     std::move(identity), std::move(comp));
}

}  // namespace guk
