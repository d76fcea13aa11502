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

#include "guk/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "guk/limits.hpp"
#include "guk/presentation.hpp"

namespace guk {

CategoryRef finset_category(int max_size) {
  if (max_size < 0 || max_size > 9) throw Error(ErrorKind::InvalidArgument, "finset size out of range");
  CategoryBuilder b("FinSet" + std::to_string(max_size));
  for (int k = 0; k <= max_size; ++k) b.add_object("S" + std::to_string(k));
  std::map<std::tuple<int, int, std::vector<int>>, ArrowId> id_of;
  for (int k = 0; k <= max_size; ++k) {
    std::vector<int> identity(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) identity[x] = x;
    id_of[{k, k, identity}] = CategoryBuilder::identity_arrow(k);
  }
  std::vector<std::tuple<int, int, std::vector<int>>> arrows;
  for (int k = 0; k <= max_size; ++k) {
    for (int l = 0; l <= max_size; ++l) {
      if (k > 0 && l == 0) continue;
      std::vector<int> table(static_cast<std::size_t>(k), 0);
      while (true) {
        if (!id_of.count({k, l, table})) {
          std::string name = "f" + std::to_string(k) + std::to_string(l);
          if (k > 0) name += "_";
          for (int v : table) name += std::to_string(v);
          id_of[{k, l, table}] = b.add_arrow(name, k, l);
          arrows.emplace_back(k, l, table);
        }
        int pos = k - 1;
        while (pos >= 0 && ++table[pos] == l) table[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  for (const auto& [k, l, f] : arrows) {
    for (const auto& [l2, m, g] : arrows) {
      if (l2 != l) continue;
      std::vector<int> h;
      for (int x : f) h.push_back(g[x]);
      b.set_compose(id_of.at({l, m, g}), id_of.at({k, l, f}), id_of.at({k, m, h}));
    }
  }
  return b.build_ref();
}

CategoryRef chain_category(int n, const std::string& name) {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    elements.push_back(std::to_string(i));
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return poset_category(name, elements, leq);
}

CategoryRef square_category() {
  const std::vector<std::vector<int>> sets{{}, {0}, {1}, {0, 1}};
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      leq[i][j] = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
  return poset_category("Square", {"e", "a", "b", "ab"}, leq);
}

namespace {

CategoryRef from_presentation(CategoryPresentation p) {
  return std::make_shared<const FinCategory>(compile_presentation(p));
}

PathWord word(ObjectId s, ObjectId t, std::vector<int> letters) { return PathWord{s, t, std::move(letters)}; }

}  // namespace

std::vector<CategoryRef> corpus_categories() {
  std::vector<CategoryRef> out;
  out.push_back(terminal_category("One"));
  out.push_back(arrow_category("Two"));
  out.push_back(discrete_category(2, "Disc2"));
  out.push_back(chain_category(3, "Chain3"));
  out.push_back(from_presentation({"Par", {"0", "1"}, {{"f", 0, 1}, {"g", 0, 1}}, {}}));
  out.push_back(from_presentation({"Cospan", {"0", "1", "2"}, {{"f", 0, 2}, {"g", 1, 2}}, {}}));
  out.push_back(from_presentation({"Span", {"0", "1", "2"}, {{"f", 0, 1}, {"g", 0, 2}}, {}}));
  out.push_back(from_presentation({"Idem", {"0"}, {{"e", 0, 0}}, {{word(0, 0, {0, 0}), word(0, 0, {0})}}}));
  out.push_back(from_presentation({"Z2", {"0"}, {{"s", 0, 0}}, {{word(0, 0, {0, 0}), word(0, 0, {})}}}));
  out.push_back(from_presentation({"Iso",
                                   {"0", "1"},
                                   {{"i", 0, 1}, {"j", 1, 0}},
                                   {{word(0, 0, {0, 1}), word(0, 0, {})}, {word(1, 1, {1, 0}), word(1, 1, {})}}}));
  out.push_back(from_presentation({"ParCoeq",
                                   {"0", "1", "2"},
                                   {{"f", 0, 1}, {"g", 0, 1}, {"h", 1, 2}},
                                   {{word(0, 2, {0, 2}), word(0, 2, {1, 2})}}}));
  out.push_back(square_category());
  return out;
}

std::vector<CategoryRef> lex_corpus() {
  std::vector<CategoryRef> out;
  for (auto& c : corpus_categories())
    if (has_all_finite_limits(c)) out.push_back(std::move(c));
  return out;
}

FiniteSpace point_space() { return {"Pt", {"p"}, {{}, {0}}}; }
FiniteSpace sierpinski_space() { return {"Sier", {"a", "b"}, {{}, {0}, {0, 1}}}; }
FiniteSpace discrete2_space() { return {"Disc2", {"a", "b"}, {{}, {0}, {1}, {0, 1}}}; }

namespace {

// Presheaf on the opens with the given carriers; restrict(v, u, x) is the
// restriction of x in F(u) to the open v strictly below u.
SetFunctor open_presheaf(const Site& site, const std::string& name,
                         std::vector<std::vector<std::string>> carriers,
                         const std::function<int(ObjectId, ObjectId, int)>& restrict) {
  const FinCategory& c = *site.base();
  SetFunctor p{name, opposite(site.base()), std::move(carriers), {}};
  for (ArrowId g = 0; g < c.num_arrows(); ++g) {
    std::vector<int> table;
    for (int x = 0; x < p.size(c.tgt(g)); ++x) table.push_back(c.is_identity(g) ? x : restrict(c.src(g), c.tgt(g), x));
    p.action.push_back(std::move(table));
  }
  return p;
}

}  // namespace

SetFunctor function_presheaf(const FiniteSpace& space, const Site& site,
                             const std::vector<std::string>& values, const std::string& name) {
  const int base = static_cast<int>(values.size());
  std::vector<std::vector<std::string>> carriers;
  for (const auto& u : space.opens) {
    std::vector<std::string> labels;
    int count = 1;
    for (std::size_t i = 0; i < u.size(); ++i) count *= base;
    for (int code = 0; code < count; ++code) {
      std::string label;
      for (std::size_t i = 0; i < u.size(); ++i) {
        int digit = code;
        for (std::size_t k = i + 1; k < u.size(); ++k) digit /= base;
        label += values[digit % base];
      }
      labels.push_back(label.empty() ? "*" : label);
    }
    carriers.push_back(std::move(labels));
  }
  return open_presheaf(site, name, std::move(carriers), [&](ObjectId v, ObjectId u, int x) {
    const auto& big = space.opens[u];
    const auto& small = space.opens[v];
    // Digits of x in big, most significant first.
    std::vector<int> digits(big.size());
    for (std::size_t i = big.size(); i-- > 0;) {
      digits[i] = x % base;
      x /= base;
    }
    int code = 0;
    for (int point : small) {
      const auto pos = static_cast<std::size_t>(std::find(big.begin(), big.end(), point) - big.begin());
      code = code * base + digits[pos];
    }
    return code;
  });
}

SetFunctor constant_presheaf(const FiniteSpace& space, const Site& site,
                             const std::vector<std::string>& labels, const std::string& name) {
  std::vector<std::vector<std::string>> carriers;
  for (const auto& u : space.opens) carriers.push_back(u.empty() ? std::vector<std::string>{"*"} : labels);
  return open_presheaf(site, name, std::move(carriers),
                       [&](ObjectId v, ObjectId, int x) { return space.opens[v].empty() ? 0 : x; });
}

SetFunctor constant_everywhere(const Site& site, const std::vector<std::string>& labels,
                               const std::string& name) {
  return constant_set_functor(opposite(site.base()), labels, name);
}

std::vector<SheafOfModels> bundle_corpus() {
  std::vector<SheafOfModels> out;
  const CategoryRef one = terminal_category("One");
  const CategoryRef two = arrow_category("Two");
  const FiniteSpace pt = point_space();
  const FiniteSpace sier = sierpinski_space();
  const FiniteSpace disc = discrete2_space();
  const Site pt_site = open_set_site(pt);
  const Site sier_site = open_set_site(sier);
  const Site disc_site = open_set_site(disc);

  out.push_back(terminal_bundle(one, pt_site.base(), "PtTerminal"));

  {
    SheafOfModels f{"SierFun", one, sier_site.base(), opposite(sier_site.base()), {}, {}};
    f.at.push_back(function_presheaf(sier, sier_site, {"0", "1"}, "SierFun01"));
    f.maps.push_back(identity_components(f.at[0]));
    out.push_back(std::move(f));
  }

  const SetFunctor disc_one = constant_set_functor(opposite(disc_site.base()), {"*"}, "1");
  {
    // Subterminal: inhabited exactly on the opens inside {a}.
    SetFunctor sub = open_presheaf(
        disc_site, "InsideA",
        {{"*"}, {"*"}, {}, {}}, [](ObjectId, ObjectId, int) { return 0; });
    SheafOfModels f{"DiscArrow", two, disc_site.base(), opposite(disc_site.base()), {sub, disc_one}, {}};
    f.maps = {identity_components(sub), identity_components(disc_one), {{0}, {0}, {}, {}}};
    out.push_back(std::move(f));
  }

  {
    const CategoryRef pair = discrete_category(2, "Pair2");
    SheafOfModels f{"SierPair", pair, sier_site.base(), opposite(sier_site.base()), {}, {}};
    f.at.push_back(function_presheaf(sier, sier_site, {"0", "1"}, "SierFun01"));
    f.at.push_back(constant_presheaf(sier, sier_site, {"x", "y"}, "SierConstXY"));
    f.maps = {identity_components(f.at[0]), identity_components(f.at[1])};
    out.push_back(std::move(f));
  }

  {
    // Two elements at {a} only: lex on global sections, not at the stalk O_a.
    SetFunctor wide = open_presheaf(disc_site, "WideAtA", {{"*"}, {"u", "v"}, {"*"}, {"*"}},
                                    [](ObjectId, ObjectId, int) { return 0; });
    SheafOfModels f{"ProductBreak", two, disc_site.base(), opposite(disc_site.base()), {wide, disc_one}, {}};
    f.maps = {identity_components(wide), identity_components(disc_one), {{0}, {0, 0}, {0}, {0}}};
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace guk
