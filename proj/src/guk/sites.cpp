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

#include "guk/sites.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace guk {

Site::Site(std::string name, CategoryRef base, std::vector<std::vector<Family>> cov)
    : name_(std::move(name)), base_(std::move(base)), cov_(std::move(cov)) {
  const FinCategory& c = *base_;
  if (static_cast<int>(cov_.size()) != c.num_objects())
    throw Error(ErrorKind::InvalidArgument, "site " + name_ + ": one list of covers per object expected");
  for (ObjectId a = 0; a < c.num_objects(); ++a)
    for (const auto& family : cov_[a])
      for (ArrowId f : family)
        if (f < 0 || f >= c.num_arrows() || c.tgt(f) != a)
          throw Error(ErrorKind::InvalidArgument, "site " + name_ + ": family member does not end at " +
                                                      c.object_name(a));

  for (ArrowId f = 0; f < c.num_arrows(); ++f)
    for (ArrowId g = 0; g < c.num_arrows(); ++g)
      if (c.tgt(f) == c.tgt(g))
        if (auto cone = ::guk::pullback(base_, f, g)) pullbacks_.emplace(std::make_pair(f, g), std::move(*cone));

  class_bit_.assign(static_cast<std::size_t>(c.num_arrows()), -1);
  class_rep_.assign(static_cast<std::size_t>(c.num_objects()), {});
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    auto& reps = class_rep_[c.tgt(f)];
    for (std::size_t b = 0; b < reps.size() && class_bit_[f] < 0; ++b) {
      for (ArrowId i : c.hom(c.src(f), c.src(reps[b]))) {
        if (c.is_iso(i) && c.compose(reps[b], i) == f) {
          class_bit_[f] = static_cast<int>(b);
          break;
        }
      }
    }
    if (class_bit_[f] >= 0) continue;
    if (reps.size() == 64)
      throw Error(ErrorKind::InvalidArgument,
                  "site " + name_ + ": more than 64 arrows into " + c.object_name(c.tgt(f)));
    class_bit_[f] = static_cast<int>(reps.size());
    reps.push_back(f);
  }
  cover_keys_.resize(cov_.size());
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : cov_[a]) cover_keys_[a].push_back(key(a, family));
    std::sort(cover_keys_[a].begin(), cover_keys_[a].end());
  }
}

const Cone& Site::pullback(ArrowId f, ArrowId g) const {
  auto it = pullbacks_.find({f, g});
  if (it == pullbacks_.end()) {
    const FinCategory& c = *base_;
    throw Error(ErrorKind::MissingPullback, "no pullback of " + c.arrow_name(f) + " and " +
                                               c.arrow_name(g) + " in " + c.name());
  }
  return it->second;
}

bool Site::has_pullback(ArrowId f, ArrowId g) const { return pullbacks_.count({f, g}) > 0; }

std::uint64_t Site::key(ObjectId, const Family& family) const {
  std::uint64_t k = 0;
  for (ArrowId f : family) k |= std::uint64_t{1} << class_bit_[f];
  return k;
}

bool Site::is_cover(ObjectId a, const Family& family) const {
  return std::binary_search(cover_keys_[a].begin(), cover_keys_[a].end(), key(a, family));
}

std::optional<ArrowId> Site::factor(ArrowId g, ArrowId f) const {
  const FinCategory& c = *base_;
  if (c.tgt(g) != c.tgt(f)) return std::nullopt;
  for (ArrowId h : c.hom(c.src(g), c.src(f)))
    if (c.compose(f, h) == g) return h;
  return std::nullopt;
}

bool Site::factors_through(ArrowId g, ArrowId f) const { return factor(g, f).has_value(); }

std::string family_label(const FinCategory& c, const Family& family) {
  return "(" + join(arrow_names(c, family), " ") + ")";
}

namespace {

Family family_of_key(const Site& s, ObjectId a, std::uint64_t k) {
  Family out;
  for (std::size_t b = 0; b < s.classes(a).size(); ++b)
    if (k & (std::uint64_t{1} << b)) out.push_back(s.classes(a)[b]);
  return out;
}

}  // namespace

Verdict validate_topology(const Site& s) {
  const FinCategory& c = *s.base();
  const std::string check = "topology " + s.name();
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    if (c.is_iso(f) && !s.is_cover(c.tgt(f), {f}))
      return Verdict::fail(check, "isomorphisms-cover", {c.object_name(c.tgt(f)), family_label(c, {f})},
                           "the isomorphism " + c.arrow_name(f) + " alone is not a covering family");
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : s.covers(a)) {
      for (ArrowId g = 0; g < c.num_arrows(); ++g) {
        if (c.tgt(g) != a) continue;
        Family pulled;
        for (ArrowId f : family) pulled.push_back(s.pullback(f, g).legs[1]);
        if (!s.is_cover(c.src(g), pulled))
          return Verdict::fail(check, "pullback-stability",
                               {family_label(c, family), c.arrow_name(g), family_label(c, pulled)},
                               "pullback along " + c.arrow_name(g) + " is not a covering family");
      }
    }
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : s.covers(a)) {
      // Supports reachable by choosing a cover of each member's source.
      std::map<std::uint64_t, Family> reach{{0, {}}};
      for (ArrowId f : family) {
        std::map<std::uint64_t, Family> next;
        for (const auto& sub : s.covers(c.src(f))) {
          Family composite;
          for (ArrowId g : sub) composite.push_back(c.compose(f, g));
          const std::uint64_t k = s.key(a, composite);
          for (const auto& [partial, example] : reach) {
            charge_work();
            auto [it, fresh] = next.try_emplace(partial | k, example);
            if (fresh) it->second.insert(it->second.end(), composite.begin(), composite.end());
          }
        }
        reach = std::move(next);
      }
      for (const auto& [k, example] : reach) {
        if (!s.is_cover(a, example))
          return Verdict::fail(check, "composition", {family_label(c, family), family_label(c, example)},
                               "composite of covering families is not a covering family");
      }
    }
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    const auto& reps = s.classes(a);
    std::uint64_t members = 0;
    std::vector<std::uint64_t> cover_keys;
    for (const auto& family : s.covers(a)) {
      cover_keys.push_back(s.key(a, family));
      members |= cover_keys.back();
    }
    std::vector<std::uint64_t> refines(reps.size(), 0);  // classes each class factors through
    for (std::size_t x = 0; x < reps.size(); ++x)
      for (std::size_t y = 0; y < reps.size(); ++y)
        if (s.factors_through(reps[x], reps[y])) refines[x] |= std::uint64_t{1} << y;
    std::uint64_t sub = members;
    while (true) {
      charge_work();
      const Family candidate = family_of_key(s, a, sub);
      if (!s.is_cover(a, candidate)) {
        for (std::size_t g = 0; g < cover_keys.size(); ++g) {
          bool refined = true;
          for (std::size_t x = 0; x < reps.size() && refined; ++x)
            if (cover_keys[g] & (std::uint64_t{1} << x)) refined = (refines[x] & sub) != 0;
          if (refined)
            return Verdict::fail(check, "monotonicity",
                                 {family_label(c, candidate), family_label(c, s.covers(a)[g])},
                                 "a covering family refines a family that does not cover " +
                                     c.object_name(a));
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & members;
    }
  }
  return Verdict::ok(check);
}

Site chaotic_site(const CategoryRef& c, const std::string& name) {
  std::vector<std::vector<Family>> cov;
  for (ObjectId a = 0; a < c->num_objects(); ++a) cov.push_back({{c->identity(a)}});
  return Site(name.empty() ? "Chaotic_" + c->name() : name, c, std::move(cov));
}

void validate_space(const FiniteSpace& space) {
  const int n = static_cast<int>(space.points.size());
  std::set<std::vector<int>> opens;
  for (const auto& u : space.opens) {
    for (int p : u)
      if (p < 0 || p >= n)
        throw Error(ErrorKind::NotATopology, "space " + space.name + ": open mentions an unknown point");
    if (!std::is_sorted(u.begin(), u.end()) || std::adjacent_find(u.begin(), u.end()) != u.end())
      throw Error(ErrorKind::NotATopology, "space " + space.name + ": malformed open");
    if (!opens.insert(u).second)
      throw Error(ErrorKind::NotATopology, "space " + space.name + ": open " + open_name(space, u) +
                                               " listed twice");
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) all[p] = p;
  if (!opens.count({}))
    throw Error(ErrorKind::NotATopology, "space " + space.name + ": the empty set is not open");
  if (!opens.count(all))
    throw Error(ErrorKind::NotATopology, "space " + space.name + ": the whole space is not open");
  for (const auto& u : opens) {
    for (const auto& v : opens) {
      std::vector<int> uni, inter;
      std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(uni));
      std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(inter));
      if (!opens.count(uni))
        throw Error(ErrorKind::NotATopology, "space " + space.name + ": union of " +
                                                 open_name(space, u) + " and " + open_name(space, v) +
                                                 " is not open");
      if (!opens.count(inter))
        throw Error(ErrorKind::NotATopology, "space " + space.name + ": intersection of " +
                                                 open_name(space, u) + " and " + open_name(space, v) +
                                                 " is not open");
    }
  }
}

std::string open_name(const FiniteSpace& space, const std::vector<int>& open) {
  std::string name = "O";
  for (int p : open) name += "_" + space.points[p];
  return name;
}

Site open_set_site(const FiniteSpace& space) {
  validate_space(space);
  const auto n = space.opens.size();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(open_name(space, space.opens[i]));
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = std::includes(space.opens[j].begin(), space.opens[j].end(), space.opens[i].begin(),
                                space.opens[i].end());
  }
  CategoryRef c = poset_category(space.name, names, leq);
  std::vector<std::vector<Family>> cov(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> below;
    for (std::size_t v = 0; v < n; ++v)
      if (leq[v][u]) below.push_back(v);
    if (below.size() > 20)
      throw Error(ErrorKind::InvalidArgument, "space " + space.name + ": too many opens below " + names[u]);
    for (std::uint32_t mask = 0; mask < (1u << below.size()); ++mask) {
      std::set<int> points;
      Family family;
      for (std::size_t b = 0; b < below.size(); ++b) {
        if (!(mask & (1u << b))) continue;
        points.insert(space.opens[below[b]].begin(), space.opens[below[b]].end());
        family.push_back(c->hom(static_cast<ObjectId>(below[b]), static_cast<ObjectId>(u)).front());
      }
      if (points.size() == space.opens[u].size()) cov[u].push_back(std::move(family));
    }
  }
  return Site(space.name, c, std::move(cov));
}

std::string to_string(SheafKind kind) {
  switch (kind) {
    case SheafKind::Sheaf:
      return "sheaf";
    case SheafKind::SeparatedOnly:
      return "separated-only";
    case SheafKind::Neither:
      return "neither";
  }
  return "neither";
}

std::vector<std::vector<int>> compatible_families(const SetFunctor& p, const Site& s,
                                                  const Family& family) {
  const FinCategory& c = *s.base();
  const std::size_t n = family.size();
  // checks[j]: pairs (i, j) with i <= j and their pullback legs.
  struct Check {
    std::size_t i;
    ArrowId p1;
    ArrowId p2;
  };
  std::vector<std::vector<Check>> checks(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      const Cone& pb = s.pullback(family[i], family[j]);
      checks[j].push_back({i, pb.legs[0], pb.legs[1]});
    }
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(n, -1);
  std::function<void(std::size_t)> descend = [&](std::size_t j) {
    if (j == n) {
      out.push_back(tuple);
      return;
    }
    for (int x = 0; x < p.size(c.src(family[j])); ++x) {
      charge_work();
      tuple[j] = x;
      bool ok = true;
      for (const auto& chk : checks[j]) {
        if (p.action[chk.p1][tuple[chk.i]] != p.action[chk.p2][x]) {
          ok = false;
          break;
        }
      }
      if (ok) descend(j + 1);
    }
  };
  descend(0);
  return out;
}

namespace {

std::vector<int> restrictions(const SetFunctor& p, const Family& family, int x) {
  std::vector<int> out;
  for (ArrowId f : family) out.push_back(p.action[f][x]);
  return out;
}

std::string tuple_label(const SetFunctor& p, const FinCategory& c, const Family& family,
                        const std::vector<int>& tuple) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < family.size(); ++i) parts.push_back(p.carriers[c.src(family[i])][tuple[i]]);
  return "(" + join(parts, ",") + ")";
}

}  // namespace

SheafVerdict check_sheaf(const SetFunctor& p, const Site& s) {
  const FinCategory& c = *s.base();
  SheafVerdict out;
  // Injectivity of u first: failure there makes the presheaf not separated.
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : s.covers(a)) {
      std::map<std::vector<int>, int> seen;
      for (int x = 0; x < p.size(a); ++x) {
        auto [it, fresh] = seen.try_emplace(restrictions(p, family, x), x);
        if (!fresh) {
          out.kind = SheafKind::Neither;
          out.object = a;
          out.family = family;
          out.witness = {c.object_name(a), family_label(c, family), p.carriers[a][it->second],
                         p.carriers[a][x]};
          out.detail = "distinct elements " + p.carriers[a][it->second] + " and " + p.carriers[a][x] +
                       " of " + c.object_name(a) + " have the same restrictions";
          return out;
        }
      }
    }
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : s.covers(a)) {
      std::set<std::vector<int>> glued;
      for (int x = 0; x < p.size(a); ++x) glued.insert(restrictions(p, family, x));
      for (const auto& tuple : compatible_families(p, s, family)) {
        if (glued.count(tuple)) continue;
        out.kind = SheafKind::SeparatedOnly;
        out.object = a;
        out.family = family;
        const std::string label = tuple_label(p, c, family, tuple);
        out.witness = {c.object_name(a), family_label(c, family), label};
        out.detail = "compatible family " + label + " over " + family_label(c, family) +
                     " is not in the equalizer image of " + c.object_name(a);
        return out;
      }
    }
  }
  return out;
}

Verdict check_separated(const SetFunctor& p, const Site& s) {
  const FinCategory& c = *s.base();
  const std::string check = "separated " + p.name;
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : s.covers(a)) {
      std::map<std::vector<int>, int> seen;
      for (int x = 0; x < p.size(a); ++x) {
        auto [it, fresh] = seen.try_emplace(restrictions(p, family, x), x);
        if (!fresh)
          return Verdict::fail(check, "unique-gluing",
                               {c.object_name(a), family_label(c, family), p.carriers[a][it->second],
                                p.carriers[a][x]},
                               "distinct elements have the same restrictions");
      }
    }
  }
  return Verdict::ok(check);
}

Verdict check_continuous(const Functor& f, const Site& from, const Site& to) {
  if (!same_category(f.dom, from.base()) || !same_category(f.cod, to.base()))
    throw Error(ErrorKind::InvalidArgument, "functor " + f.name + " does not run between the site bases");
  const std::string check = "continuous " + f.name;
  Verdict lex = Verdict::ok(check);
  try {
    lex = check_lex_functor(f);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionFailed) throw Error(ErrorKind::NotLex, e.what());
    throw;
  }
  if (!lex) return Verdict::fail(check, "lex", lex.witness, lex.detail);
  const FinCategory& c = *from.base();
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (const auto& family : from.covers(a)) {
      Family image;
      for (ArrowId u : family) image.push_back(f.mmap[u]);
      if (!to.is_cover(f.omap[a], image))
        return Verdict::fail(check, "preserves-covers",
                             {c.object_name(a), family_label(c, family), family_label(*to.base(), image)},
                             "image of a covering family is not a covering family");
    }
  }
  return Verdict::ok(check);
}

Sheafification plus_construction(const SetFunctor& p, const Site& s) {
  const FinCategory& c = *s.base();
  const int n = c.num_objects();
  struct Raw {
    std::size_t cover;
    std::vector<int> tuple;
  };
  std::vector<std::vector<Raw>> raw(static_cast<std::size_t>(n));
  std::vector<std::map<std::pair<std::size_t, std::vector<int>>, int>> raw_index(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> class_of(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> representative(static_cast<std::size_t>(n));

  // Restriction of a matching family over `from` to a refining family `to`.
  auto restrict = [&](const Family& from, const std::vector<int>& tuple, const Family& to) {
    std::optional<std::vector<int>> out(std::in_place);
    for (ArrowId t : to) {
      bool found = false;
      for (std::size_t i = 0; i < from.size() && !found; ++i) {
        if (auto h = s.factor(t, from[i])) {
          out->push_back(p.action[*h][tuple[i]]);
          found = true;
        }
      }
      if (!found) return std::optional<std::vector<int>>{};
    }
    return out;
  };

  for (ObjectId a = 0; a < n; ++a) {
    const auto& covers = s.covers(a);
    for (std::size_t r = 0; r < covers.size(); ++r)
      for (auto& tuple : compatible_families(p, s, covers[r])) {
        raw_index[a][{r, tuple}] = static_cast<int>(raw[a].size());
        raw[a].push_back({r, std::move(tuple)});
      }
    std::vector<int> parent(raw[a].size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& t : covers) {
      std::map<std::vector<int>, int> by_restriction;
      for (std::size_t e = 0; e < raw[a].size(); ++e) {
        charge_work();
        auto restricted = restrict(covers[raw[a][e].cover], raw[a][e].tuple, t);
        if (!restricted) continue;
        auto [it, fresh] = by_restriction.try_emplace(*restricted, static_cast<int>(e));
        if (fresh) continue;
        const int x = find(it->second);
        const int y = find(static_cast<int>(e));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::map<int, int> class_of_root;
    for (std::size_t e = 0; e < raw[a].size(); ++e) {
      auto [it, fresh] = class_of_root.try_emplace(find(static_cast<int>(e)),
                                                   static_cast<int>(representative[a].size()));
      if (fresh) representative[a].push_back(static_cast<int>(e));
      class_of[a].push_back(it->second);
    }
  }

  Sheafification out;
  out.sheaf = SetFunctor{p.name + "_plus", p.dom, {}, {}};
  for (ObjectId a = 0; a < n; ++a) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < representative[a].size(); ++k) labels.push_back("e" + std::to_string(k));
    out.sheaf.carriers.push_back(std::move(labels));
  }
  for (ArrowId g = 0; g < c.num_arrows(); ++g) {
    // g : v -> u acts P+(u) -> P+(v).
    const ObjectId u = c.tgt(g);
    const ObjectId v = c.src(g);
    std::vector<int> table;
    for (int rep : representative[u]) {
      const Family& from = s.covers(u)[raw[u][rep].cover];
      std::optional<int> image;
      for (std::size_t t = 0; t < s.covers(v).size() && !image; ++t) {
        Family pushed;
        for (ArrowId w : s.covers(v)[t]) pushed.push_back(c.compose(g, w));
        auto restricted = restrict(from, raw[u][rep].tuple, pushed);
        if (!restricted) continue;
        auto it = raw_index[v].find({t, *restricted});
        if (it == raw_index[v].end())
          throw Error(ErrorKind::PreconditionFailed,
                      "restriction along " + c.arrow_name(g) + " is not a matching family; " + s.name() +
                          " is not a topology");
        image = class_of[v][it->second];
      }
      if (!image)
        throw Error(ErrorKind::PreconditionFailed, "no covering family of " + c.object_name(v) +
                                                       " refines the pullback along " + c.arrow_name(g));
      table.push_back(*image);
    }
    out.sheaf.action.push_back(std::move(table));
  }
  out.unit.resize(static_cast<std::size_t>(n));
  for (ObjectId a = 0; a < n; ++a) {
    if (p.size(a) > 0 && s.covers(a).empty())
      throw Error(ErrorKind::PreconditionFailed, c.object_name(a) + " has no covering family");
    for (int x = 0; x < p.size(a); ++x) {
      const int e = raw_index[a].at({0, restrictions(p, s.covers(a)[0], x)});
      out.unit[a].push_back(class_of[a][e]);
    }
  }
  return out;
}

Sheafification sheafify(const SetFunctor& p, const Site& s) {
  Sheafification once = plus_construction(p, s);
  Sheafification twice = plus_construction(once.sheaf, s);
  twice.sheaf.name = "a_" + p.name;
  twice.unit = compose_components(twice.unit, once.unit);
  return twice;
}

Verdict check_sheafification_universal(const SetFunctor& p, const Sheafification& a,
                                       const std::vector<SetFunctor>& sheaves) {
  const std::string check = "universal property of " + a.sheaf.name;
  for (const auto& g : sheaves) {
    const auto from_sheaf = nat_transforms_between(a.sheaf, g);
    const auto from_p = nat_transforms_between(p, g);
    std::set<Components> images;
    for (const auto& beta : from_sheaf) images.insert(compose_components(beta, a.unit));
    if (images.size() != from_sheaf.size() || images.size() != from_p.size())
      return Verdict::fail(check, "unit-bijection", {g.name},
                           "precomposition with the unit maps " + std::to_string(from_sheaf.size()) +
                               " transformations onto " + std::to_string(images.size()) + " of " +
                               std::to_string(from_p.size()));
  }
  return Verdict::ok(check);
}

}  // namespace guk
