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

#include "guk/functor.hpp"

#include <algorithm>

namespace guk {

bool same_category(const CategoryRef& a, const CategoryRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool same_table(const SetFunctor& a, const SetFunctor& b) {
  return same_category(a.dom, b.dom) && a.carriers == b.carriers && a.action == b.action;
}

Verdict validate_functor(const Functor& f) {
  const std::string check = "functor " + f.name;
  if (!f.dom || !f.cod) return Verdict::fail(check, "endpoints", {f.name}, "missing category");
  const FinCategory& c = *f.dom;
  const FinCategory& d = *f.cod;
  if (static_cast<int>(f.omap.size()) != c.num_objects() ||
      static_cast<int>(f.mmap.size()) != c.num_arrows()) {
    return Verdict::fail(check, "total", {f.name}, "object or arrow map is not total");
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    if (f.omap[a] < 0 || f.omap[a] >= d.num_objects())
      return Verdict::fail(check, "total", {c.object_name(a)}, "object image out of range");
  }
  for (ArrowId u = 0; u < c.num_arrows(); ++u) {
    const ArrowId v = f.mmap[u];
    if (v < 0 || v >= d.num_arrows())
      return Verdict::fail(check, "total", {c.arrow_name(u)}, "arrow image out of range");
    if (d.src(v) != f.omap[c.src(u)] || d.tgt(v) != f.omap[c.tgt(u)]) {
      return Verdict::fail(check, "preserves-endpoints", {c.arrow_name(u), d.arrow_name(v)});
    }
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    if (f.mmap[c.identity(a)] != d.identity(f.omap[a]))
      return Verdict::fail(check, "preserves-identity", {c.object_name(a)});
  }
  for (ArrowId g = 0; g < c.num_arrows(); ++g) {
    for (ArrowId u = 0; u < c.num_arrows(); ++u) {
      const ArrowId h = c.compose(g, u);
      if (h == kNone) continue;
      if (f.mmap[h] != d.compose(f.mmap[g], f.mmap[u]))
        return Verdict::fail(check, "preserves-composition", {c.arrow_name(g), c.arrow_name(u)});
    }
  }
  return Verdict::ok(check);
}

Verdict validate_nat(const NatTransform& alpha) {
  const std::string check = "natural transformation " + alpha.name;
  const Functor& s = alpha.source;
  const Functor& t = alpha.target;
  if (!same_category(s.dom, t.dom) || !same_category(s.cod, t.cod))
    return Verdict::fail(check, "parallel", {s.name, t.name});
  const FinCategory& c = *s.dom;
  const FinCategory& d = *s.cod;
  if (static_cast<int>(alpha.components.size()) != c.num_objects())
    return Verdict::fail(check, "total", {alpha.name});
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    const ArrowId k = alpha.components[a];
    if (k < 0 || k >= d.num_arrows() || d.src(k) != s.omap[a] || d.tgt(k) != t.omap[a])
      return Verdict::fail(check, "component-typing", {c.object_name(a)});
  }
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    const ArrowId lhs = d.compose(alpha.components[c.tgt(f)], s.mmap[f]);
    const ArrowId rhs = d.compose(t.mmap[f], alpha.components[c.src(f)]);
    if (lhs != rhs)
      return Verdict::fail(check, "naturality", {c.arrow_name(f)},
                           "square for " + c.arrow_name(f) + " does not commute");
  }
  return Verdict::ok(check);
}

Verdict validate_set_functor(const SetFunctor& f) {
  const std::string check = "set functor " + f.name;
  if (!f.dom) return Verdict::fail(check, "domain", {f.name});
  const FinCategory& c = *f.dom;
  if (static_cast<int>(f.carriers.size()) != c.num_objects() ||
      static_cast<int>(f.action.size()) != c.num_arrows())
    return Verdict::fail(check, "total", {f.name}, "carrier or action table is not total");
  for (ArrowId u = 0; u < c.num_arrows(); ++u) {
    const auto& table = f.action[u];
    if (static_cast<int>(table.size()) != f.size(c.src(u)))
      return Verdict::fail(check, "total-function", {c.arrow_name(u)},
                           "function table does not cover the source carrier");
    for (int y : table) {
      if (y < 0 || y >= f.size(c.tgt(u)))
        return Verdict::fail(check, "total-function", {c.arrow_name(u)},
                             "function value outside the target carrier");
    }
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    const auto& table = f.action[c.identity(a)];
    for (int x = 0; x < f.size(a); ++x) {
      if (table[x] != x)
        return Verdict::fail(check, "preserves-identity", {c.object_name(a), f.carriers[a][x]});
    }
  }
  for (ArrowId g = 0; g < c.num_arrows(); ++g) {
    for (ArrowId u = 0; u < c.num_arrows(); ++u) {
      const ArrowId h = c.compose(g, u);
      if (h == kNone) continue;
      for (int x = 0; x < f.size(c.src(u)); ++x) {
        if (f.action[h][x] != f.action[g][f.action[u][x]])
          return Verdict::fail(check, "preserves-composition",
                               {c.arrow_name(g), c.arrow_name(u), f.carriers[c.src(u)][x]});
      }
    }
  }
  return Verdict::ok(check);
}

Verdict validate_set_nat(const SetFunctor& source, const SetFunctor& target,
                         const Components& components) {
  const std::string check = "natural transformation " + source.name + " => " + target.name;
  if (!same_category(source.dom, target.dom))
    return Verdict::fail(check, "parallel", {source.name, target.name});
  const FinCategory& c = *source.dom;
  if (static_cast<int>(components.size()) != c.num_objects())
    return Verdict::fail(check, "total", {});
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    if (static_cast<int>(components[a].size()) != source.size(a))
      return Verdict::fail(check, "component-typing", {c.object_name(a)});
    for (int y : components[a])
      if (y < 0 || y >= target.size(a))
        return Verdict::fail(check, "component-typing", {c.object_name(a)});
  }
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    const ObjectId a = c.src(f);
    const ObjectId b = c.tgt(f);
    for (int x = 0; x < source.size(a); ++x) {
      if (components[b][source.action[f][x]] != target.action[f][components[a][x]])
        return Verdict::fail(check, "naturality", {c.arrow_name(f), source.carriers[a][x]},
                             "square for " + c.arrow_name(f) + " does not commute");
    }
  }
  return Verdict::ok(check);
}

Functor identity_functor(const CategoryRef& c) {
  Functor f{"id_" + c->name(), c, c, {}, {}};
  for (ObjectId a = 0; a < c->num_objects(); ++a) f.omap.push_back(a);
  for (ArrowId u = 0; u < c->num_arrows(); ++u) f.mmap.push_back(u);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.cod, g.dom))
    throw Error(ErrorKind::InvalidArgument, "functors " + g.name + " and " + f.name +
                                                " are not composable");
  Functor h{g.name + "_o_" + f.name, f.dom, g.cod, {}, {}};
  for (ObjectId a : f.omap) h.omap.push_back(g.omap[a]);
  for (ArrowId u : f.mmap) h.mmap.push_back(g.mmap[u]);
  return h;
}

Functor opposite(const Functor& f) {
  return Functor{f.name + "_op", opposite(f.dom), opposite(f.cod), f.omap, f.mmap};
}

SetFunctor constant_set_functor(const CategoryRef& dom, const std::vector<std::string>& labels,
                                const std::string& name) {
  SetFunctor f{name, dom, {}, {}};
  f.carriers.assign(static_cast<std::size_t>(dom->num_objects()), labels);
  std::vector<int> identity(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) identity[i] = static_cast<int>(i);
  f.action.assign(static_cast<std::size_t>(dom->num_arrows()), identity);
  return f;
}

SetFunctor precompose(const SetFunctor& f, const Functor& d) {
  if (!same_category(d.cod, f.dom))
    throw Error(ErrorKind::InvalidArgument, "cannot precompose " + f.name + " with " + d.name);
  SetFunctor out{f.name + "_o_" + d.name, d.dom, {}, {}};
  for (ObjectId j : d.omap) out.carriers.push_back(f.carriers[j]);
  for (ArrowId u : d.mmap) out.action.push_back(f.action[u]);
  return out;
}

Components identity_components(const SetFunctor& f) {
  Components out(f.carriers.size());
  for (std::size_t a = 0; a < f.carriers.size(); ++a) {
    out[a].resize(f.carriers[a].size());
    for (std::size_t x = 0; x < out[a].size(); ++x) out[a][x] = static_cast<int>(x);
  }
  return out;
}

Components compose_components(const Components& beta, const Components& alpha) {
  Components out(alpha.size());
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    out[a].reserve(alpha[a].size());
    for (int x : alpha[a]) out[a].push_back(beta[a][x]);
  }
  return out;
}

SetFunctor yoneda(const CategoryRef& c, ObjectId a) { return yoneda(c, opposite(c), a); }

SetFunctor yoneda(const CategoryRef& c, const CategoryRef& c_op, ObjectId a) {
  const FinCategory& cat = *c;
  SetFunctor y{"y_" + cat.object_name(a), c_op, {}, {}};
  for (ObjectId b = 0; b < cat.num_objects(); ++b)
    y.carriers.push_back(arrow_names(cat, cat.hom(b, a)));
  // f : b' -> b in C acts hom(b, a) -> hom(b', a) by u |-> u . f
  for (ArrowId f = 0; f < cat.num_arrows(); ++f) {
    const auto& from = cat.hom(cat.tgt(f), a);
    const auto& to = cat.hom(cat.src(f), a);
    std::vector<int> table;
    for (ArrowId u : from) {
      const ArrowId v = cat.compose(u, f);
      table.push_back(static_cast<int>(std::find(to.begin(), to.end(), v) - to.begin()));
    }
    y.action.push_back(std::move(table));
  }
  return y;
}

SetFunctor covariant_hom(const CategoryRef& c, ObjectId a) {
  const FinCategory& cat = *c;
  SetFunctor h{"h_" + cat.object_name(a), c, {}, {}};
  for (ObjectId b = 0; b < cat.num_objects(); ++b)
    h.carriers.push_back(arrow_names(cat, cat.hom(a, b)));
  for (ArrowId g = 0; g < cat.num_arrows(); ++g) {
    const auto& from = cat.hom(a, cat.src(g));
    const auto& to = cat.hom(a, cat.tgt(g));
    std::vector<int> table;
    for (ArrowId u : from) {
      const ArrowId v = cat.compose(g, u);
      table.push_back(static_cast<int>(std::find(to.begin(), to.end(), v) - to.begin()));
    }
    h.action.push_back(std::move(table));
  }
  return h;
}

Verdict check_fully_faithful(const Functor& f) {
  const std::string check = "fully faithful " + f.name;
  const FinCategory& c = *f.dom;
  const FinCategory& d = *f.cod;
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    for (ObjectId b = 0; b < c.num_objects(); ++b) {
      const auto& source = c.hom(a, b);
      const auto& target = d.hom(f.omap[a], f.omap[b]);
      std::vector<ArrowId> image;
      for (ArrowId u : source) image.push_back(f.mmap[u]);
      std::sort(image.begin(), image.end());
      const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
      if (!injective || image.size() != target.size()) {
        return Verdict::fail(check, injective ? "full" : "faithful",
                             {c.object_name(a), c.object_name(b)},
                             "hom map " + std::to_string(source.size()) + " -> " +
                                 std::to_string(target.size()) + " is not a bijection");
      }
    }
  }
  return Verdict::ok(check);
}

namespace {

// Element-level search for component tables; shared by the enumeration and
// the isomorphism search.
class ComponentSearch {
 public:
  ComponentSearch(const SetFunctor& source, const SetFunctor& target, bool bijective)
      : source_(source), target_(target), bijective_(bijective) {
    const FinCategory& c = *source.dom;
    for (ObjectId a = 0; a < c.num_objects(); ++a) {
      for (int x = 0; x < source.size(a); ++x) {
        cell_index_[{a, x}] = static_cast<int>(cells_.size());
        cells_.push_back({a, x});
      }
    }
    checks_.resize(cells_.size());
    for (ArrowId f = 0; f < c.num_arrows(); ++f) {
      if (c.is_identity(f)) continue;
      const ObjectId a = c.src(f);
      const ObjectId b = c.tgt(f);
      for (int x = 0; x < source.size(a); ++x) {
        const int from = cell_index_.at({a, x});
        const int to = cell_index_.at({b, source.action[f][x]});
        checks_[std::max(from, to)].push_back({f, from, to});
      }
    }
    value_.assign(cells_.size(), -1);
    used_.assign(static_cast<std::size_t>(c.num_objects()), {});
    for (ObjectId a = 0; a < c.num_objects(); ++a)
      used_[a].assign(static_cast<std::size_t>(target.size(a)), false);
  }

  // Visits each complete assignment; stop when visit returns false.
  void run(const std::function<bool(const Components&)>& visit) {
    const FinCategory& c = *source_.dom;
    for (ObjectId a = 0; a < c.num_objects(); ++a) {
      if (source_.size(a) > 0 && target_.size(a) == 0) return;
      if (bijective_ && source_.size(a) != target_.size(a)) return;
    }
    stop_ = false;
    descend(0, visit);
  }

 private:
  struct Check {
    ArrowId arrow;
    int from;
    int to;
  };

  void descend(std::size_t k, const std::function<bool(const Components&)>& visit) {
    if (stop_) return;
    if (k == cells_.size()) {
      Components out(source_.carriers.size());
      for (std::size_t a = 0; a < out.size(); ++a) out[a].resize(source_.carriers[a].size());
      for (std::size_t i = 0; i < cells_.size(); ++i)
        out[cells_[i].first][cells_[i].second] = value_[i];
      if (!visit(out)) stop_ = true;
      return;
    }
    const ObjectId a = cells_[k].first;
    for (int y = 0; y < target_.size(a); ++y) {
      charge_work();
      if (bijective_ && used_[a][y]) continue;
      value_[k] = y;
      bool ok = true;
      for (const auto& chk : checks_[k]) {
        if (target_.action[chk.arrow][value_[chk.from]] != value_[chk.to]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (bijective_) used_[a][y] = true;
      descend(k + 1, visit);
      if (bijective_) used_[a][y] = false;
      if (stop_) return;
    }
    value_[k] = -1;
  }

  const SetFunctor& source_;
  const SetFunctor& target_;
  bool bijective_;
  bool stop_ = false;
  std::vector<std::pair<ObjectId, int>> cells_;
  std::map<std::pair<ObjectId, int>, int> cell_index_;
  std::vector<std::vector<Check>> checks_;
  std::vector<int> value_;
  std::vector<std::vector<bool>> used_;
};

}  // namespace

std::vector<Components> nat_transforms_between(const SetFunctor& source,
                                               const SetFunctor& target) {
  if (!same_category(source.dom, target.dom))
    throw Error(ErrorKind::InvalidArgument,
                source.name + " and " + target.name + " have different domains");
  std::vector<Components> out;
  ComponentSearch search(source, target, false);
  search.run([&](const Components& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<Components> find_natural_iso(const SetFunctor& a, const SetFunctor& b) {
  if (!same_category(a.dom, b.dom)) return std::nullopt;
  std::optional<Components> found;
  ComponentSearch search(a, b, true);
  search.run([&](const Components& c) {
    found = c;
    return false;
  });
  return found;
}

std::optional<ArrowId> FunctorFragment::find(ObjectId source, ObjectId target,
                                             const Components& components) const {
  auto it = index_.find({{source, target}, components});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FunctorFragment tabulate_fragment(const std::string& name, std::vector<SetFunctor> functors) {
  FunctorFragment frag;
  const auto n = static_cast<ObjectId>(functors.size());
  std::vector<std::string> objects;
  for (ObjectId i = 0; i < n; ++i) {
    std::string label = functors[i].name;
    if (std::find(objects.begin(), objects.end(), label) != objects.end())
      label += "_" + std::to_string(i);
    objects.push_back(label);
  }
  std::vector<std::string> arrow_labels;
  std::vector<ObjectId> src, tgt;
  std::vector<ArrowId> identity(static_cast<std::size_t>(n), kNone);
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      const auto all = nat_transforms_between(functors[i], functors[j]);
      const Components id = identity_components(functors[i]);
      int counter = 0;
      for (const auto& comps : all) {
        const auto arrow = static_cast<ArrowId>(frag.arrows.size());
        if (i == j && comps == id) {
          identity[i] = arrow;
          arrow_labels.push_back("id_" + objects[i]);
        } else {
          arrow_labels.push_back(objects[i] + "_to_" + objects[j] + "_" + std::to_string(counter++));
        }
        src.push_back(i);
        tgt.push_back(j);
        frag.index_[{{i, j}, comps}] = arrow;
        frag.arrows.push_back(comps);
      }
    }
  }
  const std::size_t m = frag.arrows.size();
  std::vector<ArrowId> comp(m * m, kNone);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (tgt[f] != src[g]) continue;
      const auto composite = compose_components(frag.arrows[g], frag.arrows[f]);
      comp[g * m + f] = frag.index_.at({{src[f], tgt[g]}, composite});
    }
  }
  frag.category = std::make_shared<const FinCategory>(name, std::move(objects),
                                                      std::move(arrow_labels), std::move(src),
                                                      std::move(tgt), std::move(identity),
                                                      std::move(comp));
  frag.functors = std::move(functors);
  return frag;
}

Functor functor_into_fragment(const std::string& name, const CategoryRef& dom,
                              const FunctorFragment& fragment,
                              const std::vector<ObjectId>& omap,
                              const std::function<Components(ArrowId)>& transform) {
  Functor f{name, dom, fragment.category, omap, {}};
  for (ArrowId u = 0; u < dom->num_arrows(); ++u) {
    const auto arrow = fragment.find(omap[dom->src(u)], omap[dom->tgt(u)], transform(u));
    if (!arrow) {
      throw Error(ErrorKind::PreconditionFailed,
                  "image of " + dom->arrow_name(u) + " is not a natural transformation of the fragment");
    }
    f.mmap.push_back(*arrow);
  }
  return f;
}

YonedaEmbedding yoneda_embedding(const CategoryRef& c) {
  const CategoryRef c_op = opposite(c);
  std::vector<SetFunctor> presheaves;
  std::vector<ObjectId> omap;
  for (ObjectId a = 0; a < c->num_objects(); ++a) {
    presheaves.push_back(yoneda(c, c_op, a));
    omap.push_back(a);
  }
  YonedaEmbedding out{tabulate_fragment("PSh_" + c->name(), std::move(presheaves)), {}};
  const FinCategory& cat = *c;
  out.embedding = functor_into_fragment("y", c, out.fragment, omap, [&](ArrowId f) {
    // y(f) : y(a) -> y(b), u |-> f . u
    Components comps(static_cast<std::size_t>(cat.num_objects()));
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      const auto& to = cat.hom(x, cat.tgt(f));
      for (ArrowId u : cat.hom(x, cat.src(f))) {
        const ArrowId v = cat.compose(f, u);
        comps[x].push_back(static_cast<int>(std::find(to.begin(), to.end(), v) - to.begin()));
      }
    }
    return comps;
  });
  return out;
}

void enumerate_functors(const CategoryRef& shape, const CategoryRef& target,
                        const std::function<bool(const Functor&)>& visit) {
  const FinCategory& j = *shape;
  const FinCategory& c = *target;
  Functor f{"D", shape, target, std::vector<ObjectId>(static_cast<std::size_t>(j.num_objects()), 0),
            std::vector<ArrowId>(static_cast<std::size_t>(j.num_arrows()), kNone)};
  std::vector<ArrowId> free_arrows;
  for (ArrowId u = 0; u < j.num_arrows(); ++u)
    if (!j.is_identity(u)) free_arrows.push_back(u);
  // Composition checks that become decidable once free_arrows[k] is assigned.
  std::vector<std::vector<std::pair<ArrowId, ArrowId>>> checks(free_arrows.size());
  auto position = [&](ArrowId u) {
    return j.is_identity(u) ? -1
                            : static_cast<int>(std::find(free_arrows.begin(), free_arrows.end(), u) -
                                               free_arrows.begin());
  };
  for (ArrowId g = 0; g < j.num_arrows(); ++g)
    for (ArrowId u = 0; u < j.num_arrows(); ++u) {
      const ArrowId h = j.compose(g, u);
      if (h == kNone || j.is_identity(g) || j.is_identity(u)) continue;
      const int k = std::max({position(g), position(u), position(h)});
      checks[k].push_back({g, u});
    }
  bool stop = false;
  std::function<void(std::size_t)> arrows = [&](std::size_t k) {
    if (stop) return;
    if (k == free_arrows.size()) {
      if (!visit(f)) stop = true;
      return;
    }
    const ArrowId u = free_arrows[k];
    for (ArrowId v : c.hom(f.omap[j.src(u)], f.omap[j.tgt(u)])) {
      charge_work();
      f.mmap[u] = v;
      bool ok = true;
      for (const auto& [g, w] : checks[k]) {
        if (f.mmap[j.compose(g, w)] != c.compose(f.mmap[g], f.mmap[w])) {
          ok = false;
          break;
        }
      }
      if (ok) arrows(k + 1);
      if (stop) return;
    }
    f.mmap[u] = kNone;
  };
  std::function<void(ObjectId)> objects = [&](ObjectId a) {
    if (stop) return;
    if (a == j.num_objects()) {
      for (ObjectId b = 0; b < j.num_objects(); ++b) f.mmap[j.identity(b)] = c.identity(f.omap[b]);
      arrows(0);
      return;
    }
    for (ObjectId x = 0; x < c.num_objects(); ++x) {
      charge_work();
      f.omap[a] = x;
      objects(a + 1);
      if (stop) return;
    }
  };
  objects(0);
}

void enumerate_set_functors(const CategoryRef& c, int max_size,
                            const std::function<bool(const SetFunctor&)>& visit) {
  enumerate_set_functors(c, max_size, nullptr, visit);
}

void enumerate_set_functors(const CategoryRef& c, int max_size,
                            const std::function<bool(const std::vector<int>&)>& sizes_ok,
                            const std::function<bool(const SetFunctor&)>& visit) {
  const FinCategory& cat = *c;
  const auto n = static_cast<std::size_t>(cat.num_objects());
  std::vector<ArrowId> free_arrows;
  for (ArrowId u = 0; u < cat.num_arrows(); ++u)
    if (!cat.is_identity(u)) free_arrows.push_back(u);
  std::vector<int> position(static_cast<std::size_t>(cat.num_arrows()), -1);
  for (std::size_t k = 0; k < free_arrows.size(); ++k) position[free_arrows[k]] = static_cast<int>(k);
  std::vector<std::vector<std::pair<ArrowId, ArrowId>>> checks(free_arrows.size());
  for (ArrowId g = 0; g < cat.num_arrows(); ++g)
    for (ArrowId u = 0; u < cat.num_arrows(); ++u) {
      const ArrowId h = cat.compose(g, u);
      if (h == kNone || cat.is_identity(g) || cat.is_identity(u)) continue;
      const int k = std::max({position[g], position[u], position[h]});
      checks[k].push_back({g, u});
    }

  std::vector<int> sizes(n, 0);
  SetFunctor f{"P", c, {}, {}};
  bool stop = false;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (stop) return;
    if (k == free_arrows.size()) {
      if (!visit(f)) stop = true;
      return;
    }
    const ArrowId u = free_arrows[k];
    const int from = sizes[cat.src(u)];
    const int to = sizes[cat.tgt(u)];
    if (from > 0 && to == 0) return;
    std::vector<int> table(static_cast<std::size_t>(from), 0);
    while (true) {
      charge_work();
      f.action[u] = table;
      bool ok = true;
      for (const auto& [g, w] : checks[k]) {
        const ArrowId h = cat.compose(g, w);
        for (int x = 0; x < sizes[cat.src(w)] && ok; ++x)
          ok = f.action[h][x] == f.action[g][f.action[w][x]];
        if (!ok) break;
      }
      if (ok) assign(k + 1);
      if (stop) return;
      int pos = 0;
      while (pos < from && ++table[pos] == to) table[pos++] = 0;
      if (pos == from) break;
    }
  };
  auto next_sizes = [&] {
    std::size_t pos = 0;
    while (pos < n && ++sizes[pos] > max_size) sizes[pos++] = 0;
    return pos < n;
  };
  do {
    if (sizes_ok && !sizes_ok(sizes)) continue;
    f.carriers.assign(n, {});
    for (std::size_t a = 0; a < n; ++a)
      for (int x = 0; x < sizes[a]; ++x) f.carriers[a].push_back(std::to_string(x));
    f.action.assign(static_cast<std::size_t>(cat.num_arrows()), {});
    for (std::size_t a = 0; a < n; ++a) {
      auto& id = f.action[cat.identity(static_cast<ObjectId>(a))];
      for (int x = 0; x < sizes[a]; ++x) id.push_back(x);
    }
    assign(0);
  } while (!stop && next_sizes());
}

}  // namespace guk
