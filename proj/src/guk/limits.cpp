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

#include "guk/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace guk {

namespace {

// Backtracking over cone legs. Objects are visited so that whenever possible
// a leg is forced by an earlier one along a shape arrow.
class ConeSearch {
 public:
  ConeSearch(const Functor& d, ObjectId apex) : d_(d), apex_(apex) {
    const FinCategory& j = *d.dom;
    const int n = j.num_objects();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (ObjectId start = 0; start < n; ++start) {
      if (position[start] >= 0) continue;
      std::vector<ObjectId> queue{start};
      position[start] = static_cast<int>(order_.size());
      order_.push_back(start);
      parent_.push_back(kNone);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (ArrowId u = 0; u < j.num_arrows(); ++u) {
          if (j.src(u) != queue[q] || position[j.tgt(u)] >= 0) continue;
          position[j.tgt(u)] = static_cast<int>(order_.size());
          order_.push_back(j.tgt(u));
          parent_.push_back(u);
          queue.push_back(j.tgt(u));
        }
      }
    }
    checks_.resize(order_.size());
    for (ArrowId u = 0; u < j.num_arrows(); ++u) {
      if (j.is_identity(u)) continue;
      checks_[std::max(position[j.src(u)], position[j.tgt(u)])].push_back(u);
    }
    legs_.assign(static_cast<std::size_t>(n), kNone);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    descend(0, visit);
  }

 private:
  template <typename Visit>
  bool descend(std::size_t k, Visit& visit) {
    if (k == order_.size()) return visit(legs_);
    const FinCategory& c = *d_.cod;
    const ObjectId obj = order_[k];
    auto attempt = [&](ArrowId leg) {
      charge_work();
      legs_[obj] = leg;
      for (ArrowId u : checks_[k]) {
        if (legs_[d_.dom->tgt(u)] != c.compose(d_.mmap[u], legs_[d_.dom->src(u)])) return true;
      }
      return descend(k + 1, visit);
    };
    bool go_on = true;
    if (parent_[k] != kNone) {
      const ArrowId u = parent_[k];
      go_on = attempt(c.compose(d_.mmap[u], legs_[d_.dom->src(u)]));
    } else {
      for (ArrowId leg : c.hom(apex_, d_.omap[obj])) {
        if (!(go_on = attempt(leg))) break;
      }
    }
    legs_[obj] = kNone;
    return go_on;
  }

  const Functor& d_;
  ObjectId apex_;
  std::vector<ObjectId> order_;
  std::vector<ArrowId> parent_;
  std::vector<std::vector<ArrowId>> checks_;
  std::vector<ArrowId> legs_;
};

Functor opposite_diagram(const Functor& d) {
  return Functor{d.name, opposite(d.dom), opposite(d.cod), d.omap, d.mmap};
}

std::vector<ArrowId> composed_legs(const FinCategory& c, const std::vector<ArrowId>& legs,
                                   ArrowId m) {
  std::vector<ArrowId> out;
  out.reserve(legs.size());
  for (ArrowId leg : legs) out.push_back(c.compose(leg, m));
  return out;
}

// hom(y, apex) -> cones(y) is injective for every y; cardinalities are checked
// by the caller.
bool mediating_injective(const Functor& d, const Cone& cone) {
  const FinCategory& c = *d.cod;
  for (ObjectId y = 0; y < c.num_objects(); ++y) {
    std::set<std::vector<ArrowId>> seen;
    for (ArrowId m : c.hom(y, cone.apex)) {
      charge_work();
      if (!seen.insert(composed_legs(c, cone.legs, m)).second) return false;
    }
  }
  return true;
}

CategoryRef make_shape(const std::string& name, std::vector<std::string> objects,
                       const std::vector<std::tuple<std::string, int, int>>& arrows) {
  CategoryBuilder b(name);
  for (const auto& o : objects) b.add_object(o);
  for (const auto& [n, s, t] : arrows) b.add_arrow(n, s, t);
  return b.build_ref();
}

}  // namespace

std::vector<std::vector<ArrowId>> cones_at(const Functor& d, ObjectId apex) {
  std::vector<std::vector<ArrowId>> out;
  ConeSearch(d, apex).run([&](const std::vector<ArrowId>& legs) {
    out.push_back(legs);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_cones(const Functor& d, ObjectId apex) {
  std::size_t n = 0;
  ConeSearch(d, apex).run([&](const std::vector<ArrowId>&) {
    ++n;
    return true;
  });
  return n;
}

Verdict check_cone(const Functor& d, const Cone& cone) {
  const FinCategory& j = *d.dom;
  const FinCategory& c = *d.cod;
  const std::string check = "cone over " + d.name;
  if (cone.apex < 0 || cone.apex >= c.num_objects() ||
      static_cast<int>(cone.legs.size()) != j.num_objects())
    return Verdict::fail(check, "cone-shape", {});
  for (ObjectId x = 0; x < j.num_objects(); ++x) {
    const ArrowId leg = cone.legs[x];
    if (leg < 0 || leg >= c.num_arrows() || c.src(leg) != cone.apex || c.tgt(leg) != d.omap[x])
      return Verdict::fail(check, "leg-typing", {j.object_name(x)});
  }
  for (ArrowId u = 0; u < j.num_arrows(); ++u) {
    if (cone.legs[j.tgt(u)] != c.compose(d.mmap[u], cone.legs[j.src(u)]))
      return Verdict::fail(check, "cone-condition", {j.arrow_name(u)});
  }
  return Verdict::ok(check);
}

bool is_limit_cone(const Functor& d, const Cone& cone) {
  if (!check_cone(d, cone)) return false;
  const FinCategory& c = *d.cod;
  for (ObjectId y = 0; y < c.num_objects(); ++y) {
    if (c.hom(y, cone.apex).size() != count_cones(d, y)) return false;
  }
  return mediating_injective(d, cone);
}

bool is_colimit_cocone(const Functor& d, const Cone& cocone) {
  return is_limit_cone(opposite_diagram(d), cocone);
}

std::optional<Cone> find_limit(const Functor& d) {
  const FinCategory& c = *d.cod;
  std::vector<std::size_t> counts;
  for (ObjectId y = 0; y < c.num_objects(); ++y) counts.push_back(count_cones(d, y));
  for (ObjectId apex = 0; apex < c.num_objects(); ++apex) {
    bool sizes_match = true;
    for (ObjectId y = 0; y < c.num_objects() && sizes_match; ++y)
      sizes_match = c.hom(y, apex).size() == counts[y];
    if (!sizes_match) continue;
    for (auto& legs : cones_at(d, apex)) {
      Cone cone{apex, std::move(legs)};
      if (mediating_injective(d, cone)) return cone;
    }
  }
  return std::nullopt;
}

std::optional<Cone> find_colimit(const Functor& d) { return find_limit(opposite_diagram(d)); }

CategoryRef empty_shape() {
  static const CategoryRef shape = make_shape("Empty", {}, {});
  return shape;
}

CategoryRef pair_shape() {
  static const CategoryRef shape = make_shape("Pair", {"0", "1"}, {});
  return shape;
}

CategoryRef parallel_shape() {
  static const CategoryRef shape = make_shape("Parallel", {"0", "1"}, {{"f", 0, 1}, {"g", 0, 1}});
  return shape;
}

CategoryRef cospan_shape() {
  static const CategoryRef shape = make_shape("Cospan", {"0", "1", "2"}, {{"f", 0, 2}, {"g", 1, 2}});
  return shape;
}

Functor empty_diagram(const CategoryRef& c) { return Functor{"empty", empty_shape(), c, {}, {}}; }

Functor pair_diagram(const CategoryRef& c, ObjectId a, ObjectId b) {
  return Functor{"pair", pair_shape(), c, {a, b}, {c->identity(a), c->identity(b)}};
}

Functor parallel_diagram(const CategoryRef& c, ArrowId f, ArrowId g) {
  if (c->src(f) != c->src(g) || c->tgt(f) != c->tgt(g))
    throw Error(ErrorKind::InvalidArgument, "arrows are not parallel");
  const ObjectId a = c->src(f);
  const ObjectId b = c->tgt(f);
  // Shape arrows: id_0, id_1, f, g.
  return Functor{"parallel", parallel_shape(), c, {a, b},
                 {c->identity(a), c->identity(b), f, g}};
}

Functor cospan_diagram(const CategoryRef& c, ArrowId f, ArrowId g) {
  if (c->tgt(f) != c->tgt(g)) throw Error(ErrorKind::InvalidArgument, "arrows do not form a cospan");
  const ObjectId a = c->src(f);
  const ObjectId b = c->src(g);
  const ObjectId t = c->tgt(f);
  return Functor{"cospan", cospan_shape(), c, {a, b, t},
                 {c->identity(a), c->identity(b), c->identity(t), f, g}};
}

std::optional<Cone> terminal_object(const CategoryRef& c) { return find_limit(empty_diagram(c)); }

std::optional<Cone> product(const CategoryRef& c, ObjectId a, ObjectId b) {
  return find_limit(pair_diagram(c, a, b));
}

std::optional<Cone> equalizer(const CategoryRef& c, ArrowId f, ArrowId g) {
  return find_limit(parallel_diagram(c, f, g));
}

std::optional<Cone> pullback(const CategoryRef& c, ArrowId f, ArrowId g) {
  return find_limit(cospan_diagram(c, f, g));
}

std::vector<std::pair<std::string, Functor>> lex_diagrams(const CategoryRef& c) {
  std::vector<std::pair<std::string, Functor>> out;
  out.emplace_back("terminal object", empty_diagram(c));
  for (ObjectId a = 0; a < c->num_objects(); ++a)
    for (ObjectId b = a; b < c->num_objects(); ++b)
      out.emplace_back("product " + c->object_name(a) + " x " + c->object_name(b),
                       pair_diagram(c, a, b));
  for (ObjectId a = 0; a < c->num_objects(); ++a)
    for (ObjectId b = 0; b < c->num_objects(); ++b) {
      const auto& h = c->hom(a, b);
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t k = i + 1; k < h.size(); ++k)
          out.emplace_back("equalizer " + c->arrow_name(h[i]) + " " + c->arrow_name(h[k]),
                           parallel_diagram(c, h[i], h[k]));
    }
  return out;
}

std::vector<LimitInstance> lex_instances(const CategoryRef& c) {
  std::vector<LimitInstance> out;
  for (auto& [label, d] : lex_diagrams(c)) {
    auto cone = find_limit(d);
    if (!cone) throw Error(ErrorKind::PreconditionFailed, c->name() + " has no " + label);
    out.push_back({std::move(label), std::move(d), std::move(*cone)});
  }
  return out;
}

Verdict has_all_finite_limits(const CategoryRef& c) {
  const std::string check = "finite limits in " + c->name();
  Verdict v = Verdict::ok(check);
  try {
    lex_instances(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionFailed) throw;
    std::string missing = e.what();
    missing = missing.substr(missing.find(" has no ") + 8);
    v = Verdict::fail(check, "finite-limits", {missing}, "no universal cone for the " + missing);
  }
  v.caveats.push_back("finite limits checked as terminal object, binary products and equalizers");
  return v;
}

SetCone set_limit(const SetFunctor& d) {
  const FinCategory& j = *d.dom;
  const int n = j.num_objects();
  // Arrow checks become decidable at the later of their endpoints.
  std::vector<std::vector<ArrowId>> checks(static_cast<std::size_t>(n));
  for (ArrowId u = 0; u < j.num_arrows(); ++u)
    if (!j.is_identity(u)) checks[std::max(j.src(u), j.tgt(u))].push_back(u);
  SetCone out;
  out.legs.assign(static_cast<std::size_t>(n), {});
  std::vector<int> tuple(static_cast<std::size_t>(n), -1);
  std::function<void(ObjectId)> descend = [&](ObjectId k) {
    if (k == n) {
      std::vector<std::string> parts;
      for (ObjectId x = 0; x < n; ++x) parts.push_back(d.carriers[x][tuple[x]]);
      out.apex.push_back("(" + join(parts, ",") + ")");
      for (ObjectId x = 0; x < n; ++x) out.legs[x].push_back(tuple[x]);
      out.tuples.push_back(tuple);
      return;
    }
    for (int v = 0; v < d.size(k); ++v) {
      charge_work();
      tuple[k] = v;
      bool ok = true;
      for (ArrowId u : checks[k]) {
        if (d.action[u][tuple[j.src(u)]] != tuple[j.tgt(u)]) {
          ok = false;
          break;
        }
      }
      if (ok) descend(k + 1);
    }
    tuple[k] = -1;
  };
  descend(0);
  return out;
}

SetCone set_colimit(const SetFunctor& d) {
  const FinCategory& j = *d.dom;
  std::vector<int> offset{0};
  for (ObjectId x = 0; x < j.num_objects(); ++x) offset.push_back(offset.back() + d.size(x));
  std::vector<int> parent(static_cast<std::size_t>(offset.back()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (ArrowId u = 0; u < j.num_arrows(); ++u) {
    for (int x = 0; x < d.size(j.src(u)); ++x) {
      charge_work();
      int a = find(offset[j.src(u)] + x);
      int b = find(offset[j.tgt(u)] + d.action[u][x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  SetCone out;
  std::map<int, int> class_of_root;
  for (ObjectId x = 0; x < j.num_objects(); ++x) {
    out.legs.emplace_back();
    for (int e = 0; e < d.size(x); ++e) {
      const int root = find(offset[x] + e);
      auto [it, fresh] = class_of_root.try_emplace(root, static_cast<int>(out.apex.size()));
      if (fresh) out.apex.push_back(j.object_name(x) + "." + d.carriers[x][e]);
      out.legs[x].push_back(it->second);
    }
  }
  return out;
}

Verdict check_lex_functor(const Functor& f) {
  const std::string check = "lex functor " + f.name;
  for (const auto& inst : lex_instances(f.dom)) {
    Functor image = compose(f, inst.diagram);
    Cone cone{f.omap[inst.cone.apex], {}};
    for (ArrowId leg : inst.cone.legs) cone.legs.push_back(f.mmap[leg]);
    if (!is_limit_cone(image, cone))
      return Verdict::fail(check, "preserves-limit", {inst.label},
                           "image of the " + inst.label + " is not a limit cone");
  }
  return Verdict::ok(check);
}

bool preserves_limit(const SetFunctor& f, const Functor& d, const Cone& cone) {
  const SetCone lim = set_limit(precompose(f, d));
  std::map<std::vector<int>, int> index;
  for (std::size_t t = 0; t < lim.tuples.size(); ++t) index[lim.tuples[t]] = static_cast<int>(t);
  std::set<int> hit;
  const int apex_size = f.size(cone.apex);
  for (int x = 0; x < apex_size; ++x) {
    std::vector<int> tuple;
    for (ArrowId leg : cone.legs) tuple.push_back(f.action[leg][x]);
    hit.insert(index.at(tuple));
  }
  return static_cast<int>(hit.size()) == apex_size && hit.size() == lim.tuples.size();
}

bool preserves_colimit(const SetFunctor& f, const Functor& d, const Cone& cocone) {
  const SetFunctor fd = precompose(f, d);
  const SetCone colim = set_colimit(fd);
  std::vector<int> image(colim.apex.size(), -1);
  for (ObjectId j = 0; j < d.dom->num_objects(); ++j)
    for (int x = 0; x < fd.size(j); ++x) image[colim.legs[j][x]] = f.action[cocone.legs[j]][x];
  std::set<int> hit(image.begin(), image.end());
  return hit.size() == image.size() && static_cast<int>(hit.size()) == f.size(cocone.apex);
}

Verdict check_lex_functor(const SetFunctor& f) { return check_lex_functor(f, lex_instances(f.dom)); }

Verdict check_lex_functor(const SetFunctor& f, const std::vector<LimitInstance>& instances) {
  const std::string check = "lex functor " + f.name;
  for (const auto& inst : instances) {
    if (!preserves_limit(f, inst.diagram, inst.cone)) {
      return Verdict::fail(check, "preserves-limit", {inst.label},
                           "comparison map at the " + inst.label + " is not a bijection");
    }
  }
  return Verdict::ok(check);
}

}  // namespace guk
