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

#include "guk/models.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace guk {

namespace {

std::vector<LimitInstance> lex_or_throw(const CategoryRef& c) {
  try {
    return lex_instances(c);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionFailed) throw Error(ErrorKind::NotLex, e.what());
    throw;
  }
}

}  // namespace

ModelFragment enumerate_lex_models(const CategoryRef& c, int max_size) {
  if (max_size < 1) throw Error(ErrorKind::InvalidArgument, "max size must be at least 1");
  const auto instances = lex_or_throw(c);
  // Cardinality constraints forced by preservation of the chosen cones.
  auto sizes_ok = [&](const std::vector<int>& sizes) {
    for (const auto& inst : instances) {
      const int apex = sizes[inst.cone.apex];
      const auto& omap = inst.diagram.omap;
      if (omap.empty()) {
        if (apex != 1) return false;
      } else if (inst.diagram.dom == pair_shape()) {
        if (apex != sizes[omap[0]] * sizes[omap[1]]) return false;
      } else if (apex > sizes[omap[0]]) {
        return false;
      }
    }
    return true;
  };
  ModelFragment out;
  out.base = c;
  out.max_size = max_size;
  enumerate_set_functors(c, max_size, sizes_ok, [&](const SetFunctor& f) {
    if (!check_lex_functor(f, instances)) return true;
    for (const auto& m : out.models)
      if (find_natural_iso(m, f)) return true;
    SetFunctor model = f;
    model.name = "M" + std::to_string(out.models.size());
    out.models.push_back(std::move(model));
    return true;
  });
  out.fragment = tabulate_fragment("Mod_" + c->name(), out.models);
  return out;
}

SetFunctor evaluation_functor(const ModelFragment& m, ObjectId a) {
  const FunctorFragment& fr = m.fragment;
  SetFunctor ev{"ev_" + m.base->object_name(a), fr.category, {}, {}};
  for (const auto& model : fr.functors) ev.carriers.push_back(model.carriers[a]);
  for (const auto& comps : fr.arrows) ev.action.push_back(comps[a]);
  return ev;
}

Verdict evaluation_preservation_check(const ModelFragment& m, ObjectId a) {
  const SetFunctor ev = evaluation_functor(m, a);
  const CategoryRef& fr = m.fragment.category;
  const std::string check = "evaluation at " + m.base->object_name(a);
  for (const auto& [label, d] : lex_diagrams(fr)) {
    auto cone = find_limit(d);
    if (cone && !preserves_limit(ev, d, *cone))
      return Verdict::fail(check, "preserves-limit", {label},
                           "evaluation does not preserve the " + label);
  }
  for (const auto& shape : shape_corpus()) {
    if (!is_filtered(shape).verdict) continue;
    Verdict failure = Verdict::ok(check);
    enumerate_functors(shape, fr, [&](const Functor& d) {
      auto colim = find_colimit(d);
      if (colim && !preserves_colimit(ev, d, *colim)) {
        std::vector<std::string> objects;
        for (ObjectId x : d.omap) objects.push_back(fr->object_name(x));
        failure = Verdict::fail(check, "preserves-filtered-colimit",
                                {shape->name(), "(" + join(objects, ",") + ")"},
                                "evaluation does not preserve a filtered colimit");
        return false;
      }
      return true;
    });
    if (!failure) return failure;
  }
  Verdict v = Verdict::ok(check);
  v.caveats.push_back("filtered colimits checked over the shape corpus");
  return v;
}

Verdict check_conservative(const CategoryRef& cref, const std::vector<ObjectId>& collection) {
  const FinCategory& c = *cref;
  std::vector<std::string> names;
  for (ObjectId k : collection) names.push_back(c.object_name(k));
  const std::string check = "conservative {" + join(names, " ") + "} in " + c.name();
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    if (c.is_iso(f)) continue;
    bool premise = true;
    for (ObjectId k : collection) {
      const auto& from = c.hom(k, c.src(f));
      const auto& to = c.hom(k, c.tgt(f));
      std::vector<ArrowId> image;
      for (ArrowId u : from) image.push_back(c.compose(f, u));
      std::sort(image.begin(), image.end());
      if (from.size() != to.size() ||
          std::adjacent_find(image.begin(), image.end()) != image.end()) {
        premise = false;
        break;
      }
    }
    if (premise)
      return Verdict::fail(check, "reflects-isomorphisms", {c.arrow_name(f)},
                           c.arrow_name(f) + " induces bijections on the collection but is not invertible");
  }
  return Verdict::ok(check);
}

Functor comma_diagram(const CategoryRef& cref, const std::vector<ObjectId>& s, ObjectId a) {
  const FinCategory& c = *cref;
  CategoryBuilder b(c.name() + "/" + c.object_name(a));
  std::vector<ObjectId> omap;
  std::vector<ArrowId> over;  // u : K -> a per comma object
  for (ObjectId k : s) {
    for (ArrowId u : c.hom(k, a)) {
      b.add_object(c.arrow_name(u));
      omap.push_back(k);
      over.push_back(u);
    }
  }
  const auto n = static_cast<ObjectId>(over.size());
  // Comma arrows x -> y are g : K_x -> K_y with over[y] . g = over[x].
  std::map<std::tuple<ObjectId, ArrowId, ObjectId>, ArrowId> arrow_of;
  std::vector<ArrowId> underlying;
  for (ObjectId x = 0; x < n; ++x) arrow_of[{x, c.identity(omap[x]), x}] = CategoryBuilder::identity_arrow(x);
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      for (ArrowId g : c.hom(omap[x], omap[y])) {
        if (c.compose(over[y], g) != over[x] || (x == y && g == c.identity(omap[x]))) continue;
        arrow_of[{x, g, y}] = b.add_arrow(c.arrow_name(g) + "@" + c.arrow_name(over[x]) + "_" + c.arrow_name(over[y]), x, y);
        underlying.push_back(g);
      }
  for (const auto& [first, f_id] : arrow_of) {
    const auto [x, g, y] = first;
    for (const auto& [second, h_id] : arrow_of) {
      const auto [y2, h, z] = second;
      if (y2 != y) continue;
      b.set_compose(h_id, f_id, arrow_of.at({x, c.compose(h, g), z}));
    }
  }
  Functor d{"comma", b.build_ref(), cref, omap, {}};
  for (ObjectId k : omap) d.mmap.push_back(c.identity(k));
  d.mmap.insert(d.mmap.end(), underlying.begin(), underlying.end());
  return d;
}

Verdict check_dense(const CategoryRef& cref, const std::vector<ObjectId>& s) {
  const FinCategory& c = *cref;
  std::vector<std::string> names;
  for (ObjectId k : s) names.push_back(c.object_name(k));
  const std::string check = "dense {" + join(names, " ") + "} in " + c.name();
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    const Functor d = comma_diagram(cref, s, a);
    Cone cocone{a, {}};
    for (ObjectId x = 0; x < d.dom->num_objects(); ++x)
      cocone.legs.push_back(c.arrow(d.dom->object_name(x)));
    if (!is_colimit_cocone(d, cocone))
      return Verdict::fail(check, "canonical-colimit", {c.object_name(a)},
                           "the canonical cocone over the comma diagram at " + c.object_name(a) +
                               " is not a colimit");
  }
  return Verdict::ok(check);
}

DualityReport duality_report(const CategoryRef& c, int max_size) {
  DualityReport r;
  r.models = enumerate_lex_models(c, max_size);
  const std::string caveat = "fragment-restricted, maxSize = " + std::to_string(max_size);
  const FinCategory& cat = *c;
  const int n = cat.num_objects();

  // Evaluation shadow.
  std::vector<SetFunctor> evs;
  std::vector<ObjectId> omap;
  for (ObjectId a = 0; a < n; ++a) {
    evs.push_back(evaluation_functor(r.models, a));
    omap.push_back(a);
  }
  const FunctorFragment ev_fragment = tabulate_fragment("Ev_" + cat.name(), evs);
  const Functor epsilon = functor_into_fragment("epsilon", c, ev_fragment, omap, [&](ArrowId f) {
    Components comps;
    for (const auto& model : r.models.models) comps.push_back(model.action[f]);
    return comps;
  });
  r.epsilon = check_fully_faithful(epsilon);
  r.epsilon_counts.assign(static_cast<std::size_t>(n), std::vector<std::size_t>(n, 0));
  r.hom_counts = r.epsilon_counts;
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) {
      r.epsilon_counts[a][b] = ev_fragment.category->hom(a, b).size();
      r.hom_counts[a][b] = cat.hom(a, b).size();
    }

  // Covariant hom shadow, contravariant in A.
  const CategoryRef c_op = opposite(c);
  std::vector<SetFunctor> homs;
  for (ObjectId a = 0; a < n; ++a) homs.push_back(covariant_hom(c, a));
  const FunctorFragment h_fragment = tabulate_fragment("Hom_" + cat.name(), homs);
  const Functor h = functor_into_fragment("h", c_op, h_fragment, omap, [&](ArrowId f) {
    // f : A -> B in c gives C(B, -) => C(A, -), u |-> u . f.
    Components comps(static_cast<std::size_t>(n));
    for (ObjectId x = 0; x < n; ++x) {
      const auto& to = cat.hom(cat.src(f), x);
      for (ArrowId u : cat.hom(cat.tgt(f), x)) {
        const ArrowId v = cat.compose(u, f);
        comps[x].push_back(static_cast<int>(std::find(to.begin(), to.end(), v) - to.begin()));
      }
    }
    return comps;
  });
  r.h = check_fully_faithful(h);

  // Models isomorphic to representables generate the fragment.
  for (ObjectId a = 0; a < n; ++a) {
    bool found = false;
    for (ObjectId m = 0; m < static_cast<ObjectId>(r.models.models.size()); ++m) {
      if (find_natural_iso(homs[a], r.models.models[m])) {
        if (std::find(r.representables.begin(), r.representables.end(), m) == r.representables.end())
          r.representables.push_back(m);
        found = true;
        break;
      }
    }
    if (!found) r.caveats.push_back("representable C(" + cat.object_name(a) + ", -) exceeds maxSize");
  }
  std::sort(r.representables.begin(), r.representables.end());
  r.conservativity = check_conservative(r.models.fragment.category, r.representables);
  r.density = check_dense(r.models.fragment.category, r.representables);

  r.caveats.insert(r.caveats.begin(), caveat);
  for (Verdict* v : {&r.epsilon, &r.h, &r.conservativity, &r.density}) v->caveats.push_back(caveat);
  return r;
}

}  // namespace guk
