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

#include "guk/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "guk/filtered.hpp"
#include "guk/models.hpp"

namespace guk {

std::uint64_t max_work_from_env() {
  const char* raw = std::getenv("GUK_MAX_WORK");
  if (!raw || !*raw) return 10'000'000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return 10'000'000;
  return v;
}

namespace {

struct Outcome {
  std::string verdict = "value";  // pass, fail or value
  Value result;
  Value witness;
  std::vector<std::string> caveats;
};

class Args {
 public:
  explicit Args(const Flags& flags) : flags_(flags) {}
  const std::string& operator[](const std::string& name) const { return flags_.at(name); }
  bool has(const std::string& name) const { return flags_.count(name) > 0; }
  std::string get(const std::string& name, const std::string& fallback) const {
    return has(name) ? flags_.at(name) : fallback;
  }
  int integer(const std::string& name, int fallback) const {
    if (!has(name)) return fallback;
    const std::string& s = flags_.at(name);
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, "--" + name + " expects an integer, got '" + s + "'");
  }

 private:
  const Flags& flags_;
};

// Comma or space separated names.
std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Value verdict_witness(const Verdict& v) {
  Value w;
  w.set("check", v.check);
  w.set("law", v.law);
  w.set("ids", Value::list(v.witness));
  if (!v.detail.empty()) w.set("detail", v.detail);
  return w;
}

Outcome from_verdict(const Verdict& v) {
  Outcome o;
  o.verdict = v.pass ? "pass" : "fail";
  o.result.set("check", v.check);
  if (!v.pass) o.witness = verdict_witness(v);
  o.caveats = v.caveats;
  return o;
}

Value carriers_value(const SetFunctor& f) {
  Value v;
  for (ObjectId a = 0; a < f.dom->num_objects(); ++a) v.set(f.dom->object_name(a), Value::list(f.carriers[a]));
  return v;
}

Value action_value(const SetFunctor& f) {
  Value v;
  const FinCategory& c = *f.dom;
  for (ArrowId u = 0; u < c.num_arrows(); ++u) {
    if (c.is_identity(u)) continue;
    Value& entries = v.set(c.arrow_name(u), Value::list());
    for (int x = 0; x < f.size(c.src(u)); ++x)
      entries.push(f.carriers[c.src(u)][x] + " -> " + f.carriers[c.tgt(u)][f.action[u][x]]);
  }
  return v;
}

Value set_functor_value(const SetFunctor& f) {
  Value v;
  v.set("name", f.name);
  v.set("carriers", carriers_value(f));
  v.set("action", action_value(f));
  return v;
}

Value components_value(const SetFunctor& s, const SetFunctor& t, const Components& comps) {
  Value v;
  for (ObjectId a = 0; a < s.dom->num_objects(); ++a) {
    Value& entries = v.set(s.dom->object_name(a), Value::list());
    for (int x = 0; x < s.size(a); ++x) entries.push(s.carriers[a][x] + " -> " + t.carriers[a][comps[a][x]]);
  }
  return v;
}

Value lines_value(const std::string& text) {
  Value v = Value::list();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) v.push(line);
  return v;
}

// A presheaf of the document checked against a site.
const SetFunctor& presheaf_on(const Document& doc, const std::string& name, const Site& s) {
  const SetFunctor& p = doc.set_functor(name).functor;
  if (!same_category(p.dom, opposite(s.base())))
    throw Error(ErrorKind::InvalidArgument, name + " is not a presheaf on the base of " + s.name());
  return p;
}

// --- commands --------------------------------------------------------------

Value describe(const Document& doc, const std::string& name) {
  const Item& item = doc.item(name);
  Value v;
  v.set("kind", item_kind(item));
  v.set("name", name);
  std::visit(
      [&](const auto& i) {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, CategoryItem> || std::is_same_v<T, PresentationItem>) {
          const FinCategory& c = *i.category;
          v.set("objects", Value::list(c.object_names()));
          v.set("arrows", static_cast<long long>(c.num_arrows()));
        } else if constexpr (std::is_same_v<T, FunctorItem>) {
          v.set("dom", i.dom);
          v.set("cod", i.cod);
        } else if constexpr (std::is_same_v<T, SetFunctorItem>) {
          v.set("on", i.on);
          Value& sizes = v.set("sizes", Value::map());
          for (ObjectId a = 0; a < i.functor.dom->num_objects(); ++a)
            sizes.set(i.functor.dom->object_name(a), static_cast<long long>(i.functor.size(a)));
        } else if constexpr (std::is_same_v<T, NatItem>) {
          v.set("source", i.source);
          v.set("target", i.target);
        } else if constexpr (std::is_same_v<T, SpaceItem>) {
          v.set("points", Value::list(i.space.points));
          Value& opens = v.set("opens", Value::list());
          for (const auto& u : i.space.opens) opens.push(open_name(i.space, u));
        } else if constexpr (std::is_same_v<T, SiteItem>) {
          v.set("on", i.on);
          const FinCategory& c = *i.site->base();
          Value& covers = v.set("covers", Value::map());
          for (ObjectId a = 0; a < c.num_objects(); ++a) {
            Value& fams = covers.set(c.object_name(a), Value::list());
            for (const auto& f : i.site->covers(a)) fams.push(family_label(c, f));
          }
        } else if constexpr (std::is_same_v<T, ClanItem>) {
          v.set("on", i.on);
          v.set("terminal", i.clan.base->object_name(i.clan.terminal));
          v.set("display", Value::list(arrow_names(*i.clan.base, i.clan.display)));
        } else {
          v.set("index", i.bundle.index->name());
          v.set("over", i.over);
        }
      },
      item);
  return v;
}

Verdict item_validity(const Document& doc, const std::string& name) {
  const Item& item = doc.item(name);
  if (const auto* c = std::get_if<CategoryItem>(&item)) return validate_category(*c->category);
  if (const auto* p = std::get_if<PresentationItem>(&item)) return validate_category(*p->category);
  if (const auto* f = std::get_if<FunctorItem>(&item)) return validate_functor(f->functor);
  if (const auto* s = std::get_if<SetFunctorItem>(&item)) return validate_set_functor(s->functor);
  if (const auto* n = std::get_if<NatItem>(&item))
    return n->between_set_functors ? validate_set_nat(n->set_source, n->set_target, n->components)
                                   : validate_nat(n->transform);
  if (const auto* b = std::get_if<BundleItem>(&item)) return validate_bundle(b->bundle);
  // Spaces, sites and clans are checked structurally at parse time.
  return Verdict::ok(item_kind(item) + " " + name);
}

Outcome cmd_check(const Document& doc, const Args& args) {
  const std::string name = args["item"];
  const Item& item = doc.item(name);
  if (!args.has("property")) {
    Outcome o = from_verdict(item_validity(doc, name));
    o.result = describe(doc, name);
    return o;
  }
  const std::string prop = args["property"];
  Verdict v;
  if (std::holds_alternative<CategoryItem>(item) || std::holds_alternative<PresentationItem>(item)) {
    const CategoryRef c = doc.category(name);
    if (prop == "lex") {
      v = has_all_finite_limits(c);
    } else if (prop == "filtered") {
      const FilteredVerdict f = is_filtered(c);
      Outcome o = from_verdict(f.verdict);
      if (f.verdict.pass) {
        Value& bounds = o.result.set("bounds", Value::list());
        for (const auto& b : f.witness.bounds)
          bounds.push(c->object_name(b.i) + " " + c->object_name(b.j) + " -> " + c->object_name(b.k) + " via " +
                      c->arrow_name(b.fi) + " " + c->arrow_name(b.fj));
        Value& coeq = o.result.set("coequalizers", Value::list());
        for (const auto& q : f.witness.coequalizers)
          coeq.push(c->arrow_name(q.f) + " " + c->arrow_name(q.g) + " by " + c->arrow_name(q.w));
      }
      return o;
    } else if (prop == "directed") {
      v = is_directed_poset(c);
    } else {
      throw Error(ErrorKind::InvalidArgument, "categories have properties lex, filtered, directed");
    }
  } else if (const auto* f = std::get_if<FunctorItem>(&item)) {
    if (prop == "fully-faithful")
      v = check_fully_faithful(f->functor);
    else if (prop == "lex")
      v = check_lex_functor(f->functor);
    else
      throw Error(ErrorKind::InvalidArgument, "functors have properties fully-faithful, lex");
  } else if (const auto* s = std::get_if<SetFunctorItem>(&item)) {
    if (prop != "lex") throw Error(ErrorKind::InvalidArgument, "set functors have the property lex");
    v = check_lex_functor(s->functor);
  } else if (const auto* b = std::get_if<BundleItem>(&item)) {
    if (prop != "lex") throw Error(ErrorKind::InvalidArgument, "bundles have the property lex");
    v = check_lex_composite(b->bundle);
  } else {
    throw Error(ErrorKind::InvalidArgument, item_kind(item) + " items have no checkable properties");
  }
  Outcome o = from_verdict(v);
  o.result.set("property", prop);
  return o;
}

Value cone_value(const Functor& d, const Cone& cone) {
  Value v;
  v.set("apex", d.cod->object_name(cone.apex));
  Value& legs = v.set("legs", Value::map());
  for (ObjectId j = 0; j < d.dom->num_objects(); ++j) legs.set(d.dom->object_name(j), d.cod->arrow_name(cone.legs[j]));
  return v;
}

Outcome limit_like(const Document& doc, const Args& args, bool lim) {
  const std::string name = args["diagram"];
  const Item& item = doc.item(name);
  Outcome o;
  if (const auto* f = std::get_if<FunctorItem>(&item)) {
    const auto cone = lim ? find_limit(f->functor) : find_colimit(f->functor);
    if (!cone) {
      o.verdict = "fail";
      o.result.set("diagram", name);
      o.witness.set("law", lim ? "limit-exists" : "colimit-exists");
      o.witness.set("ids", Value::list({name}));
      o.witness.set("detail", std::string("no universal ") + (lim ? "cone" : "cocone") + " over " + name);
      return o;
    }
    o.result = cone_value(f->functor, *cone);
    return o;
  }
  const SetFunctor& d = doc.set_functor(name).functor;
  const SetCone c = lim ? set_limit(d) : set_colimit(d);
  o.result.set("elements", Value::list(c.apex));
  Value& legs = o.result.set("legs", Value::map());
  for (ObjectId j = 0; j < d.dom->num_objects(); ++j) {
    Value& entries = legs.set(d.dom->object_name(j), Value::list());
    if (lim) {
      for (std::size_t x = 0; x < c.apex.size(); ++x) entries.push(c.apex[x] + " -> " + d.carriers[j][c.legs[j][x]]);
    } else {
      for (int x = 0; x < d.size(j); ++x) entries.push(d.carriers[j][x] + " -> " + c.apex[c.legs[j][x]]);
    }
  }
  return o;
}

Outcome cmd_filtered(const Document& doc, const Args& args) {
  if (args.has("diagram")) {
    const SetFunctor& d = doc.set_functor(args["diagram"]).functor;
    const SetCone c = filtered_colimit(d);
    Outcome o;
    o.result.set("elements", Value::list(c.apex));
    Value& legs = o.result.set("legs", Value::map());
    for (ObjectId j = 0; j < d.dom->num_objects(); ++j) {
      Value& entries = legs.set(d.dom->object_name(j), Value::list());
      for (int x = 0; x < d.size(j); ++x) entries.push(d.carriers[j][x] + " -> " + c.apex[c.legs[j][x]]);
    }
    return o;
  }
  if (!args.has("category")) throw Error(ErrorKind::MissingFlag, "filtered needs --category or --diagram");
  Flags f{{"item", args["category"]}, {"property", "filtered"}};
  return cmd_check(doc, Args(f));
}

Outcome cmd_fp(const Document& doc, const Args& args) {
  const CategoryRef c = doc.category(args["category"]);
  const ObjectId a = c->object(args["object"]);
  std::vector<std::pair<Functor, Cone>> diagrams;
  std::vector<std::string> caveats;
  if (args.has("diagrams")) {
    for (const auto& n : split_names(args["diagrams"])) {
      const Functor& d = doc.functor(n);
      if (!same_category(d.cod, c)) throw Error(ErrorKind::InvalidArgument, n + " is not a diagram in " + c->name());
      if (!is_filtered(d.dom).verdict) throw Error(ErrorKind::PreconditionFailed, n + " does not have a filtered shape");
      auto colim = find_colimit(d);
      if (!colim) throw Error(ErrorKind::PreconditionFailed, n + " has no colimit in " + c->name());
      diagrams.emplace_back(d, *colim);
    }
  } else {
    const int max_objects = args.integer("max-shape", 3);
    if (max_objects < 1 || max_objects > 4) throw Error(ErrorKind::InvalidArgument, "--max-shape must be 1..4");
    for (const auto& shape : shape_corpus(max_objects, 12)) {
      if (!is_filtered(shape).verdict) continue;
      int k = 0;
      enumerate_functors(shape, c, [&](const Functor& d) {
        auto colim = find_colimit(d);
        if (colim) {
          Functor named = d;
          named.name = shape->name() + "_" + std::to_string(k);
          diagrams.emplace_back(std::move(named), *colim);
        }
        ++k;
        return true;
      });
    }
    caveats.push_back("diagrams: every functor from a filtered corpus shape with at most " +
                      std::to_string(max_objects) + " objects that has a colimit");
  }
  const FpVerdict fp = fp_witness(c, a, diagrams);
  Outcome o = from_verdict(fp.verdict);
  o.result.set("object", c->object_name(a));
  o.result.set("diagrams", static_cast<long long>(fp.entries.size()));
  o.result.set("vacuous", fp.vacuous ? "yes" : "no");
  if (!fp.verdict.pass)
    for (const auto& e : fp.entries)
      if (!e.verdict.pass) {
        o.witness.set("inner", verdict_witness(e.verdict));
        break;
      }
  o.caveats.insert(o.caveats.end(), caveats.begin(), caveats.end());
  return o;
}

Outcome cmd_models(const Document& doc, const Args& args) {
  const CategoryRef c = doc.category(args["category"]);
  const int max_size = args.integer("max-size", 3);
  const ModelFragment m = enumerate_lex_models(c, max_size);
  Outcome o;
  o.result.set("category", c->name());
  o.result.set("max_size", static_cast<long long>(max_size));
  o.result.set("count", static_cast<long long>(m.models.size()));
  Value& models = o.result.set("models", Value::list());
  for (const auto& model : m.models) models.push(set_functor_value(model));
  const FinCategory& frag = *m.fragment.category;
  Value& fv = o.result.set("fragment", Value::map());
  fv.set("name", frag.name());
  fv.set("objects", Value::list(frag.object_names()));
  fv.set("arrows", static_cast<long long>(frag.num_arrows()));
  if (args.get("export", "") == "dsl") {
    std::string text = render_item(frag.name(), CategoryItem{m.fragment.category});
    for (const auto& model : m.models)
      text += "\n" + render_item(model.name, SetFunctorItem{model, args["category"], false});
    o.result.set("dsl", lines_value(text));
  } else if (args.has("export")) {
    throw Error(ErrorKind::InvalidArgument, "--export supports dsl");
  }
  o.caveats.push_back("models up to natural isomorphism with carriers of size <= " + std::to_string(max_size));
  return o;
}

Value count_rows(const std::vector<std::vector<std::size_t>>& counts) {
  Value v = Value::list();
  for (const auto& row : counts) {
    std::vector<std::string> cells;
    for (auto n : row) cells.push_back(std::to_string(n));
    v.push(join(cells, " "));
  }
  return v;
}

Outcome cmd_duality(const Document& doc, const Args& args) {
  const CategoryRef c = doc.category(args["category"]);
  const DualityReport r = duality_report(c, args.integer("max-size", 3));
  Outcome o;
  o.verdict = r.pass() ? "pass" : "fail";
  o.result.set("category", c->name());
  o.result.set("models", static_cast<long long>(r.models.models.size()));
  std::vector<std::string> reps;
  for (ObjectId a : r.representables) reps.push_back(c->object_name(a));
  o.result.set("representables", Value::list(reps));
  o.result.set("epsilon_counts", count_rows(r.epsilon_counts));
  o.result.set("hom_counts", count_rows(r.hom_counts));
  Value& checks = o.result.set("checks", Value::map());
  const std::pair<const char*, const Verdict*> named[] = {
      {"epsilon", &r.epsilon}, {"h", &r.h}, {"conservativity", &r.conservativity}, {"density", &r.density}};
  for (const auto& [n, v] : named) {
    checks.set(n, v->pass ? "pass" : "fail");
    if (!v->pass && o.witness.fields().empty()) o.witness = verdict_witness(*v);
  }
  o.caveats = r.caveats;
  return o;
}

Outcome cmd_topology(const Document& doc, const Args& args) {
  const Site& s = doc.site(args["site"]);
  Outcome o = from_verdict(validate_topology(s));
  o.result.set("site", s.name());
  return o;
}

Value sheaf_witness(const SheafVerdict& v, const FinCategory& c) {
  Value w;
  w.set("object", c.object_name(v.object));
  w.set("family", family_label(c, v.family));
  w.set("ids", Value::list(v.witness));
  w.set("detail", v.detail);
  return w;
}

Outcome cmd_sheaf(const Document& doc, const Args& args) {
  const Site& s = doc.site(args["site"]);
  const SetFunctor& p = presheaf_on(doc, args["presheaf"], s);
  const SheafVerdict v = check_sheaf(p, s);
  Outcome o;
  o.verdict = v.kind == SheafKind::Sheaf ? "pass" : "fail";
  o.result.set("kind", to_string(v.kind));
  if (v.kind != SheafKind::Sheaf) {
    o.witness.set("law", v.kind == SheafKind::Neither ? "at-most-one-gluing" : "gluing-exists");
    const Value w = sheaf_witness(v, *s.base());
    for (const auto& [k, x] : w.fields()) o.witness.set(k, x);
  }
  return o;
}

Outcome cmd_separated(const Document& doc, const Args& args) {
  const Site& s = doc.site(args["site"]);
  return from_verdict(check_separated(presheaf_on(doc, args["presheaf"], s), s));
}

Outcome cmd_sheafify(const Document& doc, const Args& args) {
  const Site& s = doc.site(args["site"]);
  const std::string pname = args["presheaf"];
  const SetFunctor& p = presheaf_on(doc, pname, s);
  const Sheafification a = sheafify(p, s);
  Outcome o;
  o.result.set("sheaf", set_functor_value(a.sheaf));
  o.result.set("unit", components_value(p, a.sheaf, a.unit));
  o.result.set("is_sheaf", to_string(check_sheaf(a.sheaf, s).kind));
  if (args.get("export", "") == "dsl") {
    const std::string sname = a.sheaf.name;
    std::string text = render_item(sname, SetFunctorItem{a.sheaf, args["site"], true});
    NatItem unit{pname, sname, true, p, a.sheaf, a.unit, {}};
    text += "\n" + render_item("unit_" + pname, unit);
    o.result.set("dsl", lines_value(text));
  } else if (args.has("export")) {
    throw Error(ErrorKind::InvalidArgument, "--export supports dsl");
  }
  return o;
}

Outcome cmd_continuous(const Document& doc, const Args& args) {
  const Functor& f = doc.functor(args["functor"]);
  const Site& from = doc.site(args["from"]);
  const Site& to = doc.site(args["to"]);
  if (!same_category(f.dom, from.base()) || !same_category(f.cod, to.base()))
    throw Error(ErrorKind::InvalidArgument, f.name + " does not run between the bases of " + from.name() +
                                                " and " + to.name());
  return from_verdict(check_continuous(f, from, to));
}

Outcome cmd_gamma(const Document& doc, const Args& args) {
  Outcome o;
  o.result = set_functor_value(global_sections(doc.bundle(args["bundle"])));
  return o;
}

Outcome cmd_stalk(const Document& doc, const Args& args) {
  const SheafOfModels& b = doc.bundle(args["bundle"]);
  Outcome o;
  o.result = set_functor_value(stalk(b, b.site->object(args["at"])));
  return o;
}

Outcome cmd_gamma_limit(const Document& doc, const Args& args) {
  return from_verdict(gamma_is_limit_of_stalks(doc.bundle(args["bundle"])));
}

Outcome cmd_clan(const Document& doc, const Args& args) {
  const Clan& k = doc.clan(args["clan"]);
  Verdict v = validate_clan(k);
  if (v && args.has("section")) v = check_section_composite(k, k.base->arrow(args["section"]));
  Outcome o = from_verdict(v);
  o.result.set("display", Value::list(arrow_names(*k.base, k.display)));
  return o;
}

Outcome cmd_clan_closure(const Document& doc, const Args& args) {
  const CategoryRef c = doc.category(args["category"]);
  std::vector<ArrowId> gens;
  for (const auto& n : split_names(args.get("generators", ""))) gens.push_back(c->arrow(n));
  const auto closure = display_closure(c, gens);
  Outcome o;
  o.result.set("category", c->name());
  o.result.set("generators", Value::list(arrow_names(*c, gens)));
  o.result.set("display", Value::list(arrow_names(*c, closure)));
  o.result.set("size", static_cast<long long>(closure.size()));
  return o;
}

struct Command {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  std::function<Outcome(const Document&, const Args&)> run;
};

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"check", {{"item"}, {"property"}, cmd_check}},
      {"limit", {{"diagram"}, {}, [](const Document& d, const Args& a) { return limit_like(d, a, true); }}},
      {"colimit", {{"diagram"}, {}, [](const Document& d, const Args& a) { return limit_like(d, a, false); }}},
      {"filtered", {{}, {"category", "diagram"}, cmd_filtered}},
      {"fp", {{"category", "object"}, {"diagrams", "max-shape"}, cmd_fp}},
      {"models", {{"category"}, {"max-size", "export"}, cmd_models}},
      {"duality", {{"category"}, {"max-size"}, cmd_duality}},
      {"topology", {{"site"}, {}, cmd_topology}},
      {"sheaf", {{"site", "presheaf"}, {}, cmd_sheaf}},
      {"separated", {{"site", "presheaf"}, {}, cmd_separated}},
      {"sheafify", {{"site", "presheaf"}, {"export"}, cmd_sheafify}},
      {"continuous", {{"functor", "from", "to"}, {}, cmd_continuous}},
      {"gamma", {{"bundle"}, {}, cmd_gamma}},
      {"stalk", {{"bundle", "at"}, {}, cmd_stalk}},
      {"gamma-limit-check", {{"bundle"}, {}, cmd_gamma_limit}},
      {"clan", {{"clan"}, {"section"}, cmd_clan}},
      {"clan-closure", {{"category"}, {"generators"}, cmd_clan_closure}},
  };
  return table;
}

const Command& lookup(const std::string& command, const Flags& flags) {
  auto it = commands().find(command);
  if (it == commands().end()) throw Error(ErrorKind::UnknownCommand, "unknown command '" + command + "'");
  const Command& cmd = it->second;
  for (const auto& r : cmd.required)
    if (!flags.count(r)) throw Error(ErrorKind::MissingFlag, command + " needs --" + r);
  for (const auto& [k, v] : flags) {
    if (std::find(cmd.required.begin(), cmd.required.end(), k) == cmd.required.end() &&
        std::find(cmd.optional.begin(), cmd.optional.end(), k) == cmd.optional.end())
      throw Error(ErrorKind::InvalidArgument, command + " does not take --" + k);
  }
  return cmd;
}

Report header(const std::string& command, const Flags& flags) {
  Report r;
  r.tree.set("command", command);
  Value& args = r.tree.set("args", Value::map());
  for (const auto& [k, v] : flags) args.set(k, v);
  return r;
}

Report error_report(const std::string& command, const Flags& flags, const Error& e) {
  Report r = header(command, flags);
  r.exit_code = 2;
  r.tree.set("verdict", "error");
  r.tree.set("exit_code", 2LL);
  Value& err = r.tree.set("error", Value::map());
  err.set("kind", std::string(to_string(e.kind())));
  err.set("message", e.what());
  if (const auto* d = dynamic_cast<const DslError*>(&e)) {
    err.set("line", static_cast<long long>(d->line()));
    err.set("column", static_cast<long long>(d->column()));
    if (d->kind() == ErrorKind::ParseError) {
      err.set("expected", Value::list(d->expected()));
      err.set("found", d->found());
    } else if (!d->found().empty()) {
      err.set("found", d->found());
    }
    if (d->kind() == ErrorKind::ValidationFailed) err.set("inner", verdict_witness(d->inner));
  }
  return r;
}

using Clock = std::chrono::steady_clock;

void add_timing(Report& r, const RunOptions& options, Clock::time_point start) {
  if (!options.timing) return;
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  r.tree.set("timing", Value::map()).set("elapsed_ms", std::to_string(us / 1000.0));
}

Report execute(const std::string& command, const Flags& flags, const Document* doc, const std::string* source,
               const RunOptions& options) {
  const auto start = Clock::now();
  Report r;
  try {
    const Command& cmd = lookup(command, flags);
    WorkBudget budget(options.max_work);
    Document parsed;
    if (source) {
      parsed = parse(*source);
      doc = &parsed;
    }
    Outcome o = cmd.run(*doc, Args(flags));
    r = header(command, flags);
    r.exit_code = o.verdict == "fail" ? 1 : 0;
    r.tree.set("verdict", o.verdict);
    r.tree.set("exit_code", static_cast<long long>(r.exit_code));
    r.tree.set("result", std::move(o.result));
    if (o.verdict == "fail") r.tree.set("witness", std::move(o.witness));
    r.tree.set("caveats", Value::list(o.caveats));
  } catch (const Error& e) {
    r = error_report(command, flags, e);
  } catch (const std::exception& e) {
    r = error_report(command, flags, Error(ErrorKind::InvalidArgument, std::string("internal error: ") + e.what()));
  }
  add_timing(r, options, start);
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : commands()) out.push_back(k);
    return out;
  }();
  return names;
}

Report run(const std::string& command, const Flags& flags, const Document& doc, const RunOptions& options) {
  return execute(command, flags, &doc, nullptr, options);
}

Report run_source(const std::string& command, const Flags& flags, const std::string& source,
                  const RunOptions& options) {
  return execute(command, flags, nullptr, &source, options);
}

}  // namespace guk
