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

#include "guk/topos.hpp"

#include <map>

namespace guk {

Verdict validate_bundle(const SheafOfModels& f) {
  const std::string check = "bundle " + f.name;
  const FinCategory& c = *f.index;
  if (static_cast<int>(f.at.size()) != c.num_objects() ||
      static_cast<int>(f.maps.size()) != c.num_arrows())
    return Verdict::fail(check, "total", {f.name}, "every object and arrow needs an image");
  for (ObjectId x = 0; x < c.num_objects(); ++x) {
    if (!same_category(f.at[x].dom, f.site_op))
      return Verdict::fail(check, "presheaf-domain", {c.object_name(x), f.at[x].name});
    if (auto v = validate_set_functor(f.at[x]); !v)
      return Verdict::fail(check, "presheaf", {c.object_name(x), f.at[x].name}, v.law);
  }
  for (ArrowId u = 0; u < c.num_arrows(); ++u) {
    if (auto v = validate_set_nat(f.at[c.src(u)], f.at[c.tgt(u)], f.maps[u]); !v)
      return Verdict::fail(check, "natural", {c.arrow_name(u)}, v.law);
  }
  for (ObjectId x = 0; x < c.num_objects(); ++x) {
    if (f.maps[c.identity(x)] != identity_components(f.at[x]))
      return Verdict::fail(check, "preserves-identity", {c.object_name(x)});
  }
  for (ArrowId g = 0; g < c.num_arrows(); ++g)
    for (ArrowId u = 0; u < c.num_arrows(); ++u) {
      const ArrowId h = c.compose(g, u);
      if (h != kNone && f.maps[h] != compose_components(f.maps[g], f.maps[u]))
        return Verdict::fail(check, "preserves-composition", {c.arrow_name(g), c.arrow_name(u)});
    }
  return Verdict::ok(check);
}

SheafOfModels terminal_bundle(const CategoryRef& index, const CategoryRef& site, const std::string& name) {
  SheafOfModels f{name, index, site, opposite(site), {}, {}};
  const SetFunctor one = constant_set_functor(f.site_op, {"*"}, "1");
  for (ObjectId x = 0; x < index->num_objects(); ++x) f.at.push_back(one);
  for (ArrowId u = 0; u < index->num_arrows(); ++u) f.maps.push_back(identity_components(one));
  return f;
}

namespace {

// Functor on the index category whose value at x is the limit `limits[x]`,
// with the action induced componentwise by the bundle maps.
SetFunctor from_limits(const SheafOfModels& f, const std::string& name,
                       const std::vector<SetCone>& limits) {
  const FinCategory& c = *f.index;
  SetFunctor out{name, f.index, {}, {}};
  for (const auto& lim : limits) out.carriers.push_back(lim.apex);
  for (ArrowId u = 0; u < c.num_arrows(); ++u) {
    const SetCone& from = limits[c.src(u)];
    const SetCone& to = limits[c.tgt(u)];
    std::map<std::vector<int>, int> index;
    for (std::size_t t = 0; t < to.tuples.size(); ++t) index[to.tuples[t]] = static_cast<int>(t);
    std::vector<int> table;
    for (const auto& tuple : from.tuples) {
      std::vector<int> image;
      for (std::size_t d = 0; d < tuple.size(); ++d) image.push_back(f.maps[u][d][tuple[d]]);
      table.push_back(index.at(image));
    }
    out.action.push_back(std::move(table));
  }
  return out;
}

}  // namespace

SetFunctor global_sections(const SheafOfModels& f) {
  std::vector<SetCone> limits;
  for (const auto& p : f.at) limits.push_back(set_limit(p));
  return from_limits(f, "Gamma_" + f.name, limits);
}

SetFunctor global_sections_by_hom(const SheafOfModels& f) {
  const SetFunctor one = constant_set_functor(f.site_op, {"*"}, "1");
  std::vector<SetCone> limits;
  for (const auto& p : f.at) {
    SetCone lim;
    for (const auto& comps : nat_transforms_between(one, p)) {
      std::vector<int> tuple;
      std::vector<std::string> parts;
      for (std::size_t d = 0; d < comps.size(); ++d) {
        tuple.push_back(comps[d][0]);
        parts.push_back(p.carriers[d][comps[d][0]]);
      }
      lim.apex.push_back("(" + join(parts, ",") + ")");
      lim.tuples.push_back(std::move(tuple));
    }
    limits.push_back(std::move(lim));
  }
  return from_limits(f, "Gamma_" + f.name, limits);
}

SetFunctor stalk(const SheafOfModels& f, ObjectId d) {
  if (d < 0 || d >= f.site->num_objects())
    throw Error(ErrorKind::UnknownId, "no object " + std::to_string(d) + " in " + f.site->name());
  SetFunctor out{f.name + "_at_" + f.site->object_name(d), f.index, {}, {}};
  for (const auto& p : f.at) out.carriers.push_back(p.carriers[d]);
  for (const auto& comps : f.maps) out.action.push_back(comps[d]);
  return out;
}

Verdict gamma_is_limit_of_stalks(const SheafOfModels& f) {
  const std::string check = "global sections of " + f.name + " as limit of stalks";
  const FinCategory& c = *f.index;
  const FinCategory& d = *f.site;
  std::vector<SetFunctor> stalks;
  for (ObjectId x = 0; x < d.num_objects(); ++x) stalks.push_back(stalk(f, x));
  // At each index object the stalks and the transition maps form a diagram of
  // shape opposite(D): gamma : e -> e' gives stalk_e' => stalk_e.
  std::vector<SetCone> limits;
  for (ObjectId x = 0; x < c.num_objects(); ++x) {
    SetFunctor diagram{"stalks", f.site_op, {}, {}};
    for (const auto& s : stalks) diagram.carriers.push_back(s.carriers[x]);
    for (ArrowId gamma = 0; gamma < d.num_arrows(); ++gamma) diagram.action.push_back(f.at[x].action[gamma]);
    limits.push_back(set_limit(diagram));
  }
  const SetFunctor lim = from_limits(f, "lim_stalks", limits);
  const SetFunctor gamma = global_sections(f);
  const SetFunctor by_hom = global_sections_by_hom(f);
  for (ObjectId x = 0; x < c.num_objects(); ++x) {
    if (lim.carriers[x] != gamma.carriers[x])
      return Verdict::fail(check, "limit-of-stalks", {c.object_name(x)},
                           "limit of stalks and global sections differ at " + c.object_name(x));
    if (gamma.carriers[x] != by_hom.carriers[x])
      return Verdict::fail(check, "gamma-two-ways", {c.object_name(x)},
                           "limit and hom from the terminal presheaf differ at " + c.object_name(x));
  }
  for (ArrowId u = 0; u < c.num_arrows(); ++u) {
    if (lim.action[u] != gamma.action[u] || gamma.action[u] != by_hom.action[u])
      return Verdict::fail(check, "natural", {c.arrow_name(u)}, "actions differ along " + c.arrow_name(u));
  }
  return Verdict::ok(check);
}

Verdict check_lex_composite(const SheafOfModels& f) {
  std::vector<LimitInstance> instances;
  try {
    instances = lex_instances(f.index);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionFailed) throw Error(ErrorKind::NotLex, e.what());
    throw;
  }
  const std::string check = "lex composites of " + f.name;
  if (auto v = check_lex_functor(global_sections(f), instances); !v)
    return Verdict::fail(check, "lex", {"global sections", v.witness.front()}, v.detail);
  for (ObjectId d = 0; d < f.site->num_objects(); ++d) {
    if (auto v = check_lex_functor(stalk(f, d), instances); !v)
      return Verdict::fail(check, "lex", {"stalk at " + f.site->object_name(d), v.witness.front()}, v.detail);
  }
  return Verdict::ok(check);
}

}  // namespace guk
