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

#include "guk/clans.hpp"

#include <algorithm>
#include <set>

namespace guk {

bool Clan::is_display(ArrowId f) const { return std::binary_search(display.begin(), display.end(), f); }

ArrowId terminal_projection(const FinCategory& c, ObjectId terminal, ObjectId a) {
  const auto& h = c.hom(a, terminal);
  if (h.size() != 1)
    throw Error(ErrorKind::PreconditionFailed,
                c.object_name(terminal) + " is not a terminal object of " + c.name());
  return h.front();
}

namespace {

ArrowId pullback_leg(const CategoryRef& c, ArrowId d, ArrowId g) {
  auto cone = pullback(c, d, g);
  if (!cone)
    throw Error(ErrorKind::MissingPullback, "no pullback of " + c->arrow_name(d) + " along " +
                                                c->arrow_name(g) + " in " + c->name());
  return cone->legs[1];
}

}  // namespace

Verdict validate_clan(const Clan& k) {
  const FinCategory& c = *k.base;
  const std::string check = "clan " + k.name;
  for (ObjectId a = 0; a < c.num_objects(); ++a) terminal_projection(c, k.terminal, a);
  for (ArrowId d : k.display) {
    for (ArrowId g = 0; g < c.num_arrows(); ++g) {
      if (c.tgt(g) != c.tgt(d)) continue;
      const ArrowId leg = pullback_leg(k.base, d, g);
      if (!k.is_display(leg))
        return Verdict::fail(check, "pullback-stability",
                             {c.arrow_name(d), c.arrow_name(g), c.arrow_name(leg)},
                             "pullback of " + c.arrow_name(d) + " along " + c.arrow_name(g) +
                                 " is not a display map");
    }
  }
  for (ArrowId d : k.display)
    for (ArrowId e : k.display) {
      const ArrowId h = c.compose(e, d);
      if (h != kNone && !k.is_display(h))
        return Verdict::fail(check, "composition", {c.arrow_name(e), c.arrow_name(d)},
                             "composite " + c.arrow_name(h) + " is not a display map");
    }
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    if (c.is_iso(f) && !k.is_display(f))
      return Verdict::fail(check, "isomorphisms", {c.arrow_name(f)},
                           "isomorphism " + c.arrow_name(f) + " is not a display map");
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    const ArrowId p = terminal_projection(c, k.terminal, a);
    if (!k.is_display(p))
      return Verdict::fail(check, "terminal-projections", {c.arrow_name(p)},
                           "terminal projection of " + c.object_name(a) + " is not a display map");
  }
  return Verdict::ok(check);
}

std::vector<ArrowId> display_closure(const CategoryRef& cref, const std::vector<ArrowId>& generators) {
  const FinCategory& c = *cref;
  auto top = terminal_object(cref);
  if (!top) throw Error(ErrorKind::PreconditionFailed, c.name() + " has no terminal object");
  std::set<ArrowId> d(generators.begin(), generators.end());
  for (ArrowId f = 0; f < c.num_arrows(); ++f)
    if (c.is_iso(f)) d.insert(f);
  for (ObjectId a = 0; a < c.num_objects(); ++a) d.insert(terminal_projection(c, top->apex, a));
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<ArrowId> current(d.begin(), d.end());
    for (ArrowId x : current) {
      for (ArrowId y : current) {
        charge_work();
        const ArrowId h = c.compose(y, x);
        if (h != kNone) changed |= d.insert(h).second;
      }
      for (ArrowId g = 0; g < c.num_arrows(); ++g)
        if (c.tgt(g) == c.tgt(x)) changed |= d.insert(pullback_leg(cref, x, g)).second;
    }
  }
  return {d.begin(), d.end()};
}

Verdict check_section_composite(const Clan& k, ArrowId r) {
  const FinCategory& c = *k.base;
  const ArrowId to_a = terminal_projection(c, k.terminal, c.src(r));
  const ArrowId to_b = terminal_projection(c, k.terminal, c.tgt(r));
  const ArrowId composite = c.compose(to_b, r);
  if (composite != to_a)
    throw Error(ErrorKind::TriangleDoesNotCommute,
                "terminal projections do not commute with " + c.arrow_name(r));
  const std::string check = "section composite " + c.arrow_name(r) + " in " + k.name;
  if (!k.is_display(composite))
    return Verdict::fail(check, "display-composite", {c.arrow_name(to_b), c.arrow_name(r)},
                         "composite " + c.arrow_name(composite) + " is not a display map");
  return Verdict::ok(check);
}

}  // namespace guk
