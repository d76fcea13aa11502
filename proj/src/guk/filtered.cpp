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

#include "guk/filtered.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace guk {

FilteredVerdict is_filtered(const CategoryRef& shape) {
  const FinCategory& j = *shape;
  const std::string check = "filtered " + j.name();
  FilteredVerdict out{Verdict::ok(check), {}};
  if (j.num_objects() == 0) {
    out.verdict = Verdict::fail(check, "nonempty", {}, "a filtered category is nonempty");
    return out;
  }
  for (ObjectId a = 0; a < j.num_objects(); ++a) {
    for (ObjectId b = a + 1; b < j.num_objects(); ++b) {
      bool found = false;
      for (ObjectId k = 0; k < j.num_objects() && !found; ++k) {
        charge_work();
        if (!j.hom(a, k).empty() && !j.hom(b, k).empty()) {
          out.witness.bounds.push_back({a, b, k, j.hom(a, k).front(), j.hom(b, k).front()});
          found = true;
        }
      }
      if (!found) {
        out.verdict = Verdict::fail(check, "cocone", {j.object_name(a), j.object_name(b)},
                                    "no object receives arrows from both");
        return out;
      }
    }
  }
  for (ObjectId a = 0; a < j.num_objects(); ++a) {
    for (ObjectId b = 0; b < j.num_objects(); ++b) {
      const auto& h = j.hom(a, b);
      for (std::size_t x = 0; x < h.size(); ++x) {
        for (std::size_t y = x + 1; y < h.size(); ++y) {
          bool found = false;
          for (ArrowId w = 0; w < j.num_arrows() && !found; ++w) {
            charge_work();
            if (j.src(w) == b && j.compose(w, h[x]) == j.compose(w, h[y])) {
              out.witness.coequalizers.push_back({h[x], h[y], w});
              found = true;
            }
          }
          if (!found) {
            out.verdict = Verdict::fail(check, "coequalize", {j.arrow_name(h[x]), j.arrow_name(h[y])},
                                        "no arrow coequalizes the parallel pair");
            return out;
          }
        }
      }
    }
  }
  return out;
}

Verdict is_directed_poset(const CategoryRef& shape) {
  const FinCategory& p = *shape;
  for (ObjectId a = 0; a < p.num_objects(); ++a) {
    for (ObjectId b = 0; b < p.num_objects(); ++b) {
      if (p.hom(a, b).size() > 1)
        throw Error(ErrorKind::NotAPoset, p.name() + " is not thin at (" + p.object_name(a) + ", " +
                                              p.object_name(b) + ")");
      if (a != b && !p.hom(a, b).empty() && !p.hom(b, a).empty())
        throw Error(ErrorKind::NotAPoset, p.name() + " is not antisymmetric at (" +
                                              p.object_name(a) + ", " + p.object_name(b) + ")");
    }
  }
  const std::string check = "directed " + p.name();
  if (p.num_objects() == 0) return Verdict::fail(check, "nonempty", {});
  for (ObjectId a = 0; a < p.num_objects(); ++a) {
    for (ObjectId b = a + 1; b < p.num_objects(); ++b) {
      bool bounded = false;
      for (ObjectId k = 0; k < p.num_objects() && !bounded; ++k)
        bounded = !p.hom(a, k).empty() && !p.hom(b, k).empty();
      if (!bounded)
        return Verdict::fail(check, "upper-bound", {p.object_name(a), p.object_name(b)});
    }
  }
  return Verdict::ok(check);
}

SetCone filtered_colimit(const SetFunctor& d) {
  if (!is_filtered(d.dom).verdict)
    throw Error(ErrorKind::PreconditionFailed, "shape " + d.dom->name() + " is not filtered");
  const FinCategory& j = *d.dom;
  std::vector<int> offset{0};
  for (ObjectId x = 0; x < j.num_objects(); ++x) offset.push_back(offset.back() + d.size(x));
  std::vector<int> parent(static_cast<std::size_t>(offset.back()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Elements of any stages with the same image at a stage k are identified.
  for (ObjectId k = 0; k < j.num_objects(); ++k) {
    std::vector<int> first(static_cast<std::size_t>(d.size(k)), -1);
    for (ArrowId u = 0; u < j.num_arrows(); ++u) {
      if (j.tgt(u) != k) continue;
      for (int x = 0; x < d.size(j.src(u)); ++x) {
        charge_work();
        int& slot = first[d.action[u][x]];
        const int cell = offset[j.src(u)] + x;
        if (slot < 0) {
          slot = cell;
          continue;
        }
        const int a = find(slot);
        const int b = find(cell);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  SetCone out;
  std::map<int, int> class_of_root;
  for (ObjectId x = 0; x < j.num_objects(); ++x) {
    out.legs.emplace_back();
    for (int e = 0; e < d.size(x); ++e) {
      auto [it, fresh] = class_of_root.try_emplace(find(offset[x] + e), static_cast<int>(out.apex.size()));
      if (fresh) out.apex.push_back(j.object_name(x) + "." + d.carriers[x][e]);
      out.legs[x].push_back(it->second);
    }
  }
  return out;
}

SetFunctor hom_diagram(const Functor& d, ObjectId a) {
  const FinCategory& c = *d.cod;
  SetFunctor h{"hom(" + c.object_name(a) + ", " + d.name + ")", d.dom, {}, {}};
  for (ObjectId x : d.omap) h.carriers.push_back(arrow_names(c, c.hom(a, x)));
  for (ArrowId u = 0; u < d.dom->num_arrows(); ++u) {
    const ArrowId du = d.mmap[u];
    const auto& to = c.hom(a, c.tgt(du));
    std::vector<int> table;
    for (ArrowId m : c.hom(a, c.src(du))) {
      const ArrowId v = c.compose(du, m);
      table.push_back(static_cast<int>(std::find(to.begin(), to.end(), v) - to.begin()));
    }
    h.action.push_back(std::move(table));
  }
  return h;
}

Verdict check_hom_preserves_filtered_colimit(const Functor& d, ObjectId a, const Cone& colim) {
  if (!is_filtered(d.dom).verdict)
    throw Error(ErrorKind::PreconditionFailed, "shape " + d.dom->name() + " is not filtered");
  if (!is_colimit_cocone(d, colim))
    throw Error(ErrorKind::PreconditionFailed, "supplied cocone over " + d.name + " is not a colimit");
  const FinCategory& c = *d.cod;
  const std::string check = "hom(" + c.object_name(a) + ", -) preserves colimit of " + d.name;
  const SetFunctor h = hom_diagram(d, a);
  const SetCone fc = filtered_colimit(h);
  const auto& target = c.hom(a, colim.apex);
  // Comparison colim hom(a, D-) -> hom(a, apex), [m at j] |-> leg_j . m.
  std::vector<ArrowId> image(fc.apex.size(), kNone);
  for (ObjectId x = 0; x < d.dom->num_objects(); ++x) {
    const auto& source = c.hom(a, d.omap[x]);
    for (std::size_t m = 0; m < source.size(); ++m)
      image[fc.legs[x][m]] = c.compose(colim.legs[x], source[m]);
  }
  std::set<ArrowId> hit(image.begin(), image.end());
  if (hit.size() != image.size()) {
    return Verdict::fail(check, "comparison-injective", {c.object_name(a)},
                         "distinct classes of the hom colimit have the same image");
  }
  for (ArrowId m : target) {
    if (!hit.count(m))
      return Verdict::fail(check, "comparison-surjective", {c.arrow_name(m)},
                           c.arrow_name(m) + " does not factor through a stage");
  }
  return Verdict::ok(check);
}

FpVerdict fp_witness(const CategoryRef& c, ObjectId a,
                     const std::vector<std::pair<Functor, Cone>>& diagrams) {
  FpVerdict out;
  out.object = a;
  out.verdict = Verdict::ok("finitely presentable " + c->object_name(a));
  out.verdict.caveats.push_back("witness over supplied diagrams");
  if (diagrams.empty()) {
    out.vacuous = true;
    out.verdict.caveats.push_back("no diagrams supplied; the verdict is vacuous");
  }
  for (const auto& [d, colim] : diagrams) {
    Verdict v = check_hom_preserves_filtered_colimit(d, a, colim);
    if (!v && out.verdict.pass) {
      out.verdict.pass = false;
      out.verdict.law = "preserves-filtered-colimit";
      out.verdict.witness = {d.name};
      out.verdict.detail = v.detail;
    }
    out.entries.push_back({d.name, colim, std::move(v)});
  }
  return out;
}

namespace {

// Canonical code of a partial order: the lexicographically least relation
// matrix over all relabelings.
std::vector<bool> poset_code(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) code.push_back(leq[perm[a]][perm[b]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CategoryRef idempotent_shape() {
  CategoryBuilder b("Idem");
  const ObjectId o = b.add_object("0");
  const ArrowId e = b.add_arrow("e", o, o);
  b.set_compose(e, e, e);
  return b.build_ref();
}

CategoryRef coequalized_pair_shape() {
  CategoryBuilder b("ParCoeq");
  const ObjectId x = b.add_object("0");
  const ObjectId y = b.add_object("1");
  const ObjectId z = b.add_object("2");
  const ArrowId f = b.add_arrow("f", x, y);
  const ArrowId g = b.add_arrow("g", x, y);
  const ArrowId h = b.add_arrow("h", y, z);
  const ArrowId k = b.add_arrow("k", x, z);
  b.set_compose(h, f, k);
  b.set_compose(h, g, k);
  return b.build_ref();
}

}  // namespace

std::vector<CategoryRef> shape_corpus(int max_objects, int max_arrows) {
  std::vector<CategoryRef> out;
  for (int n = 1; n <= max_objects; ++n) {
    std::vector<std::pair<int, int>> offdiag;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) offdiag.emplace_back(a, b);
    std::set<std::vector<bool>> seen;
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
    int index = 0;
    for (std::uint32_t mask = 0; mask < (1u << offdiag.size()); ++mask) {
      std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a) leq[a][a] = true;
      for (std::size_t bit = 0; bit < offdiag.size(); ++bit)
        if (mask & (1u << bit)) leq[offdiag[bit].first][offdiag[bit].second] = true;
      bool order = true;
      for (int a = 0; a < n && order; ++a)
        for (int b = 0; b < n && order; ++b) {
          if (a != b && leq[a][b] && leq[b][a]) order = false;
          for (int c = 0; c < n && order; ++c)
            if (leq[a][b] && leq[b][c] && !leq[a][c]) order = false;
        }
      if (!order || !seen.insert(poset_code(leq)).second) continue;
      int arrows = 0;
      for (const auto& row : leq) arrows += static_cast<int>(std::count(row.begin(), row.end(), true));
      if (arrows > max_arrows) continue;
      out.push_back(poset_category("P" + std::to_string(n) + "_" + std::to_string(index++), names, leq));
    }
  }
  for (const auto& shape : {idempotent_shape(), coequalized_pair_shape()}) {
    if (shape->num_objects() <= max_objects && shape->num_arrows() <= max_arrows) out.push_back(shape);
  }
  return out;
}

}  // namespace guk
