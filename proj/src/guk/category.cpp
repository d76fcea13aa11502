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

#include "guk/category.hpp"

namespace guk {

FinCategory::FinCategory(std::string name, std::vector<std::string> objects,
                         std::vector<std::string> arrows,
                         std::vector<ObjectId> src, std::vector<ObjectId> tgt,
                         std::vector<ArrowId> identity,
                         std::vector<ArrowId> composition)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      identity_(std::move(identity)),
      composition_(std::move(composition)) {
  const std::size_t n = objects_.size();
  const std::size_t m = arrows_.size();
  if (src_.size() != m || tgt_.size() != m || identity_.size() != n ||
      composition_.size() != m * m) {
    throw Error(ErrorKind::InvalidArgument,
                "category '" + name_ + "': table sizes do not match");
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (src_[f] < 0 || tgt_[f] < 0 || static_cast<std::size_t>(src_[f]) >= n ||
        static_cast<std::size_t>(tgt_[f]) >= n) {
      throw Error(ErrorKind::InvalidArgument,
                  "category '" + name_ + "': arrow endpoint out of range");
    }
  }
  for (ArrowId id : identity_) {
    if (id < 0 || static_cast<std::size_t>(id) >= m) {
      throw Error(ErrorKind::InvalidArgument,
                  "category '" + name_ + "': identity out of range");
    }
  }
  for (ArrowId h : composition_) {
    if (h != kNone && (h < 0 || static_cast<std::size_t>(h) >= m)) {
      throw Error(ErrorKind::InvalidArgument,
                  "category '" + name_ + "': composite out of range");
    }
  }
  hom_.assign(n * n, {});
  for (std::size_t f = 0; f < m; ++f) {
    hom_[static_cast<std::size_t>(src_[f]) * n + tgt_[f]].push_back(
        static_cast<ArrowId>(f));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!object_index_.emplace(objects_[i], static_cast<ObjectId>(i)).second) {
      throw Error(ErrorKind::NameClash, "category '" + name_ +
                                            "': duplicate object '" +
                                            objects_[i] + "'");
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (!arrow_index_.emplace(arrows_[f], static_cast<ArrowId>(f)).second) {
      throw Error(ErrorKind::NameClash, "category '" + name_ +
                                            "': duplicate arrow '" +
                                            arrows_[f] + "'");
    }
  }
}

std::optional<ObjectId> FinCategory::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> FinCategory::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

ObjectId FinCategory::object(const std::string& name) const {
  if (auto a = find_object(name)) return *a;
  throw Error(ErrorKind::UnknownId,
              "unknown object '" + name + "' in category '" + name_ + "'");
}

ArrowId FinCategory::arrow(const std::string& name) const {
  if (auto f = find_arrow(name)) return *f;
  throw Error(ErrorKind::UnknownId,
              "unknown arrow '" + name + "' in category '" + name_ + "'");
}

std::optional<ArrowId> FinCategory::inverse(ArrowId f) const {
  for (ArrowId g : hom(tgt(f), src(f))) {
    if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(tgt(f)))
      return g;
  }
  return std::nullopt;
}

bool FinCategory::is_iso(ArrowId f) const { return inverse(f).has_value(); }

bool operator==(const FinCategory& a, const FinCategory& b) {
  return a.name_ == b.name_ && a.objects_ == b.objects_ &&
         a.arrows_ == b.arrows_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ &&
         a.identity_ == b.identity_ && a.composition_ == b.composition_;
}

// ---------------------------------------------------------------------------

ObjectId CategoryBuilder::add_object(const std::string& name) {
  objects_.push_back(name);
  return static_cast<ObjectId>(objects_.size() - 1);
}

ArrowId CategoryBuilder::add_arrow(const std::string& name, ObjectId src,
                                   ObjectId tgt) {
  const auto n = static_cast<ObjectId>(objects_.size());
  if (src < 0 || src >= n || tgt < 0 || tgt >= n) {
    throw Error(ErrorKind::InvalidArgument,
                "arrow '" + name + "' has an endpoint out of range");
  }
  arrows_.push_back({name, src, tgt});
  return static_cast<ArrowId>(arrows_.size() - 1);
}

void CategoryBuilder::set_compose(ArrowId g, ArrowId f, ArrowId h) {
  compose_[{g, f}] = h;
}

std::optional<ObjectId> CategoryBuilder::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<ObjectId>(i);
  return std::nullopt;
}

std::optional<ArrowId> CategoryBuilder::find_arrow(const std::string& name) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].name == name) return static_cast<ArrowId>(k);
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if ("id_" + objects_[i] == name) return identity_arrow(static_cast<ObjectId>(i));
  return std::nullopt;
}

ObjectId CategoryBuilder::arrow_src(ArrowId f) const {
  return f >= 0 ? arrows_.at(f).src : -(f + 2);
}

ObjectId CategoryBuilder::arrow_tgt(ArrowId f) const {
  return f >= 0 ? arrows_.at(f).tgt : -(f + 2);
}

ArrowId CategoryBuilder::final_id(ArrowId pending) const {
  if (pending >= 0) return static_cast<ArrowId>(objects_.size()) + pending;
  return -(pending + 2);
}

FinCategory CategoryBuilder::build() const {
  const std::size_t n = objects_.size();
  const std::size_t m = n + arrows_.size();
  std::vector<std::string> names;
  std::vector<ObjectId> src, tgt;
  std::vector<ArrowId> identity;
  names.reserve(m);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("id_" + objects_[i]);
    src.push_back(static_cast<ObjectId>(i));
    tgt.push_back(static_cast<ObjectId>(i));
    identity.push_back(static_cast<ArrowId>(i));
  }
  for (const auto& a : arrows_) {
    names.push_back(a.name);
    src.push_back(a.src);
    tgt.push_back(a.tgt);
  }
  std::vector<ArrowId> comp(m * m, kNone);
  for (std::size_t f = 0; f < m; ++f) {
    comp[static_cast<std::size_t>(identity[tgt[f]]) * m + f] = static_cast<ArrowId>(f);
    comp[f * m + identity[src[f]]] = static_cast<ArrowId>(f);
  }
  for (const auto& [key, h] : compose_) {
    const ArrowId g = final_id(key.first);
    const ArrowId f = final_id(key.second);
    comp[static_cast<std::size_t>(g) * m + f] = h == kNone ? kNone : final_id(h);
  }
  return FinCategory(name_, objects_, std::move(names), std::move(src),
                     std::move(tgt), std::move(identity), std::move(comp));
}

// ---------------------------------------------------------------------------

Verdict validate_category(const FinCategory& c) {
  const std::string check = "category " + c.name();
  auto an = [&](ArrowId f) { return c.arrow_name(f); };

  for (ObjectId a = 0; a < c.num_objects(); ++a) {
    const ArrowId id = c.identity(a);
    if (c.src(id) != a || c.tgt(id) != a) {
      return Verdict::fail(check, "identity-typing", {c.object_name(a), an(id)},
                           "identity of an object must be an endomorphism of it");
    }
  }
  for (ArrowId g = 0; g < c.num_arrows(); ++g) {
    for (ArrowId f = 0; f < c.num_arrows(); ++f) {
      charge_work();
      const bool composable = c.tgt(f) == c.src(g);
      const ArrowId h = c.compose(g, f);
      if (composable && h == kNone) {
        return Verdict::fail(check, "composition-defined", {an(g), an(f)},
                             "composable pair has no composite");
      }
      if (!composable && h != kNone) {
        return Verdict::fail(check, "composition-undefined", {an(g), an(f)},
                             "non-composable pair has a composite");
      }
      if (h == kNone) continue;
      if (c.is_identity(g) && h != f) {
        return Verdict::fail(check, "left-unit", {an(g), an(f)},
                             "id . f must equal f, found " + an(h));
      }
      if (c.is_identity(f) && h != g) {
        return Verdict::fail(check, "right-unit", {an(g), an(f)},
                             "g . id must equal g, found " + an(h));
      }
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        return Verdict::fail(check, "composite-typing", {an(g), an(f)},
                             "composite " + an(h) + " has the wrong endpoints");
      }
    }
  }
  for (ArrowId h = 0; h < c.num_arrows(); ++h) {
    for (ArrowId g = 0; g < c.num_arrows(); ++g) {
      if (c.tgt(g) != c.src(h)) continue;
      for (ArrowId f = 0; f < c.num_arrows(); ++f) {
        if (c.tgt(f) != c.src(g)) continue;
        charge_work();
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f))) {
          return Verdict::fail(check, "associativity", {an(h), an(g), an(f)},
                               "(h . g) . f differs from h . (g . f)");
        }
      }
    }
  }
  return Verdict::ok(check);
}

namespace {

std::string opposite_name(const std::string& name) {
  const std::string suffix = "_op";
  if (name.size() > suffix.size() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return name.substr(0, name.size() - suffix.size());
  }
  return name + suffix;
}

}  // namespace

FinCategory opposite(const FinCategory& c) {
  const auto m = static_cast<std::size_t>(c.num_arrows());
  std::vector<ObjectId> src(m), tgt(m);
  std::vector<ArrowId> identity(static_cast<std::size_t>(c.num_objects()));
  std::vector<ArrowId> comp(m * m, kNone);
  for (ArrowId f = 0; f < c.num_arrows(); ++f) {
    src[f] = c.tgt(f);
    tgt[f] = c.src(f);
    for (ArrowId g = 0; g < c.num_arrows(); ++g)
      comp[static_cast<std::size_t>(g) * m + f] = c.compose(f, g);
  }
  for (ObjectId a = 0; a < c.num_objects(); ++a) identity[a] = c.identity(a);
  return FinCategory(opposite_name(c.name()), c.object_names(), c.arrow_names(),
                     std::move(src), std::move(tgt), std::move(identity),
                     std::move(comp));
}

CategoryRef opposite(const CategoryRef& c) {
  return std::make_shared<const FinCategory>(opposite(*c));
}

std::vector<std::string> hom_set(const FinCategory& c, const std::string& a,
                                 const std::string& b) {
  return arrow_names(c, c.hom(c.object(a), c.object(b)));
}

CategoryRef terminal_category(const std::string& name) {
  CategoryBuilder b(name);
  b.add_object("0");
  return b.build_ref();
}

CategoryRef arrow_category(const std::string& name) {
  CategoryBuilder b(name);
  const ObjectId zero = b.add_object("0");
  const ObjectId one = b.add_object("1");
  b.add_arrow("a", zero, one);
  return b.build_ref();
}

CategoryRef discrete_category(int n, const std::string& name) {
  CategoryBuilder b(name);
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  return b.build_ref();
}

CategoryRef poset_category(const std::string& name,
                           const std::vector<std::string>& elements,
                           const std::vector<std::vector<bool>>& leq) {
  const auto n = static_cast<int>(elements.size());
  CategoryBuilder b(name);
  for (const auto& e : elements) b.add_object(e);
  // arrow[i][j] holds the builder id of i -> j.
  std::vector<std::vector<ArrowId>> arrow(n, std::vector<ArrowId>(n, kNone));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      arrow[i][j] = i == j ? CategoryBuilder::identity_arrow(i)
                           : b.add_arrow("le_" + elements[i] + "_" + elements[j], i, j);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || arrow[i][j] == kNone || arrow[j][k] == kNone)
          continue;
        if (arrow[i][k] == kNone) {
          throw Error(ErrorKind::InvalidArgument,
                      "poset '" + name + "': order relation is not transitive");
        }
        b.set_compose(arrow[j][k], arrow[i][j], arrow[i][k]);
      }
  return b.build_ref();
}

std::vector<std::string> arrow_names(const FinCategory& c,
                                     const std::vector<ArrowId>& arrows) {
  std::vector<std::string> out;
  out.reserve(arrows.size());
  for (ArrowId f : arrows) out.push_back(c.arrow_name(f));
  return out;
}

}  // namespace guk
