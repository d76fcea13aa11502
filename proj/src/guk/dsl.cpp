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

#include "guk/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace guk {

DslError::DslError(ErrorKind kind, int line, int column, const std::string& message,
                   std::vector<std::string> expected, std::string found)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::string item_kind(const Item& item) {
  static const char* const names[] = {"category", "presentation", "functor", "setfunctor", "nat",
                                      "space",    "site",         "clan",    "bundle"};
  if (const auto* s = std::get_if<SetFunctorItem>(&item); s && s->presheaf) return "presheaf";
  return names[item.index()];
}

// ---------------------------------------------------------------------------

void Document::add(const std::string& name, Item item) {
  if (index_.count(name)) throw Error(ErrorKind::NameClash, "duplicate item " + name);
  index_[name] = items_.size();
  items_.emplace_back(name, std::move(item));
}

const Item* Document::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &items_[it->second].second;
}

const Item& Document::item(const std::string& name) const {
  if (const Item* i = find(name)) return *i;
  throw Error(ErrorKind::UnknownId, "no item named " + name);
}

namespace {

[[noreturn]] void wrong_kind(const std::string& name, const Item& item, const std::string& wanted) {
  throw Error(ErrorKind::InvalidArgument, name + " is a " + item_kind(item) + ", not a " + wanted);
}

}  // namespace

CategoryRef Document::category(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* c = std::get_if<CategoryItem>(&i)) return c->category;
  if (const auto* p = std::get_if<PresentationItem>(&i)) return p->category;
  wrong_kind(name, i, "category");
}

CategoryRef Document::base_category(const std::string& name) const {
  const Item& i = item(name);
  if (std::holds_alternative<SiteItem>(i) || std::holds_alternative<SpaceItem>(i)) return site(name).base();
  return category(name);
}

const Functor& Document::functor(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* f = std::get_if<FunctorItem>(&i)) return f->functor;
  wrong_kind(name, i, "functor");
}

const SetFunctorItem& Document::set_functor(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* f = std::get_if<SetFunctorItem>(&i)) return *f;
  wrong_kind(name, i, "setfunctor");
}

const FiniteSpace& Document::space(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* s = std::get_if<SpaceItem>(&i)) return s->space;
  wrong_kind(name, i, "space");
}

const Site& Document::site(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* s = std::get_if<SiteItem>(&i)) return *s->site;
  if (const auto* s = std::get_if<SpaceItem>(&i)) return *s->site;
  wrong_kind(name, i, "site");
}

const Clan& Document::clan(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* k = std::get_if<ClanItem>(&i)) return k->clan;
  wrong_kind(name, i, "clan");
}

const SheafOfModels& Document::bundle(const std::string& name) const {
  const Item& i = item(name);
  if (const auto* b = std::get_if<BundleItem>(&i)) return b->bundle;
  wrong_kind(name, i, "bundle");
}

// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, String, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::String: return "string \"" + t.text + "\"";
    case Tok::Symbol: return "'" + t.text + "'";
    case Tok::End: return "end of input";
  }
  return {};
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int l = line, col = column;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      if (word == "from" && text.compare(j, 6, "-space") == 0) {
        word = "from-space";
        j += 6;
      }
      advance(j - i);
      out.push_back({Tok::Ident, word, l, col});
      continue;
    }
    if (c == '"') {
      std::string s;
      advance(1);
      while (true) {
        if (i >= text.size() || text[i] == '\n')
          throw DslError(ErrorKind::ParseError, l, col, "unterminated string", {"'\"'"});
        if (text[i] == '"') break;
        if (text[i] == '\\' && i + 1 < text.size()) {
          advance(1);
          s += text[i] == 'n' ? '\n' : text[i];
          advance(1);
          continue;
        }
        s += text[i];
        advance(1);
      }
      advance(1);
      out.push_back({Tok::String, s, l, col});
      continue;
    }
    if ((c == '-' || c == '=') && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Symbol, std::string{c, '>'}, l, col});
      advance(2);
      continue;
    }
    if (std::string_view("{}();:,.=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), l, col});
      advance(1);
      continue;
    }
    throw DslError(ErrorKind::ParseError, l, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

std::string quote_list(const std::vector<std::string>& items) {
  std::vector<std::string> q;
  for (const auto& s : items) q.push_back(s == "identifier" || s == "label" ? s : "'" + s + "'");
  return join(q, " ");
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Document run() {
    while (peek().kind != Tok::End) item();
    return std::move(doc_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Document doc_;
  std::map<std::string, CategoryRef> opposites_;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void expected(std::vector<std::string> what) const {
    const Token& t = peek();
    const std::string message = "expected " + quote_list(what) + ", found " + describe(t);
    throw DslError(ErrorKind::ParseError, t.line, t.column, message, std::move(what),
                   t.kind == Tok::End ? "" : t.text);
  }

  bool at(const std::string& sym) const {
    return (peek().kind == Tok::Symbol || peek().kind == Tok::Ident) && peek().text == sym;
  }
  bool accept(const std::string& sym) {
    if (!at(sym)) return false;
    next();
    return true;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) expected({sym});
  }
  const Token& ident() {
    if (peek().kind != Tok::Ident) expected({"identifier"});
    return next();
  }
  const Token& label() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::String) expected({"label"});
    return next();
  }

  [[noreturn]] static void unresolved(const Token& t, const std::string& what) {
    throw DslError(ErrorKind::UnresolvedReference, t.line, t.column, "unresolved " + what + " '" + t.text + "'", {},
                   t.text);
  }
  [[noreturn]] static void clash(const Token& t, const std::string& what) {
    throw DslError(ErrorKind::NameClash, t.line, t.column, "duplicate " + what + " '" + t.text + "'");
  }
  [[noreturn]] static void invalid(const Token& at, const Verdict& v) {
    std::string msg = v.check + " violates " + v.law;
    if (!v.witness.empty()) msg += " at (" + join(v.witness, " ") + ")";
    if (!v.detail.empty()) msg += ": " + v.detail;
    DslError e(ErrorKind::ValidationFailed, at.line, at.column, msg);
    e.inner = v;
    throw e;
  }
  [[noreturn]] static void invalid(const Token& at, const std::string& check, const std::string& law,
                                   const std::string& detail) {
    invalid(at, Verdict::fail(check, law, {}, detail));
  }

  // Lookup of an earlier item, reporting failures at the reference.
  template <class F>
  auto resolve(const Token& t, F&& get) -> decltype(get(t.text)) {
    if (!doc_.find(t.text)) unresolved(t, "item");
    try {
      return get(t.text);
    } catch (const Error& e) {
      throw DslError(ErrorKind::UnresolvedReference, t.line, t.column, e.what(), {}, t.text);
    }
  }

  static ObjectId object_in(const FinCategory& c, const Token& t) {
    if (auto a = c.find_object(t.text)) return *a;
    unresolved(t, "object");
  }
  static ArrowId arrow_in(const FinCategory& c, const Token& t) {
    if (auto f = c.find_arrow(t.text)) return *f;
    unresolved(t, "arrow");
  }
  static int element_in(const std::vector<std::string>& carrier, const Token& t) {
    auto it = std::find(carrier.begin(), carrier.end(), t.text);
    if (it == carrier.end()) unresolved(t, "element");
    return static_cast<int>(it - carrier.begin());
  }

  CategoryRef opposite_of(const std::string& name, const CategoryRef& base) {
    auto& op = opposites_[name];
    if (!op) op = opposite(base);
    return op;
  }

  void item() {
    static const std::vector<std::string> kinds{"category", "presentation", "functor", "setfunctor", "presheaf",
                                                "nat",      "space",        "site",    "clan",       "bundle"};
    if (peek().kind != Tok::Ident || std::find(kinds.begin(), kinds.end(), peek().text) == kinds.end())
      expected(kinds);
    const std::string kind = next().text;
    const Token& name = ident();
    if (doc_.find(name.text)) clash(name, "item");
    Item it = [&]() -> Item {
      if (kind == "category") return category(name);
      if (kind == "presentation") return presentation(name);
      if (kind == "functor") return functor(name);
      if (kind == "setfunctor" || kind == "presheaf") return set_functor(name, kind == "presheaf");
      if (kind == "nat") return nat(name);
      if (kind == "space") return space(name);
      if (kind == "site") return site(name);
      if (kind == "clan") return clan(name);
      return bundle(name);
    }();
    doc_.add(name.text, std::move(it));
  }

  // Statement keyword inside a block, or nullopt at the closing brace.
  std::optional<Token> keyword(const std::vector<std::string>& allowed) {
    if (accept("}")) return std::nullopt;
    if (peek().kind == Tok::Ident && std::find(allowed.begin(), allowed.end(), peek().text) != allowed.end())
      return next();
    auto what = allowed;
    what.push_back("}");
    expected(what);
  }

  struct ArrowDecl {
    Token name;
    Token src;
    Token tgt;
  };

  // `f: A -> B, g: B -> C ;`
  std::vector<ArrowDecl> arrow_decls() {
    std::vector<ArrowDecl> out;
    if (accept(";")) return out;
    do {
      Token n = ident();
      expect(":");
      Token s = ident();
      expect("->");
      Token t = ident();
      out.push_back({n, s, t});
    } while (accept(","));
    expect(";");
    return out;
  }

  std::vector<Token> idents_until_semicolon() {
    std::vector<Token> out;
    while (!accept(";")) out.push_back(ident());
    return out;
  }

  // `g . f . e`, outermost first.
  std::vector<Token> path() {
    std::vector<Token> out{ident()};
    while (accept(".")) out.push_back(ident());
    return out;
  }

  CategoryItem category(const Token& name) {
    expect("{");
    CategoryBuilder b(name.text);
    std::map<std::string, ArrowId> arrows;
    std::vector<ObjectId> src, tgt;  // of non-identity builder arrows
    auto object_of = [&](const Token& t) {
      if (auto a = b.find_object(t.text)) return *a;
      unresolved(t, "object");
    };
    auto arrow_of = [&](const Token& t) {
      auto it = arrows.find(t.text);
      if (it == arrows.end()) unresolved(t, "arrow");
      return it->second;
    };
    while (auto kw = keyword({"objects", "arrows", "compose"})) {
      expect(":");
      if (kw->text == "objects") {
        for (const Token& o : idents_until_semicolon()) {
          if (b.find_object(o.text)) clash(o, "object");
          const ObjectId a = b.add_object(o.text);
          if (!arrows.emplace("id_" + o.text, CategoryBuilder::identity_arrow(a)).second) clash(o, "arrow");
        }
      } else if (kw->text == "arrows") {
        for (const ArrowDecl& d : arrow_decls()) {
          if (arrows.count(d.name.text)) clash(d.name, "arrow");
          arrows[d.name.text] = b.add_arrow(d.name.text, object_of(d.src), object_of(d.tgt));
        }
      } else {
        const Token g = ident();
        expect(".");
        const Token f = ident();
        expect("=");
        const Token h = ident();
        expect(";");
        b.set_compose(arrow_of(g), arrow_of(f), arrow_of(h));
      }
    }
    CategoryRef c;
    try {
      c = b.build_ref();
    } catch (const Error& e) {
      invalid(name, "category " + name.text, "well-formed", e.what());
    }
    if (auto v = validate_category(*c); !v) invalid(name, v);
    return {c};
  }

  PresentationItem presentation(const Token& name) {
    expect("{");
    CategoryPresentation p;
    p.name = name.text;
    std::map<std::string, int> generators;
    auto object_of = [&](const Token& t) {
      auto it = std::find(p.objects.begin(), p.objects.end(), t.text);
      if (it == p.objects.end()) unresolved(t, "object");
      return static_cast<ObjectId>(it - p.objects.begin());
    };
    auto word = [&](const std::vector<Token>& tokens) {
      PathWord w;
      std::optional<ObjectId> identity_at;
      for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        if (auto g = generators.find(it->text); g != generators.end()) {
          w.letters.push_back(g->second);
        } else if (it->text.rfind("id_", 0) == 0 &&
                   std::count(p.objects.begin(), p.objects.end(), it->text.substr(3))) {
          identity_at = object_of(Token{Tok::Ident, it->text.substr(3), it->line, it->column + 3});
        } else {
          unresolved(*it, "arrow");
        }
      }
      if (w.letters.empty()) {
        w.source = w.target = *identity_at;
      } else {
        w.source = p.generators[w.letters.front()].src;
        w.target = p.generators[w.letters.back()].tgt;
      }
      return w;
    };
    while (auto kw = keyword({"objects", "arrows", "relations", "bound"})) {
      expect(":");
      if (kw->text == "objects") {
        for (const Token& o : idents_until_semicolon()) {
          if (std::count(p.objects.begin(), p.objects.end(), o.text)) clash(o, "object");
          p.objects.push_back(o.text);
        }
      } else if (kw->text == "arrows") {
        for (const ArrowDecl& d : arrow_decls()) {
          if (generators.count(d.name.text) || d.name.text.rfind("id_", 0) == 0) clash(d.name, "arrow");
          generators[d.name.text] = static_cast<int>(p.generators.size());
          p.generators.push_back({d.name.text, object_of(d.src), object_of(d.tgt)});
        }
      } else if (kw->text == "relations") {
        do {
          const auto lhs = path();
          expect("=");
          const auto rhs = path();
          p.relations.emplace_back(word(lhs), word(rhs));
        } while (accept(","));
        expect(";");
      } else {
        const Token& n = ident();
        if (!std::all_of(n.text.begin(), n.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            n.text.size() > 6)
          throw DslError(ErrorKind::ParseError, n.line, n.column, "expected a number, found " + describe(n),
                         {"number"}, n.text);
        p.bound = std::stoi(n.text);
        expect(";");
      }
    }
    if (auto v = validate_presentation(p); !v) invalid(name, v);
    try {
      return {p, std::make_shared<const FinCategory>(compile_presentation(p))};
    } catch (const Error& e) {
      invalid(name, "presentation " + name.text, std::string(to_string(e.kind())), e.what());
    }
  }

  FunctorItem functor(const Token& name) {
    expect(":");
    const Token dom_t = ident();
    expect("->");
    const Token cod_t = ident();
    const CategoryRef dom = resolve(dom_t, [&](const std::string& n) { return doc_.base_category(n); });
    const CategoryRef cod = resolve(cod_t, [&](const std::string& n) { return doc_.base_category(n); });
    Functor f{name.text, dom, cod, std::vector<ObjectId>(dom->num_objects(), kNone),
              std::vector<ArrowId>(dom->num_arrows(), kNone)};
    expect("{");
    while (auto kw = keyword({"object", "arrow"})) {
      const Token a = ident();
      expect("=>");
      const Token b = ident();
      expect(";");
      if (kw->text == "object")
        f.omap[object_in(*dom, a)] = object_in(*cod, b);
      else
        f.mmap[arrow_in(*dom, a)] = arrow_in(*cod, b);
    }
    for (ObjectId a = 0; a < dom->num_objects(); ++a) {
      if (f.omap[a] == kNone)
        invalid(name, "functor " + name.text, "total", "no image for object " + dom->object_name(a));
      if (f.mmap[dom->identity(a)] == kNone) f.mmap[dom->identity(a)] = cod->identity(f.omap[a]);
    }
    for (ArrowId u = 0; u < dom->num_arrows(); ++u)
      if (f.mmap[u] == kNone)
        invalid(name, "functor " + name.text, "total", "no image for arrow " + dom->arrow_name(u));
    if (auto v = validate_functor(f); !v) invalid(name, v);
    return {f, dom_t.text, cod_t.text};
  }

  SetFunctorItem set_functor(const Token& name, bool presheaf) {
    expect("on");
    const Token on = ident();
    CategoryRef dom = resolve(on, [&](const std::string& n) {
      return presheaf ? doc_.base_category(n) : doc_.category(n);
    });
    if (presheaf) dom = opposite_of(on.text, dom);
    const FinCategory& c = *dom;
    SetFunctor f{name.text, dom, std::vector<std::vector<std::string>>(c.num_objects()),
                 std::vector<std::vector<int>>(c.num_arrows())};
    std::vector<bool> has_carrier(c.num_objects(), false);
    std::map<ArrowId, std::map<int, int>> maps;
    expect("{");
    while (auto kw = keyword({"at", "map"})) {
      if (kw->text == "at") {
        const Token a = ident();
        const ObjectId x = object_in(c, a);
        if (has_carrier[x]) clash(a, "carrier");
        has_carrier[x] = true;
        expect("=");
        expect("{");
        while (!accept("}")) {
          const Token& l = label();
          if (std::count(f.carriers[x].begin(), f.carriers[x].end(), l.text)) clash(l, "element");
          f.carriers[x].push_back(l.text);
        }
        expect(";");
      } else {
        const Token u_t = ident();
        const ArrowId u = arrow_in(c, u_t);
        if (!has_carrier[c.src(u)] || !has_carrier[c.tgt(u)])
          throw DslError(ErrorKind::UnresolvedReference, u_t.line, u_t.column,
                         "carriers of the endpoints of " + u_t.text + " must be declared first");
        expect(":");
        auto& table = maps[u];
        if (!accept(";")) {
          do {
            const Token& x = label();
            expect("->");
            const Token& y = label();
            const int from = element_in(f.carriers[c.src(u)], x);
            if (table.count(from)) clash(x, "map entry");
            table[from] = element_in(f.carriers[c.tgt(u)], y);
          } while (accept(","));
          expect(";");
        }
      }
    }
    const std::string check = std::string(presheaf ? "presheaf " : "set functor ") + name.text;
    for (ObjectId a = 0; a < c.num_objects(); ++a)
      if (!has_carrier[a]) invalid(name, check, "total", "no carrier at " + c.object_name(a));
    for (ArrowId u = 0; u < c.num_arrows(); ++u) {
      auto it = maps.find(u);
      if (it == maps.end() && c.is_identity(u)) {
        for (int x = 0; x < f.size(c.src(u)); ++x) f.action[u].push_back(x);
        continue;
      }
      for (int x = 0; x < f.size(c.src(u)); ++x) {
        if (it == maps.end() || !it->second.count(x))
          invalid(name, check, "total", "no image for " + f.carriers[c.src(u)][x] + " under " + c.arrow_name(u));
        f.action[u].push_back(it->second.at(x));
      }
    }
    if (auto v = validate_set_functor(f); !v) invalid(name, v);
    return {f, on.text, presheaf};
  }

  NatItem nat(const Token& name) {
    expect(":");
    const Token s_t = ident();
    expect("=>");
    const Token t_t = ident();
    NatItem out;
    out.source = s_t.text;
    out.target = t_t.text;
    const Item& s_item = resolve(s_t, [&](const std::string& n) -> const Item& { return doc_.item(n); });
    out.between_set_functors = !std::holds_alternative<FunctorItem>(s_item);
    expect("{");
    if (out.between_set_functors) {
      const SetFunctor& s = resolve(s_t, [&](const std::string& n) -> const SetFunctor& { return doc_.set_functor(n).functor; });
      const SetFunctor& t = resolve(t_t, [&](const std::string& n) -> const SetFunctor& { return doc_.set_functor(n).functor; });
      if (!same_category(s.dom, t.dom))
        invalid(name, "nat " + name.text, "parallel", s.name + " and " + t.name + " have different domains");
      const FinCategory& c = *s.dom;
      std::vector<std::map<int, int>> comps(c.num_objects());
      while (keyword({"at"})) {
        const Token a = ident();
        const ObjectId x = object_in(c, a);
        expect(":");
        if (!accept(";")) {
          do {
            const Token& l = label();
            expect("->");
            const Token& r = label();
            const int from = element_in(s.carriers[x], l);
            if (comps[x].count(from)) clash(l, "component entry");
            comps[x][from] = element_in(t.carriers[x], r);
          } while (accept(","));
          expect(";");
        }
      }
      for (ObjectId a = 0; a < c.num_objects(); ++a) {
        out.components.emplace_back();
        for (int x = 0; x < s.size(a); ++x) {
          if (!comps[a].count(x))
            invalid(name, "nat " + name.text, "total", "no image for " + s.carriers[a][x] + " at " + c.object_name(a));
          out.components.back().push_back(comps[a][x]);
        }
      }
      if (auto v = validate_set_nat(s, t, out.components); !v) invalid(name, v);
      out.set_source = s;
      out.set_target = t;
    } else {
      const Functor& s = resolve(s_t, [&](const std::string& n) -> const Functor& { return doc_.functor(n); });
      const Functor& t = resolve(t_t, [&](const std::string& n) -> const Functor& { return doc_.functor(n); });
      out.transform = NatTransform{name.text, s, t, std::vector<ArrowId>(s.dom->num_objects(), kNone)};
      while (keyword({"at"})) {
        const Token a = ident();
        expect("=");
        const Token f = ident();
        expect(";");
        out.transform.components[object_in(*s.dom, a)] = arrow_in(*s.cod, f);
      }
      for (ObjectId a = 0; a < s.dom->num_objects(); ++a)
        if (out.transform.components[a] == kNone)
          invalid(name, "nat " + name.text, "total", "no component at " + s.dom->object_name(a));
      if (auto v = validate_nat(out.transform); !v) invalid(name, v);
    }
    return out;
  }

  SpaceItem space(const Token& name) {
    expect("{");
    FiniteSpace sp;
    sp.name = name.text;
    while (auto kw = keyword({"points", "opens"})) {
      expect(":");
      if (kw->text == "points") {
        for (const Token& p : idents_until_semicolon()) {
          if (std::count(sp.points.begin(), sp.points.end(), p.text)) clash(p, "point");
          sp.points.push_back(p.text);
        }
      } else {
        do {
          expect("{");
          std::vector<int> open;
          while (!accept("}")) {
            const Token& p = ident();
            auto it = std::find(sp.points.begin(), sp.points.end(), p.text);
            if (it == sp.points.end()) unresolved(p, "point");
            const int idx = static_cast<int>(it - sp.points.begin());
            if (std::count(open.begin(), open.end(), idx)) clash(p, "point");
            open.push_back(idx);
          }
          std::sort(open.begin(), open.end());
          sp.opens.push_back(std::move(open));
        } while (accept(","));
        expect(";");
      }
    }
    try {
      validate_space(sp);
      return {sp, std::make_shared<const Site>(open_set_site(sp))};
    } catch (const Error& e) {
      invalid(name, "space " + name.text, std::string(to_string(e.kind())), e.what());
    }
  }

  SiteItem site(const Token& name) {
    if (accept("from-space")) {
      const Token sp_t = ident();
      const Site& base = resolve(sp_t, [&](const std::string& n) -> const Site& {
        doc_.space(n);
        return doc_.site(n);
      });
      accept(";");
      std::vector<std::vector<Family>> cov;
      for (ObjectId a = 0; a < base.base()->num_objects(); ++a) cov.push_back(base.covers(a));
      return {std::make_shared<const Site>(name.text, base.base(), std::move(cov)), sp_t.text, true};
    }
    if (!at("on")) expected({"on", "from-space"});
    next();
    const Token on = ident();
    const CategoryRef c = resolve(on, [&](const std::string& n) { return doc_.category(n); });
    std::vector<std::vector<Family>> cov(c->num_objects());
    expect("{");
    while (keyword({"cover"})) {
      const Token a = ident();
      const ObjectId x = object_in(*c, a);
      expect("by");
      expect("(");
      Family family;
      while (!accept(")")) family.push_back(arrow_in(*c, ident()));
      expect(";");
      cov[x].push_back(std::move(family));
    }
    try {
      return {std::make_shared<const Site>(name.text, c, std::move(cov)), on.text, false};
    } catch (const Error& e) {
      invalid(name, "site " + name.text, "well-formed", e.what());
    }
  }

  ClanItem clan(const Token& name) {
    expect("on");
    const Token on = ident();
    const CategoryRef c = resolve(on, [&](const std::string& n) { return doc_.category(n); });
    Clan k{name.text, c, kNone, {}};
    expect("{");
    while (auto kw = keyword({"terminal", "display"})) {
      expect(":");
      if (kw->text == "terminal") {
        k.terminal = object_in(*c, ident());
        expect(";");
      } else {
        for (const Token& f : idents_until_semicolon()) k.display.push_back(arrow_in(*c, f));
      }
    }
    std::sort(k.display.begin(), k.display.end());
    k.display.erase(std::unique(k.display.begin(), k.display.end()), k.display.end());
    if (k.terminal == kNone) invalid(name, "clan " + name.text, "terminal", "no terminal object designated");
    try {
      for (ObjectId a = 0; a < c->num_objects(); ++a) terminal_projection(*c, k.terminal, a);
    } catch (const Error& e) {
      invalid(name, "clan " + name.text, "terminal", e.what());
    }
    return {k, on.text};
  }

  BundleItem bundle(const Token& name) {
    expect(":");
    const Token idx_t = ident();
    expect("over");
    const Token over_t = ident();
    const CategoryRef index = resolve(idx_t, [&](const std::string& n) { return doc_.category(n); });
    const CategoryRef base = resolve(over_t, [&](const std::string& n) { return doc_.base_category(n); });
    BundleItem out{SheafOfModels{name.text, index, base, opposite_of(over_t.text, base), {}, {}},
                   over_t.text,
                   std::vector<std::string>(index->num_objects()),
                   std::vector<std::string>(index->num_arrows())};
    std::vector<Token> map_tokens(index->num_arrows(), name);
    expect("{");
    while (auto kw = keyword({"at", "map"})) {
      const Token a = ident();
      expect("=");
      const Token v = ident();
      expect(";");
      if (kw->text == "at") {
        const ObjectId x = object_in(*index, a);
        if (!out.at[x].empty()) clash(a, "presheaf assignment");
        resolve(v, [&](const std::string& n) -> const SetFunctorItem& { return doc_.set_functor(n); });
        out.at[x] = v.text;
      } else {
        const ArrowId u = arrow_in(*index, a);
        if (!out.maps[u].empty()) clash(a, "map assignment");
        const Item& nat_item = resolve(v, [&](const std::string& n) -> const Item& { return doc_.item(n); });
        if (!std::holds_alternative<NatItem>(nat_item) || !std::get<NatItem>(nat_item).between_set_functors)
          throw DslError(ErrorKind::UnresolvedReference, v.line, v.column, v.text + " is not a transformation of presheaves");
        out.maps[u] = v.text;
      }
    }
    SheafOfModels& f = out.bundle;
    const std::string check = "bundle " + name.text;
    for (ObjectId x = 0; x < index->num_objects(); ++x) {
      if (out.at[x].empty()) invalid(name, check, "total", "no presheaf at " + index->object_name(x));
      f.at.push_back(doc_.set_functor(out.at[x]).functor);
    }
    for (ArrowId u = 0; u < index->num_arrows(); ++u) {
      if (!out.maps[u].empty()) {
        f.maps.push_back(std::get<NatItem>(doc_.item(out.maps[u])).components);
      } else if (index->is_identity(u)) {
        f.maps.push_back(identity_components(f.at[index->src(u)]));
      } else {
        invalid(name, check, "total", "no map for " + index->arrow_name(u));
      }
    }
    if (auto v = validate_bundle(f); !v) invalid(name, v);
    return out;
  }
};

// --- rendering -------------------------------------------------------------

bool is_identifier(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), ident_char);
}

std::string label_text(const std::string& s) {
  if (is_identifier(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string word_text(const CategoryPresentation& p, const PathWord& w) {
  if (w.letters.empty()) return "id_" + p.objects[w.source];
  std::vector<std::string> parts;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) parts.push_back(p.generators[*it].name);
  return join(parts, " . ");
}

struct Renderer {
  std::ostringstream out;

  void render(const std::string& name, const CategoryItem& item) {
    const FinCategory& c = *item.category;
    out << "category " << name << " {\n";
    if (c.num_objects()) out << "  objects: " << join(c.object_names(), " ") << ";\n";
    std::vector<std::string> arrows;
    for (ArrowId f = 0; f < c.num_arrows(); ++f)
      if (!c.is_identity(f))
        arrows.push_back(c.arrow_name(f) + ": " + c.object_name(c.src(f)) + " -> " + c.object_name(c.tgt(f)));
    if (!arrows.empty()) out << "  arrows: " << join(arrows, ", ") << ";\n";
    for (ArrowId g = 0; g < c.num_arrows(); ++g)
      for (ArrowId f = 0; f < c.num_arrows(); ++f) {
        if (c.is_identity(g) || c.is_identity(f) || c.compose(g, f) == kNone) continue;
        out << "  compose: " << c.arrow_name(g) << " . " << c.arrow_name(f) << " = "
            << c.arrow_name(c.compose(g, f)) << ";\n";
      }
    out << "}\n";
  }

  void render(const std::string& name, const PresentationItem& item) {
    const CategoryPresentation& p = item.presentation;
    out << "presentation " << name << " {\n";
    if (!p.objects.empty()) out << "  objects: " << join(p.objects, " ") << ";\n";
    std::vector<std::string> arrows;
    for (const auto& g : p.generators)
      arrows.push_back(g.name + ": " + p.objects[g.src] + " -> " + p.objects[g.tgt]);
    if (!arrows.empty()) out << "  arrows: " << join(arrows, ", ") << ";\n";
    for (const auto& [l, r] : p.relations)
      out << "  relations: " << word_text(p, l) << " = " << word_text(p, r) << ";\n";
    out << "  bound: " << p.bound << ";\n}\n";
  }

  void render(const std::string& name, const FunctorItem& item) {
    const Functor& f = item.functor;
    const FinCategory& c = *f.dom;
    const FinCategory& d = *f.cod;
    out << "functor " << name << " : " << item.dom << " -> " << item.cod << " {\n";
    for (ObjectId a = 0; a < c.num_objects(); ++a)
      out << "  object " << c.object_name(a) << " => " << d.object_name(f.omap[a]) << ";\n";
    for (ArrowId u = 0; u < c.num_arrows(); ++u)
      if (!c.is_identity(u)) out << "  arrow " << c.arrow_name(u) << " => " << d.arrow_name(f.mmap[u]) << ";\n";
    out << "}\n";
  }

  void render(const std::string& name, const SetFunctorItem& item) {
    const SetFunctor& f = item.functor;
    const FinCategory& c = *f.dom;
    out << (item.presheaf ? "presheaf " : "setfunctor ") << name << " on " << item.on << " {\n";
    for (ObjectId a = 0; a < c.num_objects(); ++a) {
      std::vector<std::string> labels;
      for (const auto& l : f.carriers[a]) labels.push_back(label_text(l));
      out << "  at " << c.object_name(a) << " = {" << join(labels, " ") << "};\n";
    }
    for (ArrowId u = 0; u < c.num_arrows(); ++u) {
      if (c.is_identity(u)) continue;
      std::vector<std::string> entries;
      for (int x = 0; x < f.size(c.src(u)); ++x)
        entries.push_back(label_text(f.carriers[c.src(u)][x]) + " -> " +
                          label_text(f.carriers[c.tgt(u)][f.action[u][x]]));
      out << "  map " << c.arrow_name(u) << " :" << (entries.empty() ? "" : " " + join(entries, ", ")) << ";\n";
    }
    out << "}\n";
  }

  void render(const std::string& name, const NatItem& item) {
    out << "nat " << name << " : " << item.source << " => " << item.target << " {\n";
    if (item.between_set_functors) {
      const SetFunctor& s = item.set_source;
      const SetFunctor& t = item.set_target;
      const FinCategory& c = *s.dom;
      for (ObjectId a = 0; a < c.num_objects(); ++a) {
        std::vector<std::string> entries;
        for (int x = 0; x < s.size(a); ++x)
          entries.push_back(label_text(s.carriers[a][x]) + " -> " + label_text(t.carriers[a][item.components[a][x]]));
        out << "  at " << c.object_name(a) << " :" << (entries.empty() ? "" : " " + join(entries, ", ")) << ";\n";
      }
    } else {
      const Functor& s = item.transform.source;
      for (ObjectId a = 0; a < s.dom->num_objects(); ++a)
        out << "  at " << s.dom->object_name(a) << " = " << s.cod->arrow_name(item.transform.components[a])
            << ";\n";
    }
    out << "}\n";
  }
  void render(const std::string& name, const SpaceItem& item) {
    const FiniteSpace& sp = item.space;
    out << "space " << name << " {\n";
    if (!sp.points.empty()) out << "  points: " << join(sp.points, " ") << ";\n";
    std::vector<std::string> opens;
    for (const auto& u : sp.opens) {
      std::vector<std::string> pts;
      for (int p : u) pts.push_back(sp.points[p]);
      opens.push_back("{" + join(pts, " ") + "}");
    }
    out << "  opens: " << join(opens, ", ") << ";\n}\n";
  }

  void render(const std::string& name, const SiteItem& item) {
    if (item.from_space) {
      out << "site " << name << " from-space " << item.on << "\n";
      return;
    }
    const Site& s = *item.site;
    const FinCategory& c = *s.base();
    out << "site " << name << " on " << item.on << " {\n";
    for (ObjectId a = 0; a < c.num_objects(); ++a)
      for (const auto& fam : s.covers(a))
        out << "  cover " << c.object_name(a) << " by " << family_label(c, fam) << ";\n";
    out << "}\n";
  }

  void render(const std::string& name, const ClanItem& item) {
    const Clan& k = item.clan;
    out << "clan " << name << " on " << item.on << " {\n";
    out << "  terminal: " << k.base->object_name(k.terminal) << ";\n";
    out << "  display: " << join(arrow_names(*k.base, k.display), " ") << ";\n}\n";
  }

  void render(const std::string& name, const BundleItem& item) {
    const FinCategory& c = *item.bundle.index;
    out << "bundle " << name << " : " << c.name() << " over " << item.over << " {\n";
    for (ObjectId a = 0; a < c.num_objects(); ++a) out << "  at " << c.object_name(a) << " = " << item.at[a] << ";\n";
    for (ArrowId u = 0; u < c.num_arrows(); ++u)
      if (!item.maps[u].empty()) out << "  map " << c.arrow_name(u) << " = " << item.maps[u] << ";\n";
    out << "}\n";
  }
};

std::string render_one(const std::string& name, const Item& item) {
  Renderer r;
  std::visit([&](const auto& i) { r.render(name, i); }, item);
  return r.out.str();
}

}  // namespace

Document parse(const std::string& text) { return Parser(text).run(); }

std::string render_item(const std::string& name, const Item& item) { return render_one(name, item); }

std::string render(const Document& doc) {
  std::string out;
  for (const auto& [name, item] : doc.items()) {
    if (!out.empty()) out += "\n";
    out += render_one(name, item);
  }
  return out;
}

}  // namespace guk
