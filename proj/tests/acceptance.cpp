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

// Runs the ten acceptance criteria and prints one line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "golden_runner.hpp"
#include "guk/dsl.hpp"
#include "guk/clans.hpp"
#include "guk/filtered.hpp"
#include "guk/fixtures.hpp"
#include "guk/models.hpp"
#include "oracles.hpp"

using namespace guk;

namespace {

// Collects the first few failure notes of a criterion.
struct Log {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

CategoryRef named(const std::string& name) {
  for (const auto& c : corpus_categories())
    if (c->name() == name) return c;
  throw Error(ErrorKind::UnknownId, name);
}

const Document& corpus_document() {
  static const Document doc = parse(golden::read_file(std::string(GUK_TEST_ROOT) + "/data/corpus.guk"));
  return doc;
}

// Presheaf items of the document over the given space.
std::vector<SetFunctor> document_presheaves(const std::string& space) {
  std::vector<SetFunctor> out;
  for (const auto& [name, item] : corpus_document().items())
    if (const auto* p = std::get_if<SetFunctorItem>(&item); p && p->presheaf && p->on == space) out.push_back(p->functor);
  return out;
}

std::vector<SetFunctor> presheaves(const CategoryRef& c, int max_size) {
  std::vector<SetFunctor> out;
  enumerate_set_functors(opposite(c), max_size, [&](const SetFunctor& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

void models(Log& log) {
  const auto one = enumerate_lex_models(terminal_category(), 3);
  log.check(one.models.size() == 1, "terminal category: " + std::to_string(one.models.size()) + " models");
  for (int max = 1; max <= 3; ++max) {
    const auto two = enumerate_lex_models(arrow_category(), max);
    log.check(two.models.size() == 2, "arrow category at " + std::to_string(max) + ": " +
                                          std::to_string(two.models.size()) + " models");
    for (const auto& m : two.models) log.check(m.size(1) == 1 && m.size(0) <= 1, "unexpected model shape");
    log.check(oracle::count_lex_models(arrow_category(), max) == 2, "oracle disagrees at " + std::to_string(max));
  }
  log.check(oracle::count_lex_models(terminal_category(), 3) == 1, "oracle disagrees on the terminal category");
}

void yoneda_lemma(Log& log) {
  std::size_t instances = 0;
  for (const auto& c : corpus_categories()) {
    if (c->num_arrows() > 6) continue;
    const auto ps = presheaves(c, 3);
    for (ObjectId a = 0; a < c->num_objects(); ++a) {
      const SetFunctor y = yoneda(c, a);
      for (const SetFunctor& p : ps) {
        const std::size_t n = nat_transforms_between(y, p).size();
        log.check(n == static_cast<std::size_t>(p.size(a)), c->name() + ": |Nat(y, P)| != |P(A)|");
        log.check(n == oracle::count_nats(y, p), c->name() + ": enumeration disagrees with brute force");
        ++instances;
      }
    }
  }
  log.check(instances > 1000, "too few instances");
}

void limits(Log& log) {
  std::mt19937 rng(20261016);
  std::vector<CategoryRef> shapes = shape_corpus(3, 8);
  for (const auto& c : corpus_categories())
    if (c->num_arrows() <= 5) shapes.push_back(c);
  std::vector<std::vector<SetFunctor>> pools;
  for (const auto& s : shapes) pools.push_back(oracle::all_set_functors(s, 2));
  int drawn = 0, filtered = 0;
  while (drawn < 200) {
    const std::size_t k = rng() % pools.size();
    if (pools[k].empty()) continue;
    const SetFunctor& d = pools[k][rng() % pools[k].size()];
    ++drawn;
    const SetCone l = set_limit(d);
    log.check(l.tuples == oracle::limit_tuples(d), shapes[k]->name() + ": limit differs from tuple filter");
    const SetCone c = set_colimit(d);
    const auto classes = oracle::colimit_classes(d);
    log.check(static_cast<int>(c.apex.size()) == oracle::class_count(classes) && oracle::same_partition(c.legs, classes),
              shapes[k]->name() + ": colimit differs from congruence closure");
    if (is_filtered(shapes[k]).verdict.pass) {
      ++filtered;
      const SetCone f = filtered_colimit(d);
      log.check(f.apex == c.apex && f.legs == c.legs, shapes[k]->name() + ": filtered colimit differs");
    }
  }
  log.check(filtered > 20, "too few filtered diagrams drawn");
}

void sheaves(Log& log) {
  const FiniteSpace disc = discrete2_space();
  const Site d = open_set_site(disc);
  const SetFunctor fun = function_presheaf(disc, d, {"0", "1"}, "Fun");
  const SetFunctor c2 = constant_presheaf(disc, d, {"0", "1"}, "Const2");
  const SetFunctor big = constant_everywhere(d, {"0", "1"}, "Big");
  log.check(check_sheaf(fun, d).kind == SheafKind::Sheaf, "function presheaf is not a sheaf");
  log.check(check_sheaf(c2, d).kind == SheafKind::SeparatedOnly, "constant presheaf is not separated-only");
  log.check(check_sheaf(big, d).kind == SheafKind::Neither, "presheaf with two elements over the empty open");
  for (const SetFunctor* p : {&fun, &c2, &big})
    log.check(check_sheaf(*p, d).kind == oracle::gluing_kind(*p, d), p->name + ": gluing search disagrees");
  const Site& doc_site = corpus_document().site("Disc2");
  const auto fixtures = document_presheaves("Disc2");
  log.check(fixtures.size() == 5, "document presheaves missing");
  for (const SetFunctor& p : fixtures)
    log.check(check_sheaf(p, doc_site).kind == oracle::gluing_kind(p, doc_site), p.name + ": gluing search disagrees");
  for (const FiniteSpace& space : {point_space(), sierpinski_space()}) {
    const Site s = open_set_site(space);
    for (const SetFunctor& p : {function_presheaf(space, s, {"0", "1"}, "F"), constant_presheaf(space, s, {"0", "1"}, "K"),
                                constant_everywhere(s, {"0", "1"}, "E")})
      log.check(check_sheaf(p, s).kind == oracle::gluing_kind(p, s), space.name + ": gluing search disagrees");
  }
  for (const SetFunctor& p : oracle::all_set_functors(opposite(d.base()), 2))
    log.check(check_sheaf(p, d).kind == oracle::gluing_kind(p, d), "gluing search disagrees on an enumerated presheaf");
}

void topologies(Log& log) {
  const std::size_t expected[] = {1, 1, 4, 29};
  for (int n = 0; n <= 3; ++n) {
    const auto spaces = oracle::all_topologies(n);
    log.check(spaces.size() == expected[n], "topology count on " + std::to_string(n) + " points");
    for (const auto& space : spaces) {
      const Verdict v = validate_topology(open_set_site(space));
      log.check(v.pass, space.name + ": " + v.law);
    }
  }
}

// Sheaves with carriers <= 3 on the open-set site of a space. A sheaf has
// one element over the empty open; for the discrete space also F(X) = F(a) x F(b).
std::vector<SetFunctor> small_sheaves(const FiniteSpace& space, const Site& s) {
  const FinCategory& base = *s.base();
  const ObjectId empty = base.object("O");
  const bool disc = space.name == "Disc2";
  std::vector<SetFunctor> out;
  enumerate_set_functors(
      opposite(s.base()), 3,
      [&](const std::vector<int>& n) {
        if (n[empty] != 1) return false;
        return !disc || n[base.object("O_a_b")] == n[base.object("O_a")] * n[base.object("O_b")];
      },
      [&](const SetFunctor& p) {
        if (oracle::gluing_kind(p, s) == SheafKind::Sheaf) out.push_back(p);
        return true;
      });
  return out;
}

void sheafification(Log& log) {
  std::mt19937 rng(6);
  for (const FiniteSpace& space : {discrete2_space(), sierpinski_space(), point_space()}) {
    const Site d = open_set_site(space);
    const FinCategory& base = *d.base();
    const std::vector<SetFunctor> sheaves = small_sheaves(space, d);
    log.check(sheaves.size() >= 3, space.name + ": too few sheaves");

    for (const SetFunctor& g : sheaves) {
      const Sheafification s = sheafify(g, d);
      bool bijective = true;
      for (ObjectId u = 0; u < base.num_objects(); ++u) {
        std::set<int> image(s.unit[u].begin(), s.unit[u].end());
        bijective = bijective && image.size() == s.unit[u].size() && static_cast<int>(image.size()) == s.sheaf.size(u);
      }
      log.check(bijective, space.name + ": unit of a sheaf is not bijective");
    }

    std::vector<SetFunctor> inputs = {function_presheaf(space, d, {"0", "1"}, "Fun"),
                                      constant_presheaf(space, d, {"0", "1"}, "Const2"),
                                      constant_everywhere(d, {"0", "1"}, "Big"),
                                      constant_everywhere(d, {"0"}, "Pt")};
    if (space.name == "Disc2")
      for (const SetFunctor& p : document_presheaves("Disc2")) inputs.push_back(p);
    const auto all = oracle::all_set_functors(opposite(d.base()), 2);
    for (int i = 0; i < 6; ++i) inputs.push_back(all[rng() % all.size()]);
    for (const SetFunctor& f : inputs) {
      const Sheafification s = sheafify(f, d);
      log.check(oracle::gluing_kind(s.sheaf, d) == SheafKind::Sheaf, f.name + ": result is not a sheaf");
      const Verdict v = check_sheafification_universal(f, s, sheaves);
      log.check(v.pass, f.name + ": universal property fails: " + v.detail);
      for (const SetFunctor& g : sheaves)
        log.check(oracle::count_nats(s.sheaf, g) == oracle::count_nats(f, g), f.name + ": Nat counts differ");
    }
  }
}

void global_sections_check(Log& log) {
  std::vector<SheafOfModels> bundles = bundle_corpus();
  for (const auto& [name, item] : corpus_document().items())
    if (const auto* b = std::get_if<BundleItem>(&item)) bundles.push_back(b->bundle);
  log.check(bundles.size() == 7, "bundle fixtures missing");
  for (const auto& f : bundles) {
    log.check(f.site->num_objects() <= 4, f.name + ": site too large");
    const Verdict v = gamma_is_limit_of_stalks(f);
    log.check(v.pass, f.name + ": " + v.law);
    const SetFunctor expected = oracle::gamma(f);
    log.check(oracle::isomorphic(global_sections(f), expected), f.name + ": objectwise limit differs from oracle");
    log.check(oracle::isomorphic(global_sections_by_hom(f), expected), f.name + ": hom computation differs from oracle");
  }
}

void duality(Log& log) {
  for (const auto& c : {terminal_category(), arrow_category()}) {
    const DualityReport r = duality_report(c, 3);
    log.check(r.pass(), c->name() + ": duality checks fail");
    log.check(r.epsilon_counts == r.hom_counts, c->name() + ": evaluation counts differ from hom counts");
    for (ObjectId a = 0; a < c->num_objects(); ++a)
      for (ObjectId b = 0; b < c->num_objects(); ++b)
        log.check(oracle::count_nats(evaluation_functor(r.models, a), evaluation_functor(r.models, b)) ==
                      c->hom(a, b).size(),
                  c->name() + ": brute-force evaluation count differs");
    // The representable models C(A, -): |Nat(C(A, -), C(B, -))| = |hom(B, A)|.
    for (ObjectId a = 0; a < c->num_objects(); ++a)
      for (ObjectId b = 0; b < c->num_objects(); ++b)
        log.check(oracle::count_nats(covariant_hom(c, a), covariant_hom(c, b)) == c->hom(b, a).size(),
                  c->name() + ": representable count differs from hom(B, A)");
  }
  for (const auto& c : corpus_categories()) {
    std::vector<ObjectId> all;
    for (ObjectId a = 0; a < c->num_objects(); ++a) all.push_back(a);
    log.check(check_conservative(c, all).pass, c->name() + ": all objects not conservative");
  }
  const Verdict empty = check_conservative(arrow_category(), {});
  log.check(!empty.pass && empty.witness == std::vector<std::string>{"a"}, "empty collection counterexample");
}

void clans(Log& log) {
  for (const auto& c : lex_corpus()) {
    const auto lim = oracle::find_limits(*c);
    std::vector<ArrowId> all;
    for (ArrowId f = 0; f < c->num_arrows(); ++f) all.push_back(f);
    log.check(validate_clan(Clan{"All", c, *lim.terminal, all}).pass, c->name() + ": all arrows is not a clan");
  }
  const auto two = arrow_category();
  const ArrowId id0 = two->identity(0), id1 = two->identity(1), a = two->arrow("a");
  log.check(validate_clan(Clan{"K", two, 1, {id0, id1, a}}).pass, "arrow category with a displayed");
  const Verdict v = validate_clan(Clan{"K", two, 1, {id0, id1}});
  log.check(!v.pass && v.law == "terminal-projections" && v.witness == std::vector<std::string>{"a"},
            "missing terminal projection not flagged");

  std::mt19937 rng(9);
  const auto bases = lex_corpus();
  for (int round = 0; round < 50; ++round) {
    const auto& c = bases[rng() % bases.size()];
    std::vector<ArrowId> gens;
    for (ArrowId f = 0; f < c->num_arrows(); ++f)
      if (rng() % 3 == 0) gens.push_back(f);
    const auto once = display_closure(c, gens);
    log.check(display_closure(c, once) == once, c->name() + ": closure not idempotent");
  }
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

void cli(Log& log) {
  const std::string root = GUK_TEST_ROOT;
  for (const auto& o : golden::run_all(root)) log.check(o.ok, o.name + ": " + o.detail);
  for (const auto& c : golden::load_cases(root)) {
    std::string cmd = shell_quote(GUK_CLI) + " --input " + shell_quote(root + "/data/" + c.input) + " --format " +
                      c.format + " " + shell_quote(c.command);
    for (std::size_t i = 0; i < c.names.size(); ++i)
      cmd += " " + shell_quote("--" + c.names[i] + "=" + c.values[i]);
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      log.check(false, c.name + ": cannot start the CLI");
      continue;
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    log.check(code == c.exit_code, c.name + ": CLI exit " + std::to_string(code));
    log.check(out == golden::read_file(root + "/golden/" + c.name + ".out"), c.name + ": CLI output differs");
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string title;
    std::function<void(Log&)> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"lex model counts", models, 4.0},
      {"Yoneda lemma on the corpus", yoneda_lemma, 60.0},
      {"set limits and colimits against oracles", limits, 600.0},
      {"sheaf verdicts on the discrete two-point space", sheaves, 1.0},
      {"open-set sites of all small topologies", topologies, 30.0},
      {"sheafification unit and universal property", sheafification, 600.0},
      {"global sections as limits of stalks", global_sections_check, 5.0},
      {"duality and conservativity", duality, 10.0},
      {"clan axioms and display closure", clans, 600.0},
      {"CLI golden reports and exit codes", cli, 600.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(log);
    } catch (const std::exception& e) {
      log.check(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log.check(secs < criteria[i].limit_seconds, "took longer than " + std::to_string(criteria[i].limit_seconds) + "s");
    std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (log.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].title << " (" << std::fixed << std::setprecision(2) << secs << "s)\n";
    for (const auto& note : log.notes) std::cout << "    " << note << "\n";
    failed += !log.ok;
  }
  return failed == 0 ? 0 : 1;
}
