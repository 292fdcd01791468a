// Copyright 2026 The hogkit Authors.
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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares library output against an oracle that
// does not share the code path under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hog/closure.hpp"
#include "hog/cond.hpp"
#include "hog/derived.hpp"
#include "hog/merge.hpp"
#include "hog/parser.hpp"
#include "hog/syntax.hpp"
#include "hog/truth_table.hpp"
#include "support.hpp"

using namespace hog;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::vector<Term> vocabulary(const hog::Grammar& g) {
  std::vector<Term> out;
  for (const auto& [name, ty] : g.spec().constants) out.push_back(Term::constant(name, ty));
  return out;
}

const std::vector<Type>& sample_types() {
  static const std::vector<Type> types = {
      ind_type(), bool_type(), prop_type(), Type::fun(ind_type(), prop_type()),
      Type::prod(ind_type(), bool_type())};
  return types;
}

// Collapses an instance of f(C(x,y,v)) = C(f x, f y, v) at a literal v.
bool distrib_collapses(const Theory& th, const Term& f, const Term& x, const Term& y,
                       const Term& v) {
  bool t = is_truth(v);
  Theorem inst = cond_distrib(th, f, x, y, v);
  Theorem in = t ? cond_true(th, x, y) : cond_false(th, x, y);
  Term fx = Term::app(f, x), fy = Term::app(f, y);
  Theorem out = t ? cond_true(th, fx, fy) : cond_false(th, fx, fy);
  Theorem c = kernel::trans(th, kernel::sym(th, derived::ap_term(th, f, in)),
                            kernel::trans(th, inst, out));
  return alpha_equal(lhs(c.conclusion()), rhs(c.conclusion())) &&
         alpha_equal(lhs(c.conclusion()), t ? fx : fy);
}

Tally criterion1() {
  Tally t;
  hog::Grammar g = hogtest::grammar("ambiguous");
  hog::Grammar fresh = hogtest::grammar("ambiguous");
  const Theory& th = g.theory();
  hogtest::TermGen gen(101, vocabulary(g));
  for (const Type& ty : sample_types()) {
    std::vector<Theorem> roots;
    for (int i = 0; i < 50; ++i) {
      Term x = gen.gen(ty, 2);
      Term y = gen.gen(ty, 2);
      Theorem a = cond_true(th, x, y);
      Theorem b = cond_false(th, x, y);
      t.expect(a.hypotheses().empty() &&
                   alpha_equal(a.conclusion(), mk_eq(mk_cond(x, y, truth()), x)),
               "cond_true shape at " + to_string(ty));
      t.expect(b.hypotheses().empty() &&
                   alpha_equal(b.conclusion(), mk_eq(mk_cond(x, y, falsity()), y)),
               "cond_false shape at " + to_string(ty));
      roots.push_back(a);
      roots.push_back(b);
    }
    t.expect(hogtest::reverifies(roots, fresh.theory()), "trace at " + to_string(ty));
  }
  return t;
}

Tally criterion2() {
  Tally t;
  hog::Grammar g = hogtest::grammar("ambiguous");
  const Theory& th = g.theory();
  hogtest::TermGen gen(202, vocabulary(g));
  std::mt19937& rng = gen.rng();
  const auto& types = sample_types();

  // f(cond(x, y, z)) = cond(f x, f y, z)
  for (int i = 0; i < 50; ++i) {
    const Type& a = types[i % types.size()];
    const Type& b = types[(i / types.size() + 1) % types.size()];
    Term f = gen.gen(Type::fun(a, b), 2);
    Term x = gen.gen(a, 2), y = gen.gen(a, 2);
    Term z = gen.gen(bool_type(), 2);
    Theorem d = cond_distrib(th, f, x, y, z);
    t.expect(d.hypotheses().empty() &&
                 alpha_equal(d.conclusion(),
                             mk_eq(Term::app(f, mk_cond(x, y, z)),
                                   mk_cond(Term::app(f, x), Term::app(f, y), z))),
             "cond_distrib shape");
    t.expect(distrib_collapses(th, f, x, y, truth()), "cond_distrib at true");
    t.expect(distrib_collapses(th, f, x, y, falsity()), "cond_distrib at false");
    if (b == bool_type() && in_bool_fragment(beta_normalize(d.conclusion()))) {
      Term c = beta_normalize(d.conclusion());
      t.expect(bool_valid(c) && hogtest::valid(c), "cond_distrib oracle");
    }
  }

  // x \/ y = cond(x, y, x)
  for (int i = 0; i < 50; ++i) {
    Term x = hogtest::random_prop(rng, 3), y = hogtest::random_prop(rng, 3);
    Theorem s = or_as_cond(th, x, y);
    t.expect(alpha_equal(s.conclusion(), mk_eq(mk_or(x, y), mk_cond(x, y, x))),
             "or_as_cond shape");
    bool oracle = hogtest::valid(s.conclusion());
    t.expect(oracle && bool_valid(s.conclusion()) == oracle, "or_as_cond oracle");
    for (Term v : {truth(), falsity()}) {
      bool tv = is_truth(v);
      Theorem inst = or_as_cond(th, v, y);
      Term reduced = tv ? truth() : y;
      Theorem lhs_eq = derived::taut(th, mk_eq(mk_or(v, y), reduced));
      Theorem rhs_eq = tv ? cond_true(th, v, y) : cond_false(th, v, y);
      Theorem c = kernel::trans(th, kernel::sym(th, lhs_eq), kernel::trans(th, inst, rhs_eq));
      t.expect(alpha_equal(lhs(c.conclusion()), rhs(c.conclusion())), "or_as_cond collapse");
    }
  }

  // cond(x, x, z) = x
  for (int i = 0; i < 50; ++i) {
    const Type& a = types[i % types.size()];
    Term x = a == bool_type() ? hogtest::random_prop(rng, 3) : gen.gen(a, 2);
    Term z = i % 2 ? hogtest::random_prop(rng, 2) : gen.gen(bool_type(), 2);
    Theorem s = cond_idem(th, x, z);
    t.expect(alpha_equal(s.conclusion(), mk_eq(mk_cond(x, x, z), x)), "cond_idem shape");
    for (Term v : {truth(), falsity()}) {
      Theorem inst = cond_idem(th, x, v);
      Theorem prop = is_truth(v) ? cond_true(th, x, x) : cond_false(th, x, x);
      Theorem c = kernel::trans(th, kernel::sym(th, prop), inst);
      t.expect(alpha_equal(lhs(c.conclusion()), rhs(c.conclusion())), "cond_idem collapse");
    }
    if (a == bool_type() && in_bool_fragment(s.conclusion())) {
      bool oracle = hogtest::valid(s.conclusion());
      t.expect(oracle && bool_valid(s.conclusion()) == oracle, "cond_idem oracle");
    }
  }
  return t;
}

Tally criterion3(std::ostream& log) {
  Tally t;
  std::size_t merges = 0;
  bool saw_distinct = false;
  for (const char* name : {"toy", "ambiguous", "transitive", "weather"}) {
    hog::Grammar g = hogtest::grammar(name);
    hog::Grammar fresh = hogtest::grammar(name);
    const Theory& th = g.theory();
    std::set<Word> words;
    for (const EnumeratedSign& e : enumerate_signs(g, 2)) words.insert(e.word);
    for (const Word& w : words) {
      std::vector<ParseResult> rs = parse(g, w, 2);
      for (const ParseResult& p1 : rs) {
        for (const ParseResult& p2 : rs) {
          if (p1.sign_type != p2.sign_type) continue;
          const Term& a1 = p1.meaning;
          const Term& a2 = p2.meaning;
          if (!alpha_equal(a1, a2)) saw_distinct = true;
          Term q = Term::var(variant_name("q", [&] {
                               std::set<std::string> s;
                               collect_free_names(a1, s);
                               collect_free_names(a2, s);
                               return s;
                             }()),
                             bool_type());
          std::vector<std::pair<ClosureCertificate, Term>> certs = {
              {certify_left(th, a1, a2), a1},
              {certify_right(th, a1, a2), a2},
              {certify_cases(th, a1, a2, q), mk_cond(a1, a2, q)}};
          for (const auto& [cert, a] : certs) {
            try {
              ParseResult m = merge_parses(g, p1, p2, cert);
              ++merges;
              bool ok = alpha_equal(m.meaning, beta_normalize(a)) &&
                        alpha_equal(m.sign, mk_cond(p1.sign, p2.sign, mk_eq(a, a1))) &&
                        alpha_equal(m.phon_proof.conclusion(),
                                    mk_eq(Term::app(g.phon_constant(m.sign_type), m.sign),
                                          word_to_phon(g, w))) &&
                        alpha_equal(m.sem_proof.conclusion(),
                                    mk_eq(Term::app(g.sem_constant(m.sign_type), m.sign),
                                          m.meaning)) &&
                        hogtest::reverifies({m.phon_proof, m.sem_proof}, fresh.theory());
              t.expect(ok, std::string(name) + " \"" + w.to_string() + "\"");
            } catch (const std::exception& e) {
              t.expect(false, std::string(name) + ": " + e.what());
            }
          }
        }
      }
    }
  }
  t.expect(saw_distinct, "corpus has an ambiguous word");
  log << "  merges: " << merges << "\n";
  return t;
}

Tally criterion4(std::ostream& log) {
  Tally t;
  std::size_t words_checked = 0;
  for (const char* name : {"toy", "ambiguous", "transitive", "weather", "empty"}) {
    hog::Grammar g = hogtest::grammar(name);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<EnumeratedSign> all = enumerate_signs(g, k);
      std::set<Word> words;
      for (const EnumeratedSign& e : all) words.insert(e.word);
      for (const Word& w : words) {
        std::vector<std::string> want, got;
        for (const EnumeratedSign& e : all) {
          if (e.word == w) want.push_back(print_canonical(e.sign) + " " + print_canonical(e.meaning));
        }
        for (const ParseResult& r : parse(g, w, k)) {
          got.push_back(print_canonical(r.sign) + " " + print_canonical(r.meaning));
        }
        ++words_checked;
        t.expect(got == want, std::string(name) + " k=" + std::to_string(k) + " \"" +
                                  w.to_string() + "\"");
      }
    }
  }
  log << "  words checked: " << words_checked << "\n";
  return t;
}

Membership random_subset(std::mt19937& rng, std::size_t n) {
  Membership m(n, false);
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  for (std::size_t i = 0; i < k; ++i) m[rng() % n] = true;
  return m;
}

bool subset(const Membership& a, const Membership& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

Tally criterion5(const TermUniverse& u, std::ostream& log) {
  Tally t;
  std::mt19937 rng(505);
  auto cl = [&](const Membership& m) { return closure_saturate(u, m).members; };

  for (int i = 0; i < 100; ++i) {
    Membership m = random_subset(rng, u.size());
    Membership n = m;
    Membership extra = random_subset(rng, u.size());
    for (std::size_t j = 0; j < u.size(); ++j) n[j] = n[j] || extra[j];
    Membership cm = cl(m), cn = cl(n);
    t.expect(subset(m, cm), "extensive");
    t.expect(subset(cm, cn), "monotone");
  }
  for (int i = 0; i < 100; ++i) {
    Membership m = random_subset(rng, u.size());
    Membership c = cl(m);
    t.expect(cl(c) == c, "idempotent");
  }
  for (int s = 0; s < 10; ++s) {
    Membership m = random_subset(rng, u.size());
    Membership c = cl(m);
    std::vector<std::size_t> perm(u.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Term> shuffled;
    Membership pm(u.size(), false);
    for (std::size_t i = 0; i < u.size(); ++i) {
      shuffled.push_back(u.terms[perm[i]]);
      pm[i] = m[perm[i]];
    }
    TermUniverse su = make_universe(shuffled);
    su.variables = u.variables;
    Membership pc = closure_saturate(su, pm).members;
    Membership back(u.size(), false);
    for (std::size_t i = 0; i < u.size(); ++i) back[perm[i]] = pc[i];
    t.expect(back == c, "order independence");
  }
  std::size_t related = 0;
  for (int i = 0; i < 50; ++i) {
    Membership m = random_subset(rng, u.size());
    Membership cm = cl(m);
    // n and o are drawn inside cl(m) half the time so that the relation
    // is exercised on related sets, not only on unrelated ones.
    auto draw = [&] {
      if (rng() % 2) return random_subset(rng, u.size());
      Membership x = m;
      for (std::size_t j = 0; j < u.size(); ++j) x[j] = x[j] || (cm[j] && rng() % 3 == 0);
      return x;
    };
    Membership n = draw(), o = draw();
    t.expect(sets_equivalent(u, m, m), "reflexive");
    bool mn = sets_equivalent(u, m, n), nm = sets_equivalent(u, n, m);
    t.expect(mn == nm, "symmetric");
    bool no = sets_equivalent(u, n, o);
    if (mn && no) {
      ++related;
      t.expect(sets_equivalent(u, m, o), "transitive");
    }
  }
  log << "  related triples: " << related << "\n";
  return t;
}

Tally criterion6(const TermUniverse& u, std::ostream& log) {
  Tally t;
  std::optional<ClosureViolation> v = find_closure_violation(u, identity_language(u));
  t.expect(v.has_value(), "identity language reported closed");
  if (v) {
    const Term& a = u.terms[v->a];
    const Term& b = u.terms[v->b];
    const Term& c = u.terms[v->c];
    log << "  witness: word \"" << v->word.to_string() << "\" has meanings " << print_pretty(b)
        << " and " << print_pretty(c) << ", not " << print_pretty(a) << "\n";
    t.expect(hogtest::valid(mk_or(mk_eq(a, b), mk_eq(a, c))), "witness validity");
    t.expect(v->a != v->b && v->a != v->c, "witness outside the language");
  }
  return t;
}

Tally criterion7(const TermUniverse& u) {
  Tally t;
  std::mt19937 rng(707);
  const char* tokens[] = {"fajdo", "blt", "felks"};
  for (int i = 0; i < 20; ++i) {
    std::vector<std::string> toks;
    for (int k = rng() % 3; k >= 0; --k) toks.push_back(tokens[rng() % 3]);
    Word w(toks);
    const Term& a = u.terms[rng() % u.size()];
    std::vector<std::pair<Word, Term>> s = logical_singleton(u, w, a);

    Membership one(u.size(), false);
    one[*u.find(a)] = true;
    Membership cl = closure_saturate(u, one).members;
    std::vector<std::pair<Word, Term>> want;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (cl[j]) want.emplace_back(w, u.terms[j]);
      // The closure of {a} is its equivalence class.
      t.expect(cl[j] == hogtest::equivalent(u.terms[j], a), "singleton class");
    }
    bool same = s.size() == want.size();
    for (std::size_t j = 0; same && j < s.size(); ++j) {
      same = s[j].first == want[j].first && alpha_equal(s[j].second, want[j].second);
    }
    t.expect(same, "singleton equals {w} x closure");
  }
  return t;
}

}  // namespace

int main() {
  TermUniverse u = generate_bool_universe(2, 4);
  struct Criterion {
    const char* label;
    std::function<Tally(std::ostream&)> run;
  };
  std::vector<Criterion> criteria = {
      {"fundamental properties of cond at 5 types", [](std::ostream&) { return criterion1(); }},
      {"cond metatheorem schemas and oracle agreement",
       [](std::ostream&) { return criterion2(); }},
      {"merge succeeds and re-verifies on the grammar corpus", criterion3},
      {"parser agrees with the enumeration oracle, k <= 3", criterion4},
      {"closure operator laws on the 2-variable universe",
       [&](std::ostream& log) { return criterion5(u, log); }},
      {"identity language is not logically closed",
       [&](std::ostream& log) { return criterion6(u, log); }},
      {"logical singleton law", [&](std::ostream&) { return criterion7(u); }},
  };
  std::cout << "universe: " << u.size() << " Bool terms over 2 variables, size <= 4\n";
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].run(log);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.failures == 0 && t.checks > 0;
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  "
              << criteria[i].label << "  (" << t.checks << " checks, " << t.failures
              << " failed, " << timing << ")\n"
              << log.str();
    if (!ok && !t.first.empty()) std::cout << "  first failure: " << t.first << "\n";
  }
  return failed == 0 ? 0 : 1;
}
