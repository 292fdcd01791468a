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

#include "hog/parser.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>

#include "hog/derived.hpp"
#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/merge.hpp"
#include "hog/syntax.hpp"
#include "hog/truth_table.hpp"

namespace hog {

namespace d = derived;
namespace k = kernel;

namespace {

bool is_refl(const Theorem& t) { return t.rule() == Rule::kRefl; }

ParseResult lexical_item(const Grammar& g, const LexicalEntry& e) {
  const Theory& th = g.theory();
  Theorem ax = d::definition(th, lexical_axiom_name(e.name));
  Theorem phon = d::conjunct1(th, ax);
  Theorem sem = d::conjunct2(th, ax);
  sem = k::trans(th, sem, d::beta_norm_conv(th, rhs(sem.conclusion())));
  return ParseResult{e.phon, e.sign_type, g.lexical_constant(e),
                     rhs(sem.conclusion()), phon, sem, 1};
}

ParseResult rule_item(const Grammar& g, const RuleEntry& r,
                      const std::vector<const ParseResult*>& kids) {
  const Theory& th = g.theory();
  std::vector<Term> signs;
  std::size_t depth = 0;
  for (const ParseResult* c : kids) {
    signs.push_back(c->sign);
    depth = std::max(depth, c->depth);
  }
  Theorem ax = d::spec_all(th, signs, d::definition(th, rule_axiom_name(r.name)));

  // phon(x1) ++ (phon(x2) ++ ...) rewritten word by word from the right.
  const std::vector<std::size_t>& order = r.phon_order;
  Theorem acc = kids[order.back()]->phon_proof;
  Word acc_word = kids[order.back()]->word;
  for (std::size_t i = order.size() - 1; i-- > 0;) {
    const ParseResult& c = *kids[order[i]];
    Theorem joined = d::ap_term(th, cat_const(), d::pair_cong(th, c.phon_proof, acc));
    Theorem hom = phon_homomorphism(g, c.word, acc_word);
    acc = k::trans(th, joined, k::sym(th, hom));
    acc_word = c.word + acc_word;
  }
  Theorem phon = k::trans(th, d::conjunct1(th, ax), acc);

  std::vector<Theorem> sems;
  for (const ParseResult* c : kids) sems.push_back(c->sem_proof);
  Theorem sem = d::conjunct2(th, ax);
  sem = k::trans(th, sem, rewrite_conv(th, rhs(sem.conclusion()), sems));
  sem = k::trans(th, sem, d::beta_norm_conv(th, rhs(sem.conclusion())));

  return ParseResult{acc_word, r.result, lhs(sem.conclusion()).arg(),
                     rhs(sem.conclusion()), phon, sem, depth + 1};
}

// Visits every split of `u` into n consecutive, possibly empty, parts.
void for_each_split(const Word& u, std::size_t n,
                    const std::function<void(const std::vector<Word>&)>& fn) {
  std::vector<Word> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (parts.size() + 1 == n) {
      parts.push_back(u.slice(start, u.size()));
      fn(parts);
      parts.pop_back();
      return;
    }
    for (std::size_t end = start; end <= u.size(); ++end) {
      parts.push_back(u.slice(start, end));
      rec(end);
      parts.pop_back();
    }
  };
  rec(0);
}

struct Task {
  const RuleEntry* rule;
  std::vector<std::size_t> kids;
};

}  // namespace

Theorem rewrite_conv(const Theory& th, const Term& t,
                     const std::vector<Theorem>& eqs) {
  for (const Theorem& e : eqs) {
    if (alpha_equal(lhs(e.conclusion()), t)) return e;
  }
  if (t.is_app()) {
    Theorem f = rewrite_conv(th, t.fn(), eqs);
    Theorem x = rewrite_conv(th, t.arg(), eqs);
    if (is_refl(f) && is_refl(x)) return k::refl(th, t);
    return k::cong(th, f, x);
  }
  if (t.is_abs()) {
    Theorem b = rewrite_conv(th, t.body(), eqs);
    if (is_refl(b)) return k::refl(th, t);
    return k::abs(th, t.bound(), b);
  }
  if (t.is_pair()) {
    Theorem l = rewrite_conv(th, t.left(), eqs);
    Theorem r = rewrite_conv(th, t.right(), eqs);
    if (is_refl(l) && is_refl(r)) return k::refl(th, t);
    return d::pair_cong(th, l, r);
  }
  if (t.is_proj()) {
    Theorem a = rewrite_conv(th, t.operand(), eqs);
    if (is_refl(a)) return k::refl(th, t);
    return d::proj_cong(th, t.index(), a);
  }
  return k::refl(th, t);
}

std::vector<ParseResult> parse(const Grammar& g, const Word& w,
                               std::size_t depth_bound) {
  word_to_phon(g, w);  // rejects tokens outside the alphabet
  std::set<Word> substrings;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::size_t j = i; j <= w.size(); ++j) substrings.insert(w.slice(i, j));
  }

  std::vector<ParseResult> items;
  std::map<Word, std::vector<std::size_t>> by_word;
  std::set<std::string> seen;
  auto admit = [&](ParseResult r) {
    if (!seen.insert(alpha_key(r.sign)).second) return;
    by_word[r.word].push_back(items.size());
    items.push_back(std::move(r));
  };

  if (depth_bound >= 1) {
    for (const LexicalEntry& e : g.spec().lexicon) {
      if (substrings.contains(e.phon)) admit(lexical_item(g, e));
    }
  }

  for (std::size_t depth = 2; depth <= depth_bound; ++depth) {
    std::vector<Task> tasks;
    for (const Word& u : substrings) {
      for (const RuleEntry& r : g.spec().rules) {
        const std::size_t n = r.operands.size();
        for_each_split(u, n, [&](const std::vector<Word>& parts) {
          // parts[i] is the word of operand phon_order[i].
          std::vector<std::vector<std::size_t>> cands(n);
          for (std::size_t i = 0; i < n; ++i) {
            std::size_t op = r.phon_order[i];
            auto it = by_word.find(parts[i]);
            if (it == by_word.end()) return;
            for (std::size_t idx : it->second) {
              const ParseResult& c = items[idx];
              if (c.depth < depth && c.sign_type == r.operands[op].sign_type) {
                cands[op].push_back(idx);
              }
            }
            if (cands[op].empty()) return;
          }
          std::vector<std::size_t> pick(n);
          std::function<void(std::size_t, bool)> rec = [&](std::size_t op, bool deep) {
            if (op == n) {
              if (deep) tasks.push_back({&r, pick});
              return;
            }
            for (std::size_t idx : cands[op]) {
              pick[op] = idx;
              rec(op + 1, deep || items[idx].depth + 1 == depth);
            }
          };
          rec(0, false);
        });
      }
    }
    if (tasks.empty()) break;

    std::vector<std::optional<ParseResult>> built(tasks.size());
    std::exception_ptr error;
    const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        std::vector<const ParseResult*> kids;
        for (std::size_t idx : tasks[i].kids) kids.push_back(&items[idx]);
        built[i] = rule_item(g, *tasks[i].rule, kids);
      } catch (...) {
#pragma omp critical(hog_parse_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (auto& b : built) admit(std::move(*b));
  }

  std::vector<ParseResult> out;
  std::vector<std::pair<std::size_t, std::string>> keys;
  if (auto it = by_word.find(w); it != by_word.end()) {
    for (std::size_t idx : it->second) out.push_back(items[idx]);
  }
  std::vector<std::size_t> perm(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    perm[i] = i;
    keys.emplace_back(out[i].depth, print_canonical(out[i].sign));
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] < keys[b];
  });
  std::vector<ParseResult> sorted;
  for (std::size_t i : perm) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::optional<ParseResult> check_membership(const Grammar& g, const Word& w,
                                            const Term& a,
                                            std::size_t depth_bound) {
  bool typed = false;
  for (const SignType& s : g.spec().sign_types) typed = typed || s.sem == a.type();
  if (!typed) {
    throw TypeError("candidate meaning has type " + to_string(a.type()) +
                    ", which is no sign type's semantic type");
  }
  Term target = beta_normalize(a);
  std::vector<ParseResult> parses = parse(g, w, depth_bound);
  for (const ParseResult& r : parses) {
    if (alpha_equal(r.meaning, target)) return r;
  }
  if (!(target.type() == bool_type())) return std::nullopt;
  for (const ParseResult& r : parses) {
    if (!(r.meaning.type() == bool_type())) continue;
    Term eq = mk_eq(target, r.meaning);
    try {
      if (!bool_valid(abstract_to_fragment(eq))) continue;
      ClosureCertificate cert = certify_taut(g.theory(), target, r.meaning, r.meaning);
      return merge_parses(g, r, r, cert);
    } catch (const FragmentError&) {
      continue;
    }
  }
  return std::nullopt;
}

namespace {

// Replaces sem(x) for operand variables x by the operand's meaning,
// respecting shadowing, then the remaining operand variables by signs.
Term compose(const Grammar& g, const Term& t, const std::vector<Term>& vars,
             const std::vector<const EnumeratedSign*>& kids,
             std::set<std::string> shadowed) {
  if (t.is_app()) {
    if (t.arg().is_var() && t.fn().is_const() &&
        !shadowed.contains(t.arg().name())) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (same_var(vars[i], t.arg()) &&
            alpha_equal(t.fn(), g.sem_constant(kids[i]->sign_type))) {
          return kids[i]->meaning;
        }
      }
    }
    return Term::app(compose(g, t.fn(), vars, kids, shadowed),
                     compose(g, t.arg(), vars, kids, shadowed));
  }
  if (t.is_abs()) {
    shadowed.insert(t.bound().name());
    return Term::abs(t.bound(), compose(g, t.body(), vars, kids, shadowed));
  }
  if (t.is_pair()) {
    return Term::pair(compose(g, t.left(), vars, kids, shadowed),
                      compose(g, t.right(), vars, kids, shadowed));
  }
  if (t.is_proj()) return Term::proj(t.index(), compose(g, t.operand(), vars, kids, shadowed));
  return t;
}

}  // namespace

std::vector<EnumeratedSign> enumerate_signs(const Grammar& g,
                                            std::size_t depth_bound) {
  std::vector<EnumeratedSign> all;
  if (depth_bound == 0) return all;
  for (const LexicalEntry& e : g.spec().lexicon) {
    all.push_back({g.lexical_constant(e), e.sign_type, e.phon,
                   beta_normalize(e.meaning), 1});
  }
  for (std::size_t depth = 2; depth <= depth_bound; ++depth) {
    std::vector<EnumeratedSign> fresh;
    for (const RuleEntry& r : g.spec().rules) {
      std::vector<Term> vars;
      for (const RuleOperand& o : r.operands) {
        vars.push_back(Term::var(o.var, Type::base(o.sign_type)));
      }
      std::vector<const EnumeratedSign*> pick(r.operands.size());
      std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool deep) {
        if (i == pick.size()) {
          if (!deep) return;
          std::vector<Term> signs;
          Substitution sigma;
          for (std::size_t j = 0; j < pick.size(); ++j) {
            signs.push_back(pick[j]->sign);
            sigma.emplace_back(vars[j], pick[j]->sign);
          }
          Word word;
          for (std::size_t j : r.phon_order) word = word + pick[j]->word;
          Term m = substitute(compose(g, r.sem, vars, pick, {}), sigma);
          fresh.push_back({list_mk_comb(g.rule_constant(r), signs), r.result,
                           word, beta_normalize(m), depth});
          return;
        }
        for (const EnumeratedSign& s : all) {
          if (s.sign_type != r.operands[i].sign_type) continue;
          pick[i] = &s;
          rec(i + 1, deep || s.depth + 1 == depth);
        }
      };
      rec(0, false);
    }
    for (EnumeratedSign& s : fresh) all.push_back(std::move(s));
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const EnumeratedSign& a, const EnumeratedSign& b) {
                     if (a.depth != b.depth) return a.depth < b.depth;
                     return print_canonical(a.sign) < print_canonical(b.sign);
                   });
  return all;
}

}  // namespace hog
