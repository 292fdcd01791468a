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

// Shared test helpers: seeded term generators, an evaluator for the Bool
// fragment written against the raw term structure, and trace round trips.
#pragma once

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hog/grammar.hpp"
#include "hog/grammar_file.hpp"
#include "hog/kernel.hpp"
#include "hog/logic.hpp"
#include "hog/term.hpp"
#include "hog/trace.hpp"
#include "hog/type.hpp"

namespace hogtest {

using hog::Term;
using hog::Theorem;
using hog::Type;

inline std::string grammar_path(const std::string& name) {
  return std::string(HOG_GRAMMAR_DIR) + "/" + name + ".hog";
}

inline hog::Grammar grammar(const std::string& name) {
  return hog::load_grammar(grammar_path(name));
}

// Exports the theorems and replays them in `fresh`, which should be a
// separately elaborated theory.
inline bool reverifies(const std::vector<Theorem>& roots, const hog::Theory& fresh) {
  hog::TraceCheck c = hog::verify_trace(hog::export_trace(roots), fresh);
  return c.ok && c.roots.size() == roots.size();
}

// Random well-typed terms over a pool of constants and typed variables.
class TermGen {
 public:
  TermGen(unsigned seed, std::vector<Term> constants)
      : rng_(seed), constants_(std::move(constants)) {}

  std::mt19937& rng() { return rng_; }

  Term gen(const Type& ty, int depth) { return gen(ty, depth, {}); }

  // Free variables drawn from a, b, c at the requested type.
  Term leaf(const Type& ty, const std::vector<Term>& scope) {
    std::vector<Term> options;
    for (const Term& v : scope) {
      if (v.type() == ty) options.push_back(v);
    }
    for (const Term& c : constants_) {
      if (c.type() == ty) options.push_back(c);
    }
    static const char* names[] = {"a", "b", "c"};
    options.push_back(Term::var(names[pick(3)], ty));
    return options[pick(options.size())];
  }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  Term gen(const Type& ty, int depth, std::vector<Term> scope) {
    if (depth <= 0) {
      if (ty.is_fun() && pick(2) == 0) return lambda(ty, 0, scope);
      if (ty.is_prod()) return Term::pair(gen(ty.left(), 0, scope), gen(ty.right(), 0, scope));
      return leaf(ty, scope);
    }
    switch (pick(7)) {
      case 0:
        return leaf(ty, scope);
      case 1: {
        std::vector<Term> fns;
        for (const Term& c : constants_) {
          if (c.type().is_fun() && c.type().codomain() == ty) fns.push_back(c);
        }
        if (fns.empty()) break;
        const Term& f = fns[pick(fns.size())];
        return Term::app(f, gen(f.type().domain(), depth - 1, scope));
      }
      case 2:
        if (ty.is_fun()) return lambda(ty, depth, scope);
        break;
      case 3:
        return hog::mk_cond(gen(ty, depth - 1, scope), gen(ty, depth - 1, scope),
                            gen(hog::bool_type(), depth - 1, scope));
      case 4:
        return Term::proj(1, Term::pair(gen(ty, depth - 1, scope),
                                        gen(hog::bool_type(), 0, scope)));
      case 5: {
        // A beta redex.
        Term v = Term::var("r" + std::to_string(depth), hog::ind_type());
        scope.push_back(v);
        Term body = gen(ty, depth - 1, scope);
        scope.pop_back();
        return Term::app(Term::abs(v, body), gen(hog::ind_type(), 0, scope));
      }
      default:
        if (ty.is_prod()) {
          return Term::pair(gen(ty.left(), depth - 1, scope), gen(ty.right(), depth - 1, scope));
        }
        if (ty == hog::bool_type()) return bool_node(depth, scope);
        break;
    }
    return gen(ty, depth - 1, scope);
  }

  Term lambda(const Type& ty, int depth, std::vector<Term>& scope) {
    Term v = Term::var("v" + std::to_string(scope.size()), ty.domain());
    scope.push_back(v);
    Term body = gen(ty.codomain(), depth - 1, scope);
    scope.pop_back();
    return Term::abs(v, body);
  }

  Term bool_node(int depth, std::vector<Term>& scope) {
    Term l = gen(hog::bool_type(), depth - 1, scope);
    Term r = gen(hog::bool_type(), depth - 1, scope);
    switch (pick(5)) {
      case 0: return hog::mk_not(l);
      case 1: return hog::mk_and(l, r);
      case 2: return hog::mk_or(l, r);
      case 3: return hog::mk_imp(l, r);
      default: return hog::mk_eq(l, r);
    }
  }

  std::mt19937 rng_;
  std::vector<Term> constants_;
};

// Random terms of the quantifier-free Bool fragment over p, q, r.
inline Term random_prop(std::mt19937& rng, int depth, bool with_cond = true) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth <= 0 || pick(4) == 0) {
    switch (pick(5)) {
      case 0: return hog::truth();
      case 1: return hog::falsity();
      case 2: return Term::var("p", hog::bool_type());
      case 3: return Term::var("q", hog::bool_type());
      default: return Term::var("r", hog::bool_type());
    }
  }
  Term a = random_prop(rng, depth - 1, with_cond);
  Term b = random_prop(rng, depth - 1, with_cond);
  switch (pick(with_cond ? 6 : 5)) {
    case 0: return hog::mk_not(a);
    case 1: return hog::mk_and(a, b);
    case 2: return hog::mk_or(a, b);
    case 3: return hog::mk_imp(a, b);
    case 4: return hog::mk_eq(a, b);
    default: return hog::mk_cond(a, b, random_prop(rng, depth - 1, with_cond));
  }
}

// Evaluator for the fragment that inspects constant names directly.
inline bool eval(const Term& t, const std::map<std::string, bool>& env) {
  if (t.is_var()) return env.at(t.name());
  if (t.is_const() && t.name() == "T") return true;
  if (t.is_const() && t.name() == "F") return false;
  if (!t.is_app()) throw std::runtime_error("eval: unexpected term");
  const Term f = t.fn();
  if (f.is_const() && f.name() == "~") return !eval(t.arg(), env);
  if (f.is_const() && f.name() == "cond") {
    const Term triple = t.arg();
    return eval(triple.right().right(), env) ? eval(triple.left(), env)
                                             : eval(triple.right().left(), env);
  }
  if (!f.is_app() || !f.fn().is_const()) throw std::runtime_error("eval: unexpected head");
  const std::string& op = f.fn().name();
  bool x = eval(f.arg(), env);
  bool y = eval(t.arg(), env);
  if (op == "/\\") return x && y;
  if (op == "\\/") return x || y;
  if (op == "==>") return !x || y;
  if (op == "=") return x == y;
  throw std::runtime_error("eval: unknown connective " + op);
}

inline void names_of(const Term& t, std::set<std::string>& out) {
  for (const Term& v : hog::free_vars(t)) out.insert(v.name());
}

// Validity over all assignments to the free variables of the given terms.
inline bool valid(const Term& t) {
  std::set<std::string> s;
  names_of(t, s);
  std::vector<std::string> vars(s.begin(), s.end());
  for (unsigned row = 0; row < (1u << vars.size()); ++row) {
    std::map<std::string, bool> env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = (row >> i) & 1u;
    if (!eval(t, env)) return false;
  }
  return true;
}

inline bool equivalent(const Term& a, const Term& b) { return valid(hog::mk_eq(a, b)); }

}  // namespace hogtest
