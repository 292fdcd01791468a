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

#include "hog/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hog/derived.hpp"
#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/syntax.hpp"

namespace hog {

Word Word::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return Word(std::move(tokens));
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  return Word(std::vector<std::string>(tokens_.begin() + begin,
                                       tokens_.begin() + end));
}

Word Word::operator+(const Word& other) const {
  std::vector<std::string> out = tokens_;
  out.insert(out.end(), other.tokens_.begin(), other.tokens_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0) out += " ";
    out += tokens_[i];
  }
  return out;
}

std::string lexical_axiom_name(const std::string& entry) { return "lex." + entry; }
std::string rule_axiom_name(const std::string& rule) { return "rule." + rule; }

namespace {

const std::set<std::string>& reserved_names() {
  static const std::set<std::string> names = {
      "phon", "sem",    "fst",    "snd",  "cond", "iota", "forall",
      "exists", "true", "false", "T",    "F",    "type", "const",
      "lex",  "rule",   "signtype", "alphabet"};
  return names;
}

[[noreturn]] void fail(const std::string& why) { throw GrammarError(why); }

void check_name(const std::string& name, const char* what) {
  if (!is_identifier(name)) fail(std::string("invalid ") + what + " name `" + name + "`");
  if (reserved_names().contains(name)) {
    fail(std::string(what) + " name `" + name + "` is reserved");
  }
}

void check_token(const std::string& tok) {
  if (tok.empty()) fail("empty alphabet token");
  for (char c : tok) {
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::string_view("/{};#").find(c) != std::string_view::npos) {
      fail("alphabet token `" + tok + "` contains a reserved character");
    }
  }
}

const SignType* find_sign(const GrammarSpec& spec, const std::string& name) {
  for (const SignType& s : spec.sign_types) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Type rule_type_of(const GrammarSpec& spec, const RuleEntry& r) {
  Type out = Type::base(r.result);
  for (auto it = r.operands.rbegin(); it != r.operands.rend(); ++it) {
    out = Type::fun(Type::base(it->sign_type), out);
  }
  (void)spec;
  return out;
}

// Installs every type and constant of the grammar.
void declare(const GrammarSpec& spec, TheoryBuilder& b) {
  std::set<std::string> seen_tokens;
  for (const std::string& tok : spec.alphabet) {
    check_token(tok);
    if (!seen_tokens.insert(tok).second) fail("duplicate alphabet token `" + tok + "`");
  }
  for (const std::string& t : spec.base_types) {
    check_name(t, "type");
    b.add_base_type(t);
  }
  for (const SignType& s : spec.sign_types) {
    check_name(s.name, "sign type");
    if (b.signature().has_base_type(s.name)) fail("duplicate type `" + s.name + "`");
    b.add_base_type(s.name);
  }
  for (const SignType& s : spec.sign_types) {
    if (!b.signature().well_formed(s.sem)) {
      fail("sign type " + s.name + " has undeclared semantic type " +
           to_string(s.sem));
    }
    if (s.operand || s.result) {
      const SignType* op = s.operand ? find_sign(spec, *s.operand) : nullptr;
      const SignType* res = s.result ? find_sign(spec, *s.result) : nullptr;
      if (!op || !res) fail("sign type " + s.name + " refers to an unknown sign type");
      if (!(s.sem == Type::fun(op->sem, res->sem))) {
        fail("sign type " + s.name + " must have semantic type " +
             to_string(Type::fun(op->sem, res->sem)));
      }
    }
  }
  b.add_constant(std::string(names::kEmptyPhon), phon_type());
  for (const std::string& tok : spec.alphabet) {
    b.add_constant(phon_atom_name(tok), phon_type());
  }
  b.add_constant(std::string(names::kCat), cat_const().type());
  for (const SignType& s : spec.sign_types) {
    b.add_constant("phon[" + s.name + "]", Type::fun(Type::base(s.name), phon_type()));
    b.add_constant("sem[" + s.name + "]", Type::fun(Type::base(s.name), s.sem));
  }
  for (const auto& [name, ty] : spec.constants) {
    check_name(name, "constant");
    b.add_constant(name, ty);
  }
  for (const LexicalEntry& e : spec.lexicon) {
    check_name(e.name, "lexical entry");
    if (!find_sign(spec, e.sign_type)) {
      fail("lexical entry " + e.name + " has unknown sign type " + e.sign_type);
    }
    b.add_constant(e.name, Type::base(e.sign_type));
  }
  for (const RuleEntry& r : spec.rules) {
    check_name(r.name, "rule");
    if (!find_sign(spec, r.result)) {
      fail("rule " + r.name + " has unknown result type " + r.result);
    }
    for (const RuleOperand& o : r.operands) {
      if (!find_sign(spec, o.sign_type)) {
        fail("rule " + r.name + " has unknown operand type " + o.sign_type);
      }
    }
    b.add_constant(r.name, rule_type_of(spec, r));
  }
}

Term phon_of(const SignType& s, const Term& x) {
  return Term::app(Term::constant("phon[" + s.name + "]",
                                  Type::fun(Type::base(s.name), phon_type())),
                   x);
}

Term sem_of(const SignType& s, const Term& x) {
  return Term::app(
      Term::constant("sem[" + s.name + "]", Type::fun(Type::base(s.name), s.sem)),
      x);
}

void check_lexical(const GrammarSpec& spec, const Signature& sig,
                   const LexicalEntry& e) {
  const SignType& s = *find_sign(spec, e.sign_type);
  for (const std::string& tok : e.phon.tokens()) {
    if (std::find(spec.alphabet.begin(), spec.alphabet.end(), tok) ==
        spec.alphabet.end()) {
      fail("lexical entry " + e.name + " uses token `" + tok +
           "` outside the alphabet");
    }
  }
  Type ty = type_of(e.meaning, sig);
  if (!(ty == s.sem)) {
    fail("meaning of " + e.name + " has type " + to_string(ty) + ", expected " +
         to_string(s.sem));
  }
  if (!free_vars(e.meaning).empty()) {
    fail("meaning of " + e.name + " has free variables");
  }
}

std::vector<Term> operand_vars(const RuleEntry& r) {
  std::vector<Term> out;
  for (const RuleOperand& o : r.operands) {
    out.push_back(Term::var(o.var, Type::base(o.sign_type)));
  }
  return out;
}

void check_rule(const GrammarSpec& spec, const Signature& sig,
                const RuleEntry& r) {
  if (r.operands.empty()) fail("rule " + r.name + " has no operands");
  std::set<std::string> vars;
  for (const RuleOperand& o : r.operands) {
    if (!is_identifier(o.var)) fail("rule " + r.name + ": bad variable " + o.var);
    if (!vars.insert(o.var).second) {
      fail("rule " + r.name + ": duplicate variable " + o.var);
    }
  }
  std::vector<std::size_t> order = r.phon_order;
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != i) order.clear();
  }
  if (order.size() != r.operands.size()) {
    fail("rule " + r.name +
         ": phonology must concatenate every operand exactly once");
  }
  std::vector<Term> ops = operand_vars(r);
  for (const Term& v : free_vars(r.sem)) {
    bool ok = std::any_of(ops.begin(), ops.end(),
                          [&](const Term& o) { return same_var(o, v); });
    if (!ok) fail("rule " + r.name + ": semantics mentions unknown variable " + v.name());
  }
  Type ty = type_of(r.sem, sig);
  const SignType& res = *find_sign(spec, r.result);
  if (!(ty == res.sem)) {
    fail("rule " + r.name + ": semantics has type " + to_string(ty) +
         ", expected " + to_string(res.sem));
  }
}

}  // namespace

Signature GrammarSpec::signature() const {
  TheoryBuilder b;
  try {
    declare(*this, b);
  } catch (const GrammarError&) {
    throw;
  } catch (const Error& e) {
    throw GrammarError(e.what());
  }
  return b.signature();
}

Grammar elaborate(GrammarSpec spec) {
  TheoryBuilder b;
  try {
    declare(spec, b);
    const Signature& sig = b.signature();
    for (const LexicalEntry& e : spec.lexicon) check_lexical(spec, sig, e);
    for (const RuleEntry& r : spec.rules) check_rule(spec, sig, r);

    Term x = Term::var("x", phon_type());
    Term y = Term::var("y", phon_type());
    Term z = Term::var("z", phon_type());
    b.add_axiom(std::string(kCatAssoc),
                mk_forall(x, mk_forall(y, mk_forall(z, mk_eq(mk_cat(x, mk_cat(y, z)),
                                                             mk_cat(mk_cat(x, y), z))))));
    b.add_axiom(std::string(kCatLeftId),
                mk_forall(x, mk_eq(mk_cat(empty_phon(), x), x)));
    b.add_axiom(std::string(kCatRightId),
                mk_forall(x, mk_eq(mk_cat(x, empty_phon()), x)));

    for (const LexicalEntry& e : spec.lexicon) {
      const SignType& s = *find_sign(spec, e.sign_type);
      Term k = Term::constant(e.name, Type::base(s.name));
      b.add_axiom(lexical_axiom_name(e.name),
                  mk_and(mk_eq(phon_of(s, k), phon_of_tokens(e.phon.tokens())),
                         mk_eq(sem_of(s, k), e.meaning)));
    }
    for (const RuleEntry& r : spec.rules) {
      std::vector<Term> vars = operand_vars(r);
      Term applied = list_mk_comb(Term::constant(r.name, rule_type_of(spec, r)), vars);
      std::optional<Term> chain;
      for (std::size_t i = r.phon_order.size(); i-- > 0;) {
        std::size_t j = r.phon_order[i];
        Term p = phon_of(*find_sign(spec, r.operands[j].sign_type), vars[j]);
        chain = chain ? mk_cat(p, *chain) : p;
      }
      const SignType& res = *find_sign(spec, r.result);
      Term stmt = mk_and(mk_eq(phon_of(res, applied), *chain),
                         mk_eq(sem_of(res, applied), r.sem));
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        stmt = mk_forall(*it, stmt);
      }
      b.add_axiom(rule_axiom_name(r.name), stmt);
    }
  } catch (const GrammarError&) {
    throw;
  } catch (const Error& e) {
    throw GrammarError(e.what());
  }

  Grammar g;
  g.theory_ = std::move(b).freeze();
  for (std::size_t i = 0; i < spec.sign_types.size(); ++i) {
    g.sign_index_.emplace(spec.sign_types[i].name, i);
  }
  g.spec_ = std::move(spec);
  return g;
}

const SignType& Grammar::sign_type(const std::string& name) const {
  auto it = sign_index_.find(name);
  if (it == sign_index_.end()) throw GrammarError("unknown sign type " + name);
  return spec_.sign_types[it->second];
}

std::optional<std::string> Grammar::sign_type_of(const Type& ty) const {
  if (ty.is_base() && sign_index_.contains(ty.name())) return ty.name();
  return std::nullopt;
}

bool Grammar::in_alphabet(const std::string& token) const {
  return std::find(spec_.alphabet.begin(), spec_.alphabet.end(), token) !=
         spec_.alphabet.end();
}

Term Grammar::phon_constant(const std::string& s) const {
  const SignType& st = sign_type(s);
  return Term::constant("phon[" + st.name + "]",
                        Type::fun(Type::base(st.name), phon_type()));
}

Term Grammar::sem_constant(const std::string& s) const {
  const SignType& st = sign_type(s);
  return Term::constant("sem[" + st.name + "]", Type::fun(Type::base(st.name), st.sem));
}

Term Grammar::lexical_constant(const LexicalEntry& entry) const {
  return Term::constant(entry.name, Type::base(entry.sign_type));
}

Type Grammar::rule_type(const RuleEntry& rule) const {
  return rule_type_of(spec_, rule);
}

Term Grammar::rule_constant(const RuleEntry& rule) const {
  return Term::constant(rule.name, rule_type(rule));
}

Term word_to_phon(const Grammar& g, const Word& w) {
  for (const std::string& tok : w.tokens()) {
    if (!g.in_alphabet(tok)) {
      throw GrammarError("token `" + tok + "` is not in the alphabet");
    }
  }
  return phon_of_tokens(w.tokens());
}

Theorem phon_homomorphism(const Grammar& g, const Word& u, const Word& v) {
  const Theory& th = g.theory();
  Term pv = word_to_phon(g, v);
  Term pu = word_to_phon(g, u);
  if (u.empty()) {
    Term args[] = {pv};
    return kernel::sym(
        th, derived::spec_all(th, args, derived::definition(th, kCatLeftId)));
  }
  if (v.empty()) {
    Term args[] = {pu};
    return kernel::sym(
        th, derived::spec_all(th, args, derived::definition(th, kCatRightId)));
  }
  if (u.size() == 1) return kernel::refl(th, word_to_phon(g, u + v));
  Word rest = u.slice(1, u.size());
  Term head = phon_atom(u.tokens().front());
  Theorem ih = phon_homomorphism(g, rest, v);
  Theorem lifted = derived::ap_term(
      th, cat_const(), derived::pair_cong(th, kernel::refl(th, head), ih));
  Term args[] = {head, word_to_phon(g, rest), pv};
  Theorem assoc = derived::spec_all(th, args, derived::definition(th, kCatAssoc));
  return kernel::trans(th, lifted, assoc);
}

}  // namespace hog
