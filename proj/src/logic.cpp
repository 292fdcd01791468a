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

#include "hog/logic.hpp"

#include "hog/error.hpp"

namespace hog {
namespace {

Type binop_type(const Type& ty) {
  return Type::fun(ty, Type::fun(ty, bool_type()));
}

Type predicate_type(const Type& ty) { return Type::fun(ty, bool_type()); }

}  // namespace

Term truth() {
  static const Term t = Term::constant(std::string(names::kTrue), bool_type());
  return t;
}

Term falsity() {
  static const Term t =
      Term::constant(std::string(names::kFalse), bool_type());
  return t;
}

Term not_const() {
  static const Term t = Term::constant(
      std::string(names::kNot), Type::fun(bool_type(), bool_type()));
  return t;
}

Term and_const() {
  static const Term t =
      Term::constant(std::string(names::kAnd), binop_type(bool_type()));
  return t;
}

Term or_const() {
  static const Term t =
      Term::constant(std::string(names::kOr), binop_type(bool_type()));
  return t;
}

Term imp_const() {
  static const Term t =
      Term::constant(std::string(names::kImp), binop_type(bool_type()));
  return t;
}

Term eq_const(const Type& ty) {
  return Term::constant(std::string(names::kEq), binop_type(ty));
}

Term cond_const(const Type& ty) {
  return Term::constant(std::string(names::kCond),
                        Type::fun(cond_argument_type(ty), ty));
}

Term iota_const(const Type& ty) {
  return Term::constant(std::string(names::kIota),
                        Type::fun(predicate_type(ty), ty));
}

Term forall_const(const Type& ty) {
  return Term::constant(std::string(names::kForall),
                        Type::fun(predicate_type(ty), bool_type()));
}

Term exists_const(const Type& ty) {
  return Term::constant(std::string(names::kExists),
                        Type::fun(predicate_type(ty), bool_type()));
}

Term mk_eq(const Term& lhs, const Term& rhs) {
  if (!(lhs.type() == rhs.type())) {
    throw TypeError("equation between different types: " + to_string(lhs) +
                    " and " + to_string(rhs));
  }
  return Term::app(Term::app(eq_const(lhs.type()), lhs), rhs);
}

Term mk_not(const Term& p) { return Term::app(not_const(), p); }

Term mk_and(const Term& p, const Term& q) {
  return Term::app(Term::app(and_const(), p), q);
}

Term mk_or(const Term& p, const Term& q) {
  return Term::app(Term::app(or_const(), p), q);
}

Term mk_imp(const Term& p, const Term& q) {
  return Term::app(Term::app(imp_const(), p), q);
}

Term mk_forall(const Term& v, const Term& body) {
  return Term::app(forall_const(v.type()), Term::abs(v, body));
}

Term mk_exists(const Term& v, const Term& body) {
  return Term::app(exists_const(v.type()), Term::abs(v, body));
}

Term mk_cond(const Term& x, const Term& y, const Term& z) {
  if (!(x.type() == y.type()) || !(z.type() == bool_type())) {
    throw TypeError("ill-typed conditional branches " + to_string(x) + ", " +
                    to_string(y) + ", " + to_string(z));
  }
  return Term::app(cond_const(x.type()),
                   Term::pair(x, Term::pair(y, z)));
}

bool is_const_named(const Term& t, std::string_view name) {
  return t.is_const() && t.name() == name;
}

bool is_truth(const Term& t) { return is_const_named(t, names::kTrue); }
bool is_falsity(const Term& t) { return is_const_named(t, names::kFalse); }

bool is_eq(const Term& t) {
  return t.is_app() && t.fn().is_app() &&
         is_const_named(t.fn().fn(), names::kEq);
}

std::pair<Term, Term> dest_eq(const Term& t) {
  if (!is_eq(t)) throw KernelError("not an equation: " + to_string(t));
  return {t.fn().arg(), t.arg()};
}

Term lhs(const Term& eq) { return dest_eq(eq).first; }
Term rhs(const Term& eq) { return dest_eq(eq).second; }

bool is_binop(const Term& t, std::string_view op) {
  return t.is_app() && t.fn().is_app() && is_const_named(t.fn().fn(), op);
}

std::pair<Term, Term> dest_binop(const Term& t, std::string_view op) {
  if (!is_binop(t, op)) {
    throw KernelError("expected `" + std::string(op) + "` application: " +
                      to_string(t));
  }
  return {t.fn().arg(), t.arg()};
}

bool is_not(const Term& t) {
  return t.is_app() && is_const_named(t.fn(), names::kNot);
}

Term dest_not(const Term& t) {
  if (!is_not(t)) throw KernelError("not a negation: " + to_string(t));
  return t.arg();
}

bool is_forall(const Term& t) {
  return t.is_app() && is_const_named(t.fn(), names::kForall) &&
         t.arg().is_abs();
}

std::pair<Term, Term> dest_forall(const Term& t) {
  if (!is_forall(t)) {
    throw KernelError("not a universal quantification: " + to_string(t));
  }
  return {t.arg().bound(), t.arg().body()};
}

bool is_cond(const Term& t) {
  return t.is_app() && is_const_named(t.fn(), names::kCond) &&
         t.arg().is_pair() && t.arg().right().is_pair();
}

std::tuple<Term, Term, Term> dest_cond(const Term& t) {
  if (!is_cond(t)) throw KernelError("not a conditional: " + to_string(t));
  Term triple = t.arg();
  return {triple.left(), triple.right().left(), triple.right().right()};
}

std::pair<Term, std::vector<Term>> strip_comb(const Term& t) {
  std::vector<Term> args;
  Term head = t;
  while (head.is_app()) {
    args.push_back(head.arg());
    head = head.fn();
  }
  return {head, std::vector<Term>(args.rbegin(), args.rend())};
}

Term list_mk_comb(const Term& f, const std::vector<Term>& args) {
  Term t = f;
  for (const Term& a : args) t = Term::app(t, a);
  return t;
}

Term cat_const() {
  static const Term t = Term::constant(
      std::string(names::kCat),
      Type::fun(Type::prod(phon_type(), phon_type()), phon_type()));
  return t;
}

Term empty_phon() {
  static const Term t =
      Term::constant(std::string(names::kEmptyPhon), phon_type());
  return t;
}

std::string phon_atom_name(const std::string& token) {
  return "/" + token + "/";
}

Term phon_atom(const std::string& token) {
  return Term::constant(phon_atom_name(token), phon_type());
}

Term mk_cat(const Term& u, const Term& v) {
  return Term::app(cat_const(), Term::pair(u, v));
}

bool is_cat(const Term& t) {
  return t.is_app() && is_const_named(t.fn(), names::kCat) &&
         t.arg().is_pair();
}

std::pair<Term, Term> dest_cat(const Term& t) {
  if (!is_cat(t)) throw KernelError("not a concatenation: " + to_string(t));
  return {t.arg().left(), t.arg().right()};
}

Term phon_of_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return empty_phon();
  Term t = phon_atom(tokens.back());
  for (std::size_t i = tokens.size() - 1; i-- > 0;) {
    t = mk_cat(phon_atom(tokens[i]), t);
  }
  return t;
}

}  // namespace hog
