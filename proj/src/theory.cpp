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

#include "hog/theory.hpp"

#include <atomic>
#include <mutex>

#include "hog/error.hpp"
#include "hog/kernel.hpp"
#include "hog/logic.hpp"

namespace hog {

Signature::Signature() {
  for (const Type& t : {bool_type(), ind_type(), prop_type(), phon_type()}) {
    base_types_.insert(t.name());
  }
  for (const Term& c :
       {truth(), falsity(), not_const(), and_const(), or_const(), imp_const()}) {
    constants_.emplace(c.name(), c.type());
  }
}

bool Signature::has_base_type(const std::string& name) const {
  return base_types_.contains(name);
}

std::optional<Type> Signature::constant_type(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

bool Signature::well_formed(const Type& ty) const {
  switch (ty.kind()) {
    case Type::Kind::kBase:
      return has_base_type(ty.name());
    case Type::Kind::kFun:
      return well_formed(ty.domain()) && well_formed(ty.codomain());
    case Type::Kind::kProd:
      return well_formed(ty.left()) && well_formed(ty.right());
  }
  return false;
}

bool Signature::is_family(const std::string& name) {
  return name == names::kEq || name == names::kCond || name == names::kIota ||
         name == names::kForall || name == names::kExists;
}

Type Signature::family_type(const std::string& name, const Type& param) {
  if (name == names::kEq) return eq_const(param).type();
  if (name == names::kCond) return cond_const(param).type();
  if (name == names::kIota) return iota_const(param).type();
  if (name == names::kForall) return forall_const(param).type();
  if (name == names::kExists) return exists_const(param).type();
  throw TypeError("unknown constant family " + name);
}

std::optional<Type> Signature::family_parameter(const std::string& name,
                                                const Type& type) {
  if (!is_family(name) || !type.is_fun()) return std::nullopt;
  Type param = bool_type();
  if (name == names::kEq) {
    param = type.domain();
  } else if (name == names::kCond || name == names::kIota) {
    param = type.codomain();
  } else {
    const Type& d = type.domain();
    if (!d.is_fun()) return std::nullopt;
    param = d.domain();
  }
  if (!(family_type(name, param) == type)) return std::nullopt;
  return param;
}

void Signature::add_base_type(const std::string& name) {
  base_types_.insert(name);
}

void Signature::add_constant(const std::string& name, const Type& type) {
  constants_.insert_or_assign(name, type);
}

Type type_of(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (!sig.well_formed(t.type())) {
        throw TypeError("variable " + t.name() + " has undeclared type " +
                        to_string(t.type()));
      }
      return t.type();
    case Term::Kind::kConst: {
      if (Signature::is_family(t.name())) {
        auto param = Signature::family_parameter(t.name(), t.type());
        if (!param || !sig.well_formed(*param)) {
          throw TypeError("bad instance of " + t.name() + " at " +
                          to_string(t.type()));
        }
        return t.type();
      }
      auto declared = sig.constant_type(t.name());
      if (!declared) throw TypeError("unknown constant " + t.name());
      if (!(*declared == t.type())) {
        throw TypeError("constant " + t.name() + " used at type " +
                        to_string(t.type()) + " but declared " +
                        to_string(*declared));
      }
      return t.type();
    }
    case Term::Kind::kApp:
      type_of(t.fn(), sig);
      type_of(t.arg(), sig);
      return t.type();
    case Term::Kind::kAbs:
      type_of(t.bound(), sig);
      type_of(t.body(), sig);
      return t.type();
    case Term::Kind::kPair:
      type_of(t.left(), sig);
      type_of(t.right(), sig);
      return t.type();
    case Term::Kind::kProj:
      type_of(t.operand(), sig);
      return t.type();
  }
  return t.type();
}

const std::vector<AxiomSchema>& logical_axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = {
      {"truth-def", 0},        {"false-def", 0},      {"not-def", 0},
      {"and-def", 0},          {"imp-def", 0},        {"or-def", 0},
      {"forall-def", 1},       {"exists-def", 1},     {"bool-cases", 0},
      {"extensionality", 2},   {"description", 1},    {"cond-def", 1},
      {"fst-pair", 2},         {"snd-pair", 2},       {"surjective-pairing", 2},
  };
  return schemas;
}

Term logical_axiom(const std::string& name, std::span<const Type> instance) {
  const AxiomSchema* schema = nullptr;
  for (const auto& s : logical_axiom_schemas()) {
    if (s.name == name) schema = &s;
  }
  if (schema == nullptr) throw KernelError("unknown axiom " + name);
  if (instance.size() != schema->arity) {
    throw KernelError("axiom " + name + " takes " +
                      std::to_string(schema->arity) + " type parameter(s)");
  }
  const Type b = bool_type();
  const Term p = Term::var("p", b);
  const Term q = Term::var("q", b);
  const Term r = Term::var("r", b);

  if (name == "truth-def") {
    Term id = Term::abs(p, p);
    return mk_eq(truth(), mk_eq(id, id));
  }
  if (name == "false-def") {
    return mk_eq(falsity(), mk_forall(p, p));
  }
  if (name == "not-def") {
    return mk_eq(not_const(), Term::abs(p, mk_eq(p, falsity())));
  }
  if (name == "and-def") {
    Type ft = Type::fun(b, Type::fun(b, b));
    Term f = Term::var("f", ft);
    Term lhs_fn = Term::abs(f, list_mk_comb(f, {p, q}));
    Term rhs_fn = Term::abs(f, list_mk_comb(f, {truth(), truth()}));
    return mk_eq(and_const(),
                 Term::abs(p, Term::abs(q, mk_eq(lhs_fn, rhs_fn))));
  }
  if (name == "imp-def") {
    return mk_eq(imp_const(),
                 Term::abs(p, Term::abs(q, mk_eq(mk_and(p, q), p))));
  }
  if (name == "or-def") {
    Term body = mk_forall(r, mk_imp(mk_imp(p, r), mk_imp(mk_imp(q, r), r)));
    return mk_eq(or_const(), Term::abs(p, Term::abs(q, body)));
  }
  if (name == "forall-def") {
    const Type& a = instance[0];
    Term pred = Term::var("P", Type::fun(a, b));
    Term x = Term::var("x", a);
    return mk_eq(forall_const(a),
                 Term::abs(pred, mk_eq(pred, Term::abs(x, truth()))));
  }
  if (name == "exists-def") {
    const Type& a = instance[0];
    Term pred = Term::var("P", Type::fun(a, b));
    Term x = Term::var("x", a);
    Term body = mk_not(mk_forall(x, mk_not(Term::app(pred, x))));
    return mk_eq(exists_const(a), Term::abs(pred, body));
  }
  if (name == "bool-cases") {
    Term z = Term::var("z", b);
    return mk_forall(z, mk_or(mk_eq(z, truth()), mk_eq(z, falsity())));
  }
  if (name == "extensionality") {
    Type ft = Type::fun(instance[0], instance[1]);
    Term f = Term::var("f", ft);
    Term g = Term::var("g", ft);
    Term x = Term::var("x", instance[0]);
    Term pointwise =
        mk_forall(x, mk_eq(Term::app(f, x), Term::app(g, x)));
    return mk_forall(f, mk_forall(g, mk_imp(pointwise, mk_eq(f, g))));
  }
  if (name == "description") {
    const Type& a = instance[0];
    Term x = Term::var("x", a);
    Term y = Term::var("y", a);
    Term pick = Term::app(iota_const(a), Term::abs(y, mk_eq(y, x)));
    return mk_forall(x, mk_eq(pick, x));
  }
  if (name == "cond-def") {
    const Type& a = instance[0];
    Term t = Term::var("t", cond_argument_type(a));
    Term w = Term::var("w", a);
    Term first = Term::proj(1, t);
    Term second = Term::proj(1, Term::proj(2, t));
    Term test = Term::proj(2, Term::proj(2, t));
    Term body = mk_or(mk_and(test, mk_eq(w, first)),
                      mk_and(mk_not(test), mk_eq(w, second)));
    Term def = Term::abs(t, Term::app(iota_const(a), Term::abs(w, body)));
    return mk_eq(cond_const(a), def);
  }
  if (name == "fst-pair" || name == "snd-pair") {
    Term x = Term::var("x", instance[0]);
    Term y = Term::var("y", instance[1]);
    Term pr = Term::pair(x, y);
    Term stmt = name == "fst-pair" ? mk_eq(Term::proj(1, pr), x)
                                   : mk_eq(Term::proj(2, pr), y);
    return mk_forall(x, mk_forall(y, stmt));
  }
  // surjective-pairing
  Term pv = Term::var("p", Type::prod(instance[0], instance[1]));
  return mk_forall(
      pv, mk_eq(Term::pair(Term::proj(1, pv), Term::proj(2, pv)), pv));
}

struct Theory::MemoTable {
  std::mutex mutex;
  std::map<std::string, Theorem> entries;
};

namespace {

TheoryId next_theory_id() {
  static std::atomic<TheoryId> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

Theory::Theory(Signature signature, std::vector<NamedAxiom> axioms)
    : id_(next_theory_id()),
      signature_(std::move(signature)),
      axioms_(std::move(axioms)),
      memo_(std::make_unique<MemoTable>()) {}

Theory::~Theory() = default;

std::shared_ptr<const Theory> Theory::logical_core() {
  return TheoryBuilder().freeze();
}

std::optional<Term> Theory::axiom_statement(
    const std::string& name, std::span<const Type> instance) const {
  for (const auto& s : logical_axiom_schemas()) {
    if (s.name == name) {
      for (const Type& t : instance) {
        if (!signature_.well_formed(t)) {
          throw KernelError("axiom " + name + " instantiated at undeclared type " +
                            to_string(t));
        }
      }
      return logical_axiom(name, instance);
    }
  }
  for (const auto& ax : axioms_) {
    if (ax.name == name) {
      if (!instance.empty()) {
        throw KernelError("axiom " + name + " takes no type parameters");
      }
      return ax.statement;
    }
  }
  return std::nullopt;
}

Theorem Theory::memo(const std::string& key,
                     const std::function<Theorem()>& make) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->entries.find(key);
    if (it != memo_->entries.end()) return it->second;
  }
  Theorem made = make();
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto [it, inserted] = memo_->entries.emplace(key, made);
  return it->second;
}

void TheoryBuilder::add_base_type(const std::string& name) {
  if (signature_.has_base_type(name)) {
    throw KernelError("duplicate base type " + name);
  }
  signature_.add_base_type(name);
}

void TheoryBuilder::add_constant(const std::string& name, const Type& type) {
  if (Signature::is_family(name) || signature_.constant_type(name)) {
    throw KernelError("duplicate constant " + name);
  }
  if (!signature_.well_formed(type)) {
    throw KernelError("constant " + name + " has undeclared type " +
                      to_string(type));
  }
  signature_.add_constant(name, type);
}

void TheoryBuilder::add_axiom(const std::string& name, const Term& statement) {
  for (const auto& s : logical_axiom_schemas()) {
    if (s.name == name) throw KernelError("axiom name reserved: " + name);
  }
  for (const auto& ax : axioms_) {
    if (ax.name == name) throw KernelError("duplicate axiom " + name);
  }
  Type ty = type_of(statement, signature_);
  if (!(ty == bool_type())) {
    throw KernelError("axiom " + name + " is not a proposition");
  }
  axioms_.push_back({name, statement});
}

std::shared_ptr<const Theory> TheoryBuilder::freeze() && {
  return std::shared_ptr<const Theory>(
      new Theory(std::move(signature_), std::move(axioms_)));
}

}  // namespace hog
