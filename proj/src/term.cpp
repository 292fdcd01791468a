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

#include "hog/term.hpp"

#include <algorithm>
#include <cctype>

#include "hog/error.hpp"

namespace hog {

Term Term::var(std::string name, Type type) {
  auto node = std::make_shared<Node>(Node{Kind::kVar, std::move(type),
                                          std::move(name), nullptr, nullptr});
  return Term(std::move(node));
}

Term Term::constant(std::string name, Type type) {
  auto node = std::make_shared<Node>(Node{Kind::kConst, std::move(type),
                                          std::move(name), nullptr, nullptr});
  return Term(std::move(node));
}

Term Term::app(const Term& fn, const Term& arg) {
  const Type& ft = fn.type();
  if (!ft.is_fun()) {
    throw TypeError("application of non-function " + to_string(fn) + " : " +
                    to_string(ft));
  }
  if (!(ft.domain() == arg.type())) {
    throw TypeError("argument " + to_string(arg) + " : " +
                    to_string(arg.type()) + " does not match domain of " +
                    to_string(fn) + " : " + to_string(ft));
  }
  auto node = std::make_shared<Node>(
      Node{Kind::kApp, ft.codomain(), {}, fn.node_, arg.node_});
  return Term(std::move(node));
}

Term Term::abs(const Term& bound, const Term& body) {
  if (!bound.is_var()) {
    throw TypeError("abstraction over non-variable " + to_string(bound));
  }
  auto node = std::make_shared<Node>(
      Node{Kind::kAbs, Type::fun(bound.type(), body.type()), {}, bound.node_,
           body.node_});
  return Term(std::move(node));
}

Term Term::pair(const Term& left, const Term& right) {
  auto node = std::make_shared<Node>(
      Node{Kind::kPair, Type::prod(left.type(), right.type()), {}, left.node_,
           right.node_});
  return Term(std::move(node));
}

Term Term::proj(int index, const Term& operand) {
  if (index != 1 && index != 2) {
    throw TypeError("projection index must be 1 or 2");
  }
  const Type& ot = operand.type();
  if (!ot.is_prod()) {
    throw TypeError("projection of non-pair " + to_string(operand) + " : " +
                    to_string(ot));
  }
  auto node = std::make_shared<Node>(
      Node{Kind::kProj, index == 1 ? ot.left() : ot.right(), {}, operand.node_,
           nullptr, index});
  return Term(std::move(node));
}

const std::string& Term::name() const {
  if (!is_var() && !is_const()) {
    throw TypeError("not a variable or constant: " + to_string(*this));
  }
  return node_->name;
}

Term Term::fn() const {
  if (!is_app()) throw TypeError("not an application: " + to_string(*this));
  return Term(node_->first);
}

Term Term::arg() const {
  if (!is_app()) throw TypeError("not an application: " + to_string(*this));
  return Term(node_->second);
}

Term Term::bound() const {
  if (!is_abs()) throw TypeError("not an abstraction: " + to_string(*this));
  return Term(node_->first);
}

Term Term::body() const {
  if (!is_abs()) throw TypeError("not an abstraction: " + to_string(*this));
  return Term(node_->second);
}

Term Term::left() const {
  if (!is_pair()) throw TypeError("not a pair: " + to_string(*this));
  return Term(node_->first);
}

Term Term::right() const {
  if (!is_pair()) throw TypeError("not a pair: " + to_string(*this));
  return Term(node_->second);
}

int Term::index() const {
  if (!is_proj()) throw TypeError("not a projection: " + to_string(*this));
  return node_->index;
}

Term Term::operand() const {
  if (!is_proj()) throw TypeError("not a projection: " + to_string(*this));
  return Term(node_->first);
}

bool same_var(const Term& a, const Term& b) {
  return a.is_var() && b.is_var() && a.name() == b.name() &&
         a.type() == b.type();
}

namespace {

using BoundPairs = std::vector<std::pair<Term, Term>>;

bool alpha_rec(const Term& a, const Term& b, BoundPairs& env) {
  if (a.same_node(b) && env.empty()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar: {
      // Innermost binder for each side decides the correspondence.
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool left = same_var(it->first, a);
        bool right = same_var(it->second, b);
        if (left || right) return left && right;
      }
      return same_var(a, b);
    }
    case Term::Kind::kConst:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::kApp:
      return alpha_rec(a.fn(), b.fn(), env) && alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::kAbs: {
      if (!(a.bound().type() == b.bound().type())) return false;
      env.emplace_back(a.bound(), b.bound());
      bool eq = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return eq;
    }
    case Term::Kind::kPair:
      return alpha_rec(a.left(), b.left(), env) &&
             alpha_rec(a.right(), b.right(), env);
    case Term::Kind::kProj:
      return a.index() == b.index() && alpha_rec(a.operand(), b.operand(), env);
  }
  return false;
}

void free_vars_rec(const Term& t, std::vector<Term>& bound,
                   std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      for (const Term& b : bound) {
        if (same_var(b, t)) return;
      }
      for (const Term& o : out) {
        if (same_var(o, t)) return;
      }
      out.push_back(t);
      return;
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      free_vars_rec(t.fn(), bound, out);
      free_vars_rec(t.arg(), bound, out);
      return;
    case Term::Kind::kAbs:
      bound.push_back(t.bound());
      free_vars_rec(t.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::kPair:
      free_vars_rec(t.left(), bound, out);
      free_vars_rec(t.right(), bound, out);
      return;
    case Term::Kind::kProj:
      free_vars_rec(t.operand(), bound, out);
      return;
  }
}

Term subst_rec(const Term& t, const Substitution& sigma) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      for (const auto& [v, r] : sigma) {
        if (same_var(v, t)) return r;
      }
      return t;
    case Term::Kind::kConst:
      return t;
    case Term::Kind::kApp: {
      Term f = subst_rec(t.fn(), sigma);
      Term a = subst_rec(t.arg(), sigma);
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(f, a);
    }
    case Term::Kind::kPair: {
      Term l = subst_rec(t.left(), sigma);
      Term r = subst_rec(t.right(), sigma);
      if (l.same_node(t.left()) && r.same_node(t.right())) return t;
      return Term::pair(l, r);
    }
    case Term::Kind::kProj: {
      Term o = subst_rec(t.operand(), sigma);
      if (o.same_node(t.operand())) return t;
      return Term::proj(t.index(), o);
    }
    case Term::Kind::kAbs: {
      const Term x = t.bound();
      const Term body = t.body();
      Substitution live;
      for (const auto& entry : sigma) {
        if (!same_var(entry.first, x) && occurs_free(entry.first, body)) {
          live.push_back(entry);
        }
      }
      if (live.empty()) return t;
      bool capture = false;
      for (const auto& entry : live) {
        if (occurs_free(x, entry.second)) {
          capture = true;
          break;
        }
      }
      if (!capture) return Term::abs(x, subst_rec(body, live));
      std::set<std::string> avoid;
      collect_free_names(body, avoid);
      for (const auto& [v, r] : live) {
        avoid.insert(v.name());
        collect_free_names(r, avoid);
      }
      Term fresh = Term::var(variant_name(x.name(), avoid), x.type());
      live.emplace_back(x, fresh);
      return Term::abs(fresh, subst_rec(body, live));
    }
  }
  return t;
}

void key_rec(const Term& t, std::vector<Term>& bound, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      for (std::size_t i = bound.size(); i-- > 0;) {
        if (same_var(bound[i], t)) {
          out += "#" + std::to_string(bound.size() - 1 - i);
          return;
        }
      }
      out += "v:" + t.name() + ":" + to_string(t.type());
      return;
    case Term::Kind::kConst:
      out += "c:" + t.name() + ":" + to_string(t.type());
      return;
    case Term::Kind::kApp:
      out += "(";
      key_rec(t.fn(), bound, out);
      out += " ";
      key_rec(t.arg(), bound, out);
      out += ")";
      return;
    case Term::Kind::kAbs:
      out += "(L:" + to_string(t.bound().type()) + ".";
      bound.push_back(t.bound());
      key_rec(t.body(), bound, out);
      bound.pop_back();
      out += ")";
      return;
    case Term::Kind::kPair:
      out += "<";
      key_rec(t.left(), bound, out);
      out += ",";
      key_rec(t.right(), bound, out);
      out += ">";
      return;
    case Term::Kind::kProj:
      out += "(P" + std::to_string(t.index()) + " ";
      key_rec(t.operand(), bound, out);
      out += ")";
      return;
  }
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  BoundPairs env;
  return alpha_rec(a, b, env);
}

std::vector<Term> free_vars(const Term& t) {
  std::vector<Term> bound;
  std::vector<Term> out;
  free_vars_rec(t, bound, out);
  return out;
}

bool occurs_free(const Term& v, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return same_var(v, t);
    case Term::Kind::kConst:
      return false;
    case Term::Kind::kApp:
      return occurs_free(v, t.fn()) || occurs_free(v, t.arg());
    case Term::Kind::kAbs:
      return !same_var(v, t.bound()) && occurs_free(v, t.body());
    case Term::Kind::kPair:
      return occurs_free(v, t.left()) || occurs_free(v, t.right());
    case Term::Kind::kProj:
      return occurs_free(v, t.operand());
  }
  return false;
}

void collect_free_names(const Term& t, std::set<std::string>& out) {
  for (const Term& v : free_vars(t)) out.insert(v.name());
}

std::string variant_name(const std::string& base,
                         const std::set<std::string>& avoid) {
  if (!avoid.contains(base)) return base;
  // Strip an existing numeric suffix so repeated renaming stays short.
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  if (stem.empty()) stem = "v";
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

Term substitute(const Term& t, const Substitution& sigma) {
  for (const auto& [v, r] : sigma) {
    if (!v.is_var()) {
      throw TypeError("substitution for non-variable " + to_string(v));
    }
    if (!(v.type() == r.type())) {
      throw TypeError("substitution type mismatch: " + to_string(v) + " := " +
                      to_string(r));
    }
  }
  return subst_rec(t, sigma);
}

Term substitute(const Term& t, const Term& v, const Term& r) {
  return substitute(t, Substitution{{v, r}});
}

bool is_beta_redex(const Term& t) { return t.is_app() && t.fn().is_abs(); }

Term beta_reduce(const Term& redex) {
  if (!is_beta_redex(redex)) {
    throw TypeError("not a beta redex: " + to_string(redex));
  }
  Term f = redex.fn();
  return substitute(f.body(), f.bound(), redex.arg());
}

bool is_beta_normal(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return true;
    case Term::Kind::kApp:
      return !t.fn().is_abs() && is_beta_normal(t.fn()) &&
             is_beta_normal(t.arg());
    case Term::Kind::kAbs:
      return is_beta_normal(t.body());
    case Term::Kind::kPair:
      return is_beta_normal(t.left()) && is_beta_normal(t.right());
    case Term::Kind::kProj:
      return is_beta_normal(t.operand());
  }
  return true;
}

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return t;
    case Term::Kind::kApp: {
      if (t.fn().is_abs()) return beta_normalize(beta_reduce(t));
      Term f = beta_normalize(t.fn());
      if (f.is_abs()) return beta_normalize(beta_reduce(Term::app(f, t.arg())));
      Term a = beta_normalize(t.arg());
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(f, a);
    }
    case Term::Kind::kAbs: {
      Term b = beta_normalize(t.body());
      if (b.same_node(t.body())) return t;
      return Term::abs(t.bound(), b);
    }
    case Term::Kind::kPair: {
      Term l = beta_normalize(t.left());
      Term r = beta_normalize(t.right());
      if (l.same_node(t.left()) && r.same_node(t.right())) return t;
      return Term::pair(l, r);
    }
    case Term::Kind::kProj: {
      Term o = beta_normalize(t.operand());
      if (o.same_node(t.operand())) return t;
      return Term::proj(t.index(), o);
    }
  }
  return t;
}

std::string alpha_key(const Term& t) {
  std::vector<Term> bound;
  std::string out;
  key_rec(t, bound, out);
  return out;
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return 1;
    case Term::Kind::kApp:
      return 1 + term_size(t.fn()) + term_size(t.arg());
    case Term::Kind::kAbs:
      return 1 + term_size(t.body());
    case Term::Kind::kPair:
      return 1 + term_size(t.left()) + term_size(t.right());
    case Term::Kind::kProj:
      return 1 + term_size(t.operand());
  }
  return 1;
}

}  // namespace hog
