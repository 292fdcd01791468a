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

#include "hog/cond.hpp"

#include "hog/derived.hpp"
#include "hog/error.hpp"
#include "hog/logic.hpp"

namespace hog {
namespace {

namespace k = kernel;
namespace d = derived;

void require_type(const Theory& th, const Type& ty, const char* rule) {
  if (!th.signature().well_formed(ty)) {
    throw TypeError(std::string(rule) + ": undeclared type " + to_string(ty));
  }
}

void require_same(const Term& x, const Term& y, const char* rule) {
  if (!(x.type() == y.type())) {
    throw TypeError(std::string(rule) + ": branch types differ: " +
                    to_string(x.type()) + " vs " + to_string(y.type()));
  }
}

void require_bool(const Term& z, const char* rule) {
  if (!(z.type() == bool_type())) {
    throw TypeError(std::string(rule) + ": condition is not Bool: " +
                    to_string(z));
  }
}

// Reduces projections of the argument triple inside the body of cond-def
// without entering the branches themselves.
Theorem reduce_selectors(const Theory& th, const Term& t) {
  if (t.is_proj()) return d::proj_reduce_conv(th, t);
  if (is_not(t)) return d::ap_term(th, t.fn(), reduce_selectors(th, t.arg()));
  if (is_binop(t, names::kAnd) || is_binop(t, names::kOr) || is_eq(t)) {
    Theorem l = d::ap_term(th, t.fn().fn(), reduce_selectors(th, t.fn().arg()));
    return k::cong(th, l, reduce_selectors(th, t.arg()));
  }
  return k::refl(th, t);
}

// |- cond <x, <y, v>> = x (v = T) or = y (v = F), for variables x, y : ty.
Theorem cond_schema(const Theory& th, const Type& ty, bool value) {
  std::string key = std::string(value ? "cond_true:" : "cond_false:") +
                    to_string(ty);
  return th.memo(key, [&] {
    Term x = Term::var("x", ty);
    Term y = Term::var("y", ty);
    Term v = value ? truth() : falsity();
    Term triple = Term::pair(x, Term::pair(y, v));
    Theorem unfolded = d::ap_thm(th, d::definition(th, "cond-def", std::span(&ty, 1)),
                                 triple);
    Theorem reduced = k::beta(th, rhs(unfolded.conclusion()));
    Term pred = rhs(reduced.conclusion()).arg();
    Term w = pred.bound();
    Theorem body = reduce_selectors(th, pred.body());
    Term chosen = mk_eq(w, value ? x : y);
    Theorem simplified = d::taut(th, mk_eq(rhs(body.conclusion()), chosen));
    Theorem lam = k::abs(th, w, k::trans(th, body, simplified));
    Theorem under_iota = d::ap_term(th, iota_const(ty), lam);
    Theorem desc = d::spec(th, value ? x : y,
                           d::definition(th, "description", std::span(&ty, 1)));
    Theorem steps[] = {unfolded, reduced, under_iota, desc};
    return d::trans_chain(th, steps);
  });
}

Theorem cond_value(const Theory& th, const Term& x, const Term& y, bool value,
                   const char* rule) {
  require_same(x, y, rule);
  require_type(th, x.type(), rule);
  Theorem schema = cond_schema(th, x.type(), value);
  return k::inst(th, schema,
                 {{Term::var("x", x.type()), x}, {Term::var("y", x.type()), y}});
}

}  // namespace

Term cond_constant(const Theory& th, const Type& ty) {
  require_type(th, ty, "cond_constant");
  return cond_const(ty);
}

Theorem cond_true(const Theory& th, const Term& x, const Term& y) {
  return cond_value(th, x, y, true, "cond_true");
}

Theorem cond_false(const Theory& th, const Term& x, const Term& y) {
  return cond_value(th, x, y, false, "cond_false");
}

Theorem cond_distrib(const Theory& th, const Term& f, const Term& x,
                     const Term& y, const Term& z) {
  const char* rule = "cond_distrib";
  require_same(x, y, rule);
  require_bool(z, rule);
  if (!f.type().is_fun() || !(f.type().domain() == x.type())) {
    throw TypeError(std::string(rule) + ": function does not accept " +
                    to_string(x.type()));
  }
  require_type(th, f.type(), rule);
  const Type a = x.type();
  const Type b = f.type().codomain();
  Term fv = Term::var("f", f.type());
  Term xv = Term::var("x", a);
  Term yv = Term::var("y", a);
  Term zv = Term::var("z", bool_type());
  Theorem schema = th.memo(
      "cond_distrib:" + to_string(a) + ":" + to_string(b), [&] {
        Term fx = Term::app(fv, xv);
        Term fy = Term::app(fv, yv);
        Term goal = mk_eq(Term::app(fv, mk_cond(xv, yv, zv)), mk_cond(fx, fy, zv));
        return d::cases_on(
            th, zv, Term::abs(zv, goal), [&](const Term&, const Term& value) {
              bool t = is_truth(value);
              Theorem inner = t ? cond_true(th, xv, yv) : cond_false(th, xv, yv);
              Theorem outer = t ? cond_true(th, fx, fy) : cond_false(th, fx, fy);
              return k::trans(th, d::ap_term(th, fv, inner), k::sym(th, outer));
            });
      });
  return k::inst(th, schema, {{fv, f}, {xv, x}, {yv, y}, {zv, z}});
}

Theorem or_as_cond(const Theory& th, const Term& x, const Term& y) {
  require_bool(x, "or_as_cond");
  require_bool(y, "or_as_cond");
  Term xv = Term::var("x", bool_type());
  Term yv = Term::var("y", bool_type());
  Theorem schema = th.memo("or_as_cond", [&] {
    return d::taut(th, mk_eq(mk_or(xv, yv), mk_cond(xv, yv, xv)));
  });
  return k::inst(th, schema, {{xv, x}, {yv, y}});
}

Theorem cond_idem(const Theory& th, const Term& x, const Term& z) {
  require_bool(z, "cond_idem");
  require_type(th, x.type(), "cond_idem");
  Term xv = Term::var("x", x.type());
  Term zv = Term::var("z", bool_type());
  Theorem schema = th.memo("cond_idem:" + to_string(x.type()), [&] {
    Term goal = mk_eq(mk_cond(xv, xv, zv), xv);
    return d::cases_on(th, zv, Term::abs(zv, goal),
                       [&](const Term&, const Term& value) {
                         return is_truth(value) ? cond_true(th, xv, xv)
                                                : cond_false(th, xv, xv);
                       });
  });
  return k::inst(th, schema, {{xv, x}, {zv, z}});
}

}  // namespace hog
