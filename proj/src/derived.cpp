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

#include "hog/derived.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

#include "hog/cond.hpp"
#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/syntax.hpp"

namespace hog::derived {
namespace {

namespace k = ::hog::kernel;

[[noreturn]] void fail(const char* rule, const std::string& why) {
  throw KernelError(std::string(rule) + ": " + why);
}

Term fresh_var(const std::string& base, const Type& ty,
               std::initializer_list<Term> avoid,
               std::span<const Term> more = {}) {
  std::set<std::string> names;
  for (const Term& t : avoid) collect_free_names(t, names);
  for (const Term& t : more) collect_free_names(t, names);
  return Term::var(variant_name(base, names), ty);
}

Theorem chain(const Theory& th, const Theorem& a, const std::optional<Theorem>& b) {
  return b ? k::trans(th, a, *b) : a;
}

std::optional<Theorem> head_beta_opt(const Theory& th, const Term& t) {
  if (!t.is_app()) return std::nullopt;
  if (t.fn().is_abs()) {
    Theorem b = k::beta(th, t);
    return chain(th, b, head_beta_opt(th, rhs(b.conclusion())));
  }
  auto f = head_beta_opt(th, t.fn());
  if (!f) return std::nullopt;
  Theorem c = ap_thm(th, *f, t.arg());
  if (!rhs(f->conclusion()).is_abs()) return c;
  Theorem b = k::beta(th, rhs(c.conclusion()));
  return chain(th, k::trans(th, c, b), head_beta_opt(th, rhs(b.conclusion())));
}

// Mirrors the reduction order of beta_normalize so the right-hand side is
// the same term, not merely an alpha-variant.
std::optional<Theorem> norm_opt(const Theory& th, const Term& t) {
  if (is_beta_normal(t)) return std::nullopt;
  switch (t.kind()) {
    case Term::Kind::kApp: {
      if (t.fn().is_abs()) {
        Theorem b = k::beta(th, t);
        return chain(th, b, norm_opt(th, rhs(b.conclusion())));
      }
      auto f = norm_opt(th, t.fn());
      if (f && rhs(f->conclusion()).is_abs()) {
        Theorem c = ap_thm(th, *f, t.arg());
        Theorem b = k::beta(th, rhs(c.conclusion()));
        return chain(th, k::trans(th, c, b), norm_opt(th, rhs(b.conclusion())));
      }
      auto x = norm_opt(th, t.arg());
      return k::cong(th, f ? *f : k::refl(th, t.fn()),
                     x ? *x : k::refl(th, t.arg()));
    }
    case Term::Kind::kAbs:
      return k::abs(th, t.bound(), *norm_opt(th, t.body()));
    case Term::Kind::kPair: {
      auto l = norm_opt(th, t.left());
      auto r = norm_opt(th, t.right());
      return pair_cong(th, l ? *l : k::refl(th, t.left()),
                       r ? *r : k::refl(th, t.right()));
    }
    case Term::Kind::kProj:
      return proj_cong(th, t.index(), *norm_opt(th, t.operand()));
    default:
      return std::nullopt;
  }
}

std::optional<Theorem> proj_reduce_opt(const Theory& th, const Term& t) {
  if (!t.is_proj()) return std::nullopt;
  auto inner = proj_reduce_opt(th, t.operand());
  Term operand = inner ? rhs(inner->conclusion()) : t.operand();
  if (!operand.is_pair()) {
    return inner ? std::optional(proj_cong(th, t.index(), *inner)) : std::nullopt;
  }
  Theorem step = k::pair_beta(th, Term::proj(t.index(), operand));
  return inner ? k::trans(th, proj_cong(th, t.index(), *inner), step) : step;
}

}  // namespace

Theorem definition(const Theory& th, std::string_view name,
                   std::span<const Type> instance) {
  std::string key = "def:" + std::string(name);
  for (const Type& ty : instance) key += " " + to_string(ty);
  return th.memo(key, [&] {
    return k::axiom(th, std::string(name), instance);
  });
}

Theorem ap_term(const Theory& th, const Term& f, const Theorem& eq) {
  return k::cong(th, k::refl(th, f), eq);
}

Theorem ap_thm(const Theory& th, const Theorem& eq, const Term& x) {
  return k::cong(th, eq, k::refl(th, x));
}

Theorem pair_cong(const Theory& th, const Theorem& left, const Theorem& right) {
  auto [a, a2] = dest_eq(left.conclusion());
  auto [b, b2] = dest_eq(right.conclusion());
  if (left.rule() == Rule::kRefl && right.rule() == Rule::kRefl) {
    return k::refl(th, Term::pair(a, b));
  }
  Term u = fresh_var("u", a.type(), {a, a2, b, b2});
  Term v = fresh_var("v", b.type(), {a, a2, b, b2, u});
  Term mk = Term::abs(u, Term::abs(v, Term::pair(u, v)));
  Theorem c = k::cong(th, ap_term(th, mk, left), right);
  Theorem l = head_beta_conv(th, lhs(c.conclusion()));
  Theorem r = head_beta_conv(th, rhs(c.conclusion()));
  return k::trans(th, k::sym(th, l), k::trans(th, c, r));
}

Theorem proj_cong(const Theory& th, int index, const Theorem& eq) {
  Term a = lhs(eq.conclusion());
  Term p = fresh_var("p", a.type(), {a, rhs(eq.conclusion())});
  Term sel = Term::abs(p, Term::proj(index, p));
  Theorem c = ap_term(th, sel, eq);
  Theorem l = k::beta(th, lhs(c.conclusion()));
  Theorem r = k::beta(th, rhs(c.conclusion()));
  return k::trans(th, k::sym(th, l), k::trans(th, c, r));
}

Theorem trans_chain(const Theory& th, std::span<const Theorem> steps) {
  if (steps.empty()) fail("trans_chain", "no steps");
  Theorem out = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) out = k::trans(th, out, steps[i]);
  return out;
}

Theorem unfold(const Theory& th, const Theorem& defn,
               std::span<const Term> args) {
  Theorem out = defn;
  for (const Term& a : args) {
    out = ap_thm(th, out, a);
    out = k::trans(th, out, k::beta(th, rhs(out.conclusion())));
  }
  return out;
}

Theorem head_beta_conv(const Theory& th, const Term& t) {
  auto r = head_beta_opt(th, t);
  return r ? *r : k::refl(th, t);
}

Theorem beta_norm_conv(const Theory& th, const Term& t) {
  auto r = norm_opt(th, t);
  return r ? *r : k::refl(th, t);
}

Theorem proj_reduce_conv(const Theory& th, const Term& t) {
  auto r = proj_reduce_opt(th, t);
  return r ? *r : k::refl(th, t);
}

// ------------------------------------------------------------ connectives

Theorem truth_thm(const Theory& th) {
  return th.memo("truth", [&] {
    Theorem d = definition(th, "truth-def");
    Term id_eq = rhs(d.conclusion());
    return k::eq_mp(th, k::sym(th, d), k::refl(th, lhs(id_eq)));
  });
}

Theorem eqt_intro(const Theory& th, const Theorem& p) {
  return k::deduct_antisym(th, p, truth_thm(th));
}

Theorem eqt_elim(const Theory& th, const Theorem& p_eq_t) {
  if (!is_truth(rhs(p_eq_t.conclusion()))) {
    fail("eqt_elim", "not of the form p = T: " + to_string(p_eq_t.conclusion()));
  }
  return k::eq_mp(th, k::sym(th, p_eq_t), truth_thm(th));
}

Theorem conj(const Theory& th, const Theorem& p, const Theorem& q) {
  const Term& P = p.conclusion();
  const Term& Q = q.conclusion();
  Term args[] = {P, Q};
  Theorem u = unfold(th, definition(th, "and-def"), args);
  Type b = bool_type();
  Term f = fresh_var("f", Type::fun(b, Type::fun(b, b)), {P, Q},
                     p.hypotheses());
  f = fresh_var(f.name(), f.type(), {f, P, Q}, q.hypotheses());
  Theorem c = k::cong(th, ap_term(th, f, eqt_intro(th, p)), eqt_intro(th, q));
  return k::eq_mp(th, k::sym(th, u), k::abs(th, f, c));
}

namespace {

Theorem conjunct(const Theory& th, const Theorem& pq, int which) {
  auto [P, Q] = dest_binop(pq.conclusion(), names::kAnd);
  Term args[] = {P, Q};
  Theorem e = k::eq_mp(th, unfold(th, definition(th, "and-def"), args), pq);
  Term a = fresh_var("a", bool_type(), {P, Q});
  Term b = fresh_var("b", bool_type(), {P, Q, a});
  Term sel = Term::abs(a, Term::abs(b, which == 1 ? a : b));
  Theorem c = ap_thm(th, e, sel);
  Theorem l = head_beta_conv(th, lhs(c.conclusion()));
  Theorem r = head_beta_conv(th, rhs(c.conclusion()));
  return eqt_elim(th, k::trans(th, k::sym(th, l), k::trans(th, c, r)));
}

}  // namespace

Theorem conjunct1(const Theory& th, const Theorem& pq) { return conjunct(th, pq, 1); }
Theorem conjunct2(const Theory& th, const Theorem& pq) { return conjunct(th, pq, 2); }

Theorem mp(const Theory& th, const Theorem& imp, const Theorem& p) {
  auto [P, Q] = dest_binop(imp.conclusion(), names::kImp);
  Term args[] = {P, Q};
  Theorem e = k::eq_mp(th, unfold(th, definition(th, "imp-def"), args), imp);
  return conjunct2(th, k::eq_mp(th, k::sym(th, e), p));
}

Theorem disch(const Theory& th, const Term& p, const Theorem& q) {
  const Term& Q = q.conclusion();
  Theorem with_p = conj(th, k::assume(th, p), q);
  Theorem back = conjunct1(th, k::assume(th, mk_and(p, Q)));
  Theorem d = k::deduct_antisym(th, with_p, back);
  Term args[] = {p, Q};
  Theorem u = unfold(th, definition(th, "imp-def"), args);
  return k::eq_mp(th, k::sym(th, u), d);
}

Theorem undisch(const Theory& th, const Theorem& imp) {
  auto [P, Q] = dest_binop(imp.conclusion(), names::kImp);
  return mp(th, imp, k::assume(th, P));
}

Theorem gen(const Theory& th, const Term& x, const Theorem& p) {
  Theorem a = k::abs(th, x, eqt_intro(th, p));
  Term args[] = {lhs(a.conclusion())};
  Theorem u = unfold(th, definition(th, "forall-def", std::span(&x.type(), 1)),
                     args);
  return k::eq_mp(th, k::sym(th, u), a);
}

Theorem spec(const Theory& th, const Term& t, const Theorem& all) {
  const Term& c = all.conclusion();
  if (!c.is_app() || !is_const_named(c.fn(), names::kForall)) {
    fail("spec", "not a universal: " + to_string(c));
  }
  Term pred = c.arg();
  Type ty = pred.type().domain();
  Term args[] = {pred};
  Theorem u = unfold(th, definition(th, "forall-def", std::span(&ty, 1)), args);
  Theorem e = k::eq_mp(th, u, all);
  Theorem applied = ap_thm(th, e, t);
  Theorem l = pred.is_abs() ? k::beta(th, lhs(applied.conclusion()))
                            : k::refl(th, lhs(applied.conclusion()));
  Theorem r = k::beta(th, rhs(applied.conclusion()));
  return eqt_elim(th, k::trans(th, k::sym(th, l), k::trans(th, applied, r)));
}

Theorem spec_all(const Theory& th, std::span<const Term> ts,
                 const Theorem& all) {
  Theorem out = all;
  for (const Term& t : ts) out = spec(th, t, out);
  return out;
}

namespace {

Theorem or_intro(const Theory& th, const Term& P, const Term& Q,
                 const Theorem& given, bool left) {
  Term args[] = {P, Q};
  Theorem u = unfold(th, definition(th, "or-def"), args);
  Term r = fresh_var("r", bool_type(), {P, Q}, given.hypotheses());
  Term side = left ? mk_imp(P, r) : mk_imp(Q, r);
  Theorem got_r = mp(th, k::assume(th, side), given);
  Theorem d1 = disch(th, mk_imp(Q, r), got_r);
  Theorem d2 = disch(th, mk_imp(P, r), d1);
  return k::eq_mp(th, k::sym(th, u), gen(th, r, d2));
}

}  // namespace

Theorem disj1(const Theory& th, const Theorem& p, const Term& q) {
  return or_intro(th, p.conclusion(), q, p, true);
}

Theorem disj2(const Theory& th, const Term& p, const Theorem& q) {
  return or_intro(th, p, q.conclusion(), q, false);
}

Theorem disj_cases(const Theory& th, const Theorem& pq, const Theorem& from_p,
                   const Theorem& from_q) {
  auto [P, Q] = dest_binop(pq.conclusion(), names::kOr);
  Term args[] = {P, Q};
  Theorem e = k::eq_mp(th, unfold(th, definition(th, "or-def"), args), pq);
  Theorem s = spec(th, from_p.conclusion(), e);
  Theorem m = mp(th, s, disch(th, P, from_p));
  return mp(th, m, disch(th, Q, from_q));
}

Theorem contr(const Theory& th, const Term& t, const Theorem& falsum) {
  if (!is_falsity(falsum.conclusion())) {
    fail("contr", "premise is not F: " + to_string(falsum.conclusion()));
  }
  Theorem all = k::eq_mp(th, definition(th, "false-def"), falsum);
  return spec(th, t, all);
}

Theorem not_elim(const Theory& th, const Theorem& not_p) {
  Term args[] = {dest_not(not_p.conclusion())};
  return k::eq_mp(th, unfold(th, definition(th, "not-def"), args), not_p);
}

Theorem not_intro(const Theory& th, const Theorem& p_eq_f) {
  auto [P, f] = dest_eq(p_eq_f.conclusion());
  if (!is_falsity(f)) fail("not_intro", "not of the form p = F");
  Term args[] = {P};
  Theorem u = unfold(th, definition(th, "not-def"), args);
  return k::eq_mp(th, k::sym(th, u), p_eq_f);
}

Theorem prove_hyp(const Theory& th, const Theorem& a, const Theorem& b) {
  return k::eq_mp(th, k::deduct_antisym(th, a, b), a);
}

Theorem bool_cases(const Theory& th, const Term& z) {
  return spec(th, z, definition(th, "bool-cases"));
}

Theorem cases_on(const Theory& th, const Term& z, const Term& pred,
                 const Branch& branch) {
  if (!pred.is_abs() || !(pred.bound().type() == bool_type())) {
    fail("cases_on", "predicate must abstract a Bool variable");
  }
  Term pz = Term::app(pred, z);
  Theorem goal = k::beta(th, pz);
  auto arm = [&](const Term& value) {
    Theorem h = k::assume(th, mk_eq(z, value));
    Theorem moved = ap_term(th, pred, h);
    Theorem inst = k::beta(th, rhs(moved.conclusion()));
    Theorem eq = k::trans(th, k::sym(th, goal), k::trans(th, moved, inst));
    Theorem proved = branch(rhs(inst.conclusion()), value);
    return k::eq_mp(th, k::sym(th, eq), proved);
  };
  return disj_cases(th, bool_cases(th, z), arm(truth()), arm(falsity()));
}

// ------------------------------------------------------- propositional

bool is_propositional_node(const Term& t) {
  if (is_not(t)) return true;
  if (is_binop(t, names::kAnd) || is_binop(t, names::kOr) ||
      is_binop(t, names::kImp)) {
    return true;
  }
  if (is_eq(t)) return lhs(t).type() == bool_type();
  return is_cond(t) && t.type() == bool_type();
}

namespace {

std::vector<Term> children(const Term& t) {
  if (is_not(t)) return {t.arg()};
  if (is_cond(t)) {
    auto [x, y, z] = dest_cond(t);
    return {x, y, z};
  }
  return {t.fn().arg(), t.arg()};
}

Term rebuild(const Term& t, const std::vector<Term>& kids) {
  if (is_not(t)) return mk_not(kids[0]);
  if (is_cond(t)) return mk_cond(kids[0], kids[1], kids[2]);
  return Term::app(Term::app(t.fn().fn(), kids[0]), kids[1]);
}

void collect_atoms(const Term& t, std::vector<Term>& out,
                   std::set<std::string>& seen) {
  if (is_truth(t) || is_falsity(t)) return;
  if (is_propositional_node(t)) {
    for (const Term& c : children(t)) collect_atoms(c, out, seen);
    return;
  }
  if (seen.insert(alpha_key(t)).second) out.push_back(t);
}

Term abstract_atom(const Term& t, const Term& atom, const Term& v) {
  if (alpha_equal(t, atom)) return v;
  if (!is_propositional_node(t)) return t;
  std::vector<Term> kids = children(t);
  for (Term& c : kids) c = abstract_atom(c, atom, v);
  return rebuild(t, kids);
}

bool evaluate(const Term& t, const std::map<std::string, bool>& atoms) {
  if (is_truth(t)) return true;
  if (is_falsity(t)) return false;
  if (is_propositional_node(t)) {
    std::vector<Term> c = children(t);
    if (is_not(t)) return !evaluate(c[0], atoms);
    if (is_cond(t)) {
      return evaluate(c[2], atoms) ? evaluate(c[0], atoms)
                                   : evaluate(c[1], atoms);
    }
    bool a = evaluate(c[0], atoms);
    bool b = evaluate(c[1], atoms);
    if (is_binop(t, names::kAnd)) return a && b;
    if (is_binop(t, names::kOr)) return a || b;
    if (is_binop(t, names::kImp)) return !a || b;
    return a == b;
  }
  auto it = atoms.find(alpha_key(t));
  if (it == atoms.end()) fail("taut", "unassigned atom " + to_string(t));
  return it->second;
}

bool ground_value(const Term& g) { return evaluate(g, {}); }

Theorem prove_true(const Theory& th, const Term& g);
Theorem prove_false(const Theory& th, const Term& g);

// {F} |- g and {g} |- F combine into |- g = F.
Theorem eqf_intro(const Theory& th, const Term& g) {
  return k::deduct_antisym(th, contr(th, g, k::assume(th, falsity())),
                           prove_false(th, g));
}

// |- cond <x, <y, z>> = x or = y, according to the value of z.
Theorem cond_select(const Theory& th, const Term& g) {
  auto [x, y, z] = dest_cond(g);
  bool zv = ground_value(z);
  Theorem zeq = zv ? eqt_intro(th, prove_true(th, z)) : eqf_intro(th, z);
  Theorem triple = pair_cong(th, k::refl(th, x),
                             pair_cong(th, k::refl(th, y), zeq));
  Theorem moved = ap_term(th, g.fn(), triple);
  return k::trans(th, moved, zv ? cond_true(th, x, y) : cond_false(th, x, y));
}

Theorem prove_true_uncached(const Theory& th, const Term& g) {
  if (is_truth(g)) return truth_thm(th);
  if (!is_propositional_node(g)) fail("taut", "not ground: " + to_string(g));
  std::vector<Term> c = children(g);
  if (is_not(g)) return not_intro(th, eqf_intro(th, c[0]));
  if (is_cond(g)) {
    Theorem sel = cond_select(th, g);
    return k::eq_mp(th, k::sym(th, sel), prove_true(th, rhs(sel.conclusion())));
  }
  bool a = ground_value(c[0]);
  bool b = ground_value(c[1]);
  if (is_binop(g, names::kAnd)) {
    return conj(th, prove_true(th, c[0]), prove_true(th, c[1]));
  }
  if (is_binop(g, names::kOr)) {
    return a ? disj1(th, prove_true(th, c[0]), c[1])
             : disj2(th, c[0], prove_true(th, c[1]));
  }
  if (is_binop(g, names::kImp)) {
    return a ? disch(th, c[0], prove_true(th, c[1]))
             : disch(th, c[0], contr(th, c[1], prove_false(th, c[0])));
  }
  if (a) return k::deduct_antisym(th, prove_true(th, c[0]), prove_true(th, c[1]));
  (void)b;
  return k::deduct_antisym(th, contr(th, c[0], prove_false(th, c[1])),
                           contr(th, c[1], prove_false(th, c[0])));
}

Theorem prove_false_uncached(const Theory& th, const Term& g) {
  if (is_falsity(g)) return k::assume(th, g);
  if (!is_propositional_node(g)) fail("taut", "not ground: " + to_string(g));
  std::vector<Term> c = children(g);
  Theorem h = k::assume(th, g);
  if (is_not(g)) return k::eq_mp(th, not_elim(th, h), prove_true(th, c[0]));
  if (is_cond(g)) {
    Theorem sel = cond_select(th, g);
    return prove_hyp(th, k::eq_mp(th, sel, h),
                     prove_false(th, rhs(sel.conclusion())));
  }
  bool a = ground_value(c[0]);
  if (is_binop(g, names::kAnd)) {
    return a ? prove_hyp(th, conjunct2(th, h), prove_false(th, c[1]))
             : prove_hyp(th, conjunct1(th, h), prove_false(th, c[0]));
  }
  if (is_binop(g, names::kOr)) {
    return disj_cases(th, h, prove_false(th, c[0]), prove_false(th, c[1]));
  }
  if (is_binop(g, names::kImp)) {
    return prove_hyp(th, mp(th, h, prove_true(th, c[0])),
                     prove_false(th, c[1]));
  }
  if (a) {
    return prove_hyp(th, k::eq_mp(th, h, prove_true(th, c[0])),
                     prove_false(th, c[1]));
  }
  return prove_hyp(th, k::eq_mp(th, k::sym(th, h), prove_true(th, c[1])),
                   prove_false(th, c[0]));
}

Theorem prove_true(const Theory& th, const Term& g) {
  if (!ground_value(g)) fail("taut", "false ground term " + to_string(g));
  return th.memo("ground+:" + alpha_key(g),
                 [&] { return prove_true_uncached(th, g); });
}

Theorem prove_false(const Theory& th, const Term& g) {
  if (ground_value(g)) fail("taut", "true ground term " + to_string(g));
  return th.memo("ground-:" + alpha_key(g),
                 [&] { return prove_false_uncached(th, g); });
}

Theorem taut_rec(const Theory& th, const Term& p) {
  std::vector<Term> atoms = propositional_atoms(p);
  if (atoms.empty()) return prove_true(th, p);
  Term v = fresh_var("v", bool_type(), {p});
  Term pred = Term::abs(v, abstract_atom(p, atoms.front(), v));
  return cases_on(th, atoms.front(), pred,
                  [&](const Term& inst, const Term&) { return taut_rec(th, inst); });
}

}  // namespace

std::vector<Term> propositional_atoms(const Term& t) {
  std::vector<Term> out;
  std::set<std::string> seen;
  collect_atoms(t, out, seen);
  return out;
}

Theorem taut(const Theory& th, const Term& p) {
  if (!(p.type() == bool_type())) fail("taut", "not a proposition");
  std::vector<Term> atoms = propositional_atoms(p);
  if (atoms.size() > 16) fail("taut", "too many atoms");
  std::vector<std::string> keys;
  for (const Term& a : atoms) keys.push_back(alpha_key(a));
  for (std::uint32_t row = 0; row < (1u << atoms.size()); ++row) {
    std::map<std::string, bool> assignment;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      assignment[keys[i]] = (row >> i) & 1u;
    }
    if (!evaluate(p, assignment)) {
      fail("taut", "not a tautology: " + print_pretty(p));
    }
  }
  return taut_rec(th, p);
}

Theorem eval_ground(const Theory& th, const Term& g) {
  if (!propositional_atoms(g).empty()) {
    fail("eval_ground", "term has atoms: " + to_string(g));
  }
  return ground_value(g) ? eqt_intro(th, prove_true(th, g)) : eqf_intro(th, g);
}

}  // namespace hog::derived
