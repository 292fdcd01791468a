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

#include "hog/kernel.hpp"

#include <algorithm>

#include "hog/error.hpp"
#include "hog/logic.hpp"

namespace hog {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kAxiom: return "axiom";
    case Rule::kRefl: return "refl";
    case Rule::kSym: return "sym";
    case Rule::kTrans: return "trans";
    case Rule::kCong: return "cong";
    case Rule::kAbs: return "abs";
    case Rule::kBeta: return "beta";
    case Rule::kAssume: return "assume";
    case Rule::kEqMp: return "eq_mp";
    case Rule::kDeductAntisym: return "deduct_antisym";
    case Rule::kInst: return "inst";
    case Rule::kPairBeta: return "pair_beta";
  }
  return "?";
}

std::string to_string(const Theorem& th) {
  std::string out;
  for (std::size_t i = 0; i < th.hypotheses().size(); ++i) {
    if (i > 0) out += " ; ";
    out += to_string(th.hypotheses()[i]);
  }
  if (!out.empty()) out += " ";
  out += "|- " + to_string(th.conclusion());
  return out;
}

namespace detail {

// The only code path that constructs Theorem values.
struct TheoremFactory {
  struct Hyps {
    std::vector<Term> terms;
    std::vector<std::string> keys;
  };

  static Hyps none() { return {}; }

  static Hyps single(const Term& p) { return {{p}, {alpha_key(p)}}; }

  static const Hyps of(const Theorem& t) {
    return {t.data_->hyps, t.data_->hyp_keys};
  }

  static Hyps unite(const Hyps& a, const Hyps& b) {
    Hyps out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.keys.size() || j < b.keys.size()) {
      if (j == b.keys.size() || (i < a.keys.size() && a.keys[i] < b.keys[j])) {
        out.terms.push_back(a.terms[i]);
        out.keys.push_back(a.keys[i]);
        ++i;
      } else if (i == a.keys.size() || b.keys[j] < a.keys[i]) {
        out.terms.push_back(b.terms[j]);
        out.keys.push_back(b.keys[j]);
        ++j;
      } else {
        out.terms.push_back(a.terms[i]);
        out.keys.push_back(a.keys[i]);
        ++i;
        ++j;
      }
    }
    return out;
  }

  static Hyps remove(const Hyps& a, const Term& p) {
    const std::string key = alpha_key(p);
    Hyps out;
    for (std::size_t i = 0; i < a.keys.size(); ++i) {
      if (a.keys[i] != key) {
        out.terms.push_back(a.terms[i]);
        out.keys.push_back(a.keys[i]);
      }
    }
    return out;
  }

  static Hyps normalize(std::vector<Term> terms) {
    std::vector<std::pair<std::string, Term>> keyed;
    for (Term& t : terms) keyed.emplace_back(alpha_key(t), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Hyps out;
    for (auto& [k, t] : keyed) {
      if (!out.keys.empty() && out.keys.back() == k) continue;
      out.keys.push_back(k);
      out.terms.push_back(t);
    }
    return out;
  }

  static Theorem make(const Theory& th, Hyps hyps, Term concl, Rule rule,
                      std::vector<Theorem> premises, std::vector<Term> terms,
                      std::string axiom = {}, std::vector<Type> types = {}) {
    auto data = std::make_shared<Theorem::Data>(Theorem::Data{
        th.id(), std::move(hyps.terms), std::move(hyps.keys), std::move(concl),
        rule, std::move(premises), std::move(terms), std::move(axiom),
        std::move(types)});
    return Theorem(std::move(data));
  }
};

}  // namespace detail

namespace kernel {
namespace {

using Factory = detail::TheoremFactory;

[[noreturn]] void fail(const char* rule, const std::string& why) {
  throw KernelError(std::string(rule) + ": " + why);
}

void check_owner(const Theory& th, const Theorem& t, const char* rule) {
  if (!th.frozen()) fail(rule, "theory is not frozen");
  if (t.theory_id() != th.id()) {
    fail(rule, "premise belongs to a different theory");
  }
}

void check_term(const Theory& th, const Term& t, const char* rule) {
  try {
    type_of(t, th.signature());
  } catch (const TypeError& e) {
    fail(rule, e.what());
  }
}

std::pair<Term, Term> equation(const Theorem& t, const char* rule) {
  if (!is_eq(t.conclusion())) {
    fail(rule, "premise is not an equation: " + to_string(t.conclusion()));
  }
  return dest_eq(t.conclusion());
}

}  // namespace

Theorem refl(const Theory& th, const Term& t) {
  check_term(th, t, "refl");
  return Factory::make(th, Factory::none(), mk_eq(t, t), Rule::kRefl, {}, {t});
}

Theorem sym(const Theory& th, const Theorem& eq) {
  check_owner(th, eq, "sym");
  auto [l, r] = equation(eq, "sym");
  return Factory::make(th, Factory::of(eq), mk_eq(r, l), Rule::kSym, {eq}, {});
}

Theorem trans(const Theory& th, const Theorem& ab, const Theorem& bc) {
  check_owner(th, ab, "trans");
  check_owner(th, bc, "trans");
  auto [a, b] = equation(ab, "trans");
  auto [b2, c] = equation(bc, "trans");
  if (!alpha_equal(b, b2)) {
    fail("trans", "middle terms differ: " + to_string(b) + " vs " +
                      to_string(b2));
  }
  return Factory::make(th, Factory::unite(Factory::of(ab), Factory::of(bc)),
                       mk_eq(a, c), Rule::kTrans, {ab, bc}, {});
}

Theorem cong(const Theory& th, const Theorem& fun_eq, const Theorem& arg_eq) {
  check_owner(th, fun_eq, "cong");
  check_owner(th, arg_eq, "cong");
  auto [f, g] = equation(fun_eq, "cong");
  auto [x, y] = equation(arg_eq, "cong");
  Term fx = f;
  Term gy = g;
  try {
    fx = Term::app(f, x);
    gy = Term::app(g, y);
  } catch (const TypeError& e) {
    fail("cong", e.what());
  }
  return Factory::make(
      th, Factory::unite(Factory::of(fun_eq), Factory::of(arg_eq)),
      mk_eq(fx, gy), Rule::kCong, {fun_eq, arg_eq}, {});
}

Theorem abs(const Theory& th, const Term& v, const Theorem& eq) {
  check_owner(th, eq, "abs");
  if (!v.is_var()) fail("abs", "not a variable: " + to_string(v));
  check_term(th, v, "abs");
  auto [l, r] = equation(eq, "abs");
  for (const Term& h : eq.hypotheses()) {
    if (occurs_free(v, h)) {
      fail("abs", "variable " + v.name() + " is free in hypothesis " +
                      to_string(h));
    }
  }
  return Factory::make(th, Factory::of(eq),
                       mk_eq(Term::abs(v, l), Term::abs(v, r)), Rule::kAbs,
                       {eq}, {v});
}

Theorem beta(const Theory& th, const Term& redex) {
  check_term(th, redex, "beta");
  if (!is_beta_redex(redex)) {
    fail("beta", "not a beta redex: " + to_string(redex));
  }
  return Factory::make(th, Factory::none(), mk_eq(redex, beta_reduce(redex)),
                       Rule::kBeta, {}, {redex});
}

Theorem assume(const Theory& th, const Term& p) {
  check_term(th, p, "assume");
  if (!(p.type() == bool_type())) {
    fail("assume", "not a proposition: " + to_string(p));
  }
  return Factory::make(th, Factory::single(p), p, Rule::kAssume, {}, {p});
}

Theorem eq_mp(const Theory& th, const Theorem& eq, const Theorem& p) {
  check_owner(th, eq, "eq_mp");
  check_owner(th, p, "eq_mp");
  auto [l, r] = equation(eq, "eq_mp");
  if (!alpha_equal(l, p.conclusion())) {
    fail("eq_mp", "left side " + to_string(l) + " does not match " +
                      to_string(p.conclusion()));
  }
  return Factory::make(th, Factory::unite(Factory::of(eq), Factory::of(p)), r,
                       Rule::kEqMp, {eq, p}, {});
}

Theorem deduct_antisym(const Theory& th, const Theorem& a, const Theorem& b) {
  check_owner(th, a, "deduct_antisym");
  check_owner(th, b, "deduct_antisym");
  auto hyps = Factory::unite(Factory::remove(Factory::of(a), b.conclusion()),
                             Factory::remove(Factory::of(b), a.conclusion()));
  return Factory::make(th, std::move(hyps),
                       mk_eq(a.conclusion(), b.conclusion()),
                       Rule::kDeductAntisym, {a, b}, {});
}

Theorem inst(const Theory& th, const Theorem& thm, const Substitution& sigma) {
  check_owner(th, thm, "inst");
  std::vector<Term> args;
  for (const auto& [v, r] : sigma) {
    if (!v.is_var()) fail("inst", "not a variable: " + to_string(v));
    if (!(v.type() == r.type())) {
      fail("inst", "type mismatch for " + v.name());
    }
    check_term(th, v, "inst");
    check_term(th, r, "inst");
    args.push_back(v);
    args.push_back(r);
  }
  std::vector<Term> hyps;
  for (const Term& h : thm.hypotheses()) hyps.push_back(substitute(h, sigma));
  return Factory::make(th, Factory::normalize(std::move(hyps)),
                       substitute(thm.conclusion(), sigma), Rule::kInst, {thm},
                       std::move(args));
}

Theorem pair_beta(const Theory& th, const Term& proj_redex) {
  check_term(th, proj_redex, "pair_beta");
  if (!proj_redex.is_proj() || !proj_redex.operand().is_pair()) {
    fail("pair_beta", "not a projection of a pair: " + to_string(proj_redex));
  }
  Term pr = proj_redex.operand();
  Term result = proj_redex.index() == 1 ? pr.left() : pr.right();
  return Factory::make(th, Factory::none(), mk_eq(proj_redex, result),
                       Rule::kPairBeta, {}, {proj_redex});
}

Theorem axiom(const Theory& th, const std::string& name,
              std::span<const Type> instance) {
  auto stmt = th.axiom_statement(name, instance);
  if (!stmt) fail("axiom", "unknown axiom " + name);
  return Factory::make(th, Factory::none(), *stmt, Rule::kAxiom, {}, {}, name,
                       std::vector<Type>(instance.begin(), instance.end()));
}

}  // namespace kernel
}  // namespace hog
