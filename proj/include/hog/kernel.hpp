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

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hog/term.hpp"
#include "hog/theory.hpp"

namespace hog {

enum class Rule {
  kAxiom,
  kRefl,
  kSym,
  kTrans,
  kCong,
  kAbs,
  kBeta,
  kAssume,
  kEqMp,
  kDeductAntisym,
  kInst,
  kPairBeta,
};

// Trace spelling of a rule ("refl", "eq_mp", ...).
const char* rule_name(Rule rule);

namespace detail {
struct TheoremFactory;
}

// A certified judgement `hypotheses |- conclusion` in a theory. Theorems
// can only be produced by the functions in namespace kernel; each one
// records the rule instance that produced it, so a theorem is also its own
// proof object.
class Theorem {
 public:
  // Alpha-canonical, sorted, duplicate-free.
  const std::vector<Term>& hypotheses() const { return data_->hyps; }
  const Term& conclusion() const { return data_->concl; }
  TheoryId theory_id() const { return data_->theory; }

  Rule rule() const { return data_->rule; }
  const std::vector<Theorem>& premises() const { return data_->premises; }
  const std::vector<Term>& term_args() const { return data_->terms; }
  const std::string& axiom_name() const { return data_->axiom; }
  const std::vector<Type>& axiom_types() const { return data_->types; }

  // Stable identity for proof DAG traversal.
  const void* identity() const { return data_.get(); }

 private:
  friend struct detail::TheoremFactory;

  struct Data {
    TheoryId theory;
    std::vector<Term> hyps;
    std::vector<std::string> hyp_keys;
    Term concl;
    Rule rule;
    std::vector<Theorem> premises;
    std::vector<Term> terms;
    std::string axiom;
    std::vector<Type> types;
  };

  explicit Theorem(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// "h1, h2 |- c" in canonical syntax.
std::string to_string(const Theorem& th);

// Primitive inference rules. Every rule checks that its premises belong to
// `th` and that term arguments typecheck in `th`; violations throw
// KernelError.
namespace kernel {

// |- t = t
Theorem refl(const Theory& th, const Term& t);
// A |- l = r  ==>  A |- r = l
Theorem sym(const Theory& th, const Theorem& eq);
// A |- a = b, B |- b' = c (b, b' alpha-equal)  ==>  A u B |- a = c
Theorem trans(const Theory& th, const Theorem& ab, const Theorem& bc);
// A |- f = g, B |- x = y  ==>  A u B |- f x = g y
Theorem cong(const Theory& th, const Theorem& fun_eq, const Theorem& arg_eq);
// A |- l = r, v not free in A  ==>  A |- (\v. l) = (\v. r)
Theorem abs(const Theory& th, const Term& v, const Theorem& eq);
// |- (\x. b) a = b[a/x]
Theorem beta(const Theory& th, const Term& redex);
// {p} |- p
Theorem assume(const Theory& th, const Term& p);
// A |- p = q, B |- p' (p, p' alpha-equal)  ==>  A u B |- q
Theorem eq_mp(const Theory& th, const Theorem& eq, const Theorem& p);
// A |- p, B |- q  ==>  (A - {q}) u (B - {p}) |- p = q
Theorem deduct_antisym(const Theory& th, const Theorem& a, const Theorem& b);
// A |- p  ==>  A[sigma] |- p[sigma]
Theorem inst(const Theory& th, const Theorem& thm, const Substitution& sigma);
// |- fst <a, b> = a   and   |- snd <a, b> = b
Theorem pair_beta(const Theory& th, const Term& proj_redex);
// |- statement of a logical schema instance or of an axiom of Gamma.
Theorem axiom(const Theory& th, const std::string& name,
              std::span<const Type> instance = {});

}  // namespace kernel
}  // namespace hog
