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

// Derived inference rules. Everything here is a composition of the
// primitive rules in kernel.hpp and so cannot produce anything the kernel
// would not.
#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hog/kernel.hpp"
#include "hog/term.hpp"
#include "hog/theory.hpp"

namespace hog::derived {

// Logical axiom instance, cached per theory.
Theorem definition(const Theory& th, std::string_view name,
                   std::span<const Type> instance = {});

// Equality plumbing.
Theorem ap_term(const Theory& th, const Term& f, const Theorem& eq);
Theorem ap_thm(const Theory& th, const Theorem& eq, const Term& x);
Theorem pair_cong(const Theory& th, const Theorem& left, const Theorem& right);
Theorem proj_cong(const Theory& th, int index, const Theorem& eq);
Theorem trans_chain(const Theory& th, std::span<const Theorem> steps);

// From |- c = \x1 ... xn. b, gives |- c a1 ... an = b[a1..an].
Theorem unfold(const Theory& th, const Theorem& defn,
               std::span<const Term> args);

// |- t = t' reducing only redexes on the head spine of t.
Theorem head_beta_conv(const Theory& th, const Term& t);
// |- t = beta_normalize(t).
Theorem beta_norm_conv(const Theory& th, const Term& t);
// |- t = t' where t is a chain of projections ending in pair literals.
Theorem proj_reduce_conv(const Theory& th, const Term& t);

// Propositional rules.
Theorem truth_thm(const Theory& th);
Theorem eqt_intro(const Theory& th, const Theorem& p);
Theorem eqt_elim(const Theory& th, const Theorem& p_eq_t);
Theorem conj(const Theory& th, const Theorem& p, const Theorem& q);
Theorem conjunct1(const Theory& th, const Theorem& pq);
Theorem conjunct2(const Theory& th, const Theorem& pq);
Theorem mp(const Theory& th, const Theorem& imp, const Theorem& p);
Theorem disch(const Theory& th, const Term& p, const Theorem& q);
Theorem undisch(const Theory& th, const Theorem& imp);
Theorem gen(const Theory& th, const Term& x, const Theorem& p);
Theorem spec(const Theory& th, const Term& t, const Theorem& all);
Theorem spec_all(const Theory& th, std::span<const Term> ts,
                 const Theorem& all);
Theorem disj1(const Theory& th, const Theorem& p, const Term& q);
Theorem disj2(const Theory& th, const Term& p, const Theorem& q);
Theorem disj_cases(const Theory& th, const Theorem& pq, const Theorem& from_p,
                   const Theorem& from_q);
Theorem contr(const Theory& th, const Term& t, const Theorem& falsum);
Theorem not_elim(const Theory& th, const Theorem& not_p);
Theorem not_intro(const Theory& th, const Theorem& p_eq_f);
Theorem prove_hyp(const Theory& th, const Theorem& a, const Theorem& b);

// |- z = T \/ z = F.
Theorem bool_cases(const Theory& th, const Term& z);

// Case analysis on a Bool term z. `pred` is an abstraction \v. body such
// that pred z beta-reduces to the goal; `branch` receives the reduced
// instance body[T/v] or body[F/v] together with the value and must prove it.
using Branch = std::function<Theorem(const Term& instance, const Term& value)>;
Theorem cases_on(const Theory& th, const Term& z, const Term& pred,
                 const Branch& branch);

// Propositional structure: ~, /\, \/, ==>, = at Bool, cond at Bool applied
// to a literal triple. Everything else of type Bool is an atom.
bool is_propositional_node(const Term& t);
std::vector<Term> propositional_atoms(const Term& t);

// Proves a propositional tautology; throws KernelError otherwise.
Theorem taut(const Theory& th, const Term& p);

// For a variable-free propositional term: |- g = T or |- g = F.
Theorem eval_ground(const Theory& th, const Term& g);

}  // namespace hog::derived
