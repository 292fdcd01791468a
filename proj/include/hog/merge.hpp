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

// Merging two parses of one word into a parse of a third meaning. Given
// results (w, a1) and (w, a2) with signs s1, s2 of one sign type and a
// theorem |- a = a1 \/ a = a2, the sign cond<s1, <s2, a = a1>> has
// phonology /w/ and meaning a.
#pragma once

#include <string_view>

#include "hog/grammar.hpp"
#include "hog/kernel.hpp"
#include "hog/parser.hpp"
#include "hog/term.hpp"

namespace hog {

struct ClosureCertificate {
  Term target;
  Term left;
  Term right;
  // |- target = left \/ target = right
  Theorem proof;
};

// Throws MergeError unless the proof has no hypotheses and concludes
// exactly target = left \/ target = right, up to alpha.
void check_certificate(const ClosureCertificate& cert);

// target a1, by disjunction from reflexivity.
ClosureCertificate certify_left(const Theory& th, const Term& a1, const Term& a2);
// target a2.
ClosureCertificate certify_right(const Theory& th, const Term& a1, const Term& a2);
// target cond<a1, <a2, q>>, by cases on the Bool term q.
ClosureCertificate certify_cases(const Theory& th, const Term& a1,
                                 const Term& a2, const Term& q);
// Bool target, by tautology checking. Throws KernelError when the
// disjunction is not a tautology.
ClosureCertificate certify_taut(const Theory& th, const Term& a,
                                const Term& a1, const Term& a2);

ParseResult merge_parses(const Grammar& g, const ParseResult& p1,
                         const ParseResult& p2, const ClosureCertificate& cert);

// Certificate from a script. Lines, `#` comments aside:
//   var <name> : <type>       declares a free variable
//   target <term>             defaults per strategy
//   by left | right | cases <term> | taut
// `$a1` and `$a2` in terms stand for the two meanings.
ClosureCertificate run_certificate_script(const Grammar& g, std::string_view script,
                                          const Term& a1, const Term& a2);

}  // namespace hog
