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

// Proof-producing recognition. A result pairs a sign with two theorems,
// phon(s) = /w/ and sem(s) = a, both in the grammar's theory.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hog/grammar.hpp"
#include "hog/kernel.hpp"
#include "hog/term.hpp"

namespace hog {

struct ParseResult {
  Word word;
  std::string sign_type;
  Term sign;
  // Beta-normal.
  Term meaning;
  Theorem phon_proof;
  Theorem sem_proof;
  // Height of the derivation; lexical signs have depth 1.
  std::size_t depth;
};

// All signs of derivation depth <= depth_bound whose phonology is /w/,
// ordered by depth and then by printed sign.
std::vector<ParseResult> parse(const Grammar& g, const Word& w,
                               std::size_t depth_bound);

// A result for (w, a). Bool meanings that are truth-functionally equal to
// some parse's meaning are admitted through a merge with a tautology
// certificate. Throws TypeError when a is not typed at any Sem(σ).
std::optional<ParseResult> check_membership(const Grammar& g, const Word& w,
                                            const Term& a,
                                            std::size_t depth_bound);

struct EnumeratedSign {
  Term sign;
  std::string sign_type;
  Word word;
  Term meaning;
  std::size_t depth;
};

// Brute-force construction of every sign up to the bound, with meanings
// computed by substitution and beta normalization only. No theorems.
std::vector<EnumeratedSign> enumerate_signs(const Grammar& g,
                                            std::size_t depth_bound);

// Rewrites every subterm alpha-equal to the left side of one of `eqs` by
// its right side, top-down, by congruence. Equations must be closed.
Theorem rewrite_conv(const Theory& th, const Term& t,
                     const std::vector<Theorem>& eqs);

}  // namespace hog
