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

// Logical closure of finite sets of Bool terms. A set S is closed in a
// universe U when a = b \/ a = c valid for b, c in S and a in U implies a
// in S. Validity is decided by truth tables, so only the quantifier-free
// Bool fragment is handled.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hog/grammar.hpp"
#include "hog/term.hpp"
#include "hog/type.hpp"

namespace hog {

struct TermUniverse {
  Type type;
  // Beta-normal, pairwise distinct up to alpha.
  std::vector<Term> terms;
  // Free variables of all terms, in order of first occurrence.
  std::vector<Term> variables;

  std::size_t size() const { return terms.size(); }
  // Index of the term alpha-equal to beta_normalize(t), if any.
  std::optional<std::size_t> find(const Term& t) const;
};

// Subset of a universe, one flag per term.
using Membership = std::vector<bool>;

// Normalizes and deduplicates, keeping first occurrences. Throws TypeError
// on mixed types and Error on an empty list.
TermUniverse make_universe(const std::vector<Term>& terms);

// Every term over the variables x, y, z, ... (n_vars of them), true and
// false, built with ~, /\, \/, ==> and = (and cond when with_cond), of
// size at most max_size. A leaf has size 1; a node adds 1 to the sizes of
// its children. Ordered by size, then by construction.
TermUniverse generate_bool_universe(std::size_t n_vars, std::size_t max_size,
                                    bool with_cond = false);

struct ClosureResult {
  Membership members;
  // For each term added, the first pair (i, j), i <= j, of members at the
  // time of addition that justified it; unset for input members and for
  // terms outside the closure.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witness;
  // Round in which each member was added; 0 for inputs.
  std::vector<std::size_t> round;
  std::size_t rounds = 0;
};

// Least closed superset of m within u, by rounds that add every term
// justified by the members of the previous round. Truth tables are
// computed in parallel and deduplicated before the pair search.
ClosureResult closure_saturate(const TermUniverse& u, const Membership& m);

// Same rounds, testing each candidate by building a = b \/ a = c and
// evaluating it row by row.
ClosureResult closure_saturate_serial(const TermUniverse& u, const Membership& m);

bool is_logically_closed(const TermUniverse& u, const Membership& m);
bool sets_equivalent(const TermUniverse& u, const Membership& m, const Membership& n);

// {w} x closure({a}). Throws Error when a is not in u.
std::vector<std::pair<Word, Term>> logical_singleton(const TermUniverse& u,
                                                     const Word& w, const Term& a);

// A finite language over a universe: (word, term index) pairs.
using TermLanguage = std::vector<std::pair<Word, std::size_t>>;

// Pairs each term with a one-token word spelling it.
TermLanguage identity_language(const TermUniverse& u);

struct ClosureViolation {
  Word word;
  std::size_t a;
  std::size_t b;
  std::size_t c;
};

// First (w, a) outside the language with (w, b), (w, c) inside and
// a = b \/ a = c valid; words in order of first occurrence.
std::optional<ClosureViolation> find_closure_violation(const TermUniverse& u,
                                                       const TermLanguage& lang);

// Universe files: one canonical term per line, `*` in front of members of
// the input set, `#` comments, and an optional `vars: x y` header giving
// unannotated variables type Bool.
struct UniverseFile {
  TermUniverse universe;
  Membership input;
};

UniverseFile parse_universe(std::string_view text, const std::string& source = "<input>");
UniverseFile read_universe_file(const std::string& path);
std::string write_universe(const TermUniverse& u, const Membership& input);

// Text table: idx, in, cl, witness, term.
std::string closure_report(const TermUniverse& u, const Membership& input,
                           const ClosureResult& r);

}  // namespace hog
