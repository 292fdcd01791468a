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

// Truth tables for the quantifier-free Bool fragment: Bool variables, T,
// F, ~, /\, \/, ==>, = at Bool and cond at Bool over a literal triple.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hog/term.hpp"

namespace hog {

bool in_bool_fragment(const Term& t);

// Free Bool variables in order of first occurrence. Throws FragmentError
// when t is outside the fragment.
std::vector<Term> fragment_variables(const Term& t);

// Bit i of row r holds the value of t under the assignment that gives
// vars[k] the k-th bit of r.
class TruthTable {
 public:
  static constexpr std::size_t kMaxVariables = 24;

  TruthTable(const Term& t, const std::vector<Term>& vars);

  std::size_t variables() const { return vars_; }
  std::size_t rows() const { return std::size_t{1} << vars_; }
  bool row(std::size_t r) const { return (bits_[r / 64] >> (r % 64)) & 1u; }
  bool all() const;
  bool none() const;
  const std::vector<std::uint64_t>& words() const { return bits_; }
  // Mask of meaningful bits in the last word.
  std::uint64_t tail_mask() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t vars_;
  std::vector<std::uint64_t> bits_;
};

// Validity by truth table, evaluating 64 assignments per word and
// splitting words across threads.
bool bool_valid(const Term& t);

// Reference: one assignment at a time by direct recursion.
bool bool_valid_serial(const Term& t);

// Replaces each maximal Bool subterm outside the fragment by a fresh
// Bool variable, equal subterms (up to alpha) by the same variable.
// Validity of the result implies validity of t.
Term abstract_to_fragment(const Term& t);

}  // namespace hog
