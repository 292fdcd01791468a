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

// Grammars as theories. A grammar declares an alphabet of phonological
// tokens, sign types with their semantic types, a lexicon and a set of
// composition rules; elaboration turns it into a frozen Theory whose
// non-logical axioms are the monoid laws for phonology plus one axiom per
// lexical entry and per rule.
#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hog/kernel.hpp"
#include "hog/term.hpp"
#include "hog/theory.hpp"
#include "hog/type.hpp"

namespace hog {

// A finite sequence of alphabet tokens; the empty word is allowed.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  // Splits on whitespace.
  static Word parse(std::string_view text);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  Word slice(std::size_t begin, std::size_t end) const;
  Word operator+(const Word& other) const;

  // Tokens joined by single spaces; the empty word prints as "".
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::string> tokens_;
};

struct SignType {
  std::string name;
  Type sem;
  // Set for slash types `operand \ result`.
  std::optional<std::string> operand;
  std::optional<std::string> result;
};

struct LexicalEntry {
  std::string name;
  std::string sign_type;
  Word phon;
  Term meaning;
};

struct RuleOperand {
  std::string var;
  std::string sign_type;
};

struct RuleEntry {
  std::string name;
  std::vector<RuleOperand> operands;
  std::string result;
  // Operand indices whose phonologies are concatenated, left to right.
  std::vector<std::size_t> phon_order;
  // Free variables are the operand variables, typed at their sign types.
  Term sem;
};

struct GrammarSpec {
  std::vector<std::string> alphabet;
  std::vector<std::string> base_types;
  std::vector<std::pair<std::string, Type>> constants;
  std::vector<SignType> sign_types;
  std::vector<LexicalEntry> lexicon;
  std::vector<RuleEntry> rules;

  // Signature of the elaborated theory, minus axioms. Usable for parsing
  // meaning terms before elaboration.
  Signature signature() const;
};

inline constexpr std::string_view kCatAssoc = "cat-assoc";
inline constexpr std::string_view kCatLeftId = "cat-left-id";
inline constexpr std::string_view kCatRightId = "cat-right-id";

std::string lexical_axiom_name(const std::string& entry);
std::string rule_axiom_name(const std::string& rule);

class Grammar {
 public:
  const GrammarSpec& spec() const { return spec_; }
  const Theory& theory() const { return *theory_; }
  std::shared_ptr<const Theory> theory_ptr() const { return theory_; }

  const SignType& sign_type(const std::string& name) const;
  // Sign type of a term whose type is a declared sign type.
  std::optional<std::string> sign_type_of(const Type& ty) const;
  bool in_alphabet(const std::string& token) const;

  Term phon_constant(const std::string& sign_type) const;
  Term sem_constant(const std::string& sign_type) const;
  Term lexical_constant(const LexicalEntry& entry) const;
  Term rule_constant(const RuleEntry& rule) const;
  Type rule_type(const RuleEntry& rule) const;

 private:
  friend Grammar elaborate(GrammarSpec spec);

  GrammarSpec spec_;
  std::shared_ptr<const Theory> theory_;
  std::map<std::string, std::size_t> sign_index_;
};

// Throws GrammarError on duplicate names, unknown sign types, ill-typed
// meanings or malformed rules.
Grammar elaborate(GrammarSpec spec);

// /w/ as a right-associated concatenation; // for the empty word.
Term word_to_phon(const Grammar& g, const Word& w);

// Gamma |- /uv/ = /u/ ++ /v/
Theorem phon_homomorphism(const Grammar& g, const Word& u, const Word& v);

}  // namespace hog
