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

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hog/type.hpp"

namespace hog {

// Simply typed lambda term with pairs and projections. Every Term value is
// well-typed by construction: the smart constructors reject ill-typed
// applications and projections. Terms are immutable and cheap to copy.
class Term {
 public:
  enum class Kind { kVar, kConst, kApp, kAbs, kPair, kProj };

  static Term var(std::string name, Type type);
  static Term constant(std::string name, Type type);
  static Term app(const Term& fn, const Term& arg);
  // `bound` must be a variable.
  static Term abs(const Term& bound, const Term& body);
  static Term pair(const Term& left, const Term& right);
  // `index` is 1 (first component) or 2 (second component).
  static Term proj(int index, const Term& operand);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_abs() const { return kind() == Kind::kAbs; }
  bool is_pair() const { return kind() == Kind::kPair; }
  bool is_proj() const { return kind() == Kind::kProj; }

  const Type& type() const { return node_->type; }

  // Variables and constants.
  const std::string& name() const;
  // Applications.
  Term fn() const;
  Term arg() const;
  // Abstractions.
  Term bound() const;
  Term body() const;
  // Pairs.
  Term left() const;
  Term right() const;
  // Projections.
  int index() const;
  Term operand() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node {
    Kind kind;
    Type type;
    std::string name;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
    int index = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Identity of free variables: same name and same type.
bool same_var(const Term& a, const Term& b);

// Equality up to renaming of bound variables.
bool alpha_equal(const Term& a, const Term& b);

// Free variables in order of first occurrence, without duplicates.
std::vector<Term> free_vars(const Term& t);
bool occurs_free(const Term& v, const Term& t);
// Names of all free variables, used to pick fresh names.
void collect_free_names(const Term& t, std::set<std::string>& out);

// `base` if not in `avoid`, otherwise base1, base2, ... (first unused).
std::string variant_name(const std::string& base,
                         const std::set<std::string>& avoid);

using Substitution = std::vector<std::pair<Term, Term>>;

// Capture-avoiding simultaneous substitution of free variables.
// Throws TypeError if a replacement's type differs from its variable's.
Term substitute(const Term& t, const Substitution& sigma);
Term substitute(const Term& t, const Term& v, const Term& r);

bool is_beta_redex(const Term& t);
// Contracts a top-level beta redex.
Term beta_reduce(const Term& redex);
bool is_beta_normal(const Term& t);
// Normal-order beta normalization. Terminates on simply typed terms.
Term beta_normalize(const Term& t);

// Canonical key invariant under alpha-conversion: equal keys iff
// alpha-equal terms. Used to sort and deduplicate hypothesis sets.
std::string alpha_key(const Term& t);

std::size_t term_size(const Term& t);

// Canonical fully parenthesized rendering (see syntax.hpp).
std::string to_string(const Term& t);

}  // namespace hog
