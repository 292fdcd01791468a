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
#include <string>

namespace hog {

// Simple type: a base type, a function type or a binary product type.
// Types are immutable values with structural equality.
class Type {
 public:
  enum class Kind { kBase, kFun, kProd };

  static Type base(std::string name);
  static Type fun(Type domain, Type codomain);
  static Type prod(Type left, Type right);

  Kind kind() const;
  bool is_base() const { return kind() == Kind::kBase; }
  bool is_fun() const { return kind() == Kind::kFun; }
  bool is_prod() const { return kind() == Kind::kProd; }

  // Base type name. Only valid for base types.
  const std::string& name() const;
  // Function domain/codomain. Only valid for function types.
  const Type& domain() const;
  const Type& codomain() const;
  // Product components. Only valid for product types.
  const Type& left() const;
  const Type& right() const;

  std::size_t hash() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  std::string name;
  // Holds domain/codomain or left/right.
  std::unique_ptr<Type> first;
  std::unique_ptr<Type> second;
  std::size_t hash = 0;
};

inline Type::Kind Type::kind() const { return node_->kind; }
inline std::size_t Type::hash() const { return node_->hash; }

// Types of the logical core.
Type bool_type();
Type ind_type();
Type prop_type();
Type phon_type();

// Canonical fully parenthesized rendering, e.g. "((Ind * Bool) -> Prop)".
std::string to_string(const Type& type);

// Argument type of the if-then-else constant: ty * (ty * Bool).
Type cond_argument_type(const Type& ty);

}  // namespace hog
