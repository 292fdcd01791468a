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

#include "hog/type.hpp"

#include <functional>
#include <utility>

#include "hog/error.hpp"

namespace hog {
namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Type Type::base(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kBase;
  node->hash = mix(1, std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Type(std::move(node));
}

Type Type::fun(Type domain, Type codomain) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFun;
  node->hash = mix(mix(2, domain.hash()), codomain.hash());
  node->first = std::make_unique<Type>(std::move(domain));
  node->second = std::make_unique<Type>(std::move(codomain));
  return Type(std::move(node));
}

Type Type::prod(Type left, Type right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProd;
  node->hash = mix(mix(3, left.hash()), right.hash());
  node->first = std::make_unique<Type>(std::move(left));
  node->second = std::make_unique<Type>(std::move(right));
  return Type(std::move(node));
}

const std::string& Type::name() const {
  if (!is_base()) throw TypeError("not a base type: " + to_string(*this));
  return node_->name;
}

const Type& Type::domain() const {
  if (!is_fun()) throw TypeError("not a function type: " + to_string(*this));
  return *node_->first;
}

const Type& Type::codomain() const {
  if (!is_fun()) throw TypeError("not a function type: " + to_string(*this));
  return *node_->second;
}

const Type& Type::left() const {
  if (!is_prod()) throw TypeError("not a product type: " + to_string(*this));
  return *node_->first;
}

const Type& Type::right() const {
  if (!is_prod()) throw TypeError("not a product type: " + to_string(*this));
  return *node_->second;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) {
    return false;
  }
  if (a.is_base()) return a.node_->name == b.node_->name;
  return *a.node_->first == *b.node_->first &&
         *a.node_->second == *b.node_->second;
}

Type bool_type() {
  static const Type t = Type::base("Bool");
  return t;
}

Type ind_type() {
  static const Type t = Type::base("Ind");
  return t;
}

Type prop_type() {
  static const Type t = Type::base("Prop");
  return t;
}

Type phon_type() {
  static const Type t = Type::base("Phon");
  return t;
}

std::string to_string(const Type& type) {
  switch (type.kind()) {
    case Type::Kind::kBase:
      return type.name();
    case Type::Kind::kFun:
      return "(" + to_string(type.domain()) + " -> " +
             to_string(type.codomain()) + ")";
    case Type::Kind::kProd:
      return "(" + to_string(type.left()) + " * " + to_string(type.right()) +
             ")";
  }
  return {};
}

Type cond_argument_type(const Type& ty) {
  return Type::prod(ty, Type::prod(ty, bool_type()));
}

}  // namespace hog
