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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hog/term.hpp"
#include "hog/type.hpp"

namespace hog {

class Theorem;

// Base type inventory and constant signature. The type-indexed families
// (=, cond, iota, forall, exists) are available at every well-formed type
// and are not stored in the constant map.
class Signature {
 public:
  // The logical core: Bool, Ind, Prop, Phon and the connectives.
  Signature();

  bool has_base_type(const std::string& name) const;
  const std::set<std::string>& base_types() const { return base_types_; }
  std::optional<Type> constant_type(const std::string& name) const;
  const std::map<std::string, Type>& constants() const { return constants_; }

  // Every base type occurring in `ty` is in the inventory.
  bool well_formed(const Type& ty) const;

  static bool is_family(const std::string& name);
  // Type of family constant `name` instantiated at `param`.
  static Type family_type(const std::string& name, const Type& param);
  // Instance parameter recovered from a family constant's type.
  static std::optional<Type> family_parameter(const std::string& name,
                                              const Type& type);

  void add_base_type(const std::string& name);
  void add_constant(const std::string& name, const Type& type);

 private:
  std::set<std::string> base_types_;
  std::map<std::string, Type> constants_;
};

// Returns the type of `t`, checking that every constant belongs to `sig`
// and every base type is declared. Throws TypeError otherwise.
Type type_of(const Term& t, const Signature& sig);

using TheoryId = std::uint64_t;

struct NamedAxiom {
  std::string name;
  Term statement;
};

// Name and number of type parameters of each logical axiom schema.
struct AxiomSchema {
  std::string name;
  std::size_t arity;
};
const std::vector<AxiomSchema>& logical_axiom_schemas();

// Statement of a logical axiom schema at the given type instance.
// Throws KernelError for an unknown name or wrong arity.
Term logical_axiom(const std::string& name, std::span<const Type> instance);

// A frozen theory: signature plus the non-logical axioms Gamma. The logical
// axiom schemas are present in every theory. Theory values only exist in
// frozen form; TheoryBuilder is the construction stage.
class Theory {
 public:
  ~Theory();
  Theory(const Theory&) = delete;
  Theory& operator=(const Theory&) = delete;

  // A fresh theory holding only the logical core.
  static std::shared_ptr<const Theory> logical_core();

  TheoryId id() const { return id_; }
  bool frozen() const { return true; }
  const Signature& signature() const { return signature_; }
  const std::vector<NamedAxiom>& axioms() const { return axioms_; }

  // Statement of a logical schema instance or of a named axiom of Gamma.
  std::optional<Term> axiom_statement(const std::string& name,
                                      std::span<const Type> instance) const;

  // Per-theory cache of derived lemmas. `make` runs outside the lock; the
  // first stored value wins.
  Theorem memo(const std::string& key,
               const std::function<Theorem()>& make) const;

 private:
  friend class TheoryBuilder;
  struct MemoTable;

  Theory(Signature signature, std::vector<NamedAxiom> axioms);

  TheoryId id_;
  Signature signature_;
  std::vector<NamedAxiom> axioms_;
  std::unique_ptr<MemoTable> memo_;
};

class TheoryBuilder {
 public:
  TheoryBuilder() = default;

  const Signature& signature() const { return signature_; }

  // Throws KernelError on duplicates or ill-formed types.
  void add_base_type(const std::string& name);
  void add_constant(const std::string& name, const Type& type);
  // `statement` must typecheck at Bool in the current signature.
  void add_axiom(const std::string& name, const Term& statement);

  std::shared_ptr<const Theory> freeze() &&;

 private:
  Signature signature_;
  std::vector<NamedAxiom> axioms_;
};

}  // namespace hog
