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

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hog/term.hpp"
#include "hog/type.hpp"

// Constructors and destructors for the logical vocabulary: connectives,
// equality, quantifiers, description, the if-then-else family and the
// phonological monoid.
namespace hog {

namespace names {
inline constexpr std::string_view kTrue = "T";
inline constexpr std::string_view kFalse = "F";
inline constexpr std::string_view kNot = "~";
inline constexpr std::string_view kAnd = "/\\";
inline constexpr std::string_view kOr = "\\/";
inline constexpr std::string_view kImp = "==>";
inline constexpr std::string_view kEq = "=";
inline constexpr std::string_view kCond = "cond";
inline constexpr std::string_view kIota = "iota";
inline constexpr std::string_view kForall = "forall";
inline constexpr std::string_view kExists = "exists";
inline constexpr std::string_view kCat = "++";
inline constexpr std::string_view kEmptyPhon = "//";
}  // namespace names

Term truth();
Term falsity();
Term not_const();
Term and_const();
Term or_const();
Term imp_const();
Term eq_const(const Type& ty);
Term cond_const(const Type& ty);
Term iota_const(const Type& ty);
Term forall_const(const Type& ty);
Term exists_const(const Type& ty);

Term mk_eq(const Term& lhs, const Term& rhs);
Term mk_not(const Term& p);
Term mk_and(const Term& p, const Term& q);
Term mk_or(const Term& p, const Term& q);
Term mk_imp(const Term& p, const Term& q);
Term mk_forall(const Term& v, const Term& body);
Term mk_exists(const Term& v, const Term& body);
// cond[ty] <x, <y, z>>
Term mk_cond(const Term& x, const Term& y, const Term& z);

bool is_const_named(const Term& t, std::string_view name);
bool is_truth(const Term& t);
bool is_falsity(const Term& t);

bool is_eq(const Term& t);
std::pair<Term, Term> dest_eq(const Term& t);
Term lhs(const Term& eq);
Term rhs(const Term& eq);

// Applications `op p q` of a curried binary constant.
bool is_binop(const Term& t, std::string_view op);
std::pair<Term, Term> dest_binop(const Term& t, std::string_view op);
bool is_not(const Term& t);
Term dest_not(const Term& t);
bool is_forall(const Term& t);
// Returns (bound variable, body).
std::pair<Term, Term> dest_forall(const Term& t);

bool is_cond(const Term& t);
// Returns (x, y, z) of cond[ty] <x, <y, z>>.
std::tuple<Term, Term, Term> dest_cond(const Term& t);

// Strips nested applications: f a1 ... an -> (f, [a1..an]).
std::pair<Term, std::vector<Term>> strip_comb(const Term& t);
Term list_mk_comb(const Term& f, const std::vector<Term>& args);

// Phonological constants and concatenation.
Term cat_const();
Term empty_phon();
// The constant /token/ for one alphabet symbol.
Term phon_atom(const std::string& token);
std::string phon_atom_name(const std::string& token);
Term mk_cat(const Term& u, const Term& v);
bool is_cat(const Term& t);
std::pair<Term, Term> dest_cat(const Term& t);
// Right-associated concatenation of token constants, // for no tokens.
Term phon_of_tokens(const std::vector<std::string>& tokens);

}  // namespace hog
