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

#include <map>
#include <string>
#include <string_view>

#include "hog/term.hpp"
#include "hog/theory.hpp"
#include "hog/type.hpp"

// Concrete syntax shared by grammar files, universe files, proof traces and
// the command line.
//
//   types   Bool | Ind | (A -> B) | (A * B)        `*` binds tighter, both
//                                                  associate to the right
//   terms   x:T            variable with its type
//           name           constant, or a variable bound in scope
//           @name          constant, even when a binder shadows the name
//           \x:T. t        abstraction          !x:T. t / ?x:T. t
//           (f a)  f(a, b) application           <a, b>  pair
//           fst t, snd t   projections           true, false
//           ~p, p /\ q, p \/ q, p ==> q, a = b, u ++ v
//           /fajdo blt/    phonology literal (right-associated ++), // empty
//           cond[T] iota[T] forall[T] exists[T] (=[T])   family instances
//           phon[S] sem[S] grammar constants; bare `phon`/`sem`/`cond`/
//                          `iota` resolve from the argument type
//
// Precedence, loosest first: binders, ==>, \/, /\, =, ++, ~, application.
namespace hog {

// Canonical fully parenthesized ASCII form. Variables carry their types,
// so the output re-parses to an alpha-identical term in any theory whose
// signature declares the constants involved.
std::string print_canonical(const Term& t);

// Compact display form: `barks(fido)`, no variable type annotations.
std::string print_pretty(const Term& t);

struct ParseOptions {
  // Types for unannotated free variables.
  std::map<std::string, Type> free_vars;
};

Type parse_type(std::string_view text);
// Parses and typechecks against `sig`. Throws SyntaxError.
Term parse_term(std::string_view text, const Signature& sig,
                const ParseOptions& options = {});

bool is_identifier(std::string_view text);

}  // namespace hog
