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

// Text format for grammars.
//
//   alphabet: fajdo blt
//   type E
//   const fido : Ind
//   signtype NP sem Ind
//   signtype VP = NP \ S
//   lex FIDO : NP { phon = /fajdo/; sem = fido; }
//   rule SUBJ : x:NP, f:VP -> S { phon = x ++ f; sem = sem(f)(sem(x)); }
//
// `#` starts a comment. Declarations must precede their uses.
#pragma once

#include <string>
#include <string_view>

#include "hog/grammar.hpp"

namespace hog {

GrammarSpec parse_grammar(std::string_view text,
                          const std::string& source = "<grammar>");
GrammarSpec read_grammar_file(const std::string& path);
Grammar load_grammar(const std::string& path);

}  // namespace hog
