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

#include <stdexcept>
#include <string>

namespace hog {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-typed term construction or a term that does not check in a theory.
class TypeError : public Error {
 public:
  using Error::Error;
};

// A primitive or derived rule was applied outside its side conditions.
class KernelError : public Error {
 public:
  using Error::Error;
};

// Malformed term, type, grammar, universe or trace text.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Grammar description that cannot be elaborated into a theory.
class GrammarError : public Error {
 public:
  using Error::Error;
};

// Term outside the quantifier-free Bool fragment handled by the oracle.
class FragmentError : public Error {
 public:
  using Error::Error;
};

// Parses or certificate that do not satisfy the premises of a merge.
class MergeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hog
