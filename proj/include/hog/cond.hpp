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

// If-then-else constants and the rules about them. C_A is the logical
// family `cond` at type A, defined through the description operator by
// the `cond-def` axiom; its properties are derived, not assumed.
#pragma once

#include "hog/kernel.hpp"
#include "hog/term.hpp"
#include "hog/theory.hpp"

namespace hog {

// cond[ty] : ty * (ty * Bool) -> ty.
Term cond_constant(const Theory& th, const Type& ty);

// |- cond <x, <y, T>> = x
Theorem cond_true(const Theory& th, const Term& x, const Term& y);
// |- cond <x, <y, F>> = y
Theorem cond_false(const Theory& th, const Term& x, const Term& y);

// |- f (cond <x, <y, z>>) = cond <f x, <f y, z>>
Theorem cond_distrib(const Theory& th, const Term& f, const Term& x,
                     const Term& y, const Term& z);

// |- (x \/ y) = cond <x, <y, x>>
Theorem or_as_cond(const Theory& th, const Term& x, const Term& y);

// |- cond <x, <x, z>> = x
Theorem cond_idem(const Theory& th, const Term& x, const Term& z);

}  // namespace hog
