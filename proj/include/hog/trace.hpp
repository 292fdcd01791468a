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

// Line-oriented proof traces.
//
//   <idx> <rule> <args> ==> <hyp> ; <hyp> |- <conclusion>
//
// Premises are referenced by earlier step indices; term arguments are
// written in canonical syntax inside braces, `inst` pairs as `{v}:={t}`,
// and axiom instances as the axiom name followed by `{type}` arguments.
// Lines starting with `#` are comments, except `# root <idx>` which marks
// a theorem the trace was exported for.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hog/kernel.hpp"
#include "hog/theory.hpp"

namespace hog {

std::string export_trace(std::span<const Theorem> roots);
std::string export_trace(const Theorem& root);

struct TraceCheck {
  bool ok = false;
  std::size_t steps = 0;
  std::optional<std::size_t> failed_step;
  std::string message;
  // Replayed theorems for the `# root` markers, in file order.
  std::vector<Theorem> roots;
};

// Replays every step against `th` and compares each recorded judgement up
// to alpha-equivalence.
TraceCheck verify_trace(std::string_view text, const Theory& th);

}  // namespace hog
