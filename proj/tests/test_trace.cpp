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

#include <sstream>

#include "doctest.h"
#include "hog/cond.hpp"
#include "hog/derived.hpp"
#include "hog/parser.hpp"
#include "hog/trace.hpp"
#include "support.hpp"

using namespace hog;

namespace {

// Replaces the conclusion of step `idx` by `replacement`.
std::string tamper(const std::string& trace, std::size_t idx, const std::string& replacement) {
  std::istringstream in(trace);
  std::ostringstream out;
  std::string line;
  std::string prefix = std::to_string(idx) + " ";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) {
      line = line.substr(0, line.find("|- ") + 3) + replacement;
    }
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("traces round-trip and are deterministic") {
  hog::Grammar g = hogtest::grammar("toy");
  std::vector<ParseResult> rs = parse(g, Word::parse("fajdo blt"), 3);
  REQUIRE(rs.size() == 1);
  std::vector<Theorem> roots{rs[0].phon_proof, rs[0].sem_proof};
  std::string a = export_trace(roots);
  CHECK(a == export_trace(roots));

  hog::Grammar fresh = hogtest::grammar("toy");
  TraceCheck c = verify_trace(a, fresh.theory());
  CHECK(c.ok);
  REQUIRE(c.roots.size() == 2);
  CHECK(alpha_equal(c.roots[0].conclusion(), rs[0].phon_proof.conclusion()));
  CHECK(alpha_equal(c.roots[1].conclusion(), rs[0].sem_proof.conclusion()));
  // Re-exporting the replayed proofs gives the same text.
  CHECK(export_trace(c.roots) == a);
}

TEST_CASE("tampered traces are rejected at the altered step") {
  hog::Grammar g = hogtest::grammar("toy");
  Theorem t = cond_true(g.theory(), Term::constant("fido", ind_type()),
                        Term::constant("fido", ind_type()));
  std::string trace = export_trace(t);
  std::string bad = tamper(trace, 3, "{fido} = {fido} /\\ {F}");
  REQUIRE(bad != trace);
  TraceCheck c = verify_trace(bad, g.theory());
  CHECK_FALSE(c.ok);
  CHECK(c.failed_step.has_value());

  std::string wrong = tamper(trace, 5, "{true:Bool}");
  TraceCheck w = verify_trace(wrong, g.theory());
  CHECK_FALSE(w.ok);
  REQUIRE(w.failed_step.has_value());
  CHECK(*w.failed_step == 5);
  CHECK(w.message.find("step 5") != std::string::npos);
}

TEST_CASE("traces are theory-specific") {
  hog::Grammar toy = hogtest::grammar("toy");
  hog::Grammar empty = hogtest::grammar("empty");
  std::string trace = export_trace(kernel::axiom(toy.theory(), "lex.FIDO"));
  CHECK(verify_trace(trace, toy.theory()).ok);
  CHECK_FALSE(verify_trace(trace, empty.theory()).ok);
  CHECK_FALSE(verify_trace("0 refl {x:Bool} ==> |- {x:Bool = x:Bool}\n1 frob 0 ==> |- {x:Bool}\n",
                           empty.theory())
                  .ok);
}
