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

#include <set>

#include "doctest.h"
#include "hog/error.hpp"
#include "hog/parser.hpp"
#include "hog/syntax.hpp"
#include "support.hpp"

using namespace hog;

namespace {

const char* const kCorpus[] = {"toy", "ambiguous", "transitive", "weather"};

void check_sound(const hog::Grammar& g, const ParseResult& r) {
  const Theory& th = g.theory();
  CHECK(r.phon_proof.hypotheses().empty());
  CHECK(r.sem_proof.hypotheses().empty());
  Term phon = Term::app(g.phon_constant(r.sign_type), r.sign);
  Term sem = Term::app(g.sem_constant(r.sign_type), r.sign);
  CHECK(alpha_equal(r.phon_proof.conclusion(), mk_eq(phon, word_to_phon(g, r.word))));
  CHECK(alpha_equal(r.sem_proof.conclusion(), mk_eq(sem, r.meaning)));
  CHECK(is_beta_normal(r.meaning));
  CHECK(type_of(r.sem_proof.conclusion(), th.signature()) == bool_type());
}

}  // namespace

TEST_CASE("parse: toy sentence") {
  hog::Grammar g = hogtest::grammar("toy");
  std::vector<ParseResult> rs = parse(g, Word::parse("fajdo blt"), 3);
  REQUIRE(rs.size() == 1);
  CHECK(print_pretty(rs[0].sign) == "SUBJ(FIDO, BARKS)");
  CHECK(print_pretty(rs[0].meaning) == "barks(fido)");
  CHECK(rs[0].sign_type == "S");
  CHECK(rs[0].depth == 2);
  check_sound(g, rs[0]);
  CHECK(parse(g, Word::parse("fajdo blt"), 1).empty());
}

TEST_CASE("parse: empty word without empty entries") {
  hog::Grammar g = hogtest::grammar("toy");
  CHECK(parse(g, Word{}, 3).empty());
  CHECK_THROWS_AS(parse(g, Word::parse("fajdo woof"), 3), GrammarError);
}

TEST_CASE("parse: ambiguous word") {
  hog::Grammar g = hogtest::grammar("ambiguous");
  std::vector<ParseResult> rs = parse(g, Word::parse("fajdo blt"), 3);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].word == rs[1].word);
  CHECK_FALSE(alpha_equal(rs[0].meaning, rs[1].meaning));
  std::set<std::string> meanings{print_pretty(rs[0].meaning), print_pretty(rs[1].meaning)};
  CHECK(meanings == std::set<std::string>{"barks(fido)", "bolts(fido)"});
  hog::Grammar fresh = hogtest::grammar("ambiguous");
  for (const ParseResult& r : rs) {
    check_sound(g, r);
    CHECK(hogtest::reverifies({r.phon_proof, r.sem_proof}, fresh.theory()));
  }
}

TEST_CASE("parse: silent adverb and stacked modifiers") {
  hog::Grammar g = hogtest::grammar("weather");
  std::vector<ParseResult> rs = parse(g, Word::parse("rejnz"), 3);
  std::vector<std::string> signs;
  for (const ParseResult& r : rs) {
    signs.push_back(print_pretty(r.sign));
    CHECK(print_pretty(r.meaning) == "rains");
    check_sound(g, r);
  }
  CHECK(signs == std::vector<std::string>{"RAINS", "MOD(RAINS, SURELY)",
                                          "MOD(MOD(RAINS, SURELY), SURELY)"});
  std::vector<ParseResult> two = parse(g, Word::parse("nat nat rejnz"), 3);
  REQUIRE(two.size() == 1);
  CHECK(print_pretty(two[0].meaning) == "~(~rains)");
}

TEST_CASE("parse is deterministic and stable under trace round trip") {
  hog::Grammar g = hogtest::grammar("transitive");
  Word w = Word::parse("fajdo cejs felks");
  std::vector<ParseResult> a = parse(g, w, 3);
  std::vector<ParseResult> b = parse(g, w, 3);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(print_canonical(a[0].sign) == print_canonical(b[0].sign));
  CHECK(export_trace(a[0].sem_proof) == export_trace(b[0].sem_proof));
  CHECK(print_pretty(a[0].meaning) == "chases(fido, felix)");
  hog::Grammar fresh = hogtest::grammar("transitive");
  TraceCheck c = verify_trace(export_trace(a[0].sem_proof), fresh.theory());
  REQUIRE(c.ok);
  CHECK(alpha_equal(rhs(c.roots[0].conclusion()), a[0].meaning));
}

TEST_CASE("check_membership") {
  hog::Grammar g = hogtest::grammar("toy");
  const Signature& sig = g.theory().signature();
  Word w = Word::parse("fajdo blt");
  auto r = check_membership(g, w, parse_term("barks(fido)", sig), 3);
  REQUIRE(r);
  CHECK(print_pretty(r->sign) == "SUBJ(FIDO, BARKS)");
  CHECK_FALSE(check_membership(g, w, parse_term("fido", sig), 3));
  CHECK_THROWS_AS(check_membership(g, w, parse_term("true", sig), 3), TypeError);
  auto beta = check_membership(g, w, parse_term("(\\x:Ind. barks(x)) fido", sig), 3);
  REQUIRE(beta);
  CHECK(print_pretty(beta->meaning) == "barks(fido)");
  CHECK_FALSE(check_membership(g, Word::parse("fajdo"), parse_term("barks(fido)", sig), 3));
}

TEST_CASE("check_membership admits truth-functional equivalents by merging") {
  hog::Grammar g = hogtest::grammar("weather");
  const Signature& sig = g.theory().signature();
  Word w = Word::parse("nat nat rejnz");
  auto r = check_membership(g, w, parse_term("rains /\\ rains", sig), 3);
  REQUIRE(r);
  CHECK(print_pretty(r->meaning) == "rains /\\ rains");
  check_sound(g, *r);
  CHECK_FALSE(check_membership(g, w, parse_term("snows", sig), 3));
  CHECK_FALSE(check_membership(g, w, parse_term("~rains", sig), 3));
}

TEST_CASE("enumerate_signs") {
  hog::Grammar toy = hogtest::grammar("toy");
  std::vector<EnumeratedSign> one = enumerate_signs(toy, 1);
  REQUIRE(one.size() == 2);
  CHECK(print_pretty(one[0].sign) == "BARKS");
  CHECK(print_pretty(one[1].sign) == "FIDO");
  std::vector<EnumeratedSign> two = enumerate_signs(toy, 2);
  REQUIRE(two.size() == 3);
  CHECK(print_pretty(two[2].sign) == "SUBJ(FIDO, BARKS)");
  CHECK(print_pretty(two[2].meaning) == "barks(fido)");
  CHECK(two[2].word == Word::parse("fajdo blt"));
  CHECK(enumerate_signs(hogtest::grammar("empty"), 3).empty());
}

TEST_CASE("parse agrees with the enumeration oracle") {
  for (const char* name : kCorpus) {
    hog::Grammar g = hogtest::grammar(name);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<EnumeratedSign> all = enumerate_signs(g, k);
      std::set<Word> words;
      for (const EnumeratedSign& e : all) words.insert(e.word);
      for (const Word& w : words) {
        std::vector<std::string> want, got;
        for (const EnumeratedSign& e : all) {
          if (e.word == w) want.push_back(print_canonical(e.sign) + " : " + print_canonical(e.meaning));
        }
        for (const ParseResult& r : parse(g, w, k)) {
          got.push_back(print_canonical(r.sign) + " : " + print_canonical(r.meaning));
        }
        CHECK_MESSAGE(got == want, name, " k=", k, " w=\"", w.to_string(), "\"");
      }
    }
  }
}
