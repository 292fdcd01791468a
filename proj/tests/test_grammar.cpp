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

#include <random>

#include "doctest.h"
#include "hog/error.hpp"
#include "hog/grammar_file.hpp"
#include "hog/syntax.hpp"
#include "support.hpp"

using namespace hog;

namespace {

std::size_t count_prefix(const Theory& th, const std::string& prefix) {
  std::size_t n = 0;
  for (const NamedAxiom& a : th.axioms()) n += a.name.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST_CASE("elaborate: toy grammar") {
  hog::Grammar g = hogtest::grammar("toy");
  CHECK(count_prefix(g.theory(), "lex.") == 2);
  CHECK(count_prefix(g.theory(), "rule.") == 1);
  CHECK(count_prefix(g.theory(), "cat-") == 3);
  CHECK(g.sign_type("VP").sem == Type::fun(ind_type(), prop_type()));
  auto rule = g.theory().axiom_statement("rule.SUBJ", {});
  REQUIRE(rule);
  CHECK(print_pretty(*rule) ==
        "!x:NP. !f:VP. (phon(SUBJ(x, f)) = (phon(x) ++ phon(f))) /\\ "
        "(sem(SUBJ(x, f)) = sem(f)(sem(x)))");
}

TEST_CASE("elaborate: empty grammar has only the monoid axioms") {
  hog::Grammar g = hogtest::grammar("empty");
  REQUIRE(g.theory().axioms().size() == 3);
  CHECK(g.theory().axioms()[0].name == "cat-assoc");
  CHECK(g.theory().axioms()[1].name == "cat-left-id");
  CHECK(g.theory().axioms()[2].name == "cat-right-id");
}

TEST_CASE("elaborate rejects malformed grammars") {
  const char* head =
      "alphabet: a\nconst fido : Ind\nsigntype NP sem Ind\nsigntype S sem Prop\n";
  auto load = [&](const std::string& body) {
    return elaborate(parse_grammar(std::string(head) + body, "test"));
  };
  CHECK_NOTHROW(load("lex A : NP { phon = /a/; sem = fido; }\n"));
  CHECK_THROWS_AS(load("lex A : S { phon = /a/; sem = fido; }\n"), GrammarError);
  CHECK_THROWS_AS(load("lex A : NP { phon = /a/; sem = fido; }\n"
                       "lex A : NP { phon = /a/; sem = fido; }\n"),
                  GrammarError);
  CHECK_THROWS_AS(load("lex A : XP { phon = /a/; sem = fido; }\n"), GrammarError);
  CHECK_THROWS_AS(load("lex A : NP { phon = /zz/; sem = fido; }\n"), GrammarError);
  CHECK_THROWS_AS(load("rule R : x:NP -> S { phon = x; sem = sem(x); }\n"), GrammarError);
  CHECK_THROWS_AS(load("rule R : x:NP, y:NP -> NP { phon = x; sem = sem(x); }\n"),
                  GrammarError);
  CHECK_THROWS_AS(load("lex A : NP { phon = /a/ sem = fido; }\n"), GrammarError);
  try {
    load("\n\nlex A : S { phon = /a/; sem = fido; }\n");
  } catch (const GrammarError& e) {
    CHECK(std::string(e.what()).find(" A ") != std::string::npos);
  }
  try {
    load("lex A : NP { phon = /a/; sem = (fido; }\n");
  } catch (const GrammarError& e) {
    CHECK(std::string(e.what()).find("test:5:") == 0);
  }
}

TEST_CASE("elaboration is deterministic") {
  hog::Grammar a = hogtest::grammar("transitive");
  hog::Grammar b = hogtest::grammar("transitive");
  REQUIRE(a.theory().axioms().size() == b.theory().axioms().size());
  for (std::size_t i = 0; i < a.theory().axioms().size(); ++i) {
    CHECK(a.theory().axioms()[i].name == b.theory().axioms()[i].name);
    CHECK(print_canonical(a.theory().axioms()[i].statement) ==
          print_canonical(b.theory().axioms()[i].statement));
  }
}

TEST_CASE("word_to_phon") {
  hog::Grammar g = elaborate(parse_grammar("alphabet: a b c fajdo blt\n"));
  CHECK(alpha_equal(word_to_phon(g, Word{}), empty_phon()));
  CHECK(alpha_equal(word_to_phon(g, Word::parse("fajdo blt")),
                    mk_cat(phon_atom("fajdo"), phon_atom("blt"))));
  CHECK(alpha_equal(word_to_phon(g, Word::parse("a b c")),
                    mk_cat(phon_atom("a"), mk_cat(phon_atom("b"), phon_atom("c")))));
  CHECK(alpha_equal(word_to_phon(g, Word::parse("a")), phon_atom("a")));
  CHECK_THROWS_AS(word_to_phon(g, Word::parse("a d")), GrammarError);
}

TEST_CASE("word_to_phon is injective on random words") {
  hog::Grammar g = elaborate(parse_grammar("alphabet: a b c\n"));
  std::mt19937 rng(17);
  auto random_word = [&] {
    std::vector<std::string> toks;
    int n = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < n; ++i) toks.push_back(std::string(1, "abc"[rng() % 3]));
    return Word(toks);
  };
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(), v = random_word();
    CHECK((u == v) == alpha_equal(word_to_phon(g, u), word_to_phon(g, v)));
  }
}

TEST_CASE("phon_homomorphism") {
  hog::Grammar g = elaborate(parse_grammar("alphabet: a b c blt\n"));
  auto check = [&](const Word& u, const Word& v) {
    Theorem t = phon_homomorphism(g, u, v);
    CHECK(t.hypotheses().empty());
    CHECK(alpha_equal(t.conclusion(),
                      mk_eq(word_to_phon(g, u + v),
                            mk_cat(word_to_phon(g, u), word_to_phon(g, v)))));
  };
  check(Word{}, Word::parse("blt"));
  check(Word::parse("a b"), Word::parse("c"));
  check(Word{}, Word{});
  std::mt19937 rng(23);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::string> u, v;
    for (int k = rng() % 4; k > 0; --k) u.push_back(std::string(1, "abc"[rng() % 3]));
    for (int k = rng() % 4; k > 0; --k) v.push_back(std::string(1, "abc"[rng() % 3]));
    check(Word(u), Word(v));
  }
}
