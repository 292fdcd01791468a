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

#include "doctest.h"
#include "hog/cond.hpp"
#include "hog/error.hpp"
#include "hog/merge.hpp"
#include "hog/syntax.hpp"
#include "support.hpp"

using namespace hog;

namespace {

struct Ambiguous {
  hog::Grammar g = hogtest::grammar("ambiguous");
  std::vector<ParseResult> rs = parse(g, Word::parse("fajdo blt"), 3);
  const Theory& th = g.theory();
};

void check_merged(const hog::Grammar& g, const ParseResult& m, const ParseResult& p1,
                  const ParseResult& p2, const Term& a) {
  Term z = mk_eq(a, p1.meaning);
  CHECK(alpha_equal(m.sign, mk_cond(p1.sign, p2.sign, z)));
  CHECK(alpha_equal(m.meaning, beta_normalize(a)));
  CHECK(m.word == p1.word);
  CHECK(m.phon_proof.hypotheses().empty());
  CHECK(m.sem_proof.hypotheses().empty());
  CHECK(alpha_equal(m.phon_proof.conclusion(),
                    mk_eq(Term::app(g.phon_constant(m.sign_type), m.sign),
                          word_to_phon(g, m.word))));
  CHECK(alpha_equal(m.sem_proof.conclusion(),
                    mk_eq(Term::app(g.sem_constant(m.sign_type), m.sign), m.meaning)));
}

}  // namespace

TEST_CASE_FIXTURE(Ambiguous, "degenerate merge of a parse with itself") {
  REQUIRE(rs.size() == 2);
  const ParseResult& p = rs[0];
  ClosureCertificate c = certify_left(th, p.meaning, p.meaning);
  ParseResult m = merge_parses(g, p, p, c);
  check_merged(g, m, p, p, p.meaning);
  CHECK(m.depth == p.depth + 1);
  // The phonology proof goes through cond_idem.
  std::string trace = export_trace(m.phon_proof);
  hog::Grammar fresh = hogtest::grammar("ambiguous");
  CHECK(hogtest::reverifies({m.phon_proof, m.sem_proof}, fresh.theory()));
  CHECK(trace.find("cond") != std::string::npos);
}

TEST_CASE_FIXTURE(Ambiguous, "merge to a fresh conditional meaning") {
  const ParseResult& p1 = rs[0];
  const ParseResult& p2 = rs[1];
  Term q = Term::var("q", bool_type());
  ClosureCertificate c = certify_cases(th, p1.meaning, p2.meaning, q);
  CHECK(c.proof.hypotheses().empty());
  ParseResult m = merge_parses(g, p1, p2, c);
  check_merged(g, m, p1, p2, mk_cond(p1.meaning, p2.meaning, q));
  hog::Grammar fresh = hogtest::grammar("ambiguous");
  CHECK(hogtest::reverifies({m.phon_proof, m.sem_proof}, fresh.theory()));
}

TEST_CASE_FIXTURE(Ambiguous, "merge to the right meaning builds a new sign") {
  const ParseResult& p1 = rs[0];
  const ParseResult& p2 = rs[1];
  ClosureCertificate c = certify_right(th, p1.meaning, p2.meaning);
  ParseResult m = merge_parses(g, p1, p2, c);
  check_merged(g, m, p1, p2, p2.meaning);
  CHECK(alpha_equal(m.meaning, p2.meaning));
  CHECK_FALSE(alpha_equal(m.sign, p2.sign));
  CHECK(print_pretty(m.sign) ==
        "cond(SUBJ(FIDO, BARKS), SUBJ(FIDO, BOLTS), bolts(fido) = barks(fido))");
}

TEST_CASE_FIXTURE(Ambiguous, "merge rejects mismatched inputs") {
  const ParseResult& p1 = rs[0];
  const ParseResult& p2 = rs[1];
  ClosureCertificate c = certify_left(th, p1.meaning, p2.meaning);
  CHECK_THROWS_AS(merge_parses(g, p2, p1, c), MergeError);

  std::vector<ParseResult> other = parse(g, Word::parse("felks blt"), 3);
  REQUIRE(!other.empty());
  ClosureCertificate co = certify_left(th, p1.meaning, other[0].meaning);
  CHECK_THROWS_AS(merge_parses(g, p1, other[0], co), MergeError);

  std::vector<ParseResult> np = parse(g, Word::parse("fajdo"), 3);
  REQUIRE(np.size() == 1);
  CHECK_THROWS_AS(merge_parses(g, p1, np[0], certify_left(th, p1.meaning, p1.meaning)),
                  MergeError);

  // A proof of the wrong statement.
  ClosureCertificate forged{p2.meaning, p1.meaning, p2.meaning, c.proof};
  CHECK_THROWS_AS(merge_parses(g, p1, p2, forged), MergeError);

  // A proof with hypotheses.
  Term disj = mk_or(mk_eq(p2.meaning, p1.meaning), mk_eq(p2.meaning, p2.meaning));
  ClosureCertificate assumed{p2.meaning, p1.meaning, p2.meaning, kernel::assume(th, disj)};
  CHECK_THROWS_AS(merge_parses(g, p1, p2, assumed), MergeError);

  // A certificate from another theory.
  hog::Grammar other_g = hogtest::grammar("ambiguous");
  ClosureCertificate foreign = certify_left(other_g.theory(), p1.meaning, p2.meaning);
  CHECK_THROWS_AS(merge_parses(g, p1, p2, foreign), MergeError);
}

TEST_CASE_FIXTURE(Ambiguous, "certificate scripts") {
  const Term& a1 = rs[0].meaning;
  const Term& a2 = rs[1].meaning;
  ClosureCertificate l = run_certificate_script(g, "# trivial\nby left\n", a1, a2);
  CHECK(alpha_equal(l.target, a1));
  ClosureCertificate r = run_certificate_script(g, "target $a2\nby right\n", a1, a2);
  CHECK(alpha_equal(r.target, a2));
  ClosureCertificate c = run_certificate_script(
      g, "var q : Bool\ntarget cond($a1, $a2, q)\nby cases q\n", a1, a2);
  CHECK(alpha_equal(c.target, mk_cond(a1, a2, Term::var("q", bool_type()))));
  CHECK_THROWS_AS(run_certificate_script(g, "target $a2\nby left\n", a1, a2), MergeError);
  CHECK_THROWS_AS(run_certificate_script(g, "by sideways\n", a1, a2), MergeError);
  CHECK_THROWS_AS(run_certificate_script(g, "target $a1\n", a1, a2), MergeError);
  CHECK_THROWS_AS(run_certificate_script(g, "by cases q\n", a1, a2), MergeError);
  CHECK_THROWS_AS(run_certificate_script(g, "target $a1\nby taut\n", a1, a2), MergeError);
}

TEST_CASE("merge with a tautology certificate at Bool") {
  hog::Grammar g = hogtest::grammar("weather");
  std::vector<ParseResult> rs = parse(g, Word::parse("nat rejnz"), 3);
  REQUIRE(rs.size() == 3);
  Term target = parse_term("~rains \\/ ~rains", g.theory().signature());
  ClosureCertificate c = certify_taut(g.theory(), target, rs[0].meaning, rs[2].meaning);
  ParseResult m = merge_parses(g, rs[0], rs[2], c);
  check_merged(g, m, rs[0], rs[2], target);
  CHECK_THROWS_AS(certify_taut(g.theory(), parse_term("rains", g.theory().signature()),
                               rs[0].meaning, rs[2].meaning),
                  KernelError);
}

TEST_CASE("merged results merge again") {
  hog::Grammar g = hogtest::grammar("ambiguous");
  std::vector<ParseResult> rs = parse(g, Word::parse("fajdo blt"), 3);
  ParseResult m1 = merge_parses(g, rs[0], rs[1], certify_right(g.theory(), rs[0].meaning, rs[1].meaning));
  ParseResult m2 = merge_parses(g, m1, rs[0], certify_right(g.theory(), m1.meaning, rs[0].meaning));
  check_merged(g, m2, m1, rs[0], rs[0].meaning);
  CHECK(m2.depth == 4);
}
