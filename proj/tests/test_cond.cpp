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
#include "hog/derived.hpp"
#include "hog/error.hpp"
#include "hog/syntax.hpp"
#include "hog/truth_table.hpp"
#include "support.hpp"

using namespace hog;

namespace {

struct Fixture {
  hog::Grammar g = hogtest::grammar("ambiguous");
  const Theory& th = g.theory();
  Term fido = Term::constant("fido", ind_type());
  Term felix = Term::constant("felix", ind_type());
  Term barks = Term::constant("barks", Type::fun(ind_type(), prop_type()));
};

Term bvar(const char* n) { return Term::var(n, bool_type()); }

}  // namespace

TEST_CASE_FIXTURE(Fixture, "cond_constant at base, Bool and function types") {
  Type vp = Type::fun(ind_type(), prop_type());
  CHECK(cond_constant(th, ind_type()).type() ==
        Type::fun(Type::prod(ind_type(), Type::prod(ind_type(), bool_type())), ind_type()));
  CHECK(cond_constant(th, bool_type()).type().codomain() == bool_type());
  CHECK(cond_constant(th, vp).type().codomain() == vp);
  CHECK(alpha_equal(cond_constant(th, vp), cond_constant(th, vp)));
}

TEST_CASE_FIXTURE(Fixture, "fundamental properties") {
  Theorem t = cond_true(th, fido, felix);
  CHECK(print_pretty(t.conclusion()) == "cond(fido, felix, true) = fido");
  Theorem f = cond_false(th, fido, felix);
  CHECK(print_pretty(f.conclusion()) == "cond(fido, felix, false) = felix");
  Term x = Term::var("x", ind_type());
  CHECK(alpha_equal(cond_true(th, x, x).conclusion(), mk_eq(mk_cond(x, x, truth()), x)));
  CHECK(t.hypotheses().empty());
  CHECK_THROWS_AS(cond_true(th, fido, bvar("p")), TypeError);
}

TEST_CASE_FIXTURE(Fixture, "cond_distrib") {
  Term z = bvar("z");
  Theorem d = cond_distrib(th, barks, fido, felix, z);
  CHECK(print_pretty(d.conclusion()) ==
        "barks(cond(fido, felix, z)) = cond(barks(fido), barks(felix), z)");

  Term x = Term::var("x", ind_type());
  Term y = Term::var("y", ind_type());
  Term id = Term::abs(Term::var("u", ind_type()), Term::var("u", ind_type()));
  Theorem i = cond_distrib(th, id, x, y, z);
  auto [l, r] = dest_eq(i.conclusion());
  CHECK(alpha_equal(beta_normalize(l), mk_cond(x, y, z)));
  CHECK(alpha_equal(beta_normalize(r), mk_cond(x, y, z)));

  // Instances at z = T and z = F agree with the fundamental properties.
  for (Term v : {truth(), falsity()}) {
    Theorem inst = cond_distrib(th, barks, fido, felix, v);
    bool t = is_truth(v);
    Theorem in = t ? cond_true(th, fido, felix) : cond_false(th, fido, felix);
    Term fx = Term::app(barks, fido), fy = Term::app(barks, felix);
    Theorem out = t ? cond_true(th, fx, fy) : cond_false(th, fx, fy);
    Theorem c = kernel::trans(th, kernel::sym(th, derived::ap_term(th, barks, in)),
                              kernel::trans(th, inst, out));
    CHECK(alpha_equal(lhs(c.conclusion()), rhs(c.conclusion())));
  }
  CHECK_THROWS_AS(cond_distrib(th, barks, bvar("p"), bvar("p"), z), TypeError);
  CHECK_THROWS_AS(cond_distrib(th, barks, fido, felix, fido), TypeError);
}

TEST_CASE_FIXTURE(Fixture, "or_as_cond") {
  Term x = bvar("x"), y = bvar("y");
  Theorem s = or_as_cond(th, x, y);
  CHECK(alpha_equal(s.conclusion(), mk_eq(mk_or(x, y), mk_cond(x, y, x))));
  CHECK(bool_valid(s.conclusion()));

  // x = T: both sides reduce to T.
  Theorem tt = or_as_cond(th, truth(), y);
  Theorem left = derived::taut(th, mk_eq(mk_or(truth(), y), truth()));
  Theorem c = kernel::trans(th, kernel::sym(th, left),
                            kernel::trans(th, tt, cond_true(th, truth(), y)));
  CHECK(alpha_equal(c.conclusion(), mk_eq(truth(), truth())));

  // x = y = F: both sides reduce to F.
  Theorem ff = or_as_cond(th, falsity(), falsity());
  Theorem lf = derived::taut(th, mk_eq(mk_or(falsity(), falsity()), falsity()));
  Theorem cf = kernel::trans(th, kernel::sym(th, lf),
                             kernel::trans(th, ff, cond_false(th, falsity(), falsity())));
  CHECK(alpha_equal(cf.conclusion(), mk_eq(falsity(), falsity())));
  CHECK_THROWS_AS(or_as_cond(th, fido, y), TypeError);
}

TEST_CASE_FIXTURE(Fixture, "cond_idem") {
  Term z = bvar("z");
  Theorem a = cond_idem(th, fido, truth());
  Theorem b = cond_true(th, fido, fido);
  CHECK(alpha_equal(a.conclusion(), b.conclusion()));
  CHECK(print_pretty(cond_idem(th, fido, z).conclusion()) == "cond(fido, fido, z) = fido");
  CHECK(cond_idem(th, barks, z).conclusion().type() == bool_type());
  CHECK(bool_valid(cond_idem(th, bvar("x"), z).conclusion()));
}

TEST_CASE_FIXTURE(Fixture, "cond lemmas re-verify from their traces") {
  hog::Grammar fresh = hogtest::grammar("ambiguous");
  Term z = bvar("z");
  std::vector<Theorem> ts = {cond_true(th, fido, felix), cond_false(th, fido, felix),
                             cond_distrib(th, barks, fido, felix, z),
                             or_as_cond(th, bvar("x"), bvar("y")), cond_idem(th, fido, z)};
  CHECK(hogtest::reverifies(ts, fresh.theory()));
}
