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

#include "hog/merge.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "hog/cond.hpp"
#include "hog/derived.hpp"
#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/syntax.hpp"

namespace hog {

namespace d = derived;
namespace k = kernel;

namespace {

Term disjunction(const Term& a, const Term& a1, const Term& a2) {
  return mk_or(mk_eq(a, a1), mk_eq(a, a2));
}

Term fresh_var(const std::string& base, const Type& ty,
               std::initializer_list<Term> avoid_in) {
  std::set<std::string> avoid;
  for (const Term& t : avoid_in) collect_free_names(t, avoid);
  return Term::var(variant_name(base, avoid), ty);
}

void require_bool(const Term& t, const char* what) {
  if (!(t.type() == bool_type())) {
    throw TypeError(std::string(what) + ": expected a Bool term, got " +
                    to_string(t.type()));
  }
}

}  // namespace

void check_certificate(const ClosureCertificate& cert) {
  if (!(cert.target.type() == cert.left.type()) ||
      !(cert.left.type() == cert.right.type())) {
    throw MergeError("certificate terms differ in type");
  }
  if (!cert.proof.hypotheses().empty()) {
    throw MergeError("certificate proof has hypotheses");
  }
  Term want = disjunction(cert.target, cert.left, cert.right);
  if (!alpha_equal(cert.proof.conclusion(), want)) {
    throw MergeError("certificate proves " + print_pretty(cert.proof.conclusion()) +
                     ", expected " + print_pretty(want));
  }
}

ClosureCertificate certify_left(const Theory& th, const Term& a1, const Term& a2) {
  Theorem p = d::disj1(th, k::refl(th, a1), mk_eq(a1, a2));
  return {a1, a1, a2, p};
}

ClosureCertificate certify_right(const Theory& th, const Term& a1, const Term& a2) {
  Theorem p = d::disj2(th, mk_eq(a2, a1), k::refl(th, a2));
  return {a2, a1, a2, p};
}

ClosureCertificate certify_cases(const Theory& th, const Term& a1,
                                 const Term& a2, const Term& q) {
  require_bool(q, "certify_cases");
  Term v = fresh_var("q", bool_type(), {a1, a2});
  Term cv = mk_cond(a1, a2, v);
  Term pred = Term::abs(v, disjunction(cv, a1, a2));
  Theorem p = d::cases_on(th, q, pred, [&](const Term&, const Term& value) {
    if (is_truth(value)) {
      return d::disj1(th, cond_true(th, a1, a2), mk_eq(mk_cond(a1, a2, value), a2));
    }
    return d::disj2(th, mk_eq(mk_cond(a1, a2, value), a1), cond_false(th, a1, a2));
  });
  return {mk_cond(a1, a2, q), a1, a2, p};
}

ClosureCertificate certify_taut(const Theory& th, const Term& a,
                                const Term& a1, const Term& a2) {
  require_bool(a, "certify_taut");
  return {a, a1, a2, d::taut(th, disjunction(a, a1, a2))};
}

ParseResult merge_parses(const Grammar& g, const ParseResult& p1,
                         const ParseResult& p2, const ClosureCertificate& cert) {
  if (p1.word != p2.word) {
    throw MergeError("parses are of different words: \"" + p1.word.to_string() +
                     "\" and \"" + p2.word.to_string() + "\"");
  }
  if (p1.sign_type != p2.sign_type) {
    throw MergeError("parses have different sign types " + p1.sign_type + " and " +
                     p2.sign_type);
  }
  if (!alpha_equal(cert.left, p1.meaning) || !alpha_equal(cert.right, p2.meaning)) {
    throw MergeError("certificate does not mention the meanings of the parses");
  }
  check_certificate(cert);
  const Theory& th = g.theory();
  if (cert.proof.theory_id() != th.id()) {
    throw MergeError("certificate was proved in another theory");
  }

  const Term& a = cert.target;
  const Term& a1 = p1.meaning;
  const Term& a2 = p2.meaning;
  const Term z = mk_eq(a, a1);
  const Term s1 = p1.sign;
  const Term s2 = p2.sign;
  Theorem rz = k::refl(th, z);

  // phon(C(s1, s2, z)) = C(phon s1, phon s2, z) = C(/w/, /w/, z) = /w/
  Theorem pd = cond_distrib(th, g.phon_constant(p1.sign_type), s1, s2, z);
  Theorem pc = d::ap_term(th, rhs(pd.conclusion()).fn(),
                          d::pair_cong(th, p1.phon_proof,
                                       d::pair_cong(th, p2.phon_proof, rz)));
  Theorem phon = k::trans(
      th, pd, k::trans(th, pc, cond_idem(th, rhs(p1.phon_proof.conclusion()), z)));

  // sem(C(s1, s2, z)) = C(sem s1, sem s2, z) = C(a1, a2, z)
  Theorem sd = cond_distrib(th, g.sem_constant(p1.sign_type), s1, s2, z);
  Theorem sc = d::ap_term(th, rhs(sd.conclusion()).fn(),
                          d::pair_cong(th, p1.sem_proof,
                                       d::pair_cong(th, p2.sem_proof, rz)));

  // From the certificate: C_Bool(a = a1, a = a2, z), then a = C(a1, a2, z).
  Theorem cb = k::eq_mp(th, or_as_cond(th, mk_eq(a, a1), mk_eq(a, a2)), cert.proof);
  Term u = fresh_var("u", a.type(), {a, a1, a2});
  Term f = Term::abs(u, mk_eq(a, u));
  Theorem fd = cond_distrib(th, f, a1, a2, z);
  Theorem l = k::beta(th, lhs(fd.conclusion()));
  Term triple = rhs(fd.conclusion()).arg();
  Theorem r = d::ap_term(
      th, rhs(fd.conclusion()).fn(),
      d::pair_cong(th, k::beta(th, triple.left()),
                   d::pair_cong(th, k::beta(th, triple.right().left()), rz)));
  Theorem e = k::trans(th, k::sym(th, l), k::trans(th, fd, r));
  Theorem ac = k::eq_mp(th, k::sym(th, e), cb);

  Theorem sem = k::trans(th, k::trans(th, sd, sc), k::sym(th, ac));
  sem = k::trans(th, sem, d::beta_norm_conv(th, a));

  return ParseResult{p1.word, p1.sign_type, mk_cond(s1, s2, z),
                     rhs(sem.conclusion()), phon, sem,
                     std::max(p1.depth, p2.depth) + 1};
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string expand(std::string text, const Term& a1, const Term& a2) {
  for (auto [key, t] : {std::pair{"$a1", &a1}, std::pair{"$a2", &a2}}) {
    std::string rep = "(" + print_canonical(*t) + ")";
    for (std::size_t pos; (pos = text.find(key)) != std::string::npos;) {
      text.replace(pos, 3, rep);
    }
  }
  return text;
}

}  // namespace

ClosureCertificate run_certificate_script(const Grammar& g, std::string_view script,
                                          const Term& a1, const Term& a2) {
  const Theory& th = g.theory();
  ParseOptions opts;
  std::optional<Term> target;
  std::optional<ClosureCertificate> cert;
  std::istringstream in{std::string(script)};
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw MergeError("certificate line " + std::to_string(line_no) + ": " + msg);
  };
  auto term = [&](const std::string& text) {
    try {
      return parse_term(expand(text, a1, a2), th.signature(), opts);
    } catch (const Error& e) {
      fail(e.what());
    }
    throw MergeError("unreachable");
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string head = line.substr(0, sp);
    std::string body = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (cert) fail("nothing may follow the `by` line");
    if (head == "var") {
      std::size_t colon = body.find(':');
      if (colon == std::string::npos) fail("expected `var <name> : <type>`");
      std::string name = trim(body.substr(0, colon));
      if (!is_identifier(name)) fail("bad variable name `" + name + "`");
      try {
        opts.free_vars.insert_or_assign(name, parse_type(trim(body.substr(colon + 1))));
      } catch (const Error& e) {
        fail(e.what());
      }
    } else if (head == "target") {
      if (target) fail("duplicate target");
      target = term(body);
    } else if (head == "by") {
      std::size_t sp2 = body.find_first_of(" \t");
      std::string how = body.substr(0, sp2);
      std::string arg = sp2 == std::string::npos ? "" : trim(body.substr(sp2));
      try {
        if (how == "left" && arg.empty()) {
          cert = certify_left(th, a1, a2);
        } else if (how == "right" && arg.empty()) {
          cert = certify_right(th, a1, a2);
        } else if (how == "cases" && !arg.empty()) {
          cert = certify_cases(th, a1, a2, term(arg));
        } else if (how == "taut" && arg.empty()) {
          if (!target) fail("`by taut` needs a target");
          cert = certify_taut(th, *target, a1, a2);
        } else {
          fail("expected `by left`, `by right`, `by cases <term>` or `by taut`");
        }
      } catch (const MergeError&) {
        throw;
      } catch (const Error& e) {
        fail(e.what());
      }
      if (target && !alpha_equal(*target, cert->target)) {
        fail("strategy proves target " + print_pretty(cert->target) + ", not " +
             print_pretty(*target));
      }
    } else {
      fail("unknown directive `" + head + "`");
    }
  }
  if (!cert) throw MergeError("certificate script has no `by` line");
  return *cert;
}

}  // namespace hog
