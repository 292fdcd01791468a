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

#include "hog/closure.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/syntax.hpp"
#include "hog/theory.hpp"
#include "hog/truth_table.hpp"

namespace hog {
namespace {

using Row = std::vector<std::uint64_t>;
using Pair = std::pair<std::size_t, std::size_t>;

void require_bool_universe(const TermUniverse& u) {
  if (!(u.type == bool_type())) {
    throw FragmentError("closure needs a Bool universe, not " + to_string(u.type));
  }
}

void require_shape(const TermUniverse& u, const Membership& m) {
  if (m.size() != u.size()) {
    throw Error("membership has " + std::to_string(m.size()) +
                " flags for a universe of " + std::to_string(u.size()));
  }
}

struct Tables {
  std::vector<Row> rows;
  std::uint64_t tail = ~std::uint64_t{0};
};

Tables tabulate(const TermUniverse& u) {
  require_bool_universe(u);
  Tables t;
  t.rows.resize(u.size());
  std::exception_ptr error;
  const long n = static_cast<long>(u.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      TruthTable tt(u.terms[i], u.variables);
      t.rows[i] = tt.words();
      if (i == 0) t.tail = tt.tail_mask();
    } catch (...) {
#pragma omp critical(hog_closure_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return t;
}

// a = b \/ a = c holds in every row.
bool justifies(const Row& a, const Row& b, const Row& c, std::uint64_t tail) {
  const std::size_t n = a.size();
  for (std::size_t w = 0; w < n; ++w) {
    std::uint64_t ok = ~(a[w] ^ b[w]) | ~(a[w] ^ c[w]);
    std::uint64_t want = w + 1 == n ? tail : ~std::uint64_t{0};
    if ((ok & want) != want) return false;
  }
  return true;
}

// Distinct tables among the flagged terms, each with its least index.
std::vector<std::pair<const Row*, std::size_t>> distinct(const Tables& t,
                                                         const Membership& s) {
  std::map<Row, std::size_t> first;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) first.emplace(t.rows[i], i);
  }
  std::vector<std::pair<const Row*, std::size_t>> out;
  for (const auto& [row, idx] : first) out.emplace_back(&t.rows[idx], idx);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

// Least pair (i, j), i <= j, over members justifying `a`.
std::optional<Pair> first_pair(const Row& a,
                               const std::vector<std::pair<const Row*, std::size_t>>& reps,
                               std::uint64_t tail) {
  std::optional<Pair> best;
  for (std::size_t p = 0; p < reps.size(); ++p) {
    if (best && reps[p].second > best->first) break;
    for (std::size_t q = p; q < reps.size(); ++q) {
      Pair key{reps[p].second, reps[q].second};
      if (best && key >= *best) break;
      if (justifies(a, *reps[p].first, *reps[q].first, tail)) best = key;
    }
  }
  return best;
}

ClosureResult start(const TermUniverse& u, const Membership& m) {
  require_bool_universe(u);
  require_shape(u, m);
  ClosureResult r;
  r.members = m;
  r.witness.assign(u.size(), std::nullopt);
  r.round.assign(u.size(), 0);
  return r;
}

const char* const kVarNames[] = {"x", "y", "z", "w", "u", "v"};

}  // namespace

std::optional<std::size_t> TermUniverse::find(const Term& t) const {
  std::string key = alpha_key(beta_normalize(t));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (alpha_key(terms[i]) == key) return i;
  }
  return std::nullopt;
}

TermUniverse make_universe(const std::vector<Term>& terms) {
  if (terms.empty()) throw Error("empty universe");
  TermUniverse u{terms.front().type(), {}, {}};
  std::set<std::string> seen;
  for (const Term& t : terms) {
    if (!(t.type() == u.type)) {
      throw TypeError("universe term " + print_pretty(t) + " has type " +
                      to_string(t.type()) + ", expected " + to_string(u.type));
    }
    Term n = beta_normalize(t);
    if (!seen.insert(alpha_key(n)).second) continue;
    for (const Term& v : free_vars(n)) {
      bool known = std::any_of(u.variables.begin(), u.variables.end(),
                               [&](const Term& x) { return same_var(x, v); });
      if (!known) u.variables.push_back(v);
    }
    u.terms.push_back(n);
  }
  return u;
}

TermUniverse generate_bool_universe(std::size_t n_vars, std::size_t max_size,
                                    bool with_cond) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size >= 1) {
    for (std::size_t i = 0; i < n_vars; ++i) {
      std::string name = i < 6 ? kVarNames[i] : "x" + std::to_string(i);
      by_size[1].push_back(Term::var(name, bool_type()));
    }
    by_size[1].push_back(truth());
    by_size[1].push_back(falsity());
  }
  using Bin = Term (*)(const Term&, const Term&);
  const Bin ops[] = {mk_and, mk_or, mk_imp, mk_eq};
  for (std::size_t s = 2; s <= max_size; ++s) {
    std::vector<Term>& out = by_size[s];
    for (const Term& t : by_size[s - 1]) out.push_back(mk_not(t));
    for (Bin op : ops) {
      for (std::size_t a = 1; a + 1 < s; ++a) {
        for (const Term& l : by_size[a]) {
          for (const Term& r : by_size[s - 1 - a]) out.push_back(op(l, r));
        }
      }
    }
    if (!with_cond) continue;
    for (std::size_t a = 1; a + 2 < s; ++a) {
      for (std::size_t b = 1; a + b + 1 < s; ++b) {
        std::size_t c = s - 1 - a - b;
        for (const Term& x : by_size[a]) {
          for (const Term& y : by_size[b]) {
            for (const Term& z : by_size[c]) out.push_back(mk_cond(x, y, z));
          }
        }
      }
    }
  }
  std::vector<Term> all;
  for (const auto& level : by_size) all.insert(all.end(), level.begin(), level.end());
  if (all.empty()) throw Error("empty universe");
  TermUniverse u = make_universe(all);
  // Keep declared variables even when max_size leaves some unused.
  u.variables.clear();
  for (std::size_t i = 0; i < n_vars; ++i) u.variables.push_back(by_size[1][i]);
  return u;
}

ClosureResult closure_saturate(const TermUniverse& u, const Membership& m) {
  ClosureResult r = start(u, m);
  Tables t = tabulate(u);
  for (;;) {
    auto reps = distinct(t, r.members);
    // Candidate tables not yet covered, each searched once.
    std::map<Row, std::vector<std::size_t>> pending;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!r.members[i]) pending[t.rows[i]].push_back(i);
    }
    std::vector<const std::pair<const Row, std::vector<std::size_t>>*> work;
    for (const auto& entry : pending) work.push_back(&entry);
    std::vector<std::optional<Pair>> found(work.size());
    const long n = static_cast<long>(work.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) found[i] = first_pair(work[i]->first, reps, t.tail);

    bool grew = false;
    ++r.rounds;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (!found[i]) continue;
      for (std::size_t idx : work[i]->second) {
        r.members[idx] = true;
        r.witness[idx] = found[i];
        r.round[idx] = r.rounds;
        grew = true;
      }
    }
    if (!grew) break;
  }
  return r;
}

ClosureResult closure_saturate_serial(const TermUniverse& u, const Membership& m) {
  ClosureResult r = start(u, m);
  for (;;) {
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (r.members[i]) in.push_back(i);
    }
    std::vector<std::pair<std::size_t, Pair>> added;
    for (std::size_t a = 0; a < u.size(); ++a) {
      if (r.members[a]) continue;
      std::optional<Pair> w;
      for (std::size_t p = 0; p < in.size() && !w; ++p) {
        for (std::size_t q = p; q < in.size() && !w; ++q) {
          const Term& ta = u.terms[a];
          Term f = mk_or(mk_eq(ta, u.terms[in[p]]), mk_eq(ta, u.terms[in[q]]));
          if (bool_valid_serial(f)) w = Pair{in[p], in[q]};
        }
      }
      if (w) added.emplace_back(a, *w);
    }
    ++r.rounds;
    for (const auto& [a, w] : added) {
      r.members[a] = true;
      r.witness[a] = w;
      r.round[a] = r.rounds;
    }
    if (added.empty()) break;
  }
  return r;
}

bool is_logically_closed(const TermUniverse& u, const Membership& m) {
  return closure_saturate(u, m).members == m;
}

bool sets_equivalent(const TermUniverse& u, const Membership& m, const Membership& n) {
  return closure_saturate(u, m).members == closure_saturate(u, n).members;
}

std::vector<std::pair<Word, Term>> logical_singleton(const TermUniverse& u,
                                                     const Word& w, const Term& a) {
  std::optional<std::size_t> idx = u.find(a);
  if (!idx) throw Error("term " + print_pretty(a) + " is not in the universe");
  Membership m(u.size(), false);
  m[*idx] = true;
  ClosureResult r = closure_saturate(u, m);
  std::vector<std::pair<Word, Term>> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (r.members[i]) out.emplace_back(w, u.terms[i]);
  }
  return out;
}

TermLanguage identity_language(const TermUniverse& u) {
  TermLanguage out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.emplace_back(Word(std::vector<std::string>{print_pretty(u.terms[i])}), i);
  }
  return out;
}

std::optional<ClosureViolation> find_closure_violation(const TermUniverse& u,
                                                       const TermLanguage& lang) {
  Tables t = tabulate(u);
  std::vector<Word> order;
  std::map<Word, Membership> meanings;
  for (const auto& [w, i] : lang) {
    if (i >= u.size()) throw Error("language mentions term index " + std::to_string(i));
    auto [it, fresh] = meanings.try_emplace(w, Membership(u.size(), false));
    if (fresh) order.push_back(w);
    it->second[i] = true;
  }
  for (const Word& w : order) {
    const Membership& m = meanings.at(w);
    auto reps = distinct(t, m);
    for (std::size_t a = 0; a < u.size(); ++a) {
      if (m[a]) continue;
      if (auto p = first_pair(t.rows[a], reps, t.tail)) {
        return ClosureViolation{w, a, p->first, p->second};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

UniverseFile parse_universe(std::string_view text, const std::string& source) {
  auto core = Theory::logical_core();
  ParseOptions opts;
  std::vector<Term> terms;
  std::vector<bool> marks;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto where = [&] { return source + ":" + std::to_string(line_no) + ": "; };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      if (!terms.empty()) throw SyntaxError(where() + "`vars:` must precede the terms");
      std::istringstream names(line.substr(5));
      for (std::string name; names >> name;) {
        if (!is_identifier(name)) throw SyntaxError(where() + "bad variable `" + name + "`");
        opts.free_vars.insert_or_assign(name, bool_type());
      }
      continue;
    }
    bool mark = line.front() == '*';
    if (mark) line = trim(line.substr(1));
    try {
      terms.push_back(parse_term(line, core->signature(), opts));
    } catch (const Error& e) {
      throw SyntaxError(where() + e.what());
    }
    marks.push_back(mark);
  }
  if (terms.empty()) throw SyntaxError(source + ": no terms");
  UniverseFile f{make_universe(terms), {}};
  f.input.assign(f.universe.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (marks[i]) f.input[*f.universe.find(terms[i])] = true;
  }
  return f;
}

UniverseFile read_universe_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_universe(ss.str(), path);
}

std::string write_universe(const TermUniverse& u, const Membership& input) {
  require_shape(u, input);
  std::ostringstream out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out << (input[i] ? "* " : "") << print_canonical(u.terms[i]) << '\n';
  }
  return out.str();
}

std::string closure_report(const TermUniverse& u, const Membership& input,
                           const ClosureResult& r) {
  require_shape(u, input);
  std::size_t n_in = std::count(input.begin(), input.end(), true);
  std::size_t n_cl = std::count(r.members.begin(), r.members.end(), true);
  std::ostringstream out;
  out << "# terms " << u.size() << ", input " << n_in << ", closure " << n_cl
      << ", rounds " << r.rounds << '\n';
  out << std::left << std::setw(6) << "idx" << std::setw(4) << "in" << std::setw(4)
      << "cl" << std::setw(12) << "witness" << "term\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::string w = "-";
    if (r.witness[i]) {
      w = std::to_string(r.witness[i]->first) + "," + std::to_string(r.witness[i]->second);
    }
    out << std::setw(6) << i << std::setw(4) << (input[i] ? "*" : ".") << std::setw(4)
        << (r.members[i] ? "*" : ".") << std::setw(12) << w << print_pretty(u.terms[i])
        << '\n';
  }
  return out.str();
}

}  // namespace hog
