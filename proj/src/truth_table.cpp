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

#include "hog/truth_table.hpp"

#include <map>
#include <set>
#include <string>

#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/syntax.hpp"

namespace hog {
namespace {

enum class Op : std::uint8_t { kVar, kTrue, kFalse, kNot, kAnd, kOr, kImp, kIff, kCond };

struct Instr {
  Op op;
  std::uint32_t var = 0;
};

bool is_bool(const Term& t) { return t.type() == bool_type(); }

[[noreturn]] void outside(const Term& t) {
  throw FragmentError("outside the Bool fragment: " + print_pretty(t));
}

std::size_t var_index(const Term& v, const std::vector<Term>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (same_var(vars[i], v)) return i;
  }
  throw FragmentError("unlisted variable " + v.name());
}

// Postfix program; operands precede their operator.
void compile(const Term& t, const std::vector<Term>& vars,
             std::vector<Instr>& out) {
  if (t.is_var() && is_bool(t)) {
    out.push_back({Op::kVar, static_cast<std::uint32_t>(var_index(t, vars))});
  } else if (is_truth(t)) {
    out.push_back({Op::kTrue});
  } else if (is_falsity(t)) {
    out.push_back({Op::kFalse});
  } else if (is_not(t)) {
    compile(t.arg(), vars, out);
    out.push_back({Op::kNot});
  } else if (is_cond(t) && is_bool(t)) {
    auto [x, y, z] = dest_cond(t);
    compile(x, vars, out);
    compile(y, vars, out);
    compile(z, vars, out);
    out.push_back({Op::kCond});
  } else if (t.is_app() && t.fn().is_app() &&
             (is_binop(t, names::kAnd) || is_binop(t, names::kOr) ||
              is_binop(t, names::kImp) || (is_eq(t) && is_bool(t.arg())))) {
    compile(t.fn().arg(), vars, out);
    compile(t.arg(), vars, out);
    Op op = is_binop(t, names::kAnd)  ? Op::kAnd
            : is_binop(t, names::kOr) ? Op::kOr
            : is_binop(t, names::kImp) ? Op::kImp
                                       : Op::kIff;
    out.push_back({op});
  } else {
    outside(t);
  }
}

std::uint64_t var_word(std::uint32_t var, std::size_t block) {
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (var < 6) return kPatterns[var];
  return ((block >> (var - 6)) & 1u) ? ~std::uint64_t{0} : 0;
}

std::uint64_t run(const std::vector<Instr>& prog, std::size_t block,
                  std::vector<std::uint64_t>& stack) {
  stack.clear();
  for (const Instr& in : prog) {
    switch (in.op) {
      case Op::kVar: stack.push_back(var_word(in.var, block)); break;
      case Op::kTrue: stack.push_back(~std::uint64_t{0}); break;
      case Op::kFalse: stack.push_back(0); break;
      case Op::kNot: stack.back() = ~stack.back(); break;
      case Op::kCond: {
        std::uint64_t z = stack.back(); stack.pop_back();
        std::uint64_t y = stack.back(); stack.pop_back();
        std::uint64_t x = stack.back();
        stack.back() = (z & x) | (~z & y);
        break;
      }
      default: {
        std::uint64_t b = stack.back(); stack.pop_back();
        std::uint64_t a = stack.back();
        switch (in.op) {
          case Op::kAnd: a &= b; break;
          case Op::kOr: a |= b; break;
          case Op::kImp: a = ~a | b; break;
          default: a = ~(a ^ b); break;
        }
        stack.back() = a;
      }
    }
  }
  return stack.back();
}

void collect_vars(const Term& t, std::vector<Term>& out) {
  if (t.is_var()) {
    if (!is_bool(t)) outside(t);
    for (const Term& v : out) {
      if (same_var(v, t)) return;
    }
    out.push_back(t);
    return;
  }
  if (is_truth(t) || is_falsity(t)) return;
  if (!in_bool_fragment(t)) outside(t);
  if (is_not(t)) {
    collect_vars(t.arg(), out);
  } else if (is_cond(t)) {
    auto [x, y, z] = dest_cond(t);
    collect_vars(x, out);
    collect_vars(y, out);
    collect_vars(z, out);
  } else {
    collect_vars(t.fn().arg(), out);
    collect_vars(t.arg(), out);
  }
}

bool eval_row(const Term& t, const std::vector<Term>& vars, std::size_t row) {
  if (t.is_var()) return (row >> var_index(t, vars)) & 1u;
  if (is_truth(t)) return true;
  if (is_falsity(t)) return false;
  if (is_not(t)) return !eval_row(t.arg(), vars, row);
  if (is_cond(t)) {
    auto [x, y, z] = dest_cond(t);
    return eval_row(z, vars, row) ? eval_row(x, vars, row) : eval_row(y, vars, row);
  }
  bool a = eval_row(t.fn().arg(), vars, row);
  bool b = eval_row(t.arg(), vars, row);
  if (is_binop(t, names::kAnd)) return a && b;
  if (is_binop(t, names::kOr)) return a || b;
  if (is_binop(t, names::kImp)) return !a || b;
  return a == b;
}

}  // namespace

bool in_bool_fragment(const Term& t) {
  if (!is_bool(t)) return false;
  if (t.is_var() || is_truth(t) || is_falsity(t)) return true;
  if (is_not(t)) return in_bool_fragment(t.arg());
  if (is_cond(t)) {
    auto [x, y, z] = dest_cond(t);
    return in_bool_fragment(x) && in_bool_fragment(y) && in_bool_fragment(z);
  }
  if (is_binop(t, names::kAnd) || is_binop(t, names::kOr) ||
      is_binop(t, names::kImp) || (is_eq(t) && is_bool(t.arg()))) {
    return in_bool_fragment(t.fn().arg()) && in_bool_fragment(t.arg());
  }
  return false;
}

std::vector<Term> fragment_variables(const Term& t) {
  if (!is_bool(t)) outside(t);
  std::vector<Term> out;
  collect_vars(t, out);
  return out;
}

TruthTable::TruthTable(const Term& t, const std::vector<Term>& vars)
    : vars_(vars.size()) {
  if (vars_ > kMaxVariables) {
    throw FragmentError("too many variables for a truth table: " +
                        std::to_string(vars_));
  }
  std::vector<Instr> prog;
  compile(t, vars, prog);
  const std::size_t blocks = vars_ <= 6 ? 1 : (std::size_t{1} << (vars_ - 6));
  bits_.assign(blocks, 0);
  const long n = static_cast<long>(blocks);
#pragma omp parallel if (n >= 256)
  {
    std::vector<std::uint64_t> stack;
#pragma omp for schedule(static)
    for (long b = 0; b < n; ++b) {
      bits_[b] = run(prog, static_cast<std::size_t>(b), stack);
    }
  }
  bits_.back() &= tail_mask();
}

std::uint64_t TruthTable::tail_mask() const {
  if (vars_ >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::size_t{1} << vars_)) - 1;
}

bool TruthTable::all() const {
  for (std::size_t i = 0; i + 1 < bits_.size(); ++i) {
    if (bits_[i] != ~std::uint64_t{0}) return false;
  }
  return bits_.back() == tail_mask();
}

bool TruthTable::none() const {
  for (std::uint64_t w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

bool bool_valid(const Term& t) {
  return TruthTable(t, fragment_variables(t)).all();
}

bool bool_valid_serial(const Term& t) {
  std::vector<Term> vars = fragment_variables(t);
  if (vars.size() > TruthTable::kMaxVariables) {
    throw FragmentError("too many variables for a truth table");
  }
  for (std::size_t row = 0; row < (std::size_t{1} << vars.size()); ++row) {
    if (!eval_row(t, vars, row)) return false;
  }
  return true;
}

namespace {

Term abstract_rec(const Term& t, std::map<std::string, Term>& atoms,
                  std::set<std::string>& avoid) {
  if (t.is_var() || is_truth(t) || is_falsity(t)) return t;
  if (is_not(t)) return mk_not(abstract_rec(t.arg(), atoms, avoid));
  if (is_cond(t) && is_bool(t)) {
    auto [x, y, z] = dest_cond(t);
    return mk_cond(abstract_rec(x, atoms, avoid), abstract_rec(y, atoms, avoid),
                   abstract_rec(z, atoms, avoid));
  }
  if (is_binop(t, names::kAnd) || is_binop(t, names::kOr) ||
      is_binop(t, names::kImp) || (is_eq(t) && is_bool(t.arg()))) {
    Term l = abstract_rec(t.fn().arg(), atoms, avoid);
    Term r = abstract_rec(t.arg(), atoms, avoid);
    return Term::app(Term::app(t.fn().fn(), l), r);
  }
  std::string key = alpha_key(t);
  auto it = atoms.find(key);
  if (it != atoms.end()) return it->second;
  Term v = Term::var(variant_name("p", avoid), bool_type());
  avoid.insert(v.name());
  atoms.emplace(key, v);
  return v;
}

}  // namespace

Term abstract_to_fragment(const Term& t) {
  if (!is_bool(t)) outside(t);
  std::set<std::string> avoid;
  collect_free_names(t, avoid);
  std::map<std::string, Term> atoms;
  return abstract_rec(t, atoms, avoid);
}

}  // namespace hog
