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

#include "hog/syntax.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hog/error.hpp"
#include "hog/logic.hpp"

namespace hog {
namespace {

// ---------------------------------------------------------------- printing

bool is_connective_const(const Term& c) {
  return is_const_named(c, names::kNot) || is_const_named(c, names::kAnd) ||
         is_const_named(c, names::kOr) || is_const_named(c, names::kImp) ||
         is_const_named(c, names::kCat);
}

const char* binop_symbol(const Term& t) {
  if (is_binop(t, names::kAnd)) return "/\\";
  if (is_binop(t, names::kOr)) return "\\/";
  if (is_binop(t, names::kImp)) return "==>";
  if (is_binop(t, names::kEq)) return "=";
  return nullptr;
}

bool is_quantifier_app(const Term& t) {
  return t.is_app() && t.arg().is_abs() &&
         (is_const_named(t.fn(), names::kForall) ||
          is_const_named(t.fn(), names::kExists));
}

// Right-nested concatenation of token constants, printable as /a b c/.
bool phon_chain(const Term& t, std::vector<std::string>& tokens) {
  auto atom_token = [](const Term& c, std::string& out) {
    if (!c.is_const() || !(c.type() == phon_type())) return false;
    const std::string& n = c.name();
    if (n.size() < 3 || n.front() != '/' || n.back() != '/') return false;
    out = n.substr(1, n.size() - 2);
    return true;
  };
  std::string tok;
  if (atom_token(t, tok)) {
    tokens.push_back(tok);
    return true;
  }
  if (!is_cat(t)) return false;
  auto [u, v] = dest_cat(t);
  if (!atom_token(u, tok)) return false;
  tokens.push_back(tok);
  return phon_chain(v, tokens);
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += " ";
    out += tokens[i];
  }
  return out;
}

class CanonicalPrinter {
 public:
  std::string print(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return t.name() + ":" + to_string(t.type());
      case Term::Kind::kConst:
        return constant(t);
      case Term::Kind::kApp:
        return application(t);
      case Term::Kind::kAbs: {
        std::string head =
            "(\\" + t.bound().name() + ":" + to_string(t.bound().type()) + ". ";
        bound_.push_back(t.bound().name());
        std::string body = print(t.body());
        bound_.pop_back();
        return head + body + ")";
      }
      case Term::Kind::kPair:
        return "<" + print(t.left()) + ", " + print(t.right()) + ">";
      case Term::Kind::kProj:
        return std::string(t.index() == 1 ? "(fst " : "(snd ") +
               print(t.operand()) + ")";
    }
    return {};
  }

 private:
  std::string constant(const Term& c) {
    if (is_truth(c)) return "true";
    if (is_falsity(c)) return "false";
    if (Signature::is_family(c.name())) {
      auto param = Signature::family_parameter(c.name(), c.type());
      std::string s = c.name() + "[" + to_string(*param) + "]";
      return c.name() == names::kEq ? "(" + s + ")" : s;
    }
    if (is_connective_const(c)) return "(" + c.name() + ")";
    for (const auto& b : bound_) {
      if (b == c.name()) return "@" + c.name();
    }
    return c.name();
  }

  std::string application(const Term& t) {
    if (const char* op = binop_symbol(t)) {
      return "(" + print(t.fn().arg()) + " " + op + " " + print(t.arg()) + ")";
    }
    if (is_not(t)) return "(~ " + print(t.arg()) + ")";
    if (is_cat(t)) {
      std::vector<std::string> tokens;
      if (phon_chain(t, tokens)) return "/" + join_tokens(tokens) + "/";
      auto [u, v] = dest_cat(t);
      return "(" + print(u) + " ++ " + print(v) + ")";
    }
    if (is_quantifier_app(t)) {
      const Term abs = t.arg();
      std::string head = std::string(is_const_named(t.fn(), names::kForall)
                                         ? "(!"
                                         : "(?") +
                         abs.bound().name() + ":" +
                         to_string(abs.bound().type()) + ". ";
      bound_.push_back(abs.bound().name());
      std::string body = print(abs.body());
      bound_.pop_back();
      return head + body + ")";
    }
    return "(" + print(t.fn()) + " " + print(t.arg()) + ")";
  }

  std::vector<std::string> bound_;
};

std::string display_const_name(const Term& c) {
  const std::string& n = c.name();
  if (n.starts_with("phon[")) return "phon";
  if (n.starts_with("sem[")) return "sem";
  return n;
}

std::string pretty(const Term& t);

bool needs_parens(const Term& t) {
  return binop_symbol(t) != nullptr || is_not(t) || t.is_abs() ||
         is_quantifier_app(t) || (is_cat(t) && [&] {
           std::vector<std::string> tokens;
           return !phon_chain(t, tokens);
         }());
}

std::string pretty_operand(const Term& t) {
  std::string s = pretty(t);
  return needs_parens(t) ? "(" + s + ")" : s;
}

std::string pretty(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.name();
    case Term::Kind::kConst:
      if (is_truth(t)) return "true";
      if (is_falsity(t)) return "false";
      if (is_connective_const(t) || is_const_named(t, names::kEq)) {
        return "(" + t.name() + ")";
      }
      return display_const_name(t);
    case Term::Kind::kApp: {
      if (const char* op = binop_symbol(t)) {
        return pretty_operand(t.fn().arg()) + " " + op + " " +
               pretty_operand(t.arg());
      }
      if (is_not(t)) return "~" + pretty_operand(t.arg());
      if (is_cat(t)) {
        std::vector<std::string> tokens;
        if (phon_chain(t, tokens)) return "/" + join_tokens(tokens) + "/";
        auto [u, v] = dest_cat(t);
        return pretty_operand(u) + " ++ " + pretty_operand(v);
      }
      if (is_quantifier_app(t)) {
        const Term abs = t.arg();
        return std::string(is_const_named(t.fn(), names::kForall) ? "!" : "?") +
               abs.bound().name() + ":" + to_string(abs.bound().type()) +
               ". " + pretty(abs.body());
      }
      if (is_cond(t)) {
        auto [x, y, z] = dest_cond(t);
        return "cond(" + pretty(x) + ", " + pretty(y) + ", " + pretty(z) + ")";
      }
      auto [head, args] = strip_comb(t);
      std::string out = head.is_abs() ? "(" + pretty(head) + ")" : pretty(head);
      // phon and sem take one argument; further ones apply the result.
      std::string name = head.is_const() ? display_const_name(head) : "";
      bool unary = name == "phon" || name == "sem";
      out += "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += unary ? ")(" : ", ";
        out += pretty(args[i]);
      }
      return out + ")";
    }
    case Term::Kind::kAbs:
      return "\\" + t.bound().name() + ":" + to_string(t.bound().type()) +
             ". " + pretty(t.body());
    case Term::Kind::kPair:
      return "<" + pretty(t.left()) + ", " + pretty(t.right()) + ">";
    case Term::Kind::kProj:
      return std::string(t.index() == 1 ? "fst(" : "snd(") +
             pretty(t.operand()) + ")";
  }
  return {};
}

// ----------------------------------------------------------------- lexing

enum class Tok {
  kIdent,
  kAtIdent,
  kPhon,
  kLambda,
  kBang,
  kQuest,
  kLParen,
  kRParen,
  kLAngle,
  kRAngle,
  kComma,
  kDot,
  kColon,
  kLBracket,
  kRBracket,
  kArrow,
  kStar,
  kImp,
  kOr,
  kAnd,
  kEq,
  kNot,
  kCat,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::vector<std::string> phon;
  std::size_t pos;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto error = [&](const std::string& what) {
    throw SyntaxError(what + " at offset " + std::to_string(i) + " in `" +
                      std::string(s) + "`");
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto next = [&](std::size_t k) { return i + k < s.size() ? s[i + k] : '\0'; };
    if (ident_start(c) || (c == '@' && ident_start(next(1)))) {
      bool at = c == '@';
      if (at) ++i;
      std::size_t b = i;
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({at ? Tok::kAtIdent : Tok::kIdent,
                     std::string(s.substr(b, i - b)), {}, start});
      continue;
    }
    switch (c) {
      case '/':
        if (next(1) == '\\') {
          out.push_back({Tok::kAnd, "/\\", {}, start});
          i += 2;
        } else {
          std::size_t close = s.find('/', i + 1);
          if (close == std::string_view::npos) error("unterminated phonology");
          std::vector<std::string> tokens;
          std::string cur;
          for (std::size_t k = i + 1; k < close; ++k) {
            if (std::isspace(static_cast<unsigned char>(s[k]))) {
              if (!cur.empty()) tokens.push_back(std::move(cur));
              cur.clear();
            } else {
              cur += s[k];
            }
          }
          if (!cur.empty()) tokens.push_back(std::move(cur));
          out.push_back({Tok::kPhon, "", std::move(tokens), start});
          i = close + 1;
        }
        continue;
      case '\\':
        if (next(1) == '/') {
          out.push_back({Tok::kOr, "\\/", {}, start});
          i += 2;
        } else {
          out.push_back({Tok::kLambda, "\\", {}, start});
          ++i;
        }
        continue;
      case '=':
        if (next(1) == '=' && next(2) == '>') {
          out.push_back({Tok::kImp, "==>", {}, start});
          i += 3;
        } else {
          out.push_back({Tok::kEq, "=", {}, start});
          ++i;
        }
        continue;
      case '-':
        if (next(1) != '>') error("unexpected `-`");
        out.push_back({Tok::kArrow, "->", {}, start});
        i += 2;
        continue;
      case '+':
        if (next(1) != '+') error("unexpected `+`");
        out.push_back({Tok::kCat, "++", {}, start});
        i += 2;
        continue;
      default:
        break;
    }
    Tok kind = Tok::kEnd;
    switch (c) {
      case '!': kind = Tok::kBang; break;
      case '?': kind = Tok::kQuest; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '<': kind = Tok::kLAngle; break;
      case '>': kind = Tok::kRAngle; break;
      case ',': kind = Tok::kComma; break;
      case '.': kind = Tok::kDot; break;
      case ':': kind = Tok::kColon; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case '*': kind = Tok::kStar; break;
      case '~': kind = Tok::kNot; break;
      default:
        error(std::string("unexpected character `") + c + "`");
    }
    out.push_back({kind, std::string(1, c), {}, start});
    ++i;
  }
  out.push_back({Tok::kEnd, "", {}, s.size()});
  return out;
}

// ---------------------------------------------------------------- parsing

struct Pre;
using PrePtr = std::shared_ptr<const Pre>;

struct Pre {
  enum class Kind { kIdent, kPhon, kPair, kGroup, kApp, kBinder, kBinOp, kNot,
                    kOpConst };
  Kind kind = Kind::kIdent;
  std::string name;
  bool force_const = false;
  std::optional<Type> annot;
  std::optional<Type> bracket;
  std::vector<std::string> tokens;
  std::vector<PrePtr> kids;
};

class Parser {
 public:
  Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

  Type whole_type() {
    Type t = type();
    expect(Tok::kEnd, "end of type");
    return t;
  }

  PrePtr whole_term() {
    PrePtr t = term();
    expect(Tok::kEnd, "end of term");
    return t;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    throw SyntaxError("expected " + what + " at offset " +
                      std::to_string(peek().pos) + " in `" + std::string(text_) +
                      "`");
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (!at(kind)) error(what);
    return take();
  }

  Type type() {
    Type left = product_type();
    if (at(Tok::kArrow)) {
      take();
      return Type::fun(left, type());
    }
    return left;
  }

  Type product_type() {
    Type left = atom_type();
    if (at(Tok::kStar)) {
      take();
      return Type::prod(left, product_type());
    }
    return left;
  }

  Type atom_type() {
    if (at(Tok::kIdent)) return Type::base(take().text);
    if (at(Tok::kLParen)) {
      take();
      Type t = type();
      expect(Tok::kRParen, "`)` closing type");
      return t;
    }
    error("type");
  }

  static PrePtr node(Pre p) { return std::make_shared<const Pre>(std::move(p)); }

  bool at_binder() const {
    return at(Tok::kLambda) || at(Tok::kBang) || at(Tok::kQuest);
  }

  PrePtr term() {
    if (at_binder()) return binder();
    return binary(0);
  }

  PrePtr binder() {
    std::string sym = take().text;
    Pre p;
    p.kind = Pre::Kind::kBinder;
    p.name = sym;
    p.tokens.push_back(expect(Tok::kIdent, "bound variable").text);
    expect(Tok::kColon, "`:` after bound variable");
    p.annot = type();
    expect(Tok::kDot, "`.` after binder");
    p.kids.push_back(term());
    return node(std::move(p));
  }

  // Levels: 0 ==>, 1 \/, 2 /\, 3 =, 4 ++ ; all but `=` associate right.
  PrePtr binary(int level) {
    if (level == 5) return unary();
    static const Tok ops[] = {Tok::kImp, Tok::kOr, Tok::kAnd, Tok::kEq,
                              Tok::kCat};
    PrePtr left = binary(level + 1);
    if (!at(ops[level])) return left;
    std::string op = take().text;
    PrePtr right = at_binder() ? binder()
                               : (level == 3 ? binary(level + 1) : binary(level));
    Pre p;
    p.kind = Pre::Kind::kBinOp;
    p.name = op;
    p.kids = {left, right};
    return node(std::move(p));
  }

  PrePtr unary() {
    if (at(Tok::kNot)) {
      take();
      Pre p;
    p.kind = Pre::Kind::kNot;
      p.kids.push_back(at_binder() ? binder() : unary());
      return node(std::move(p));
    }
    return application();
  }

  bool at_atom_start() const {
    switch (peek().kind) {
      case Tok::kIdent:
      case Tok::kAtIdent:
      case Tok::kPhon:
      case Tok::kLParen:
      case Tok::kLAngle:
      case Tok::kLambda:
      case Tok::kBang:
      case Tok::kQuest:
        return true;
      default:
        return false;
    }
  }

  PrePtr application() {
    PrePtr head = atom();
    if (!at_atom_start()) return head;
    Pre p;
    p.kind = Pre::Kind::kApp;
    p.kids.push_back(head);
    while (at_atom_start()) {
      bool binder_arg = at_binder();
      PrePtr a = atom();
      if (a->kind == Pre::Kind::kGroup) {
        for (const auto& k : a->kids) p.kids.push_back(k);
      } else {
        p.kids.push_back(a);
      }
      if (binder_arg) break;
    }
    return node(std::move(p));
  }

  PrePtr atom() {
    if (at_binder()) return binder();
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIdent:
      case Tok::kAtIdent: {
        take();
        Pre p;
    p.kind = Pre::Kind::kIdent;
        p.name = t.text;
        p.force_const = t.kind == Tok::kAtIdent;
        if (at(Tok::kColon)) {
          take();
          p.annot = atom_type();
        } else if (at(Tok::kLBracket)) {
          take();
          p.bracket = type();
          expect(Tok::kRBracket, "`]`");
        }
        return node(std::move(p));
      }
      case Tok::kPhon: {
        take();
        Pre p;
    p.kind = Pre::Kind::kPhon;
        p.tokens = t.phon;
        return node(std::move(p));
      }
      case Tok::kLAngle: {
        take();
        Pre p;
    p.kind = Pre::Kind::kPair;
        p.kids.push_back(term());
        expect(Tok::kComma, "`,` in pair");
        p.kids.push_back(term());
        expect(Tok::kRAngle, "`>` closing pair");
        return node(std::move(p));
      }
      case Tok::kLParen: {
        take();
        if (auto op = operator_constant()) return op;
        Pre p;
    p.kind = Pre::Kind::kGroup;
        p.kids.push_back(term());
        while (at(Tok::kComma)) {
          take();
          p.kids.push_back(term());
        }
        expect(Tok::kRParen, "`)`");
        if (p.kids.size() == 1) return p.kids.front();
        return node(std::move(p));
      }
      default:
        error("term");
    }
  }

  // After `(`: (~) (/\) (\/) (==>) (++) (=[T]).
  PrePtr operator_constant() {
    Tok k = peek().kind;
    bool simple = k == Tok::kNot || k == Tok::kAnd || k == Tok::kOr ||
                  k == Tok::kImp || k == Tok::kCat;
    if (simple && peek(1).kind == Tok::kRParen) {
      Pre p;
    p.kind = Pre::Kind::kOpConst;
      p.name = take().text;
      take();
      return node(std::move(p));
    }
    if (k == Tok::kEq && peek(1).kind == Tok::kLBracket) {
      take();
      take();
      Pre p;
    p.kind = Pre::Kind::kOpConst;
      p.name = "=";
      p.bracket = type();
      expect(Tok::kRBracket, "`]`");
      expect(Tok::kRParen, "`)`");
      return node(std::move(p));
    }
    return nullptr;
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ elaboration

const std::set<std::string>& overloaded_names() {
  static const std::set<std::string> names = {
      "phon", "sem", "cond", "iota", "forall", "exists", "fst", "snd"};
  return names;
}

class Elaborator {
 public:
  Elaborator(const Signature& sig, const ParseOptions& options)
      : sig_(sig), options_(options) {}

  Term run(const PrePtr& p) {
    Term t = elab(*p);
    try {
      type_of(t, sig_);
    } catch (const TypeError& e) {
      throw SyntaxError(e.what());
    }
    return t;
  }

 private:
  [[noreturn]] static void error(const std::string& what) {
    throw SyntaxError(what);
  }

  template <typename F>
  static Term guard(F&& build) {
    try {
      return build();
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(e.what());
    }
  }

  const Term* lookup_bound(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name() == name) return &*it;
    }
    return nullptr;
  }

  Term identifier(const Pre& p) {
    const std::string& name = p.name;
    if (p.bracket) {
      if (name == "cond" || name == "iota" || name == "forall" ||
          name == "exists") {
        return Term::constant(name, Signature::family_type(name, *p.bracket));
      }
      std::string full = name + "[" + to_string(*p.bracket) + "]";
      if (auto ty = sig_.constant_type(full)) return Term::constant(full, *ty);
      error("unknown constant " + full);
    }
    if (p.force_const) {
      if (auto ty = sig_.constant_type(name)) return Term::constant(name, *ty);
      error("unknown constant " + name);
    }
    if (name == "true") return truth();
    if (name == "false") return falsity();
    if (const Term* b = lookup_bound(name)) {
      if (!p.annot || *p.annot == b->type()) return *b;
    }
    if (p.annot) return Term::var(name, *p.annot);
    if (auto ty = sig_.constant_type(name)) return Term::constant(name, *ty);
    auto fv = options_.free_vars.find(name);
    if (fv != options_.free_vars.end()) return Term::var(name, fv->second);
    if (overloaded_names().contains(name)) {
      error("`" + name + "` needs an argument");
    }
    error("unknown identifier " + name);
  }

  Term apply_all(Term head, const std::vector<PrePtr>& args, std::size_t from) {
    for (std::size_t i = from; i < args.size(); ++i) {
      Term a = elab(*args[i]);
      head = guard([&] { return Term::app(head, a); });
    }
    return head;
  }

  Term application(const Pre& p) {
    const Pre& head = *p.kids[0];
    const std::vector<PrePtr>& args = p.kids;  // args start at index 1
    if (head.kind == Pre::Kind::kGroup) error("tuple in function position");
    bool special = head.kind == Pre::Kind::kIdent && !head.bracket &&
                   !head.annot && !head.force_const &&
                   overloaded_names().contains(head.name) &&
                   lookup_bound(head.name) == nullptr &&
                   !sig_.constant_type(head.name);
    if (!special) return apply_all(elab(head), args, 1);

    const std::string& name = head.name;
    if (name == "fst" || name == "snd") {
      Term o = elab(*args[1]);
      Term pr = guard([&] { return Term::proj(name == "fst" ? 1 : 2, o); });
      return apply_all(pr, args, 2);
    }
    if (name == "cond" && args.size() >= 4) {
      Term x = elab(*args[1]);
      Term y = elab(*args[2]);
      Term z = elab(*args[3]);
      Term c = guard([&] { return mk_cond(x, y, z); });
      return apply_all(c, args, 4);
    }
    Term a = elab(*args[1]);
    Term fn = a;
    if (name == "phon" || name == "sem") {
      if (!a.type().is_base()) {
        error("`" + name + "` applied to non-sign " + print_pretty(a));
      }
      std::string full = name + "[" + a.type().name() + "]";
      auto ty = sig_.constant_type(full);
      if (!ty) error("unknown constant " + full);
      fn = Term::constant(full, *ty);
    } else if (name == "cond") {
      if (!a.type().is_prod() || !a.type().right().is_prod()) {
        error("cond expects a triple");
      }
      fn = cond_const(a.type().left());
    } else {
      if (!a.type().is_fun() || !(a.type().codomain() == bool_type())) {
        error("`" + name + "` expects a predicate");
      }
      fn = Term::constant(name, Signature::family_type(name, a.type().domain()));
    }
    Term applied = guard([&] { return Term::app(fn, a); });
    return apply_all(applied, args, 2);
  }

  Term elab(const Pre& p) {
    switch (p.kind) {
      case Pre::Kind::kIdent:
        return identifier(p);
      case Pre::Kind::kPhon:
        return phon_of_tokens(p.tokens);
      case Pre::Kind::kPair: {
        Term l = elab(*p.kids[0]);
        Term r = elab(*p.kids[1]);
        return Term::pair(l, r);
      }
      case Pre::Kind::kGroup:
        error("unexpected tuple");
      case Pre::Kind::kApp:
        return application(p);
      case Pre::Kind::kBinder: {
        const std::string& vname = p.tokens[0];
        if (!sig_.well_formed(*p.annot)) {
          error("undeclared type " + to_string(*p.annot));
        }
        Term v = Term::var(vname, *p.annot);
        scope_.push_back(v);
        Term body = elab(*p.kids[0]);
        scope_.pop_back();
        if (p.name == "\\") return Term::abs(v, body);
        if (!(body.type() == bool_type())) {
          error("quantifier body is not a proposition");
        }
        return p.name == "!" ? mk_forall(v, body) : mk_exists(v, body);
      }
      case Pre::Kind::kBinOp: {
        Term a = elab(*p.kids[0]);
        Term b = elab(*p.kids[1]);
        return guard([&] {
          if (p.name == "=") return mk_eq(a, b);
          if (p.name == "++") {
            return Term::app(cat_const(), Term::pair(a, b));
          }
          Term op = p.name == "/\\" ? and_const()
                    : p.name == "\\/" ? or_const()
                                      : imp_const();
          return Term::app(Term::app(op, a), b);
        });
      }
      case Pre::Kind::kNot: {
        Term a = elab(*p.kids[0]);
        return guard([&] { return mk_not(a); });
      }
      case Pre::Kind::kOpConst:
        if (p.name == "~") return not_const();
        if (p.name == "/\\") return and_const();
        if (p.name == "\\/") return or_const();
        if (p.name == "==>") return imp_const();
        if (p.name == "++") return cat_const();
        return eq_const(*p.bracket);
    }
    error("malformed term");
  }

  const Signature& sig_;
  const ParseOptions& options_;
  std::vector<Term> scope_;
};

}  // namespace

std::string print_canonical(const Term& t) { return CanonicalPrinter().print(t); }

std::string print_pretty(const Term& t) { return pretty(t); }

std::string to_string(const Term& t) { return print_canonical(t); }

Type parse_type(std::string_view text) { return Parser(text).whole_type(); }

Term parse_term(std::string_view text, const Signature& sig,
                const ParseOptions& options) {
  PrePtr pre = Parser(text).whole_term();
  return Elaborator(sig, options).run(pre);
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  for (char c : text) {
    if (!ident_char(c)) return false;
  }
  return true;
}

}  // namespace hog
