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

#include "hog/grammar_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hog/error.hpp"
#include "hog/logic.hpp"
#include "hog/syntax.hpp"

namespace hog {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t cut = s.find(sep, start);
    out.push_back(trim(s.substr(start, cut - start)));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

class GrammarReader {
 public:
  GrammarReader(std::string_view text, std::string source)
      : source_(std::move(source)) {
    // Strip comments but keep line structure for diagnostics.
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      text_ += line + "\n";
    }
  }

  GrammarSpec read() {
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      std::size_t start = pos_;
      std::string kw = identifier();
      try {
        if (kw == "alphabet") {
          expect(':');
          for (const std::string& t : split_ws(rest_of_line())) {
            spec_.alphabet.push_back(t);
          }
        } else if (kw == "type") {
          spec_.base_types.push_back(trim(rest_of_line()));
        } else if (kw == "const") {
          constant(rest_of_line());
        } else if (kw == "signtype") {
          sign_type(rest_of_line());
        } else if (kw == "lex") {
          lexical();
        } else if (kw == "rule") {
          rule();
        } else {
          error_at(start, kw.empty() ? "expected a declaration"
                                     : "unknown declaration `" + kw + "`");
        }
      } catch (const GrammarError&) {
        throw;
      } catch (const Error& e) {
        error_at(start, e.what());
      }
    }
    return std::move(spec_);
  }

 private:
  [[noreturn]] void error_at(std::size_t pos, const std::string& what) const {
    std::size_t line = 1 + std::count(text_.begin(), text_.begin() + pos, '\n');
    throw GrammarError(source_ + ":" + std::to_string(line) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string identifier() {
    skip_space();
    std::size_t b = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(b, pos_ - b);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      error_at(pos_, std::string("expected `") + c + "`");
    }
    ++pos_;
  }

  std::string rest_of_line() {
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string::npos) end = text_.size();
    std::string out = text_.substr(pos_, end - pos_);
    pos_ = end;
    return out;
  }

  static std::vector<std::string> split_ws(std::string_view s) {
    return Word::parse(s).tokens();
  }

  std::string until(char c) {
    std::size_t end = text_.find(c, pos_);
    if (end == std::string::npos) error_at(pos_, std::string("missing `") + c + "`");
    std::string out = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return out;
  }

  void constant(const std::string& line) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw GrammarError("expected `name : type`");
    spec_.constants.emplace_back(trim(line.substr(0, colon)),
                                 parse_type(line.substr(colon + 1)));
  }

  void sign_type(const std::string& line) {
    std::size_t eq = line.find('=');
    if (eq != std::string::npos) {
      std::string name = trim(line.substr(0, eq));
      auto parts = split(line.substr(eq + 1), '\\');
      if (parts.size() != 2) throw GrammarError("expected `NAME = OPERAND \\ RESULT`");
      const SignType* op = find(parts[0]);
      const SignType* res = find(parts[1]);
      if (!op || !res) throw GrammarError("unknown sign type in " + trim(line));
      spec_.sign_types.push_back(
          {name, Type::fun(op->sem, res->sem), parts[0], parts[1]});
      return;
    }
    auto words = split_ws(line);
    if (words.size() < 3 || words[1] != "sem") {
      throw GrammarError("expected `signtype NAME sem TYPE`");
    }
    std::size_t at = line.find("sem", line.find(words[0]) + words[0].size());
    spec_.sign_types.push_back({words[0], parse_type(line.substr(at + 3)), {}, {}});
  }

  const SignType* find(const std::string& name) const {
    for (const SignType& s : spec_.sign_types) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }

  std::map<std::string, std::string> body() {
    std::map<std::string, std::string> out;
    for (const std::string& item : split(until('}'), ';')) {
      if (item.empty()) continue;
      std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw GrammarError("expected `key = value`");
      std::string key = trim(item.substr(0, eq));
      if (key != "phon" && key != "sem") throw GrammarError("unknown field `" + key + "`");
      if (!out.emplace(key, trim(item.substr(eq + 1))).second) {
        throw GrammarError("duplicate field `" + key + "`");
      }
    }
    for (const char* k : {"phon", "sem"}) {
      if (!out.contains(k)) throw GrammarError(std::string("missing field `") + k + "`");
    }
    return out;
  }

  void lexical() {
    std::string header = until('{');
    std::size_t colon = header.find(':');
    if (colon == std::string::npos) throw GrammarError("expected `lex NAME : SIGN {`");
    LexicalEntry e{trim(header.substr(0, colon)), trim(header.substr(colon + 1)),
                   Word(), truth()};
    auto fields = body();
    const std::string& phon = fields["phon"];
    if (phon.size() < 2 || phon.front() != '/' || phon.back() != '/') {
      throw GrammarError("lexical phonology must be written /tokens/");
    }
    e.phon = Word::parse(std::string_view(phon).substr(1, phon.size() - 2));
    e.meaning = parse_term(fields["sem"], spec_.signature());
    spec_.lexicon.push_back(std::move(e));
  }

  void rule() {
    std::string header = until('{');
    std::size_t colon = header.find(':');
    std::size_t arrow = header.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
      throw GrammarError("expected `rule NAME : x:A, y:B -> C {`");
    }
    RuleEntry r{trim(header.substr(0, colon)), {}, trim(header.substr(arrow + 2)),
                {}, truth()};
    ParseOptions opts;
    for (const std::string& op : split(header.substr(colon + 1, arrow - colon - 1), ',')) {
      std::size_t c = op.find(':');
      if (c == std::string::npos) throw GrammarError("operand must be `var:SIGN`");
      RuleOperand o{trim(op.substr(0, c)), trim(op.substr(c + 1))};
      if (!find(o.sign_type)) throw GrammarError("unknown sign type " + o.sign_type);
      opts.free_vars.insert_or_assign(o.var, Type::base(o.sign_type));
      r.operands.push_back(std::move(o));
    }
    auto fields = body();
    std::string pattern = fields["phon"];
    std::size_t at;
    while ((at = pattern.find("++")) != std::string::npos) pattern.replace(at, 2, " ");
    for (const std::string& v : split_ws(pattern)) {
      auto it = std::find_if(r.operands.begin(), r.operands.end(),
                             [&](const RuleOperand& o) { return o.var == v; });
      if (it == r.operands.end()) throw GrammarError("phonology mentions unknown operand " + v);
      r.phon_order.push_back(static_cast<std::size_t>(it - r.operands.begin()));
    }
    r.sem = parse_term(fields["sem"], spec_.signature(), opts);
    spec_.rules.push_back(std::move(r));
  }

  std::string source_;
  std::string text_;
  std::size_t pos_ = 0;
  GrammarSpec spec_;
};

}  // namespace

GrammarSpec parse_grammar(std::string_view text, const std::string& source) {
  return GrammarReader(text, source).read();
}

GrammarSpec read_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GrammarError("cannot open grammar file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str(), path);
}

Grammar load_grammar(const std::string& path) {
  return elaborate(read_grammar_file(path));
}

}  // namespace hog
