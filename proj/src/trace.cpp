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

#include "hog/trace.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hog/error.hpp"
#include "hog/syntax.hpp"

namespace hog {
namespace {

std::string braced(const Term& t) { return "{" + print_canonical(t) + "}"; }

std::string judgement(const Theorem& th) {
  std::string out;
  for (std::size_t i = 0; i < th.hypotheses().size(); ++i) {
    if (i > 0) out += " ; ";
    out += print_canonical(th.hypotheses()[i]);
  }
  if (!out.empty()) out += " ";
  return out + "|- " + print_canonical(th.conclusion());
}

std::string step_body(const Theorem& th,
                      const std::unordered_map<const void*, std::size_t>& index) {
  std::string out = rule_name(th.rule());
  for (const Theorem& p : th.premises()) {
    out += " " + std::to_string(index.at(p.identity()));
  }
  if (th.rule() == Rule::kAxiom) {
    out += " " + th.axiom_name();
    for (const Type& ty : th.axiom_types()) out += " {" + to_string(ty) + "}";
  } else if (th.rule() == Rule::kInst) {
    const auto& args = th.term_args();
    for (std::size_t i = 0; i + 1 < args.size(); i += 2) {
      out += " " + braced(args[i]) + ":=" + braced(args[i + 1]);
    }
  } else {
    for (const Term& t : th.term_args()) out += " " + braced(t);
  }
  return out;
}

}  // namespace

std::string export_trace(std::span<const Theorem> roots) {
  std::unordered_map<const void*, std::size_t> index;
  std::map<std::string, std::size_t> by_body;
  std::ostringstream out;
  std::size_t next = 0;
  std::vector<std::size_t> root_ids;

  for (const Theorem& root : roots) {
    // Iterative post-order: proofs can be far deeper than the C++ stack.
    std::vector<std::pair<Theorem, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [th, expanded] = stack.back();
      stack.pop_back();
      if (index.contains(th.identity())) continue;
      if (!expanded) {
        stack.push_back({th, true});
        const auto& prem = th.premises();
        for (auto it = prem.rbegin(); it != prem.rend(); ++it) {
          if (!index.contains(it->identity())) stack.push_back({*it, false});
        }
        continue;
      }
      std::string body = step_body(th, index);
      auto found = by_body.find(body);
      if (found != by_body.end()) {
        index.emplace(th.identity(), found->second);
        continue;
      }
      std::size_t id = next++;
      index.emplace(th.identity(), id);
      by_body.emplace(body, id);
      out << id << " " << body << " ==> " << judgement(th) << "\n";
    }
    root_ids.push_back(index.at(root.identity()));
  }
  for (std::size_t id : root_ids) out << "# root " << id << "\n";
  return out.str();
}

std::string export_trace(const Theorem& root) {
  return export_trace(std::span<const Theorem>(&root, 1));
}

namespace {

struct StepError {
  std::string message;
};

class LineReader {
 public:
  explicit LineReader(std::string_view line) : s_(line) {}

  void skip_space() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }

  bool done() {
    skip_space();
    return i_ >= s_.size();
  }

  char peek() {
    skip_space();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  bool at_separator() {
    skip_space();
    return s_.substr(i_).starts_with("==>");
  }

  std::string_view word() {
    skip_space();
    std::size_t b = i_;
    while (i_ < s_.size() && s_[i_] != ' ') ++i_;
    return s_.substr(b, i_ - b);
  }

  std::string_view braced() {
    skip_space();
    if (i_ >= s_.size() || s_[i_] != '{') throw StepError{"expected `{`"};
    std::size_t close = s_.find('}', i_);
    if (close == std::string_view::npos) throw StepError{"unterminated `{`"};
    std::string_view inner = s_.substr(i_ + 1, close - i_ - 1);
    i_ = close + 1;
    return inner;
  }

  bool literal(std::string_view lit) {
    if (s_.substr(i_).starts_with(lit)) {
      i_ += lit.size();
      return true;
    }
    return false;
  }

  std::string_view rest() {
    skip_space();
    return s_.substr(i_);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::optional<std::size_t> parse_index(std::string_view w) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_hyps(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    std::size_t cut = s.find(" ; ");
    out.push_back(s.substr(0, cut));
    if (cut == std::string_view::npos) break;
    s = s.substr(cut + 3);
  }
  return out;
}

Theorem replay(const Theory& th, LineReader& r, std::string_view rule,
               const std::vector<Theorem>& steps) {
  const Signature& sig = th.signature();
  auto term = [&] { return parse_term(r.braced(), sig); };
  auto premise = [&] {
    auto w = r.word();
    auto idx = parse_index(w);
    if (!idx || *idx >= steps.size()) {
      throw StepError{"bad premise reference `" + std::string(w) + "`"};
    }
    return steps[*idx];
  };

  if (rule == "axiom") {
    std::string name(r.word());
    std::vector<Type> types;
    while (r.peek() == '{') types.push_back(parse_type(r.braced()));
    return kernel::axiom(th, name, types);
  }
  if (rule == "refl") return kernel::refl(th, term());
  if (rule == "sym") return kernel::sym(th, premise());
  if (rule == "trans") {
    Theorem a = premise();
    return kernel::trans(th, a, premise());
  }
  if (rule == "cong") {
    Theorem a = premise();
    return kernel::cong(th, a, premise());
  }
  if (rule == "abs") {
    Theorem a = premise();
    return kernel::abs(th, term(), a);
  }
  if (rule == "beta") return kernel::beta(th, term());
  if (rule == "assume") return kernel::assume(th, term());
  if (rule == "eq_mp") {
    Theorem a = premise();
    return kernel::eq_mp(th, a, premise());
  }
  if (rule == "deduct_antisym") {
    Theorem a = premise();
    return kernel::deduct_antisym(th, a, premise());
  }
  if (rule == "inst") {
    Theorem a = premise();
    Substitution sigma;
    while (r.peek() == '{') {
      Term v = term();
      if (!r.literal(":=")) throw StepError{"expected `:=` in inst"};
      sigma.emplace_back(v, term());
    }
    return kernel::inst(th, a, sigma);
  }
  if (rule == "pair_beta") return kernel::pair_beta(th, term());
  throw StepError{"unknown rule `" + std::string(rule) + "`"};
}

bool same_judgement(const Theorem& got, const std::vector<Term>& hyps,
                    const Term& concl) {
  if (!alpha_equal(got.conclusion(), concl)) return false;
  if (got.hypotheses().size() != hyps.size()) return false;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (!alpha_equal(got.hypotheses()[i], hyps[i])) return false;
  }
  return true;
}

}  // namespace

TraceCheck verify_trace(std::string_view text, const Theory& th) {
  TraceCheck result;
  std::vector<Theorem> steps;
  std::vector<std::size_t> roots;
  std::size_t line_no = 0;
  auto fail = [&](std::optional<std::size_t> step, const std::string& msg) {
    result.ok = false;
    result.failed_step = step;
    result.message = (step ? "step " + std::to_string(*step)
                           : "line " + std::to_string(line_no)) +
                     ": " + msg;
    result.steps = steps.size();
    return result;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(' ') == std::string_view::npos) continue;
    if (line.front() == '#') {
      LineReader c(line.substr(1));
      if (c.word() == "root") {
        auto idx = parse_index(c.word());
        if (!idx || *idx >= steps.size()) return fail(std::nullopt, "bad root");
        roots.push_back(*idx);
      }
      continue;
    }

    LineReader r(line);
    auto idx = parse_index(r.word());
    if (!idx) return fail(std::nullopt, "missing step index");
    if (*idx != steps.size()) {
      return fail(*idx, "steps must be numbered consecutively from 0");
    }
    std::string rule(r.word());
    try {
      Theorem got = replay(th, r, rule, steps);
      if (!r.at_separator()) throw StepError{"expected `==>`"};
      r.literal("==>");
      std::string_view rest = r.rest();
      while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
      // Identical canonical text is the common case; skip re-parsing it.
      if (rest == judgement(got)) {
        steps.push_back(got);
        continue;
      }
      std::size_t turnstile = rest.find("|- ");
      if (turnstile == std::string_view::npos) {
        throw StepError{"expected `|-`"};
      }
      std::string_view hyp_text = rest.substr(0, turnstile);
      while (!hyp_text.empty() && hyp_text.back() == ' ') hyp_text.remove_suffix(1);
      std::vector<Term> hyps;
      if (!hyp_text.empty()) {
        for (auto h : split_hyps(hyp_text)) {
          hyps.push_back(parse_term(h, th.signature()));
        }
      }
      Term concl = parse_term(rest.substr(turnstile + 3), th.signature());
      if (!same_judgement(got, hyps, concl)) {
        throw StepError{"recorded judgement does not match replay: got " +
                        to_string(got)};
      }
      steps.push_back(got);
    } catch (const StepError& e) {
      return fail(*idx, e.message);
    } catch (const Error& e) {
      return fail(*idx, e.what());
    }
  }
  if (steps.empty()) return fail(std::nullopt, "empty trace");
  result.ok = true;
  result.steps = steps.size();
  for (std::size_t i : roots) result.roots.push_back(steps[i]);
  return result;
}

}  // namespace hog
