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

// hogc: command-line front end for grammars, parses, merges, closures and
// proof traces.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hog/closure.hpp"
#include "hog/error.hpp"
#include "hog/grammar_file.hpp"
#include "hog/merge.hpp"
#include "hog/parser.hpp"
#include "hog/syntax.hpp"
#include "hog/trace.hpp"

namespace {

using namespace hog;

constexpr int kNegative = 1;
constexpr int kFailure = 2;

struct RunConfig {
  std::string grammar;
  std::string word;
  std::string meaning;
  std::size_t depth = 3;
  std::string universe;
  std::string out;
  std::string trace;
  std::string certificate;
  std::vector<std::size_t> indices;
  bool emit_proof = false;
  bool identity = false;
};

bool use_color() {
  const char* v = std::getenv("HOGC_COLOR");
  return v != nullptr && std::string(v) == "1";
}

std::string paint(const std::string& s, const char* code) {
  if (!use_color()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string good(const std::string& s) { return paint(s, "32"); }
std::string bad(const std::string& s) { return paint(s, "31"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string judgement(const Theorem& th) {
  std::string s;
  for (const Term& h : th.hypotheses()) s += (s.empty() ? "" : ", ") + print_pretty(h);
  return s + (s.empty() ? "|- " : " |- ") + print_pretty(th.conclusion());
}

void print_result(std::ostream& os, std::size_t i, const ParseResult& r) {
  os << "[" << i << "] " << print_pretty(r.sign) << " : " << r.sign_type
     << "  depth " << r.depth << "\n"
     << "    meaning  " << print_pretty(r.meaning) << "\n"
     << "    phon     " << judgement(r.phon_proof) << "\n"
     << "    sem      " << judgement(r.sem_proof) << "\n";
}

// Proofs go to -o when given, otherwise after the report.
void emit_proofs(const RunConfig& c, const std::vector<ParseResult>& rs,
                 std::ostream& os) {
  std::vector<Theorem> roots;
  for (const ParseResult& r : rs) {
    roots.push_back(r.phon_proof);
    roots.push_back(r.sem_proof);
  }
  std::string trace = export_trace(roots);
  if (!c.out.empty()) {
    write_file(c.out, trace);
    os << "proof trace: " << c.out << " (" << roots.size() << " roots)\n";
  } else {
    os << "# proof trace\n" << trace;
  }
}

int run_check(const RunConfig& c) {
  Grammar g = load_grammar(c.grammar);
  const GrammarSpec& s = g.spec();
  std::ostringstream os;
  os << "grammar " << c.grammar << "\n";
  os << "alphabet:";
  for (const std::string& a : s.alphabet) os << " " << a;
  os << "\nsign types: " << s.sign_types.size() << "\n";
  for (const SignType& t : s.sign_types) {
    os << "  " << t.name << "  Sem = " << to_string(t.sem);
    if (t.operand) os << "  (" << *t.operand << " \\ " << *t.result << ")";
    os << "\n";
  }
  os << "lexicon: " << s.lexicon.size() << ", rules: " << s.rules.size() << "\n";
  os << "axioms: " << g.theory().axioms().size() << "\n";
  for (const NamedAxiom& a : g.theory().axioms()) {
    os << "  " << a.name << ": " << print_pretty(a.statement) << "\n";
  }
  os << good("ok") << "\n";
  std::cout << os.str();
  return 0;
}

int run_parse(const RunConfig& c) {
  Grammar g = load_grammar(c.grammar);
  Word w = Word::parse(c.word);
  std::ostringstream os;
  os << "word \"" << w.to_string() << "\", depth bound " << c.depth << "\n";
  if (!c.meaning.empty()) {
    Term a = parse_term(c.meaning, g.theory().signature());
    std::optional<ParseResult> r = check_membership(g, w, a, c.depth);
    if (!r) {
      os << bad("not a member") << ": " << print_pretty(a) << "\n";
      std::cout << os.str();
      return kNegative;
    }
    os << good("member") << "\n";
    print_result(os, 0, *r);
    if (c.emit_proof) emit_proofs(c, {*r}, os);
    std::cout << os.str();
    return 0;
  }
  std::vector<ParseResult> rs = parse(g, w, c.depth);
  os << "parses: " << rs.size() << "\n";
  for (std::size_t i = 0; i < rs.size(); ++i) print_result(os, i, rs[i]);
  if (c.emit_proof) emit_proofs(c, rs, os);
  std::cout << os.str();
  return rs.empty() ? kNegative : 0;
}

int run_merge(const RunConfig& c) {
  Grammar g = load_grammar(c.grammar);
  Word w = Word::parse(c.word);
  std::vector<ParseResult> rs = parse(g, w, c.depth);
  for (std::size_t i : c.indices) {
    if (i >= rs.size()) {
      throw MergeError("parse index " + std::to_string(i) + " out of range; \"" +
                       w.to_string() + "\" has " + std::to_string(rs.size()) +
                       " parses at depth " + std::to_string(c.depth));
    }
  }
  const ParseResult& p1 = rs[c.indices[0]];
  const ParseResult& p2 = rs[c.indices[1]];
  ClosureCertificate cert =
      run_certificate_script(g, read_file(c.certificate), p1.meaning, p2.meaning);
  ParseResult m = merge_parses(g, p1, p2, cert);
  std::ostringstream os;
  os << "certificate  " << judgement(cert.proof) << "\n";
  print_result(os, 0, m);
  if (c.emit_proof) emit_proofs(c, {m}, os);
  std::cout << os.str();
  return 0;
}

int run_closure(const RunConfig& c) {
  UniverseFile f = read_universe_file(c.universe);
  ClosureResult r = closure_saturate(f.universe, f.input);
  std::ostringstream os;
  os << closure_report(f.universe, f.input, r);
  os << "closed: " << (r.members == f.input ? "yes" : "no") << "\n";
  if (c.identity) {
    std::optional<ClosureViolation> v =
        find_closure_violation(f.universe, identity_language(f.universe));
    if (v) {
      os << "identity language: " << bad("not logically closed") << "\n"
         << "  word " << v->word.to_string() << "\n"
         << "  in:  (w, " << print_pretty(f.universe.terms[v->b]) << "), (w, "
         << print_pretty(f.universe.terms[v->c]) << ")\n"
         << "  out: (w, " << print_pretty(f.universe.terms[v->a]) << ")\n";
    } else {
      os << "identity language: logically closed\n";
    }
  }
  if (!c.out.empty()) {
    write_file(c.out, os.str());
    std::cout << "report: " << c.out << "\n";
  } else {
    std::cout << os.str();
  }
  return 0;
}

int run_trace_verify(const RunConfig& c) {
  std::shared_ptr<const Theory> th =
      c.grammar.empty() ? Theory::logical_core() : load_grammar(c.grammar).theory_ptr();
  TraceCheck chk = verify_trace(read_file(c.trace), *th);
  if (!chk.ok) {
    std::cout << bad("rejected") << ": " << chk.message << "\n";
    return kNegative;
  }
  std::cout << good("ok") << ": " << chk.steps << " steps, " << chk.roots.size()
            << " roots\n";
  for (const Theorem& r : chk.roots) std::cout << "  " << judgement(r) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hogc: higher order grammar toolkit"};
  app.require_subcommand(1);
  RunConfig c;

  auto grammar = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-g,--grammar", c.grammar, "grammar file")
                  ->check(CLI::ExistingFile);
    if (required) o->required();
  };
  auto depth = [&](CLI::App* sub) {
    sub->add_option("-k,--depth", c.depth, "derivation depth bound")
        ->capture_default_str()
        ->check(CLI::Range(1, 16));
  };

  CLI::App* check = app.add_subcommand("check", "elaborate a grammar and list its axioms");
  grammar(check, true);

  CLI::App* parse = app.add_subcommand("parse", "parse a word, or test one meaning");
  grammar(parse, true);
  parse->add_option("-w,--word", c.word, "space-separated tokens")->required();
  depth(parse);
  parse->add_option("-m,--meaning", c.meaning, "candidate meaning term");
  parse->add_option("-o,--out", c.out, "proof trace output path");
  parse->add_flag("--emit-proof", c.emit_proof, "export proof traces");

  CLI::App* merge = app.add_subcommand("merge", "merge two parses under a certificate");
  grammar(merge, true);
  merge->add_option("-w,--word", c.word, "space-separated tokens")->required();
  depth(merge);
  merge->add_option("-i,--indices", c.indices, "two parse indices, e.g. 0,1")
      ->delimiter(',')
      ->expected(2)
      ->required();
  merge->add_option("-c,--certificate", c.certificate, "certificate script")
      ->check(CLI::ExistingFile)
      ->required();
  merge->add_option("-o,--out", c.out, "proof trace output path");
  merge->add_flag("--emit-proof", c.emit_proof, "export proof traces");

  CLI::App* closure = app.add_subcommand("closure", "logical closure over a Bool universe");
  closure->add_option("-u,--universe", c.universe, "universe file")
      ->check(CLI::ExistingFile)
      ->required();
  closure->add_option("-o,--out", c.out, "report output path");
  closure->add_flag("--identity", c.identity,
                    "check the identity language over the universe for closure");

  CLI::App* verify = app.add_subcommand("trace-verify", "re-check an exported proof trace");
  verify->add_option("trace", c.trace, "trace file")->check(CLI::ExistingFile)->required();
  grammar(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kFailure;
  }
  // -o names the trace file, so it implies --emit-proof.
  if (!c.out.empty() && !closure->parsed()) c.emit_proof = true;

  try {
    if (check->parsed()) return run_check(c);
    if (parse->parsed()) return run_parse(c);
    if (merge->parsed()) return run_merge(c);
    if (closure->parsed()) return run_closure(c);
    if (verify->parsed()) return run_trace_verify(c);
  } catch (const std::exception& e) {
    std::cerr << "hogc: " << bad("error") << ": " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
