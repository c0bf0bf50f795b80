// Copyright 2026 The redlab Authors.
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

#include "redlab/text_format.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace redlab {

namespace {

constexpr char kPcpGrammar[] = "expected 'pair <u> <v>' with u, v over {a,b}";
constexpr char kTransducerGrammar[] =
    "expected 'alphabet <name>...', 'state <id>', 'init <id>', 'final <id>' "
    "or 'trans <from> <word|-> <count> <to>'";
constexpr char kNfaGrammar[] =
    "expected 'alphabet <name>...', 'state <id>', 'init <id>', 'final <id>' "
    "or 'trans <from> <letter> <to>'";
constexpr char kZGrammar[] =
    "expected 'zstate <id>', 'zinit <id>', 'zfinal <id>' or "
    "'ztrans <from> <0|1> <1|2> <to>'";
constexpr char kNdsGrammar[] =
    "expected 'lines <s>' then 'rule <k> <0|1> <j> <-1|0|1> <num>/<den>'";
constexpr char kSubGrammar[] =
    "expected 'target <name>...' or 'sub <letter> = <word> [<word> ...]'";

// Splits the input into tokenized, comment-free, nonempty lines.
class LineReader {
 public:
  LineReader(std::istream &in, std::string source, const char *grammar)
      : in_(in), source_(std::move(source)), grammar_(grammar) {}

  bool Next(std::vector<std::string> &tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      tokens.clear();
      for (std::string tok; ls >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError(source_, line_no_, what + "; " + grammar_);
  }

  int64_t Int(const std::string &tok) const {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      Fail("'" + tok + "' is not an integer");
    }
    return v;
  }

  void Arity(const std::vector<std::string> &t, size_t n) const {
    if (t.size() != n) {
      Fail("'" + t[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
    }
  }

  int line() const { return line_no_; }
  const std::string &source() const { return source_; }

 private:
  std::istream &in_;
  std::string source_;
  const char *grammar_;
  int line_no_ = 0;
};

// State names in order of first mention.
class StateIds {
 public:
  int Get(const std::string &name) {
    auto [it, inserted] = ids_.emplace(name, static_cast<int>(ids_.size()));
    return it->second;
  }
  int size() const { return static_cast<int>(ids_.size()); }

 private:
  std::map<std::string, int> ids_;
};

std::string DotEscape(const std::string &s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace

PcpInstance ReadPcp(std::istream &in, const std::string &source) {
  LineReader r(in, source, kPcpGrammar);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::vector<std::string> t; r.Next(t);) {
    if (t[0] != "pair") r.Fail("unknown keyword '" + t[0] + "'");
    r.Arity(t, 3);
    for (size_t i = 1; i < 3; ++i) {
      if (t[i].find_first_not_of("ab") != std::string::npos) {
        r.Fail("'" + t[i] + "' is not a nonempty word over {a,b}");
      }
    }
    pairs.emplace_back(t[1], t[2]);
  }
  if (pairs.empty()) r.Fail("no pairs");
  return PcpInstance(std::move(pairs));
}

void WritePcp(std::ostream &out, const PcpInstance &inst) {
  for (const auto &[u, v] : inst.pairs()) out << "pair " << u << ' ' << v << '\n';
}

Transducer ReadTransducer(std::istream &in, const std::string &source) {
  LineReader r(in, source, kTransducerGrammar);
  Alphabet alphabet;
  bool fixed_alphabet = false;
  StateIds ids;
  std::optional<int> initial;
  std::vector<int> finals;
  std::vector<TransducerArc> arcs;
  for (std::vector<std::string> t; r.Next(t);) {
    if (t[0] == "alphabet") {
      if (fixed_alphabet || alphabet.size() > 0) r.Fail("alphabet must come first");
      try {
        for (size_t i = 1; i < t.size(); ++i) alphabet.Add(t[i]);
      } catch (const Error &e) {
        r.Fail(e.what());
      }
      fixed_alphabet = true;
    } else if (t[0] == "state") {
      r.Arity(t, 2);
      ids.Get(t[1]);
    } else if (t[0] == "init") {
      r.Arity(t, 2);
      if (initial) r.Fail("duplicate init");
      initial = ids.Get(t[1]);
    } else if (t[0] == "final") {
      r.Arity(t, 2);
      finals.push_back(ids.Get(t[1]));
    } else if (t[0] == "trans") {
      r.Arity(t, 5);
      TransducerArc a;
      a.from = ids.Get(t[1]);
      if (fixed_alphabet) {
        auto w = alphabet.Parse(t[2]);
        if (!w) r.Fail("'" + t[2] + "' is not a word over the alphabet");
        a.input = *w;
      } else if (t[2] != "-") {
        std::vector<std::string> names;
        if (t[2].find('.') != std::string::npos) {
          std::istringstream parts(t[2]);
          for (std::string p; std::getline(parts, p, '.');) names.push_back(p);
        } else {
          for (char ch : t[2]) names.emplace_back(1, ch);
        }
        try {
          for (const auto &n : names) a.input.push_back(alphabet.Add(n));
        } catch (const Error &e) {
          r.Fail(e.what());
        }
      }
      a.count = static_cast<int>(r.Int(t[3]));
      a.to = ids.Get(t[4]);
      arcs.push_back(std::move(a));
    } else {
      r.Fail("unknown keyword '" + t[0] + "'");
    }
  }
  if (!initial) r.Fail("missing 'init'");
  std::vector<bool> final_flags(static_cast<size_t>(ids.size()), false);
  for (int q : finals) final_flags[static_cast<size_t>(q)] = true;
  try {
    return Transducer(alphabet, ids.size(), std::move(arcs), *initial,
                      std::move(final_flags));
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    r.Fail(e.what());
  }
}

void WriteTransducer(std::ostream &out, const Transducer &t) {
  out << "alphabet";
  for (const auto &n : t.alphabet().names()) out << ' ' << n;
  out << '\n';
  for (int q = 0; q < t.num_states(); ++q) out << "state " << q << '\n';
  out << "init " << t.initial() << '\n';
  for (int q = 0; q < t.num_states(); ++q) {
    if (t.IsFinal(q)) out << "final " << q << '\n';
  }
  for (const auto &a : t.arcs()) {
    out << "trans " << a.from << ' ' << t.alphabet().Format(a.input) << ' '
        << a.count << ' ' << a.to << '\n';
  }
}

Nfa ReadNfa(std::istream &in, const std::string &source, Alphabet *alphabet_out) {
  LineReader r(in, source, kNfaGrammar);
  Alphabet alphabet;
  bool fixed_alphabet = false;
  StateIds ids;
  std::vector<int> initial, finals;
  struct Arc {
    int from;
    Symbol sym;
    int to;
  };
  std::vector<Arc> arcs;
  for (std::vector<std::string> t; r.Next(t);) {
    if (t[0] == "alphabet") {
      if (fixed_alphabet || alphabet.size() > 0) r.Fail("alphabet must come first");
      try {
        for (size_t i = 1; i < t.size(); ++i) alphabet.Add(t[i]);
      } catch (const Error &e) {
        r.Fail(e.what());
      }
      fixed_alphabet = true;
    } else if (t[0] == "state") {
      r.Arity(t, 2);
      ids.Get(t[1]);
    } else if (t[0] == "init") {
      r.Arity(t, 2);
      initial.push_back(ids.Get(t[1]));
    } else if (t[0] == "final") {
      r.Arity(t, 2);
      finals.push_back(ids.Get(t[1]));
    } else if (t[0] == "trans") {
      r.Arity(t, 4);
      const int from = ids.Get(t[1]);
      std::optional<Symbol> sym = alphabet.Find(t[2]);
      if (!sym) {
        if (fixed_alphabet) r.Fail("'" + t[2] + "' is not in the alphabet");
        try {
          sym = alphabet.Add(t[2]);
        } catch (const Error &e) {
          r.Fail(e.what());
        }
      }
      arcs.push_back({from, *sym, ids.Get(t[3])});
    } else {
      r.Fail("unknown keyword '" + t[0] + "'");
    }
  }
  NfaBuilder b(alphabet.size());
  for (int q = 0; q < ids.size(); ++q) b.AddState();
  for (int q : initial) b.AddInitial(q);
  for (int q : finals) b.SetFinal(q);
  for (const auto &a : arcs) b.AddArc(a.from, a.sym, a.to);
  if (alphabet_out) *alphabet_out = alphabet;
  return b.Build();
}

void WriteNfa(std::ostream &out, const Nfa &a, const Alphabet &alphabet) {
  out << "alphabet";
  for (const auto &n : alphabet.names()) out << ' ' << n;
  out << '\n';
  for (int q = 0; q < a.num_states(); ++q) out << "state " << q << '\n';
  for (int q : a.initial()) out << "init " << q << '\n';
  for (int q : a.Finals()) out << "final " << q << '\n';
  for (int q = 0; q < a.num_states(); ++q) {
    for (const auto &arc : a.Arcs(q)) {
      out << "trans " << q << ' ' << alphabet.Name(arc.symbol) << ' ' << arc.to
          << '\n';
    }
  }
}

ZTransducer ReadZTransducer(std::istream &in, const std::string &source) {
  LineReader r(in, source, kZGrammar);
  StateIds ids;
  std::optional<int> initial, final;
  std::vector<ZArc> arcs;
  for (std::vector<std::string> t; r.Next(t);) {
    if (t[0] == "zstate") {
      r.Arity(t, 2);
      ids.Get(t[1]);
    } else if (t[0] == "zinit") {
      r.Arity(t, 2);
      if (initial) r.Fail("duplicate zinit");
      initial = ids.Get(t[1]);
    } else if (t[0] == "zfinal") {
      r.Arity(t, 2);
      if (final) r.Fail("a Z-transducer has exactly one final state");
      final = ids.Get(t[1]);
    } else if (t[0] == "ztrans") {
      r.Arity(t, 5);
      const int from = ids.Get(t[1]);
      const int64_t bit = r.Int(t[2]);
      const int64_t out = r.Int(t[3]);
      if (bit != 0 && bit != 1) r.Fail("input symbol must be 0 or 1");
      if (out != 1 && out != 2) r.Fail("output count must be 1 or 2");
      arcs.push_back({from, static_cast<Symbol>(bit), static_cast<int>(out),
                      ids.Get(t[4])});
    } else {
      r.Fail("unknown keyword '" + t[0] + "'");
    }
  }
  if (!initial) r.Fail("missing 'zinit'");
  if (!final) r.Fail("missing 'zfinal'");
  try {
    return ZTransducer(ids.size(), std::move(arcs), *initial, *final);
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    r.Fail(e.what());
  }
}

void WriteZTransducer(std::ostream &out, const ZTransducer &zt) {
  for (int q = 0; q < zt.num_states(); ++q) out << "zstate " << q << '\n';
  out << "zinit " << zt.initial() << '\n';
  out << "zfinal " << zt.final_state() << '\n';
  for (const auto &a : zt.arcs()) {
    out << "ztrans " << a.from << ' ' << a.bit << ' ' << a.output << ' ' << a.to
        << '\n';
  }
}

Nds ReadNds(std::istream &in, const std::string &source) {
  LineReader r(in, source, kNdsGrammar);
  std::optional<int> lines;
  std::vector<NdsRule> rules;
  for (std::vector<std::string> t; r.Next(t);) {
    if (t[0] == "lines") {
      r.Arity(t, 2);
      if (lines) r.Fail("duplicate 'lines'");
      const int64_t s = r.Int(t[1]);
      if (s < 1) r.Fail("line count must be positive");
      lines = static_cast<int>(s);
    } else if (t[0] == "rule") {
      if (!lines) r.Fail("'lines' must precede rules");
      r.Arity(t, 6);
      NdsRule rule;
      rule.from_line = static_cast<int>(r.Int(t[1]));
      const int64_t a = r.Int(t[2]);
      rule.to_line = static_cast<int>(r.Int(t[3]));
      rule.shift = static_cast<int>(r.Int(t[4]));
      if (a != 0 && a != 1) r.Fail("attack symbol must be 0 or 1");
      rule.symbol = static_cast<Symbol>(a);
      if (rule.shift < -1 || rule.shift > 1) r.Fail("shift must be -1, 0 or 1");
      if (rule.from_line < 1 || rule.from_line > *lines || rule.to_line < 1 ||
          rule.to_line > *lines) {
        r.Fail("line out of range 1.." + std::to_string(*lines));
      }
      std::optional<Rational> p;
      try {
        p = Rational::Parse(t[5]);
      } catch (const Error &) {
      }
      if (!p) r.Fail("'" + t[5] + "' is not a fraction");
      if (p->IsZero()) r.Fail("zero-probability rules are not allowed");
      rule.probability = *p;
      rules.push_back(rule);
    } else {
      r.Fail("unknown keyword '" + t[0] + "'");
    }
  }
  if (!lines) r.Fail("missing 'lines'");
  try {
    return Nds(*lines, std::move(rules));
  } catch (const Error &e) {
    r.Fail(e.what());
  }
}

void WriteNds(std::ostream &out, const Nds &nds) {
  out << "lines " << nds.lines() << '\n';
  for (const auto &r : nds.Rules()) {
    out << "rule " << r.from_line << ' ' << r.symbol << ' ' << r.to_line << ' '
        << r.shift << ' ' << r.probability.num() << '/' << r.probability.den()
        << '\n';
  }
}

FiniteSubstitution ReadSubstitution(std::istream &in, const std::string &source) {
  LineReader r(in, source, kSubGrammar);
  Alphabet target = Alphabet::Binary();
  bool seen_sub = false;
  std::vector<std::pair<std::string, std::vector<Word>>> entries;
  Alphabet letters;
  for (std::vector<std::string> t; r.Next(t);) {
    if (t[0] == "target") {
      if (seen_sub) r.Fail("'target' must precede 'sub' lines");
      if (t.size() < 2) r.Fail("'target' needs at least one symbol");
      try {
        target = Alphabet(std::vector<std::string>(t.begin() + 1, t.end()));
      } catch (const Error &e) {
        r.Fail(e.what());
      }
    } else if (t[0] == "sub") {
      seen_sub = true;
      if (t.size() < 4 || t[2] != "=") r.Fail("malformed 'sub' line");
      try {
        letters.Add(t[1]);
      } catch (const Error &e) {
        r.Fail(e.what());
      }
      std::vector<Word> words;
      for (size_t i = 3; i < t.size(); ++i) {
        auto w = target.Parse(t[i]);
        if (!w) r.Fail("'" + t[i] + "' is not a word over the target alphabet");
        if (w->empty()) r.Fail("images must be nonempty words");
        words.push_back(*w);
      }
      entries.emplace_back(t[1], std::move(words));
    } else {
      r.Fail("unknown keyword '" + t[0] + "'");
    }
  }
  if (!seen_sub) r.Fail("no 'sub' lines");
  FiniteSubstitution sub(letters, target);
  for (const auto &[letter, words] : entries) {
    for (const auto &w : words) sub.AddImage(*letters.Find(letter), w);
  }
  return sub;
}

void WriteSubstitution(std::ostream &out, const FiniteSubstitution &sub) {
  out << "target";
  for (const auto &n : sub.target().names()) out << ' ' << n;
  out << '\n';
  for (Symbol a = 0; a < sub.source().size(); ++a) {
    out << "sub " << sub.source().Name(a) << " =";
    for (const auto &w : sub.Images(a)) out << ' ' << sub.target().Format(w);
    out << '\n';
  }
}

void WriteDot(std::ostream &out, const Transducer &t) {
  out << "digraph transducer {\n  rankdir=LR;\n";
  for (int q = 0; q < t.num_states(); ++q) {
    out << "  " << q << " [shape=" << (t.IsFinal(q) ? "doublecircle" : "circle")
        << (q == t.initial() ? ",style=bold" : "") << "];\n";
  }
  for (const auto &a : t.arcs()) {
    out << "  " << a.from << " -> " << a.to << " [label=\""
        << DotEscape(t.alphabet().Format(a.input)) << ":c^" << a.count
        << "\"];\n";
  }
  out << "}\n";
}

void WriteDot(std::ostream &out, const Nfa &a, const Alphabet &alphabet) {
  out << "digraph nfa {\n  rankdir=LR;\n";
  std::vector<bool> init(static_cast<size_t>(a.num_states()), false);
  for (int q : a.initial()) init[static_cast<size_t>(q)] = true;
  for (int q = 0; q < a.num_states(); ++q) {
    out << "  " << q << " [shape=" << (a.IsFinal(q) ? "doublecircle" : "circle")
        << (init[static_cast<size_t>(q)] ? ",style=bold" : "") << "];\n";
  }
  for (int q = 0; q < a.num_states(); ++q) {
    for (const auto &arc : a.Arcs(q)) {
      out << "  " << q << " -> " << arc.to << " [label=\""
          << DotEscape(alphabet.Name(arc.symbol)) << "\"];\n";
    }
  }
  out << "}\n";
}

void WriteDot(std::ostream &out, const ZTransducer &zt) {
  out << "digraph ztransducer {\n  rankdir=LR;\n";
  for (int q = 0; q < zt.num_states(); ++q) {
    out << "  " << q << " [shape="
        << (q == zt.final_state() ? "doublecircle" : "circle")
        << (q == zt.initial() ? ",style=bold" : "") << "];\n";
  }
  for (const auto &a : zt.arcs()) {
    out << "  " << a.from << " -> " << a.to << " [label=\"" << a.bit << ":"
        << (a.output == 1 ? "c" : "cc") << "\"];\n";
  }
  out << "}\n";
}

void WriteDot(std::ostream &out, const Nds &nds) {
  out << "digraph nds {\n  rankdir=LR;\n";
  for (int k = 1; k <= nds.lines(); ++k) {
    out << "  " << k << " [shape=" << (k == 1 ? "doublecircle" : "circle")
        << "];\n";
  }
  for (const auto &r : nds.Rules()) {
    out << "  " << r.from_line << " -> " << r.to_line << " [label=\""
        << r.symbol << "," << (r.shift > 0 ? "+" : "") << r.shift << ","
        << r.probability.ToString() << "\"];\n";
  }
  out << "}\n";
}

FileKind DetectKind(std::istream &in, const std::string &source) {
  LineReader r(in, source,
               "expected a PCP, transducer, NFA, Z-transducer, defense system "
               "or substitution file");
  bool generic = false;
  for (std::vector<std::string> t; r.Next(t);) {
    const std::string &k = t[0];
    if (k == "pair") return FileKind::kPcp;
    if (k == "zstate" || k == "zinit" || k == "zfinal" || k == "ztrans") {
      return FileKind::kZTransducer;
    }
    if (k == "lines" || k == "rule") return FileKind::kNds;
    if (k == "sub" || k == "target") return FileKind::kSubstitution;
    if (k == "trans") return t.size() == 4 ? FileKind::kNfa : FileKind::kTransducer;
    if (k == "alphabet" || k == "state" || k == "init" || k == "final") {
      generic = true;
      continue;
    }
    r.Fail("unknown keyword '" + k + "'");
  }
  if (generic) return FileKind::kTransducer;
  r.Fail("empty file");
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace redlab
