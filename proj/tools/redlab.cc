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
//
// redlab command-line front end.
//
// Exit status: 0 property verified or verdict produced, 1 verified false,
// 2 inconclusive within the given bounds, 3 input error.

#include <charconv>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "redlab/nds.h"
#include "redlab/pcp.h"
#include "redlab/product.h"
#include "redlab/subst_reduction.h"
#include "redlab/text_format.h"
#include "redlab/zmachine.h"

namespace redlab {
namespace {

enum Exit { kOk = 0, kFalse = 1, kInconclusive = 2, kInputError = 3 };

template <typename T>
T Load(const std::string &path, T (*read)(std::istream &, const std::string &)) {
  std::istringstream in(ReadFile(path));
  return read(in, path);
}

void Emit(const std::string &path, const std::function<void(std::ostream &)> &write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ostringstream out;
  write(out);
  WriteFile(path, out.str());
}

Word ParseBits(const std::string &text) {
  auto w = Alphabet::Binary().Parse(text);
  if (!w) throw Error("'" + text + "' is not a binary word (use - for the empty word)");
  return *w;
}

std::string Bits(const Word &w) { return Alphabet::Binary().Format(w); }

std::string JoinSeq(const std::vector<int> &seq) {
  std::string s;
  for (size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
  return s;
}

std::vector<int> ParseSeq(const std::string &text, int n) {
  std::vector<int> seq;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || v > n) {
      throw Error("'" + tok + "' is not an index in 1.." + std::to_string(n));
    }
    seq.push_back(v);
  }
  if (seq.empty()) throw Error("empty index sequence");
  return seq;
}

std::string FormatPair(const Alphabet &alphabet, const UnaryPair &p) {
  return "(" + alphabet.Format(p.input) + ", c^" + std::to_string(p.count) + ")";
}

const char *YesNo(bool b) { return b ? "yes" : "no"; }

// ---- pcp -------------------------------------------------------------------

int PcpSolve(const std::string &file, int max_len) {
  const PcpInstance inst = Load(file, ReadPcp);
  std::cout << "pairs " << inst.size() << " max-len " << max_len << "\n";
  const auto seq = BruteForcePcp(inst, max_len);
  if (!seq) {
    std::cout << "no solution of length <= " << max_len << "\n";
    return kInconclusive;
  }
  std::cout << "solution " << JoinSeq(*seq) << "\n";
  std::cout << "word " << inst.Concatenation(Side::kU, *seq) << "\n";
  return kOk;
}

int PcpScan(const std::string &file, int max_seq, int max_word) {
  const PcpInstance inst = Load(file, ReadPcp);
  std::cout << "pairs " << inst.size() << " max-seq " << max_seq << " max-word "
            << max_word << "\n";
  const auto violations = ScanClaim(inst, max_seq, max_word);
  for (const auto &v : violations) {
    std::cout << "violation side " << (v.side == Side::kU ? "u" : "v") << " seq "
              << JoinSeq(v.seq) << " letters " << v.letters << " member "
              << YesNo(v.member) << " expected " << YesNo(v.expected) << "\n";
  }
  std::cout << "violations " << violations.size() << "\n";
  return violations.empty() ? kOk : kFalse;
}

int PcpWitness(const std::string &file, const std::string &seq_text) {
  const PcpInstance inst = Load(file, ReadPcp);
  const std::vector<int> seq = ParseSeq(seq_text, inst.size());
  std::cout << "pairs " << inst.size() << " seq " << JoinSeq(seq) << "\n";
  if (!inst.IsSolution(seq)) {
    std::cout << "not a solution: u gives " << inst.Concatenation(Side::kU, seq)
              << ", v gives " << inst.Concatenation(Side::kV, seq) << "\n";
    return kFalse;
  }
  const UnaryPair w = SolutionWitness(inst, seq);
  const bool in_l0 = Contains(BuildL0(inst), w);
  const bool in_u = Contains(BuildSide(inst, Side::kU).side, w);
  const bool in_v = Contains(BuildSide(inst, Side::kV).side, w);
  std::cout << "witness " << FormatPair(inst.alphabet(), w) << "\n";
  std::cout << "in L0 " << YesNo(in_l0) << "\nin Lu " << YesNo(in_u) << "\nin Lv "
            << YesNo(in_v) << "\n";
  return in_l0 && !in_u && !in_v ? kOk : kFalse;
}

// ---- zt --------------------------------------------------------------------

int ZtBuildChi(const std::string &file, const std::string &side, const std::string &out) {
  const PcpInstance inst = Load(file, ReadPcp);
  const Coding coding(inst);
  ZTransducer zt = side == "l0" ? BuildChiL0(inst)
                                : CompileRelation(coding, BuildSide(inst, side == "u"
                                                                              ? Side::kU
                                                                              : Side::kV)
                                                              .side);
  const ZAnalysis a = Analyze(zt);
  std::ostringstream report;
  report << "# side " << side << " k " << coding.k() << " indices "
         << coding.num_indices() << " states " << zt.num_states() << " arcs "
         << zt.arcs().size() << " deterministic " << YesNo(a.deterministic)
         << " complete " << YesNo(a.complete) << "\n";
  Emit(out, [&](std::ostream &o) {
    o << report.str();
    WriteZTransducer(o, zt);
  });
  if (!out.empty() && out != "-") std::cout << report.str().substr(2);
  return kOk;
}

int ZtRun(const std::string &file, const std::string &word_text) {
  const ZTransducer zt = Load(file, ReadZTransducer);
  const Word w = ParseBits(word_text);
  const auto outputs = Outputs(zt, w);
  std::cout << "states " << zt.num_states() << " word " << Bits(w) << "\n";
  if (outputs.empty()) {
    std::cout << "rejected\n";
    return kFalse;
  }
  std::cout << "outputs";
  for (int64_t m : outputs) std::cout << " c^" << m;
  std::cout << "\n";
  return kOk;
}

// ---- nds -------------------------------------------------------------------

int NdsSearch(const std::string &file, int max_len) {
  const Nds nds = Load(file, ReadNds);
  std::cout << "lines " << nds.lines() << " max-len " << max_len << "\n";
  const auto w = SearchCritical(nds, max_len);
  if (!w) {
    std::cout << "no critical word of length <= " << max_len << "\n";
    return kInconclusive;
  }
  std::cout << "critical " << Bits(*w) << "\n";
  return kOk;
}

int NdsProb(const std::string &file, const std::string &word_text) {
  const Nds nds = Load(file, ReadNds);
  const Word w = ParseBits(word_text);
  std::cout << "lines " << nds.lines() << " word " << Bits(w) << "\n";
  Rational defended(0);
  for (const auto &[cfg, p] : AttackProbabilities(nds, w)) {
    std::cout << "node " << cfg.node << " line " << cfg.line << " p "
              << p.ToString() << "\n";
    if (cfg.node == 0) defended += p;
  }
  std::cout << "node 0 defended with probability " << defended.ToString() << "\n";
  std::cout << (defended.IsZero() ? "critical" : "not critical") << "\n";
  return kOk;
}

// ---- reduce ----------------------------------------------------------------

int ReduceZtToNds(const std::string &c_file, const std::string &d_file,
                  const std::string &out) {
  const ZTransducer c = Load(c_file, ReadZTransducer);
  const ZTransducer d = Load(d_file, ReadZTransducer);
  const ProductNds product(c, d);
  std::ostringstream header;
  header << "# C states " << product.c_states() << " D' states "
         << product.d_states() << " lines " << product.nds().lines() << " rules "
         << product.nds().NumRules() << "\n";
  Emit(out, [&](std::ostream &o) {
    o << header.str();
    WriteNds(o, product.nds());
  });
  if (!out.empty() && out != "-") std::cout << header.str().substr(2);
  return kOk;
}

int ReduceCheck(const std::string &c_file, const std::string &d_file, int bound) {
  const ZTransducer c = Load(c_file, ReadZTransducer);
  const ZTransducer d = Load(d_file, ReadZTransducer);
  const ProductNds product(c, d);
  std::cout << "C states " << product.c_states() << " D' states "
            << product.d_states() << " lines " << product.nds().lines()
            << " bound " << bound << "\n";
  const CorrespondenceReport r = CheckCorrespondence(c, d, bound);
  if (r.counterexample) {
    std::cout << "forward: counterexample (" << Bits(*r.counterexample) << ", c^"
              << r.counterexample_output << ")";
    if (r.forward_critical) std::cout << ", critical " << Bits(*r.forward_critical);
    std::cout << "\n";
  }
  if (r.backward_critical) {
    std::cout << "backward: critical " << Bits(*r.backward_critical);
    if (r.backward_prefix) std::cout << ", prefix " << Bits(*r.backward_prefix);
    std::cout << "\n";
  }
  for (const auto &check : r.checks) {
    std::cout << "check " << (check.holds ? "ok" : "FAILED") << ": "
              << check.description << "\n";
  }
  if (!r.Consistent()) {
    std::cout << "inconsistent\n";
    return kFalse;
  }
  if (r.Inconclusive()) {
    std::cout << "inconclusive: no counterexample and no critical word within "
              << bound << "\n";
    return kInconclusive;
  }
  std::cout << "consistent\n";
  return kOk;
}

int ReduceNdsToSubs(const std::string &file, const std::vector<std::string> &outs) {
  const Nds nds = Load(file, ReadNds);
  const SubstitutionPair subs = BuildSubstitutions(nds);
  const WordSystem &ws = subs.words;
  std::cout << "lines " << nds.lines() << " |w| " << ws.w.size() << " phi images "
            << subs.phi.TotalImages() << " xi images " << subs.xi.TotalImages()
            << "\n";
  std::cout << "w " << Bits(ws.w) << "\n";
  Emit(outs.at(0), [&](std::ostream &o) { WriteSubstitution(o, subs.phi); });
  Emit(outs.at(1), [&](std::ostream &o) { WriteSubstitution(o, subs.xi); });
  return kOk;
}

// ---- subs ------------------------------------------------------------------

int SubsDecide(const std::string &file, int probe) {
  const Nds nds = Load(file, ReadNds);
  const EquivalenceVerdict v = DecideEquivalence(nds, probe);
  std::cout << "lines " << nds.lines() << " language b{0,1}*c phi states "
            << v.phi_states << " xi states " << v.xi_states << "\n";
  std::cout << "xi(L) in phi(L) " << YesNo(v.xi_in_phi) << "\n";
  if (v.probe_len > 0) {
    std::cout << "probe: ";
    if (v.probe_critical) {
      std::cout << "critical word " << Bits(*v.probe_critical) << "\n";
    } else {
      std::cout << "no critical word of length <= " << v.probe_len << "\n";
    }
  }
  if (v.equal) {
    if (v.probe_critical) {
      std::cout << "note: the images agree although the system has a critical "
                   "word; equality is not evidence of reliability\n";
    }
    std::cout << "equal\n";
    return kOk;
  }
  if (v.counterexample) {
    std::cout << "counterexample " << Bits(*v.counterexample) << "\n";
  }
  std::cout << "not equal\n";
  return kFalse;
}

int SubsWitness(const std::string &file, const std::string &word_text) {
  const Nds nds = Load(file, ReadNds);
  const Word x = ParseBits(word_text);
  const CriticalWitnessReport r = CriticalWitness(nds, x);
  std::cout << "lines " << nds.lines() << " critical " << Bits(r.critical)
            << " witness length " << r.witness.size() << "\n";
  std::cout << "witness " << Bits(r.witness) << "\n";
  std::cout << "phi factorization";
  for (const auto &f : r.phi_factorization) std::cout << " " << Bits(f);
  std::cout << "\n";
  std::cout << "in phi(b x c) " << YesNo(r.in_phi) << "\n";
  std::cout << "in xi(b x c) " << YesNo(r.in_xi) << " (" << r.products_examined
            << " partial products examined, prefix discipline "
            << (r.prefix_discipline ? "held" : "broken") << ")\n";
  return r.in_phi && !r.in_xi ? kOk : kFalse;
}

// ---- export ----------------------------------------------------------------

int Export(const std::string &file, const std::string &out, const std::string &format) {
  const std::string text = ReadFile(file);
  std::istringstream kind_in(text);
  const FileKind kind = DetectKind(kind_in, file);
  std::istringstream in(text);
  const bool dot = format == "dot";
  std::function<void(std::ostream &)> write;
  switch (kind) {
    case FileKind::kPcp: {
      if (dot) throw Error(file + ": a PCP instance has no graph; use --format text");
      PcpInstance inst = ReadPcp(in, file);
      write = [inst](std::ostream &o) { WritePcp(o, inst); };
      break;
    }
    case FileKind::kTransducer: {
      Transducer t = ReadTransducer(in, file);
      write = [t, dot](std::ostream &o) { dot ? WriteDot(o, t) : WriteTransducer(o, t); };
      break;
    }
    case FileKind::kNfa: {
      Alphabet alphabet;
      Nfa a = ReadNfa(in, file, &alphabet);
      write = [a, alphabet, dot](std::ostream &o) {
        dot ? WriteDot(o, a, alphabet) : WriteNfa(o, a, alphabet);
      };
      break;
    }
    case FileKind::kZTransducer: {
      ZTransducer zt = ReadZTransducer(in, file);
      write = [zt, dot](std::ostream &o) { dot ? WriteDot(o, zt) : WriteZTransducer(o, zt); };
      break;
    }
    case FileKind::kNds: {
      Nds nds = ReadNds(in, file);
      write = [nds, dot](std::ostream &o) { dot ? WriteDot(o, nds) : WriteNds(o, nds); };
      break;
    }
    case FileKind::kSubstitution: {
      if (dot) throw Error(file + ": a substitution has no graph; use --format text");
      FiniteSubstitution sub = ReadSubstitution(in, file);
      write = [sub](std::ostream &o) { WriteSubstitution(o, sub); };
      break;
    }
  }
  Emit(out, write);
  return kOk;
}

int Main(int argc, char **argv) {
  CLI::App app{"Reductions between PCP, Z-transducers, defense systems and "
               "finite substitutions"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string file, file2, word, seq, side, out, format = "dot";
  std::vector<std::string> outs;
  int max_len = 6, max_seq = 3, max_word = 5, bound = 8, probe = 6;

  auto *pcp = app.add_subcommand("pcp", "Post correspondence instances");
  pcp->require_subcommand(1);
  auto *solve = pcp->add_subcommand("solve", "Shortlex-minimal solution by exhaustive search");
  solve->add_option("file", file)->required();
  solve->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  solve->callback([&] { run = [&] { return PcpSolve(file, max_len); }; });
  auto *scan = pcp->add_subcommand("scan", "Check the per-word membership characterization");
  scan->add_option("file", file)->required();
  scan->add_option("--max-seq", max_seq)->check(CLI::PositiveNumber);
  scan->add_option("--max-word", max_word)->check(CLI::PositiveNumber);
  scan->callback([&] { run = [&] { return PcpScan(file, max_seq, max_word); }; });
  auto *witness = pcp->add_subcommand("witness", "Witness pair of a solution and its memberships");
  witness->add_option("file", file)->required();
  witness->add_option("--seq", seq, "comma-separated 1-based indices")->required();
  witness->callback([&] { run = [&] { return PcpWitness(file, seq); }; });

  auto *zt = app.add_subcommand("zt", "Z-transducers");
  zt->require_subcommand(1);
  auto *chi = zt->add_subcommand("build-chi", "Coded Z-transducer of a side relation or of L0");
  chi->add_option("file", file)->required();
  chi->add_option("--side", side)->required()->check(CLI::IsMember({"u", "v", "l0"}));
  chi->add_option("-o", out, "output file (default stdout)");
  chi->callback([&] { run = [&] { return ZtBuildChi(file, side, out); }; });
  auto *zrun = zt->add_subcommand("run", "Output counts on a binary word");
  zrun->add_option("file", file)->required();
  zrun->add_option("--word", word)->required();
  zrun->callback([&] { run = [&] { return ZtRun(file, word); }; });

  auto *nds = app.add_subcommand("nds", "Defense systems");
  nds->require_subcommand(1);
  auto *search = nds->add_subcommand("search", "Shortlex-minimal critical word");
  search->add_option("file", file)->required();
  search->add_option("--max-len", max_len)->check(CLI::NonNegativeNumber);
  search->callback([&] { run = [&] { return NdsSearch(file, max_len); }; });
  auto *prob = nds->add_subcommand("prob", "Configuration probabilities after an attack word");
  prob->add_option("file", file)->required();
  prob->add_option("--word", word)->required();
  prob->callback([&] { run = [&] { return NdsProb(file, word); }; });

  auto *reduce = app.add_subcommand("reduce", "Reductions between the models");
  reduce->require_subcommand(1);
  auto *to_nds = reduce->add_subcommand("zt-to-nds", "Product defense system of C and D");
  to_nds->add_option("c", file)->required();
  to_nds->add_option("d", file2)->required();
  to_nds->add_option("-o", out, "output file (default stdout)");
  to_nds->callback([&] { run = [&] { return ReduceZtToNds(file, file2, out); }; });
  auto *check = reduce->add_subcommand("check", "Bounded check of the product correspondence");
  check->add_option("c", file)->required();
  check->add_option("d", file2)->required();
  check->add_option("--bound", bound)->check(CLI::PositiveNumber);
  check->callback([&] { run = [&] { return ReduceCheck(file, file2, bound); }; });
  auto *to_subs = reduce->add_subcommand("nds-to-subs", "Substitution pair of a defense system");
  to_subs->add_option("file", file)->required();
  to_subs->add_option("-o", outs, "phi and xi output files")->required()->expected(2);
  to_subs->callback([&] { run = [&] { return ReduceNdsToSubs(file, outs); }; });

  auto *subs = app.add_subcommand("subs", "Substitution equivalence");
  subs->require_subcommand(1);
  auto *decide = subs->add_subcommand("decide", "Compare phi and xi on b{0,1}*c");
  decide->add_option("file", file)->required();
  decide->add_option("--probe", probe, "length of the critical-word probe (0 disables)")
      ->check(CLI::NonNegativeNumber);
  decide->callback([&] { run = [&] { return SubsDecide(file, probe); }; });
  auto *swit = subs->add_subcommand("witness", "Separating word for a critical word");
  swit->add_option("file", file)->required();
  swit->add_option("--critical", word)->required();
  swit->callback([&] { run = [&] { return SubsWitness(file, word); }; });

  auto *exp = app.add_subcommand("export", "Graphviz or canonical text export");
  exp->require_subcommand(1);
  auto *dot = exp->add_subcommand("dot", "Export any supported file");
  dot->add_option("file", file)->required();
  dot->add_option("-o", out, "output file (default stdout)");
  dot->add_option("--format", format)->check(CLI::IsMember({"dot", "text"}));
  dot->callback([&] { run = [&] { return Export(file, out, format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return run();
  } catch (const CapExceeded &e) {
    std::cerr << "redlab: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception &e) {
    std::cerr << "redlab: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace
}  // namespace redlab

int main(int argc, char **argv) { return redlab::Main(argc, argv); }
