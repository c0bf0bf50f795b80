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

#include <random>
#include <sstream>

#include "doctest.h"
#include "redlab/product.h"
#include "redlab/subst_reduction.h"
#include "redlab/text_format.h"
#include "test_util.h"

namespace redlab {
namespace {

template <typename T, typename Writer, typename Reader>
T RoundTrip(const T &value, Writer write, Reader read) {
  std::ostringstream out;
  write(out, value);
  std::istringstream in(out.str());
  return read(in, "roundtrip");
}

// Runs `read` on `text` and returns the ParseError it throws.
template <typename Reader>
ParseError ParseFailure(const std::string &text, Reader read) {
  std::istringstream in(text);
  try {
    read(in, "bad.txt");
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("no parse error for:\n" << text);
  return ParseError("", 0, "");
}

FileKind Kind(const std::string &text) {
  std::istringstream in(text);
  return DetectKind(in, "kind");
}

TEST_SUITE("text_format") {

TEST_CASE("pcp round trip and comments") {
  const PcpInstance inst = testing::Example1();
  CHECK(RoundTrip(inst, WritePcp, ReadPcp) == inst);
  std::istringstream in("# example\n\npair ab a   # first\npair b bb\n");
  CHECK(ReadPcp(in, "x") == inst);
}

TEST_CASE("transducer round trip") {
  const PcpInstance inst = testing::Example1();
  for (Side side : {Side::kU, Side::kV}) {
    const SideRelations rels = BuildSide(inst, side);
    const Transducer &t = rels.side.transducer();
    CHECK(RoundTrip(t, WriteTransducer, ReadTransducer) == t);
  }
  const Relation l0_rel = BuildL0(inst);
  const Transducer &l0 = l0_rel.transducer();
  CHECK(RoundTrip(l0, WriteTransducer, ReadTransducer) == l0);

  // Without an alphabet line, symbols follow first use.
  std::istringstream in("init p\nfinal q\ntrans p ba 2 q\ntrans q - 1 q\n");
  const Transducer t = ReadTransducer(in, "x");
  CHECK(t.alphabet().names() == std::vector<std::string>{"b", "a"});
  CHECK(Contains(Relation(t), {{0, 1}, 4}));
  CHECK_FALSE(Contains(Relation(t), {{1, 0}, 2}));
}

TEST_CASE("nfa round trip") {
  std::mt19937_64 rng(5);
  const Alphabet ab({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    const Nfa a = testing::RandomNfa(rng, 6, 3, 0.3);
    std::ostringstream out;
    WriteNfa(out, a, ab);
    std::istringstream in(out.str());
    Alphabet read_alphabet;
    const Nfa b = ReadNfa(in, "roundtrip", &read_alphabet);
    CHECK(read_alphabet == ab);
    CHECK(b == a);
  }
}

TEST_CASE("z-transducer round trip") {
  for (const ZTransducer &zt :
       {testing::TinyC(), testing::TinyD(), testing::NeverAccepting(),
        BuildChiL0(testing::Example1())}) {
    CHECK(RoundTrip(zt, WriteZTransducer, ReadZTransducer) == zt);
  }
}

TEST_CASE("nds round trip") {
  for (const Nds &nds : {testing::StaySystem(), testing::DriftSystem(),
                         testing::TwoBranchSystem(),
                         ProductNds(testing::TinyC(), testing::TinyD()).nds()}) {
    CHECK(RoundTrip(nds, WriteNds, ReadNds) == nds);
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Nds nds = testing::RandomNds(rng, 4, 3);
    CHECK(RoundTrip(nds, WriteNds, ReadNds) == nds);
  }
}

TEST_CASE("substitution round trip") {
  const SubstitutionPair subs = BuildSubstitutions(testing::DriftSystem());
  CHECK(RoundTrip(subs.phi, WriteSubstitution, ReadSubstitution) == subs.phi);
  CHECK(RoundTrip(subs.xi, WriteSubstitution, ReadSubstitution) == subs.xi);
  std::istringstream in("target x y\nsub p = xy x.y.y\nsub q = y\n");
  const FiniteSubstitution sub = ReadSubstitution(in, "x");
  CHECK(sub.source().names() == std::vector<std::string>{"p", "q"});
  CHECK(sub.Images(0) == std::set<Word>{{0, 1}, {0, 1, 1}});
}

TEST_CASE("parse errors name file, line and grammar") {
  ParseError e = ParseFailure("pair ab a\n\npair ac b\n", ReadPcp);
  CHECK(e.source() == "bad.txt");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("pair <u> <v>") != std::string::npos);

  e = ParseFailure("lines 1\nrule 1 0 1 0 1/2\nrule 1 1 1 0 1\n", ReadNds);
  CHECK(std::string(e.what()).find("line 1 on symbol 0") != std::string::npos);
  e = ParseFailure("lines 1\nrule 1 0 1 2 1\n", ReadNds);
  CHECK(e.line() == 2);
  e = ParseFailure("lines 1\nrule 1 0 1 0 0\n", ReadNds);
  CHECK(e.line() == 2);
  e = ParseFailure("lines 2\nrule 3 0 1 0 1\n", ReadNds);
  CHECK(std::string(e.what()).find("out of range") != std::string::npos);

  e = ParseFailure("zstate 0\nzinit 0\nzfinal 1\nztrans 0 0 3 1\n", ReadZTransducer);
  CHECK(e.line() == 4);
  e = ParseFailure("zinit 0\n", ReadZTransducer);
  CHECK(std::string(e.what()).find("zfinal") != std::string::npos);

  e = ParseFailure("init 0\ntrans 0 a one 1\n", ReadTransducer);
  CHECK(e.line() == 2);
  e = ParseFailure("sub 0 = 01 -\n", ReadSubstitution);
  CHECK(e.line() == 1);
  e = ParseFailure("frobnicate\n", [](std::istream &in, const std::string &s) {
    return DetectKind(in, s);
  });
  CHECK(e.line() == 1);
}

TEST_CASE("detect kind") {
  CHECK(Kind("# c\npair a b\n") == FileKind::kPcp);
  CHECK(Kind("zstate 0\n") == FileKind::kZTransducer);
  CHECK(Kind("lines 2\n") == FileKind::kNds);
  CHECK(Kind("target 0 1\n") == FileKind::kSubstitution);
  CHECK(Kind("sub 0 = 1\n") == FileKind::kSubstitution);
  CHECK(Kind("alphabet a\ninit 0\ntrans 0 a 1\n") == FileKind::kNfa);
  CHECK(Kind("init 0\ntrans 0 a 1 1\n") == FileKind::kTransducer);
  CHECK(Kind("init 0\nfinal 0\n") == FileKind::kTransducer);
  CHECK_THROWS_AS(Kind("\n# nothing\n"), ParseError);
}

TEST_CASE("dot export") {
  std::ostringstream out;
  WriteDot(out, testing::TinyC());
  CHECK(out.str().rfind("digraph", 0) == 0);
  CHECK(out.str().find("doublecircle") != std::string::npos);
  std::ostringstream nds_out;
  WriteDot(nds_out, testing::DriftSystem());
  CHECK(nds_out.str().find("+1") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace redlab
