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
#include <set>

#include "doctest.h"
#include "redlab/pcp.h"
#include "redlab/relation.h"
#include "pair_oracle.h"
#include "test_util.h"

namespace redlab {
namespace {

const Alphabet kAb({"a", "b"});

Word W(const std::string &s) { return *kAb.Parse(s); }

constexpr size_t kMaxLen = 8;
constexpr int64_t kMaxCount = 12;
using testing::PairSet;
const testing::Window kWin{kMaxLen, kMaxCount};

struct Tree {
  Relation rel;
  PairSet oracle;
};

Tree RandomAtom(std::mt19937_64 &rng) {
  for (;;) {
    const int len = std::uniform_int_distribution<int>(0, 2)(rng);
    const int count = std::uniform_int_distribution<int>(0, 3)(rng);
    if (len == 0 && count == 0) continue;
    Word input;
    for (int i = 0; i < len; ++i) input.push_back(std::uniform_int_distribution<int>(0, 1)(rng));
    return {BuildAtom(kAb, input, count), {UnaryPair{input, count}}};
  }
}

Tree RandomTree(std::mt19937_64 &rng, int ops) {
  if (ops == 0) return RandomAtom(rng);
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: {
      const int left = std::uniform_int_distribution<int>(0, ops - 1)(rng);
      Tree a = RandomTree(rng, left), b = RandomTree(rng, ops - 1 - left);
      return {Union(a.rel, b.rel), testing::Unite(a.oracle, b.oracle)};
    }
    case 1: {
      const int left = std::uniform_int_distribution<int>(0, ops - 1)(rng);
      Tree a = RandomTree(rng, left), b = RandomTree(rng, ops - 1 - left);
      return {Concat(a.rel, b.rel), testing::Product(a.oracle, b.oracle, kWin)};
    }
    case 2: {
      Tree a = RandomTree(rng, ops - 1);
      return {Star(a.rel), testing::Kleene(a.oracle, kWin)};
    }
    default: {
      Tree a = RandomTree(rng, ops - 1);
      return {Plus(a.rel), testing::KleenePlus(a.oracle, kWin)};
    }
  }
}

TEST_SUITE("relation") {

TEST_CASE("atoms are singletons") {
  const PcpInstance inst = testing::Example1();
  const Word i1{PcpInstance::IndexSymbol(1)};
  const Relation r = BuildAtom(inst.alphabet(), i1, 3);
  CHECK(Contains(r, {i1, 3}));
  CHECK_FALSE(Contains(r, {i1, 2}));
  CHECK(Contains(BuildAtom(kAb, W("ab"), 2), {W("ab"), 2}));
  CHECK(Contains(BuildAtom(kAb, {}, 1), {{}, 1}));
  CHECK_FALSE(Contains(BuildAtom(kAb, {}, 1), {{}, 0}));
}

TEST_CASE("empty atom without output is rejected") {
  CHECK_THROWS_AS(BuildAtom(kAb, {}, 0), Error);
  CHECK(Contains(Identity(kAb), {{}, 0}));
}

TEST_CASE("combinator examples") {
  const PcpInstance inst = testing::Example1();
  const Symbol i1 = PcpInstance::IndexSymbol(1);
  CHECK(Contains(Star(BuildAtom(kAb, W("a"), 1)), {{}, 0}));
  const Relation c = Concat(BuildAtom(inst.alphabet(), {i1}, 3),
                            BuildAtom(inst.alphabet(), {PcpInstance::kA}, 2));
  CHECK(Contains(c, {{i1, PcpInstance::kA}, 5}));
  CHECK_FALSE(Contains(c, {{i1, PcpInstance::kA}, 4}));
  const Relation p = Plus(BuildAtom(kAb, W("a"), 2));
  CHECK_FALSE(Contains(p, {{}, 0}));
  CHECK(Contains(p, {W("aa"), 4}));
  CHECK_FALSE(Contains(p, {W("aa"), 3}));
}

TEST_CASE("alphabet mismatch is rejected") {
  const Alphabet other({"x"});
  CHECK_THROWS_AS(Union(BuildAtom(kAb, W("a"), 1), BuildAtom(other, {0}, 1)), Error);
  const std::vector<Relation> three(3, BuildAtom(kAb, W("a"), 1));
  CHECK_THROWS_AS(Combine(Combinator::kStar, three), Error);
}

TEST_CASE("L1 membership") {
  const PcpInstance inst = testing::Example1();
  const Relation l1 = BuildSide(inst, Side::kU).l1;
  const Word i1i2{PcpInstance::IndexSymbol(1), PcpInstance::IndexSymbol(2)};
  CHECK(Contains(l1, {i1i2, 5}));
  CHECK_FALSE(Contains(l1, {i1i2, 4}));
  CHECK(Contains(Star(l1), {{}, 0}));
}

TEST_CASE("contains matches the unfolded combinator tree") {
  std::mt19937_64 rng(11);
  const std::vector<Word> words = testing::AllWords(2, static_cast<int>(kMaxLen));
  size_t members = 0, disagreements = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = RandomTree(rng, std::uniform_int_distribution<int>(0, 4)(rng));
    for (const Word &w : words) {
      for (int64_t m = 0; m <= kMaxCount; ++m) {
        const UnaryPair p{w, m};
        const bool member = t.oracle.contains(p);
        members += member ? 1 : 0;
        if (Contains(t.rel, p) != member) {
          ++disagreements;
          INFO("trial " << trial << " on " << kAb.Format(w) << "," << m);
          CHECK(false);
        }
      }
    }
  }
  CHECK(disagreements == 0);
  MESSAGE("oracle members checked: " << members);
}

TEST_CASE("star contains products of up to four members") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Tree t = RandomTree(rng, std::uniform_int_distribution<int>(0, 2)(rng));
    const std::vector<UnaryPair> members(t.oracle.begin(), t.oracle.end());
    const Relation star = Star(t.rel);
    for (int sample = 0; sample < 20; ++sample) {
      const int factors = std::uniform_int_distribution<int>(0, 4)(rng);
      UnaryPair p;
      for (int f = 0; f < factors; ++f) {
        const auto &m = members[std::uniform_int_distribution<size_t>(0, members.size() - 1)(rng)];
        Append(p.input, m.input);
        p.count += m.count;
      }
      CHECK(Contains(star, p));
    }
  }
}

// Word-level semantics of the regular operations, for projection checks.
bool InConcat(const Nfa &a, const Nfa &b, const Word &w) {
  for (size_t i = 0; i <= w.size(); ++i) {
    if (a.Accepts(Word(w.begin(), w.begin() + static_cast<long>(i))) &&
        b.Accepts(Word(w.begin() + static_cast<long>(i), w.end()))) {
      return true;
    }
  }
  return false;
}

bool InStar(const Nfa &a, const Word &w) {
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (size_t j = 1; j <= w.size(); ++j) {
    for (size_t i = 0; i < j && !ok[j]; ++i) {
      ok[j] = ok[i] && a.Accepts(Word(w.begin() + static_cast<long>(i),
                                      w.begin() + static_cast<long>(j)));
    }
  }
  return ok[w.size()];
}

TEST_CASE("input language commutes with the combinators") {
  std::mt19937_64 rng(13);
  const std::vector<Word> words = testing::AllWords(2, 8);
  for (int trial = 0; trial < 25; ++trial) {
    const Tree x = RandomTree(rng, 1), y = RandomTree(rng, 1);
    const Nfa lx = InputLanguage(x.rel), ly = InputLanguage(y.rel);
    const Nfa lu = InputLanguage(Union(x.rel, y.rel));
    const Nfa lc = InputLanguage(Concat(x.rel, y.rel));
    const Nfa ls = InputLanguage(Star(x.rel));
    const Nfa lp = InputLanguage(Plus(x.rel));
    for (const Word &w : words) {
      CHECK(lu.Accepts(w) == (lx.Accepts(w) || ly.Accepts(w)));
      CHECK(lc.Accepts(w) == InConcat(lx, ly, w));
      CHECK(ls.Accepts(w) == InStar(lx, w));
      CHECK(lp.Accepts(w) == InConcat(lx, ls, w));
    }
  }
}

TEST_CASE("input language examples") {
  const PcpInstance inst = testing::Example1();
  const Symbol i1 = PcpInstance::IndexSymbol(1), i2 = PcpInstance::IndexSymbol(2);
  CHECK(Enumerate(InputLanguage(BuildAtom(inst.alphabet(), {i1}, 3)), 4) ==
        std::vector<Word>{{i1}});
  CHECK(Enumerate(InputLanguage(Union(BuildAtom(kAb, W("a"), 1),
                                      BuildAtom(kAb, W("b"), 2))), 4) ==
        std::vector<Word>{W("a"), W("b")});
  // {i1,i2}+{a,b}+
  const Nfa l0 = InputLanguage(BuildL0(inst));
  for (const Word &w : testing::AllWords(inst.alphabet().size(), 5)) {
    size_t i = 0;
    while (i < w.size() && (w[i] == i1 || w[i] == i2)) ++i;
    size_t j = i;
    while (j < w.size() && w[j] <= PcpInstance::kB) ++j;
    CHECK(l0.Accepts(w) == (i > 0 && j > i && j == w.size()));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace redlab
