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

#include "doctest.h"
#include "redlab/zmachine.h"
#include "test_util.h"

namespace redlab {
namespace {

using testing::Pairs;

Symbol I(int t) { return PcpInstance::IndexSymbol(t); }
constexpr Symbol kA = PcpInstance::kA;
constexpr Symbol kB = PcpInstance::kB;

ZTransducer RandomZ(std::mt19937_64 &rng, bool deterministic) {
  const int n = std::uniform_int_distribution<int>(2, 5)(rng);
  std::vector<ZArc> arcs;
  std::uniform_int_distribution<int> state(0, n - 1), out(1, 2);
  std::bernoulli_distribution present(0.7), extra(0.3);
  for (int q = 0; q < n - 1; ++q) {
    for (Symbol b = 0; b < 2; ++b) {
      if (deterministic) {
        arcs.push_back({q, b, out(rng), state(rng)});
        continue;
      }
      if (present(rng)) arcs.push_back({q, b, out(rng), state(rng)});
      if (extra(rng)) arcs.push_back({q, b, out(rng), state(rng)});
    }
  }
  return ZTransducer(n, std::move(arcs), 0, n - 1);
}

TEST_SUITE("zmachine") {

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(ZTransducer(1, {}, 0, 0), Error);
  CHECK_THROWS_AS(ZTransducer(2, {{1, 0, 1, 0}}, 0, 1), Error);  // leaves final
  CHECK_THROWS_AS(ZTransducer(2, {{0, 0, 3, 1}}, 0, 1), Error);
  CHECK_THROWS_AS(ZTransducer(2, {{0, 2, 1, 1}}, 0, 1), Error);
  CHECK_THROWS_AS(ZTransducer(2, {{0, 0, 1, 2}}, 0, 1), Error);
  CHECK_THROWS_AS(ZTransducer(2, {}, 0, 0), Error);
}

TEST_CASE("analyze") {
  const ZTransducer both(2, {{0, 0, 1, 1}, {0, 0, 2, 1}, {0, 1, 1, 1}}, 0, 1);
  ZAnalysis a = Analyze(both);
  CHECK_FALSE(a.deterministic);
  CHECK(a.complete);
  CHECK(a.branching == std::vector<std::pair<int, Symbol>>{{0, 0}});

  const ZTransducer partial(2, {{0, 0, 1, 1}}, 0, 1);
  a = Analyze(partial);
  CHECK_FALSE(a.complete);
  CHECK_FALSE(a.deterministic);
  CHECK(a.missing == std::vector<std::pair<int, Symbol>>{{0, 1}});

  a = Analyze(testing::TinyC());
  CHECK(a.deterministic);
  CHECK(a.complete);
}

TEST_CASE("complete machine") {
  const ZTransducer partial(2, {{0, 0, 1, 1}}, 0, 1);
  const ZTransducer done = CompleteMachine(partial);
  CHECK(Analyze(done).complete);
  for (const Word &w : testing::AllWords(2, 6)) {
    CHECK(Outputs(done, w) == Outputs(partial, w));
  }
  CHECK(CompleteMachine(testing::TinyC()) == testing::TinyC());
  const ZTransducer bare(2, {}, 0, 1);
  const ZTransducer filled = CompleteMachine(bare);
  CHECK(Analyze(filled).complete);
  CHECK(filled.num_states() == 3);
  for (const Word &w : testing::AllWords(2, 4)) CHECK(Outputs(filled, w).empty());
}

TEST_CASE("complete machine preserves outputs on random machines") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const ZTransducer z = RandomZ(rng, false);
    const ZTransducer c = CompleteMachine(z);
    CHECK(Analyze(c).complete);
    for (const Word &w : testing::AllWords(2, 8)) {
      if (Outputs(c, w) != Outputs(z, w)) {
        FAIL_CHECK("outputs changed on trial " << trial);
        break;
      }
    }
  }
}

TEST_CASE("outputs") {
  const ZTransducer both(2, {{0, 0, 1, 1}, {0, 0, 2, 1}}, 0, 1);
  CHECK(Outputs(both, {0}) == std::set<int64_t>{1, 2});
  CHECK(Outputs(testing::TinyD(), {0}) == std::set<int64_t>{2});
  CHECK(Outputs(testing::TinyC(), {0, 1}).empty());
  CHECK(Outputs(testing::TinyC(), {}).empty());
}

TEST_CASE("deterministic machines are prefix-free") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const ZTransducer z = RandomZ(rng, true);
    REQUIRE(Analyze(z).deterministic);
    for (const Word &w : testing::AllWords(2, 10)) {
      const auto out = Outputs(z, w);
      CHECK(out.size() <= 1);
      if (out.empty()) continue;
      for (Symbol b = 0; b < 2; ++b) {
        Word longer = w;
        longer.push_back(b);
        CHECK(Outputs(z, longer).empty());
      }
    }
  }
}

TEST_CASE("coding") {
  const PcpInstance inst = testing::Example1();
  const Coding coding(inst);
  CHECK(coding.k() == 3);
  CHECK(coding.Code(kA) == ParseBitString("10001"));
  CHECK(coding.Code(kB) == ParseBitString("100001"));
  CHECK(coding.Code(I(1)) == ParseBitString("1000001"));
  CHECK(coding.Code(I(2)) == ParseBitString("10000001"));
  CHECK(coding.Chi({{kA}, 2}) == UnaryPair{ParseBitString("100010"), 8});
  CHECK(coding.Chi({{}, 0}) == UnaryPair{ParseBitString("0"), 1});
  CHECK(coding.Chi({{I(1), kA}, 3}) ==
        UnaryPair{ParseBitString("1000001100010"), 16});
}

TEST_CASE("codes are prefix-free and come from the block set") {
  const PcpInstance inst(Pairs{{"abab", "b"}, {"a", "ab"}, {"b", "baa"}});
  const Coding coding(inst);
  CHECK(coding.k() == 5);
  std::set<Word> codes;
  for (Symbol x = 0; x < inst.alphabet().size(); ++x) {
    const Word &c = coding.Code(x);
    const int zeros = static_cast<int>(c.size()) - 2;
    CHECK(zeros >= coding.k());
    CHECK(zeros <= coding.k() + inst.size() + 1);
    codes.insert(c);
  }
  CHECK(codes.size() == static_cast<size_t>(inst.alphabet().size()));
  for (const Word &x : codes) {
    for (const Word &y : codes) {
      if (x != y) CHECK_FALSE(IsPrefix(x, y));
    }
  }
}

TEST_CASE("compile relation examples") {
  const PcpInstance inst = testing::Example1();
  const Coding coding(inst);
  const ZTransducer z1 = CompileRelation(coding, BuildSide(inst, Side::kU).l1);
  const UnaryPair coded = coding.Chi({{I(1)}, 3});
  CHECK(coded.count == 11);
  CHECK(Outputs(z1, coded.input).contains(11));
  CHECK(Outputs(z1, ParseBitString("11")).empty());

  const ZTransducer za = CompileRelation(coding, BuildAtom(inst.alphabet(), {kA}, 2));
  for (const Word &w : testing::AllWords(2, 7)) {
    const auto out = Outputs(za, w);
    if (w == ParseBitString("100010")) {
      CHECK(out == std::set<int64_t>{8});
    } else {
      CHECK(out.empty());
    }
  }
  CHECK_THROWS_AS(CompileRelation(coding, BuildAtom(inst.alphabet(), {kA}, 6)), Error);
}

TEST_CASE("chi(L0) machine") {
  const PcpInstance inst = testing::Example1();
  const Coding coding(inst);
  const ZTransducer z = BuildChiL0(inst);
  const ZAnalysis a = Analyze(z);
  CHECK(a.deterministic);
  CHECK(a.complete);
  auto accepts = [&](const UnaryPair &p) {
    const UnaryPair c = coding.Chi(p);
    return Outputs(z, c.input).contains(c.count);
  };
  CHECK(accepts({{I(1), kA}, 3}));
  CHECK_FALSE(accepts({{I(1)}, 1}));
  CHECK_FALSE(accepts({{I(1), kA}, 4}));
}

TEST_CASE("coding faithfulness to input length 4") {
  const std::vector<PcpInstance> instances = {
      testing::Example1(), PcpInstance(Pairs{{"a", "ba"}})};
  for (const auto &inst : instances) {
    const Coding coding(inst);
    const Relation l0 = BuildL0(inst);
    const Relation lu = BuildSide(inst, Side::kU).side;
    const Relation lv = BuildSide(inst, Side::kV).side;
    const std::pair<const Relation *, ZTransducer> machines[] = {
        {&l0, BuildChiL0(inst)},
        {&lu, CompileRelation(coding, lu)},
        {&lv, CompileRelation(coding, lv)}};
    const int64_t max_count = 4 * (coding.k() + 2);
    size_t members = 0, disagreements = 0;
    for (const Word &input : testing::AllWords(inst.alphabet().size(), 4)) {
      for (int64_t m = 0; m <= max_count; ++m) {
        const UnaryPair c = coding.Chi({input, m});
        for (const auto &[rel, z] : machines) {
          const bool member = Contains(*rel, {input, m});
          members += member;
          disagreements += member != Outputs(z, c.input).contains(c.count);
        }
      }
    }
    CHECK(members > 0);
    CHECK(disagreements == 0);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace redlab
