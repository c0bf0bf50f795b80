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

// Fixtures and random generators shared by the unit and acceptance tests.

#ifndef REDLAB_TESTS_TEST_UTIL_H_
#define REDLAB_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "redlab/nds.h"
#include "redlab/nfa.h"
#include "redlab/pcp.h"
#include "redlab/zmachine.h"

namespace redlab::testing {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline PcpInstance Example1() { return PcpInstance(Pairs{{"ab", "a"}, {"b", "bb"}}); }

// Two states, 0 -> 1 on either bit with one c.
inline ZTransducer TinyC() {
  return ZTransducer(2, {{0, 0, 1, 1}, {0, 1, 1, 1}}, 0, 1);
}

// Like TinyC but 0 costs two c's.
inline ZTransducer TinyD() {
  return ZTransducer(2, {{0, 0, 2, 1}, {0, 1, 1, 1}}, 0, 1);
}

// Loops on the initial state; the final state is unreachable.
inline ZTransducer NeverAccepting() {
  return ZTransducer(2, {{0, 0, 1, 0}, {0, 1, 1, 0}}, 0, 1);
}

inline Nds StaySystem() {
  return Nds(1, {{1, 0, 1, 0, Rational(1)}, {1, 1, 1, 0, Rational(1)}});
}

inline Nds DriftSystem() {
  return Nds(1, {{1, 0, 1, 1, Rational(1)}, {1, 1, 1, 1, Rational(1)}});
}

// Line 1 splits between staying and moving to (node+1, line 2); line 2
// stays put. Symbol 1 mirrors symbol 0.
inline Nds TwoBranchSystem() {
  std::vector<NdsRule> rules;
  for (Symbol a = 0; a < 2; ++a) {
    rules.push_back({1, a, 1, 0, Rational(1, 2)});
    rules.push_back({1, a, 2, 1, Rational(1, 2)});
    rules.push_back({2, a, 2, 0, Rational(1)});
  }
  return Nds(2, std::move(rules));
}

// Every row gets between 1 and max_per_symbol / s rules with distinct
// (target, shift) and positive weights normalized to 1.
inline Nds RandomNds(std::mt19937_64 &rng, int max_lines, int max_per_symbol) {
  const int s = std::uniform_int_distribution<int>(1, max_lines)(rng);
  const int per_row = std::clamp(max_per_symbol / s, 1, 3 * s);
  std::vector<NdsRule> rules;
  for (int k = 1; k <= s; ++k) {
    for (Symbol a = 0; a < 2; ++a) {
      const int r = std::uniform_int_distribution<int>(1, per_row)(rng);
      std::set<std::pair<int, int>> targets;
      while (static_cast<int>(targets.size()) < r) {
        targets.emplace(std::uniform_int_distribution<int>(1, s)(rng),
                        std::uniform_int_distribution<int>(-1, 1)(rng));
      }
      std::vector<int64_t> weights;
      for (size_t i = 0; i < targets.size(); ++i) {
        weights.push_back(std::uniform_int_distribution<int64_t>(1, 5)(rng));
      }
      const int64_t total = std::accumulate(weights.begin(), weights.end(), int64_t{0});
      size_t i = 0;
      for (const auto &[j, z] : targets) {
        rules.push_back({k, a, j, z, Rational(weights[i++], total)});
      }
    }
  }
  return Nds(s, std::move(rules));
}

inline Nfa RandomNfa(std::mt19937_64 &rng, int max_states, int alphabet_size,
                     double density) {
  const int n = std::uniform_int_distribution<int>(1, max_states)(rng);
  std::bernoulli_distribution arc(density), fin(0.4);
  NfaBuilder b(alphabet_size);
  for (int q = 0; q < n; ++q) b.AddState();
  b.AddInitial(0);
  if (std::bernoulli_distribution(0.2)(rng) && n > 1) b.AddInitial(n - 1);
  for (int q = 0; q < n; ++q) {
    if (fin(rng)) b.SetFinal(q);
    for (Symbol a = 0; a < alphabet_size; ++a) {
      for (int t = 0; t < n; ++t) {
        if (arc(rng)) b.AddArc(q, a, t);
      }
    }
  }
  return b.Build();
}

// All words over {0..alphabet_size-1} of length <= max_len, shortlex order.
inline std::vector<Word> AllWords(int alphabet_size, int max_len) {
  std::vector<Word> out{Word{}};
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const size_t end = out.size();
    for (size_t i = begin; i < end; ++i) {
      for (Symbol a = 0; a < alphabet_size; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace redlab::testing

#endif  // REDLAB_TESTS_TEST_UTIL_H_
