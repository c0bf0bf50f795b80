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
// Nondeterministic defense systems. Lines 1..s defend integer nodes; a rule
// (k, a, j, z, p) moves the defense of node i by line k to node i + z by
// line j with probability p when attack symbol a arrives. Initially only
// node 0 is defended, by line 1. An attack word is critical when afterwards
// no line defends node 0 with positive probability.

#ifndef REDLAB_NDS_H_
#define REDLAB_NDS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "redlab/common.h"
#include "redlab/rational.h"

namespace redlab {

struct NdsRule {
  int from_line;
  Symbol symbol;  // 0 or 1
  int to_line;
  int shift;      // -1, 0 or +1
  Rational probability;
  friend bool operator==(const NdsRule &, const NdsRule &) = default;
};

class Nds {
 public:
  // Throws unless every (line, symbol) row has positive probabilities that
  // sum to exactly 1; the message names the first offending row.
  Nds(int lines, std::vector<NdsRule> rules);

  int lines() const { return lines_; }
  std::span<const NdsRule> Row(int line, Symbol symbol) const;
  // All rules, row by row (line ascending, symbol 0 before 1).
  std::vector<NdsRule> Rules() const;
  size_t NumRules() const;

  bool operator==(const Nds &other) const { return rows_ == other.rows_; }

 private:
  int lines_;
  std::vector<std::vector<NdsRule>> rows_;  // index (line - 1) * 2 + symbol
};

struct Configuration {
  int64_t node = 0;
  int line = 1;

  // node * s + (line - 1).
  int64_t Encode(int s) const { return node * s + (line - 1); }
  static Configuration Decode(int64_t code, int s);

  friend bool operator==(const Configuration &, const Configuration &) = default;
  friend auto operator<=>(const Configuration &, const Configuration &) = default;
};

// Sorted, duplicate-free set of configurations with positive probability.
using SupportState = std::vector<Configuration>;

SupportState InitialSupport();
SupportState StepSupport(const Nds &nds, const SupportState &support,
                         Symbol symbol);
SupportState SupportAfter(const Nds &nds, const Word &w);

std::map<Configuration, Rational> AttackProbabilities(const Nds &nds,
                                                      const Word &w);

// True when no configuration with node 0 remains in the support.
bool IsCriticalSupport(const SupportState &support);
bool IsCritical(const Nds &nds, const Word &w);

// Shortlex-minimal critical word of length <= max_len. Breadth-first over
// words; a word whose support was already reached by an earlier word is not
// expanded again.
std::optional<Word> SearchCritical(const Nds &nds, int max_len);

}  // namespace redlab

#endif  // REDLAB_NDS_H_
