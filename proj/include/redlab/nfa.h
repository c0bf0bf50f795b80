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
// Nondeterministic finite automata without epsilon arcs, plus the
// language-level queries used throughout: acceptance, bounded enumeration
// and inclusion with shortlex-minimal counterexamples.

#ifndef REDLAB_NFA_H_
#define REDLAB_NFA_H_

#include <optional>
#include <utility>
#include <vector>

#include "redlab/common.h"

namespace redlab {

struct NfaArc {
  Symbol symbol;
  int to;
  friend bool operator==(const NfaArc &, const NfaArc &) = default;
  friend auto operator<=>(const NfaArc &, const NfaArc &) = default;
};

class Nfa {
 public:
  Nfa() = default;

  int alphabet_size() const { return alphabet_size_; }
  int num_states() const { return static_cast<int>(arcs_.size()); }
  const std::vector<int> &initial() const { return initial_; }
  bool IsFinal(int q) const { return final_[q]; }
  std::vector<int> Finals() const;
  // Arcs leaving q, sorted by (symbol, target).
  const std::vector<NfaArc> &Arcs(int q) const { return arcs_[q]; }
  size_t NumArcs() const;

  // Sorted, duplicate-free successor set of `states` on `symbol`.
  std::vector<int> Step(const std::vector<int> &states, Symbol symbol) const;
  bool Accepts(const Word &w) const;

  bool operator==(const Nfa &other) const = default;

 private:
  friend class NfaBuilder;

  int alphabet_size_ = 0;
  std::vector<std::vector<NfaArc>> arcs_;
  std::vector<int> initial_;
  std::vector<bool> final_;
};

// Collects states and arcs (epsilon arcs included) and produces an
// epsilon-free Nfa. Epsilon closure is folded into arcs and final flags.
class NfaBuilder {
 public:
  explicit NfaBuilder(int alphabet_size) : alphabet_size_(alphabet_size) {}

  int AddState();
  int num_states() const { return static_cast<int>(arcs_.size()); }
  void AddArc(int from, Symbol symbol, int to);
  void AddEpsilon(int from, int to);
  void AddInitial(int q);
  void SetFinal(int q, bool final = true);
  // Adds a fresh chain from -> ... -> to spelling `w`; an empty `w` becomes
  // an epsilon arc.
  void AddChain(int from, const Word &w, int to);

  Nfa Build() const;

 private:
  int alphabet_size_;
  std::vector<std::vector<NfaArc>> arcs_;
  std::vector<std::vector<int>> eps_;
  std::vector<int> initial_;
  std::vector<bool> final_;
};

// Automaton accepting exactly the given finite set of words.
Nfa NfaFromWords(int alphabet_size, const std::vector<Word> &words);

// All accepted words of length <= max_len, in shortlex order.
std::vector<Word> Enumerate(const Nfa &a, int max_len);

// Absent iff L(a) is included in L(b); otherwise the shortlex-minimal word
// of L(a) \ L(b). Explores pairs (state of a, subset of b) breadth first and
// drops a pair when an already-seen pair with the same a-state has a subset
// of its b-states.
std::optional<Word> Inclusion(const Nfa &a, const Nfa &b);

}  // namespace redlab

#endif  // REDLAB_NFA_H_
