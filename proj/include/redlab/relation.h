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
// Rational relations in Sigma* x c*, stored as finite transducers whose
// output on each arc is a count of c's.

#ifndef REDLAB_RELATION_H_
#define REDLAB_RELATION_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "redlab/alphabet.h"
#include "redlab/nfa.h"

namespace redlab {

// The pair (input, c^count).
struct UnaryPair {
  Word input;
  int64_t count = 0;
  friend bool operator==(const UnaryPair &, const UnaryPair &) = default;
  friend auto operator<=>(const UnaryPair &, const UnaryPair &) = default;
};

struct TransducerArc {
  int from;
  Word input;
  int count;
  int to;
  friend bool operator==(const TransducerArc &, const TransducerArc &) = default;
};

// A finite transducer over a unary output alphabet. Every arc reads a
// nonempty word or emits at least one c, so membership search terminates.
class Transducer {
 public:
  Transducer(Alphabet alphabet, int num_states, std::vector<TransducerArc> arcs,
             int initial, std::vector<bool> finals);

  const Alphabet &alphabet() const { return alphabet_; }
  int num_states() const { return num_states_; }
  const std::vector<TransducerArc> &arcs() const { return arcs_; }
  int initial() const { return initial_; }
  bool IsFinal(int q) const { return finals_[q]; }
  const std::vector<bool> &finals() const { return finals_; }

  bool operator==(const Transducer &other) const = default;

 private:
  Alphabet alphabet_;
  int num_states_;
  std::vector<TransducerArc> arcs_;
  int initial_;
  std::vector<bool> finals_;
};

// Immutable handle to a transducer, denoting the set of pairs it recognizes.
class Relation {
 public:
  explicit Relation(Transducer t)
      : t_(std::make_shared<const Transducer>(std::move(t))) {}

  const Transducer &transducer() const { return *t_; }
  const Alphabet &alphabet() const { return t_->alphabet(); }

 private:
  std::shared_ptr<const Transducer> t_;
};

// The singleton {(input, c^count)}. Rejects (epsilon, 0); use Identity().
Relation BuildAtom(const Alphabet &alphabet, const Word &input, int count);
// The singleton {(epsilon, epsilon)}.
Relation Identity(const Alphabet &alphabet);

enum class Combinator { kUnion, kConcat, kStar, kPlus };

// Union and concat take two arguments, star and plus take one. All arguments
// must share one alphabet.
Relation Combine(Combinator kind, std::span<const Relation> args);

Relation Union(const Relation &a, const Relation &b);
Relation Concat(const Relation &a, const Relation &b);
Relation Star(const Relation &a);
// concat(a, star(a)).
Relation Plus(const Relation &a);
// Folds over a nonempty list.
Relation UnionAll(std::span<const Relation> rs);
Relation ConcatAll(std::span<const Relation> rs);

// Exact membership by search over (input position, emitted count, state).
bool Contains(const Relation &rel, const UnaryPair &pair);

// Automaton for the first projection {w | (w, y) in rel}.
Nfa InputLanguage(const Relation &rel);

}  // namespace redlab

#endif  // REDLAB_RELATION_H_
