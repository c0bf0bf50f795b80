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
// Z-transducers: binary input, one symbol per arc, one or two c's of output
// per arc, and a single final state with no outgoing arcs. Also the binary
// block code used to move PCP relations onto this machine model.

#ifndef REDLAB_ZMACHINE_H_
#define REDLAB_ZMACHINE_H_

#include <cstdint>
#include <set>
#include <vector>

#include "redlab/pcp.h"
#include "redlab/relation.h"

namespace redlab {

struct ZArc {
  int from;
  Symbol bit;   // 0 or 1
  int output;   // 1 or 2
  int to;
  friend bool operator==(const ZArc &, const ZArc &) = default;
  friend auto operator<=>(const ZArc &, const ZArc &) = default;
};

class ZTransducer {
 public:
  // Validates the machine shape; arcs are stored sorted and deduplicated.
  ZTransducer(int num_states, std::vector<ZArc> arcs, int initial, int final);

  int num_states() const { return num_states_; }
  int initial() const { return initial_; }
  int final_state() const { return final_; }
  const std::vector<ZArc> &arcs() const { return arcs_; }
  // Arcs leaving q on `bit`.
  std::vector<ZArc> Out(int q, Symbol bit) const;

  bool operator==(const ZTransducer &other) const = default;

 private:
  int num_states_;
  std::vector<ZArc> arcs_;
  int initial_;
  int final_;
  // Start of each state's arcs in arcs_, num_states_ + 1 entries.
  std::vector<size_t> offsets_;
};

struct ZAnalysis {
  bool deterministic = true;
  bool complete = true;
  // (state, bit) pairs with more than one / no arc.
  std::vector<std::pair<int, Symbol>> branching;
  std::vector<std::pair<int, Symbol>> missing;
};

ZAnalysis Analyze(const ZTransducer &zt);

// Adds a garbage state for every missing (state, bit); returns the machine
// unchanged when it is already complete.
ZTransducer CompleteMachine(const ZTransducer &zt);

// {m | (word, c^m) accepted}.
std::set<int64_t> Outputs(const ZTransducer &zt, const Word &word);

// The letter code: a -> 1 0^k 1, b -> 1 0^(k+1) 1, i_t -> 1 0^(k+1+t) 1 with
// k = 1 + the longest word of the instance.
class Coding {
 public:
  explicit Coding(const PcpInstance &inst);

  int k() const { return k_; }
  int num_indices() const { return n_; }
  const Word &Code(Symbol letter) const { return codes_.at(letter); }
  // delta applied letterwise.
  Word Encode(const Word &w) const;
  // (delta(w) 0, m + |delta(w) 0|).
  UnaryPair Chi(const UnaryPair &p) const;

 private:
  int k_;
  int n_;
  std::vector<Word> codes_;
};

// A complete nondeterministic Z-transducer recognizing chi(rel). Every atom
// (x, m) of rel must satisfy m <= |delta(x)|.
ZTransducer CompileRelation(const Coding &coding, const Relation &rel);

// A deterministic, complete Z-transducer recognizing chi(L0).
ZTransducer BuildChiL0(const PcpInstance &inst);

}  // namespace redlab

#endif  // REDLAB_ZMACHINE_H_
