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
// Post correspondence instances and their encoding as an inclusion question
// between rational relations over {a, b, i_1, ..., i_n} x c*.
//
// For a side (u or v) with word lengths k_1..k_n the layers are
//   L1  = {(i_t, c^(k_t+1))}*
//   L2  = union over t, 1<=j<=k_t of L1 (i_t, c^j) {(i_r, c)}*
//   L3  = L2 {(a,c),(b,c)}*
//   L4  = L1 {(a,c),(b,c)}* {(a,c^2),(b,c^2)}+
//   L5  = union over t, mu in S_t of
//         L1 (i_t, c) {(i_r, c)}* {(a,c),(b,c)}* (mu, c^(2 k_t)) {(a,c^2),(b,c^2)}*
// where S_t holds the words of length k_t other than the t-th word, and the
// side relation is L3 | L4 | L5. The base relation is
//   L0  = {(i_t, c)}+ {(a,c^2),(b,c^2)}+.
// An index sequence solves the instance exactly when its witness pair lies in
// L0 but in neither side relation.

#ifndef REDLAB_PCP_H_
#define REDLAB_PCP_H_

#include <optional>
#include <string>
#include <vector>

#include "redlab/relation.h"

namespace redlab {

enum class Side { kU, kV };

// Pairs (u_t, v_t) of nonempty words over {a, b}; indices are 1-based.
class PcpInstance {
 public:
  explicit PcpInstance(std::vector<std::pair<std::string, std::string>> pairs);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::string &U(int index) const { return pairs_.at(index - 1).first; }
  const std::string &V(int index) const { return pairs_.at(index - 1).second; }
  const std::string &Get(Side side, int index) const {
    return side == Side::kU ? U(index) : V(index);
  }
  const std::vector<std::pair<std::string, std::string>> &pairs() const {
    return pairs_;
  }

  // {a, b, i1, ..., in}; a = 0, b = 1, i_t = t + 1.
  const Alphabet &alphabet() const { return alphabet_; }
  static Symbol IndexSymbol(int index) { return index + 1; }
  static constexpr Symbol kA = 0;
  static constexpr Symbol kB = 1;

  // Letters of an {a,b} string as symbols.
  static Word Letters(const std::string &ab);
  // Concatenation of the chosen side's words along `seq`.
  std::string Concatenation(Side side, const std::vector<int> &seq) const;
  bool IsSolution(const std::vector<int> &seq) const;

  bool operator==(const PcpInstance &other) const {
    return pairs_ == other.pairs_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
  Alphabet alphabet_;
};

struct SideRelations {
  Relation l1, l2, l3, l4, l5;
  // L3 | L4 | L5.
  Relation side;
};

// Default cap on the number of mismatch words enumerated per index.
inline constexpr size_t kDefaultMismatchCap = size_t{1} << 16;

SideRelations BuildSide(const PcpInstance &inst, Side side,
                        size_t mismatch_cap = kDefaultMismatchCap);
Relation BuildL0(const PcpInstance &inst);

// All words of length |word(side, index)| over {a,b} except that word.
std::vector<std::string> MismatchWords(const PcpInstance &inst, Side side,
                                       int index,
                                       size_t cap = kDefaultMismatchCap);

// (i_s1 ... i_ss u_s1 ... u_ss, c^(s + 2 sum k)). Throws on non-solutions.
UnaryPair SolutionWitness(const PcpInstance &inst, const std::vector<int> &seq);

// Shortlex-minimal solution of length <= max_len, pruning sequences whose two
// concatenations are not prefix-comparable.
std::optional<std::vector<int>> BruteForcePcp(const PcpInstance &inst,
                                              int max_len);

// The element of L0 determined by an index sequence and a letter word.
UnaryPair L0Element(const std::vector<int> &seq, const std::string &letters);

struct ClaimViolation {
  Side side;
  std::vector<int> seq;
  std::string letters;
  bool member;    // computed membership in the side relation
  bool expected;  // letters != side concatenation
};

// Checks, for every sequence of length <= max_seq and every letter word of
// length 1..max_word, that the L0 element lies in a side relation exactly when
// the letters differ from that side's concatenation.
std::vector<ClaimViolation> ScanClaim(const PcpInstance &inst, int max_seq,
                                      int max_word);

// Which explicit factorization places an L0 element inside a side relation
// when the letters differ from the side concatenation.
enum class MismatchCase {
  kLonger,        // letters longer than the concatenation -> L4
  kShorter,       // letters shorter -> L3
  kEqualLength,   // same length, some block differs -> L5
};

struct MismatchExplanation {
  MismatchCase which;
  // 1-based position in the sequence of the block the factorization pivots
  // on (kShorter and kEqualLength only).
  int block = 0;
  // Factor pairs whose product is the element; each lies in the layer named
  // by `which` when multiplied out.
  std::vector<UnaryPair> factors;
};

// Returns nullopt when the letters equal the side concatenation.
std::optional<MismatchExplanation> ExplainMismatch(const PcpInstance &inst,
                                                   Side side,
                                                   const std::vector<int> &seq,
                                                   const std::string &letters);

}  // namespace redlab

#endif  // REDLAB_PCP_H_
