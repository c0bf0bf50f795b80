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
// Encodes a defense system as a pair of epsilon-free finite substitutions
// phi, xi over {0, 1, b, c} that agree on b{0,1}*c exactly when the system
// has no critical word.
//
// Carrier words, for s lines:
//   w       = 0^1 1 0^2 1 ... 0^(s+1) 1
//   alpha_k = the first k blocks of w,  beta_k = the remaining blocks
//   F(k,z,j) = beta_k w^(z+1) alpha_j,  F(k,z) = beta_k w^(z+2)
// Block families, with D_a = {(k,z,j) : rule (k,a,j,z,p) with p > 0}:
//   T_a = {F(k,z,j)},  C_a = {F(k,z)},  M = {w},  B = {ww},
//   N = {beta_k},  S = {alpha_1}
// Images:
//   xi(b) = S | MN,  phi(b) = xi(b) | M,  xi(c) = phi(c) = M | NM,
//   xi(a) = phi(a) = B | T_a | N T_a | C_a N | N C_a N.

#ifndef REDLAB_SUBST_REDUCTION_H_
#define REDLAB_SUBST_REDUCTION_H_

#include <array>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "redlab/finite_substitution.h"
#include "redlab/nds.h"
#include "redlab/nfa.h"

namespace redlab {

struct WordSystem {
  int s = 0;
  Word w;
  std::vector<Word> alpha;  // alpha[k - 1] = alpha_k
  std::vector<Word> beta;   // beta[k - 1] = beta_k

  const Word &Alpha(int k) const { return alpha.at(static_cast<size_t>(k - 1)); }
  const Word &Beta(int k) const { return beta.at(static_cast<size_t>(k - 1)); }
  Word WPower(int m) const { return Power(w, m); }
  // beta_k w^(z+1) alpha_j.
  Word F(int k, int z, int j) const;
  // beta_k w^(z+2).
  Word F(int k, int z) const;
};

WordSystem BuildWords(int s);

// (k, z, j) triples.
using RuleTriple = std::tuple<int, int, int>;

struct BlockFamilies {
  std::array<std::set<RuleTriple>, 2> d;
  std::array<std::set<Word>, 2> t;
  std::array<std::set<Word>, 2> c;
  std::set<Word> c_all, m, b, n, s;
};

BlockFamilies BuildBlockFamilies(const Nds &nds, const WordSystem &words);

// Source alphabet {0, 1, b, c}: the attack symbols keep their values.
inline constexpr Symbol kLetterB = 2;
inline constexpr Symbol kLetterC = 3;
Alphabet SubstitutionSource();

struct SubstitutionPair {
  WordSystem words;
  BlockFamilies blocks;
  FiniteSubstitution phi;
  FiniteSubstitution xi;
};

inline constexpr size_t kDefaultImageCap = 100000;

// Throws CapExceeded when any letter image would exceed `image_cap` words.
SubstitutionPair BuildSubstitutions(const Nds &nds,
                                    size_t image_cap = kDefaultImageCap);

// b{0,1}*c over SubstitutionSource().
Nfa LanguageBC();

struct EquivalenceVerdict {
  bool equal = false;
  // Shortlex-minimal word of phi(L) \ xi(L).
  std::optional<Word> counterexample;
  // xi(L) is included in phi(L); always expected to hold.
  bool xi_in_phi = false;
  size_t phi_states = 0, xi_states = 0;
  // Bounded search for a critical word of the system itself.
  int probe_len = 0;
  std::optional<Word> probe_critical;
};

EquivalenceVerdict DecideEquivalence(const Nds &nds, int probe_len = 6,
                                     size_t image_cap = kDefaultImageCap);

struct CriticalWitnessReport {
  Word critical;
  Word witness;  // w^(2n+2)
  bool in_phi = false;
  // (w)(ww)...(ww)(w), one factor per letter of b x' c.
  std::vector<Word> phi_factorization;
  bool in_xi = false;
  // Partial xi-products examined while deciding in_xi.
  size_t products_examined = 0;
  // Every partial product that is a prefix of the witness had the form
  // w^r alpha_j.
  bool prefix_discipline = true;
};

// Throws unless `critical` is a critical word of the system.
CriticalWitnessReport CriticalWitness(const Nds &nds, const Word &critical,
                                      size_t image_cap = kDefaultImageCap);

}  // namespace redlab

#endif  // REDLAB_SUBST_REDUCTION_H_
