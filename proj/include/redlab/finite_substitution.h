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

#ifndef REDLAB_FINITE_SUBSTITUTION_H_
#define REDLAB_FINITE_SUBSTITUTION_H_

#include <set>
#include <vector>

#include "redlab/alphabet.h"
#include "redlab/nfa.h"

namespace redlab {

// Letter -> finite nonempty set of nonempty target words. Extended to words
// homomorphically by Image().
class FiniteSubstitution {
 public:
  FiniteSubstitution(Alphabet source, Alphabet target);

  const Alphabet &source() const { return source_; }
  const Alphabet &target() const { return target_; }

  // Rejects the empty word (substitutions here are epsilon-free).
  void AddImage(Symbol letter, const Word &image);
  const std::set<Word> &Images(Symbol letter) const { return images_.at(letter); }
  size_t TotalImages() const;

  // Throws unless every source letter has at least one image.
  void Validate() const;

  // The finite set sub(w). Exponential in |w|; intended for small words.
  std::set<Word> Image(const Word &w) const;

  bool operator==(const FiniteSubstitution &other) const = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<std::set<Word>> images_;
};

// Automaton for the union of sub(w) over w in L(lang): every arc is replaced
// by one fresh chain per image word between the arc's endpoints.
Nfa ApplySubstitution(const FiniteSubstitution &sub, const Nfa &lang);

}  // namespace redlab

#endif  // REDLAB_FINITE_SUBSTITUTION_H_
