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

#include "redlab/finite_substitution.h"

namespace redlab {

FiniteSubstitution::FiniteSubstitution(Alphabet source, Alphabet target)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(source_.size()) {}

void FiniteSubstitution::AddImage(Symbol letter, const Word &image) {
  if (letter < 0 || letter >= source_.size()) {
    throw Error("substitution letter out of range");
  }
  if (image.empty()) {
    throw Error("substitution image of '" + source_.Name(letter) +
                "' contains the empty word");
  }
  for (Symbol s : image) {
    if (s < 0 || s >= target_.size()) {
      throw Error("substitution image uses a symbol outside the target");
    }
  }
  images_[letter].insert(image);
}

size_t FiniteSubstitution::TotalImages() const {
  size_t n = 0;
  for (const auto &s : images_) n += s.size();
  return n;
}

void FiniteSubstitution::Validate() const {
  for (Symbol a = 0; a < source_.size(); ++a) {
    if (images_[a].empty()) {
      throw Error("substitution has no image for '" + source_.Name(a) + "'");
    }
  }
}

std::set<Word> FiniteSubstitution::Image(const Word &w) const {
  std::set<Word> cur{Word{}};
  for (Symbol a : w) {
    std::set<Word> next;
    for (const auto &prefix : cur) {
      for (const auto &img : images_.at(a)) next.insert(Concat(prefix, img));
    }
    cur = std::move(next);
  }
  return cur;
}

Nfa ApplySubstitution(const FiniteSubstitution &sub, const Nfa &lang) {
  if (lang.alphabet_size() > sub.source().size()) {
    throw Error("substitution does not cover the language alphabet");
  }
  NfaBuilder b(sub.target().size());
  for (int q = 0; q < lang.num_states(); ++q) {
    b.AddState();
    b.SetFinal(q, lang.IsFinal(q));
  }
  for (int q : lang.initial()) b.AddInitial(q);
  for (int q = 0; q < lang.num_states(); ++q) {
    for (const auto &arc : lang.Arcs(q)) {
      for (const auto &img : sub.Images(arc.symbol)) b.AddChain(q, img, arc.to);
    }
  }
  return b.Build();
}

}  // namespace redlab
