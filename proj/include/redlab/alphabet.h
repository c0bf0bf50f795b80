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

#ifndef REDLAB_ALPHABET_H_
#define REDLAB_ALPHABET_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redlab/common.h"

namespace redlab {

// A finite alphabet with printable symbol names. Symbol i has name names()[i].
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // {"0", "1"}.
  static Alphabet Binary();

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &Name(Symbol s) const { return names_.at(s); }
  std::optional<Symbol> Find(const std::string &name) const;
  // Returns the existing symbol when the name is already present.
  Symbol Add(const std::string &name);

  // True when every name is a single character, so words print unseparated.
  bool Compact() const;

  // Words print as concatenated names when compact, dot-separated otherwise;
  // the empty word prints as "-".
  std::string Format(const Word &w) const;
  // Accepts "-" (empty), dot-separated names, a single name, or (for compact
  // alphabets) a run of single-character names.
  std::optional<Word> Parse(const std::string &text) const;

  bool operator==(const Alphabet &other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol> index_;
};

}  // namespace redlab

#endif  // REDLAB_ALPHABET_H_
