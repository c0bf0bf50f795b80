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

#include "redlab/alphabet.h"

#include <sstream>

namespace redlab {

std::string BitString(const Word &w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(s == 0 ? '0' : '1');
  return out;
}

Word ParseBitString(const std::string &s) {
  Word out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw Error("not a binary word: '" + s + "'");
    }
    out.push_back(ch - '0');
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) {
  for (const auto &n : names) {
    if (Find(n)) throw Error("duplicate symbol name '" + n + "'");
    Add(n);
  }
}

Alphabet Alphabet::Binary() { return Alphabet({"0", "1"}); }

std::optional<Symbol> Alphabet::Find(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::Add(const std::string &name) {
  if (name.empty() || name == "-" || name.find_first_of(".# \t") != std::string::npos) {
    throw Error("invalid symbol name '" + name + "'");
  }
  if (auto found = Find(name)) return *found;
  const Symbol s = size();
  names_.push_back(name);
  index_.emplace(name, s);
  return s;
}

bool Alphabet::Compact() const {
  for (const auto &n : names_) {
    if (n.size() != 1) return false;
  }
  return true;
}

std::string Alphabet::Format(const Word &w) const {
  if (w.empty()) return "-";
  std::ostringstream out;
  const bool compact = Compact();
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out << '.';
    out << Name(w[i]);
  }
  return out.str();
}

std::optional<Word> Alphabet::Parse(const std::string &text) const {
  if (text == "-") return Word{};
  if (text.empty()) return std::nullopt;
  Word out;
  if (text.find('.') != std::string::npos) {
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, '.')) {
      auto s = Find(piece);
      if (!s) return std::nullopt;
      out.push_back(*s);
    }
    return out;
  }
  if (auto s = Find(text)) return Word{*s};
  for (char ch : text) {
    auto s = Find(std::string(1, ch));
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return out;
}

}  // namespace redlab
