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
// Shared vocabulary: symbols, words, and the error hierarchy.

#ifndef REDLAB_COMMON_H_
#define REDLAB_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace redlab {

// Symbols are dense indices into an alphabet; words are symbol sequences.
using Symbol = int;
using Word = std::vector<Symbol>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction would exceed one of the configurable size caps.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Raised by the text-format readers; carries the source location.
class ParseError : public Error {
 public:
  ParseError(const std::string &source, int line, const std::string &message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(source),
        line_(line) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Concatenation helpers used all over the constructions.
inline Word Concat(const Word &a, const Word &b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline void Append(Word &dst, const Word &src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

inline Word Power(const Word &w, int times) {
  Word out;
  out.reserve(w.size() * static_cast<size_t>(times < 0 ? 0 : times));
  for (int i = 0; i < times; ++i) Append(out, w);
  return out;
}

inline bool IsPrefix(const Word &prefix, const Word &word) {
  if (prefix.size() > word.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] != word[i]) return false;
  }
  return true;
}

// Shortlex order: shorter first, then lexicographic.
inline bool ShortlexLess(const Word &a, const Word &b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Binary words (over symbols 0 and 1) to and from "0101" strings.
std::string BitString(const Word &w);
Word ParseBitString(const std::string &s);

}  // namespace redlab

#endif  // REDLAB_COMMON_H_
