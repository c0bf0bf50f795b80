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

#ifndef REDLAB_RATIONAL_H_
#define REDLAB_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace redlab {

// Exact fraction num/den in lowest terms with den > 0. Arithmetic throws
// redlab::Error on 64-bit overflow instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool IsZero() const { return num_ == 0; }

  Rational operator+(const Rational &o) const;
  Rational operator-(const Rational &o) const;
  Rational operator*(const Rational &o) const;
  Rational operator/(const Rational &o) const;
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }

  friend bool operator==(const Rational &, const Rational &) = default;
  std::strong_ordering operator<=>(const Rational &o) const;

  // "num/den", or "num" when den == 1.
  std::string ToString() const;
  // Accepts "num/den" or "num".
  static std::optional<Rational> Parse(const std::string &text);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace redlab

#endif  // REDLAB_RATIONAL_H_
