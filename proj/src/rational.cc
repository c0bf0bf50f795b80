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

#include "redlab/rational.h"

#include <charconv>
#include <numeric>

#include "redlab/common.h"

namespace redlab {

namespace {

int64_t Mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("rational overflow");
  return r;
}

int64_t Add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("rational overflow");
  return r;
}

std::optional<int64_t> ParseInt(std::string_view s) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = Mul(num, -1);
    den = Mul(den, -1);
  }
  const int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational &o) const {
  const int64_t g = std::gcd(den_, o.den_);
  const int64_t l = Mul(den_ / g, o.den_);
  return Rational(Add(Mul(num_, l / den_), Mul(o.num_, l / o.den_)), l);
}

Rational Rational::operator-(const Rational &o) const {
  return *this + Rational(Mul(o.num_, -1), o.den_);
}

Rational Rational::operator*(const Rational &o) const {
  // Cross-reduce first to keep intermediates small.
  const int64_t g1 = std::gcd(num_, o.den_);
  const int64_t g2 = std::gcd(o.num_, den_);
  return Rational(Mul(num_ / g1, o.num_ / g2), Mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational &o) const {
  if (o.num_ == 0) throw Error("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

namespace {
__extension__ using Int128 = __int128;
}  // namespace

std::strong_ordering Rational::operator<=>(const Rational &o) const {
  const Int128 lhs = static_cast<Int128>(num_) * o.den_;
  const Int128 rhs = static_cast<Int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::Parse(const std::string &text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto v = ParseInt(text);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  auto n = ParseInt(std::string_view(text).substr(0, slash));
  auto d = ParseInt(std::string_view(text).substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace redlab
