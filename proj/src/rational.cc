// Copyright 2026 The isaowl Authors.
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

#include "isaowl/rational.h"

#include <numeric>
#include <stdexcept>

namespace isaowl {

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::ToDecimal(int places) const {
  int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  bool negative = num_ < 0;
  __int128 n = negative ? -static_cast<__int128>(num_) : num_;
  __int128 scaled = (n * scale * 2 + den_) / (2 * static_cast<__int128>(den_));
  int64_t whole = static_cast<int64_t>(scaled / scale);
  int64_t frac = static_cast<int64_t>(scaled % scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += "." + std::string(places - digits.size(), '0') + digits;
  }
  return out;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational &a, const Rational &b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace isaowl
