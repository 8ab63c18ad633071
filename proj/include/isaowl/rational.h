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

#ifndef ISAOWL_RATIONAL_H_
#define ISAOWL_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace isaowl {

// Exact non-negative-denominator fraction in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t num, int64_t den = 1);  // NOLINT: implicit from integers

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Fixed-point rendering with round-half-up, e.g. 1511/1537 -> "0.9831".
  std::string ToDecimal(int places = 4) const;
  // "num/den", or just "num" for integers.
  std::string ToString() const;

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);
  friend bool operator==(const Rational &a, const Rational &b) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace isaowl

#endif  // ISAOWL_RATIONAL_H_
