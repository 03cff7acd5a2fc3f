// Copyright 2026 The Authors.
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

#ifndef FAIRMC_RATIONAL_H_
#define FAIRMC_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace fairmc {

// Exact rational number with 64-bit numerator and positive denominator,
// always stored in lowest terms. Arithmetic is overflow-checked and throws
// std::overflow_error instead of wrapping; comparisons never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den);

  // Accepts "n", "-n", "n/d". Throws InputError on malformed text.
  static Rational Parse(std::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool IsInteger() const { return den_ == 1; }
  bool IsPositive() const { return num_ > 0; }
  int64_t Floor() const;
  int64_t Ceil() const;
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  static Rational FromWide(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
};

struct RationalHash {
  size_t operator()(const Rational& r) const {
    return std::hash<int64_t>()(r.num()) * 1000003u ^
           std::hash<int64_t>()(r.den());
  }
};

// Least common multiple with overflow check.
int64_t CheckedLcm(int64_t a, int64_t b);

}  // namespace fairmc

#endif  // FAIRMC_RATIONAL_H_
