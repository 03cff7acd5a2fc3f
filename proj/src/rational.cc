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

#include "fairmc/rational.h"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fairmc/errors.h"

namespace fairmc {
namespace {

__int128 Gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(__int128 v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

int64_t ParseInt(std::string_view text, std::string_view whole) {
  int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = FromWide(num, den);
}

Rational Rational::FromWide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(den);
  return r;
}

Rational Rational::Parse(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text, text));
  const int64_t n = ParseInt(text.substr(0, slash), text);
  const int64_t d = ParseInt(text.substr(slash + 1), text);
  if (d == 0) throw InputError("rational with zero denominator");
  return Rational(n, d);
}

int64_t Rational::Floor() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

int64_t Rational::Ceil() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  return FromWide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.den_ +
                       static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.den_ -
                       static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.num_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = FromWide(static_cast<__int128>(num_) * o.den_,
                   static_cast<__int128>(den_) * o.num_);
  return *this;
}

int64_t CheckedLcm(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  const __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (!FitsInt64(l)) throw std::overflow_error("lcm overflow");
  return static_cast<int64_t>(l < 0 ? -l : l);
}

}  // namespace fairmc
