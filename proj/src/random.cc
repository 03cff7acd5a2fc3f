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

#include "fairmc/random.h"

#include <stdexcept>

#include "fairmc/errors.h"

namespace fairmc {

Seed DeriveSeed(Seed master, uint64_t index) {
  uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::UniformBelow(uint64_t n) {
  if (n == 0) throw InputError("UniformBelow(0)");
  // Rejection keeps the result exactly uniform.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % n;
}

bool Rng::Bernoulli(const Rational& p) {
  if (p < Rational(0) || p > Rational(1)) {
    throw InputError("Bernoulli probability outside [0,1]: " + p.ToString());
  }
  return static_cast<int64_t>(UniformBelow(static_cast<uint64_t>(p.den()))) <
         p.num();
}

double Rng::UniformUnit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace fairmc
