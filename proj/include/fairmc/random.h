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

#ifndef FAIRMC_RANDOM_H_
#define FAIRMC_RANDOM_H_

#include <cstdint>
#include <random>

#include "fairmc/rational.h"

namespace fairmc {

using Seed = uint64_t;

// Seed for the index-th independent trial under `master`: a splitmix64
// finalizer applied to master + golden-ratio * (index + 1). Stable across
// platforms so runs are replayable from the printed master seed.
Seed DeriveSeed(Seed master, uint64_t index);

// Seeded generator. Only the raw mt19937_64 stream (which the standard pins
// bit-for-bit) is used; all distributions are implemented here so results do
// not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  uint64_t UniformBelow(uint64_t n);

  // True with probability exactly p, for 0 <= p <= 1.
  bool Bernoulli(const Rational& p);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformUnit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairmc

#endif  // FAIRMC_RANDOM_H_
