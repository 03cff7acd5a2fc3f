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

#ifndef FAIRMC_KDDFREE_H_
#define FAIRMC_KDDFREE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairmc/instance.h"
#include "fairmc/matroid.h"
#include "fairmc/random.h"
#include "fairmc/rational.h"
#include "fairmc/solve_result.h"

namespace fairmc {

// Colors with t_j <= 2 k^2 d / eps are small, the rest large.
struct ColorSplit {
  std::vector<ColorId> small;
  std::vector<ColorId> large;
};

ColorSplit SplitColors(const CoverageInstance& inst, const Rational& eps,
                       int k, int d);

// ceil(2 k^2 z d / eps) with z = number of small colors.
int LabelCount(const ColorSplit& split, const Rational& eps, int k, int d);

// Labels of the live elements of small colors; -1 elsewhere.
struct Labeling {
  int num_labels = 0;
  std::vector<int> label;  // indexed by ElemId

  // Live small-color elements in ascending id order.
  static std::vector<ElemId> SmallElements(const CoverageInstance& inst,
                                           const ColorSplit& split);
};

// i.i.d. uniform labels, drawn in ascending element order.
Labeling LabelCoding(const CoverageInstance& inst, const ColorSplit& split,
                     const Rational& eps, int k, int d, Rng& rng);
Labeling LabelCoding(const CoverageInstance& inst, const ColorSplit& split,
                     const Rational& eps, int k, int d, Seed seed);

// Labeling given by a function on the positions of SmallElements().
Labeling LabelingFromFunction(const CoverageInstance& inst,
                              const ColorSplit& split, int num_labels,
                              std::span<const int> function);

// Large-color degree class: 0 when degree <= 2kd/eps, otherwise the alpha
// with 2kd/eps (1+eps)^(alpha-1) < degree <= 2kd/eps (1+eps)^alpha.
int LargeDegreeClass(int degree, const Rational& eps, int k, int d);

struct KddBag {
  bool has_index = false;      // false: a pure label class A(gamma)
  std::vector<int> index;      // degree classes over split.large
  std::vector<int> gamma;      // sorted labels of N(v) restricted to small
  std::vector<SetId> members;  // ascending
};

// Realized label classes A(gamma) followed by the realized refinements
// A^gamma(v) (only when there are large colors), each group sorted by key.
std::vector<KddBag> KddBuckets(const CoverageInstance& inst,
                               const ColorSplit& split,
                               const Labeling& labeling, const Rational& eps,
                               int k, int d);

// {v : |N_j(v) n X| >= |X| / beta and |N_j(v)| >= d}, ascending.
std::vector<SetId> HighDegreeSet(const CoverageInstance& inst,
                                 std::span<const ElemId> x, ColorId j,
                                 const Rational& beta, int d);

// True when |ahd_size| <= (d-1)(2 beta)^(d-1), or when the bound does not
// apply because |X| / (2 beta) <= d.
bool HighDegreeBoundHolds(int64_t x_size, int64_t ahd_size,
                          const Rational& beta, int d);

enum class HashFamilyMode { kExhaustive, kRandomVerified };

// Functions [p] -> [q] such that every q-subset of [p] is mapped injectively
// by at least one member (verified by enumeration). Exhaustive mode needs
// p <= 12 and q <= 4. Throws SizeError when `max_functions` is exceeded.
std::vector<std::vector<int>> PerfectHashFamily(
    int p, int q, HashFamilyMode mode, Seed seed = 0,
    int64_t max_functions = 100'000);

// True when every q-subset of [p] is injective under some member.
bool IsPerfectHashFamily(const std::vector<std::vector<int>>& family, int p,
                         int q);

struct KddOptions {
  int d = 2;                     // the K_{d,d} parameter
  bool strict = true;            // verify K_{d,d}-freeness up front
  bool derandomize = false;      // perfect hash family instead of sampling
  // Use eps itself inside instead of eps / k; large colors then need only
  // (1 - k eps) t_j.
  bool raw_epsilon = false;
  int64_t labeling_cap = 200;    // cap on randomized labeling repetitions
  std::optional<int64_t> repetitions;  // explicit count instead of the formula
};

// Repetitions of the randomized driver:
// min(cap, ceil(e^min(2 k^3 k* d r / eps', ln cap))).
int64_t LabelingRepetitions(int k, int original_budget, int d, int colors,
                            const Rational& inner_eps, int64_t cap,
                            bool* capped = nullptr);

SolveResult KddPccds(const CoverageInstance& inst, const Rational& eps,
                     const KddOptions& options, Seed seed);

// Truncates to min(budget, rank), contracts on every branch and adds the
// whole maximal independent subset of each bag to the branching set.
// Returned solutions are independent in `matroid` (checked).
SolveResult KddPccdsMatroid(const CoverageInstance& inst,
                            const MatroidOracle& matroid, const Rational& eps,
                            const KddOptions& options, Seed seed);

}  // namespace fairmc

#endif  // FAIRMC_KDDFREE_H_
