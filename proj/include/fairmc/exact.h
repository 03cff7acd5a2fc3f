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

#ifndef FAIRMC_EXACT_H_
#define FAIRMC_EXACT_H_

#include <cstdint>
#include <vector>

#include "fairmc/instance.h"
#include "fairmc/matroid.h"

namespace fairmc {

// Ground truth from exhaustive enumeration.
//
// The reported solution maximizes min_j coverage_j / t_j over colors with
// positive demand; ties go to the lexicographically smallest sorted id list.
// For MaxSAT the ids are 1-based variables set to 1.
struct ExactResult {
  bool feasible = false;
  std::vector<int> best_solution;
  std::vector<int64_t> best_coverage;  // per color
  MinRatio optimum_min_ratio;
  int64_t subsets_enumerated = 0;
};

inline constexpr int64_t kDefaultExactBudget = 10'000'000;

// Number of subsets of size <= k of an n-set, saturating at INT64_MAX.
int64_t CountSubsetsUpTo(int n, int k);

// All subsets of at most budget() live sets. Throws SizeError when the count
// exceeds `budget`.
ExactResult ExactPccds(const CoverageInstance& inst,
                       int64_t budget = kDefaultExactBudget);

// As ExactPccds, restricted to subsets independent in `matroid`, whose
// ground set must be the set ids of `inst`.
ExactResult ExactPccdsMatroid(const CoverageInstance& inst,
                              const MatroidOracle& matroid,
                              int64_t budget = kDefaultExactBudget);

// All assignments of weight <= budget().
ExactResult ExactMaxSat(const CnfInstance& phi,
                        int64_t budget = kDefaultExactBudget);

}  // namespace fairmc

#endif  // FAIRMC_EXACT_H_
