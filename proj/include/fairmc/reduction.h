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

#ifndef FAIRMC_REDUCTION_H_
#define FAIRMC_REDUCTION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fairmc/instance.h"
#include "fairmc/random.h"
#include "fairmc/rational.h"

namespace fairmc {

// Each variable is 1 with probability p, independently, in variable order.
Assignment RandomAssignment(const CnfInstance& phi, const Rational& p,
                            Rng& rng);
Assignment RandomAssignment(const CnfInstance& phi, const Rational& p,
                            Seed seed);

// eps / (2r).
Rational DefaultTrueProbability(const CnfInstance& phi, const Rational& eps);

struct ReductionOutput {
  CoverageInstance cov;
  Assignment seed_assignment;
  std::vector<int> var_of_set;          // SetId -> 1-based variable
  std::vector<int> clause_of_element;   // ElemId -> clause index
  std::vector<int64_t> negative_counts; // per color
};

// Clauses with a true negative literal under the seed assignment are set
// aside; the rest become elements, keeping only their positive literals of
// true variables. Each remaining variable becomes a set. Demands become
// t_i - |N_i| / (1 - eps); nonpositive demands are kept as they are.
// `p` defaults to eps / (2r).
ReductionOutput ReduceInstance(const CnfInstance& phi, const Rational& eps,
                               Seed seed,
                               std::optional<Rational> p = std::nullopt);
// Same with an explicit seed assignment.
ReductionOutput ReduceWithAssignment(const CnfInstance& phi,
                                     const Rational& eps,
                                     const Assignment& seed_assignment);

// sigma(x) = 1 exactly when the set of x was chosen.
Assignment LiftSolution(const CnfInstance& phi, const ReductionOutput& red,
                        std::span<const SetId> chosen);

// Returns a set of at most cov.budget() sets, or nullopt for "none".
using CoverageSolver = std::function<std::optional<std::vector<SetId>>(
    const CoverageInstance& cov, Seed seed)>;

// Exhaustive solver returning a max-min-ratio set.
CoverageSolver ExactCoverageSolver(int64_t enumeration_budget = 10'000'000);

// ceil(4 (2r / eps)^k).
int64_t AutoReductionTrials(const CnfInstance& phi, const Rational& eps);

struct ReduceSolveResult {
  bool has_assignment = false;
  Assignment best;
  std::vector<int64_t> satisfied;  // per color, for `best`
  MinRatio ratio;                  // min_i satisfied_i / t_i
  bool meets_relaxed = false;      // satisfied_i >= (1 - eps) t_i for all i
  int64_t rounds = 0;
  int64_t empty_rounds = 0;        // solver answered "none"
  int64_t failed_rounds = 0;       // solver threw
};

// `trials` rounds of reduce, solve and lift with seeds DeriveSeed(seed, i);
// keeps the lifted assignment with the largest ratio, then fewest true
// variables, then earliest round.
ReduceSolveResult ReduceAndSolve(const CnfInstance& phi, const Rational& eps,
                                 const CoverageSolver& solver, int64_t trials,
                                 Seed seed,
                                 std::optional<Rational> p = std::nullopt);

}  // namespace fairmc

#endif  // FAIRMC_REDUCTION_H_
