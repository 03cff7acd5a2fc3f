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

#ifndef FAIRMC_FREQD_H_
#define FAIRMC_FREQD_H_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fairmc/instance.h"
#include "fairmc/matroid.h"
#include "fairmc/random.h"
#include "fairmc/rational.h"
#include "fairmc/solve_result.h"

namespace fairmc {

// lambda = ceil(log_{1+eps}(2 k* / eps)), computed exactly.
int BucketLambda(const Rational& eps, int original_budget);

// Degree-interval classifier for one (eps, k*) pair. For demand t and degree
// d it returns 0 when d >= t, alpha in [1, lambda] when
// t/(1+eps)^alpha <= d < t/(1+eps)^(alpha-1), and lambda+1 otherwise.
// Results are cached per demand value since demands repeat across runs.
class BucketingContext {
 public:
  BucketingContext(Rational eps, int original_budget);

  const Rational& eps() const { return eps_; }
  int original_budget() const { return original_budget_; }
  int lambda() const { return lambda_; }

  int Index(const Rational& demand, int degree);

 private:
  int Compute(const Rational& demand, int degree) const;

  Rational eps_;
  int original_budget_;
  int lambda_;
  std::unordered_map<Rational, std::vector<int>, RationalHash> cache_;
};

struct Bag {
  std::vector<int> index;        // one entry per color in BagPartition::colors
  std::vector<SetId> members;    // ascending
};

struct BagPartition {
  int lambda = 0;
  std::vector<ColorId> colors;   // live colors, ascending
  std::vector<Bag> bags;         // nonempty bags, lexicographic by index
};

BagPartition Bucketing(const CoverageInstance& inst, BucketingContext& ctx);
BagPartition Bucketing(const CoverageInstance& inst, const Rational& eps);

// (6 log2 k* / eps^2)^r, the analytic cap on the bag count (k* >= 2).
double BagCountBound(int original_budget, const Rational& eps, int colors);

// Randomized-branching distribution around `anchor`: mass 1/2 on the anchor
// and (1/2rd) * sum_j |N_j(w) n N_j(anchor)| / |N_j(anchor)| on every other
// live set w. Colors where the anchor has no neighbors contribute nothing.
struct BranchWeights {
  SetId anchor = -1;
  Rational anchor_mass{1, 2};
  std::vector<std::pair<SetId, Rational>> others;  // ascending SetId

  Rational Total() const;
  Rational MassOf(SetId v) const;
};

// d must be at least 1 and at least the maximum frequency of `inst`.
BranchWeights BranchDistribution(const CoverageInstance& inst, SetId anchor,
                                 int d);

// Draws v with probability mass(v) / Total(), exactly.
SetId SampleVertex(const BranchWeights& weights, Rng& rng);
SetId SampleVertex(const BranchWeights& weights, Seed seed);

// Adds u to the solution: colors u alone satisfies are removed with their
// elements, u and its neighbors are removed, other demands drop by
// |N_j(u)|, and the budget drops by one.
CoverageInstance PruneInstance(const CoverageInstance& inst, SetId u);

// One root-to-leaf randomized run; returns at most budget() distinct sets in
// selection order.
std::vector<SetId> PccdsOnce(const CoverageInstance& inst,
                             BucketingContext& ctx, Rng& rng);
std::vector<SetId> PccdsOnce(const CoverageInstance& inst,
                             const Rational& eps, Seed seed);

// Matroid-constrained run. Requires Rank(matroid) == inst.budget() (truncate
// first) and matroid ground set == set ids. The anchor is drawn uniformly from
// a maximal independent subset of the guessed bag, and the matroid is
// contracted on every selected set. Sets that became loops of the contracted
// matroid are dropped from the residual instance before each step.
std::vector<SetId> PccdsMatroidOnce(const CoverageInstance& inst,
                                    const MatroidOracle& matroid,
                                    BucketingContext& ctx, Rng& rng);
std::vector<SetId> PccdsMatroidOnce(const CoverageInstance& inst,
                                    const MatroidOracle& matroid,
                                    const Rational& eps, Seed seed);

struct SolveOptions {
  std::optional<int64_t> trials;  // nullopt: automatic schedule
  double repeat_constant = 1.0;
  int64_t trial_cap = 10'000'000;
};

struct TrialSchedule {
  int64_t count = 0;      // min(requested, cap)
  bool capped = false;
  double log_uncapped = 0;  // natural log of the uncapped automatic count
};

// ceil(c * ln(n+2) / q) with q = ((1/L) * eps' / (2rd))^k, evaluated in log
// space. `extra_factor` multiplies the count (k for the matroid variant).
TrialSchedule AutoTrials(int num_bags, int num_sets, int colors, int d, int k,
                         const Rational& inner_eps, const SolveOptions& options,
                         double extra_factor = 1.0);

// Independent runs with inner accuracy eps/3 and derived seeds; returns the
// first run whose coverage meets (1 - eps) t_j for every color.
SolveResult PccdsSolve(const CoverageInstance& inst, const Rational& eps,
                       const SolveOptions& options, Seed seed);

// Matroid variant: truncates to min(budget, rank) first and scales the
// automatic schedule by k. Every returned solution is independent in
// `matroid` (checked; a violation throws std::logic_error).
SolveResult PccdsMatroidSolve(const CoverageInstance& inst,
                              const MatroidOracle& matroid,
                              const Rational& eps, const SolveOptions& options,
                              Seed seed);

// |N_j(S')| >= (1-2eps) min(ref_j, t_j) - (eps k / k*) t_j for every live j.
bool InductionGuaranteeHolds(const CoverageInstance& inst,
                             const CoverageVector& achieved,
                             const CoverageVector& reference,
                             const Rational& eps);
// |N_j(S')| >= (1-3eps) t_j for every live j.
bool RescaledGuaranteeHolds(const CoverageInstance& inst,
                            const CoverageVector& achieved,
                            const Rational& eps);

}  // namespace fairmc

#endif  // FAIRMC_FREQD_H_
