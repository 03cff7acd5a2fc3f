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

#include "fairmc/exact.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "fairmc/errors.h"

namespace fairmc {
namespace {

// Visits every subset of {0..n-1} of size <= k in order of size, then
// lexicographically. The callback receives indices into the universe.
void ForEachSubsetUpTo(int n, int k,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  for (int size = 0; size <= std::min(n, k); ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      fn(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

struct Incumbent {
  bool has = false;
  std::vector<int> solution;
  std::vector<int64_t> coverage;
  MinRatio ratio;

  void Offer(const std::vector<int>& candidate,
             const std::vector<int64_t>& cov, const MinRatio& r) {
    if (!has || r > ratio || (r == ratio && candidate < solution)) {
      has = true;
      solution = candidate;
      coverage = cov;
      ratio = r;
    }
  }
};

void CheckBudget(int n, int k, int64_t budget) {
  const int64_t count = CountSubsetsUpTo(n, k);
  if (count > budget) {
    throw SizeError("exhaustive search needs " + std::to_string(count) +
                    " subsets, budget is " + std::to_string(budget));
  }
}

ExactResult SolveCoverage(const CoverageInstance& inst,
                          const MatroidOracle* matroid, int64_t budget) {
  const std::vector<SetId>& sets = inst.live_sets();
  const int n = static_cast<int>(sets.size());
  const int k = inst.budget();
  CheckBudget(n, k, budget);
  if (matroid && matroid->ground_size() != inst.num_sets()) {
    throw InputError("matroid ground set does not match the set ids");
  }
  Incumbent best;
  ExactResult result;
  std::vector<SetId> chosen;
  ForEachSubsetUpTo(n, k, [&](const std::vector<int>& idx) {
    ++result.subsets_enumerated;
    chosen.clear();
    for (int i : idx) chosen.push_back(sets[i]);
    if (matroid && !matroid->IsIndependent(chosen)) return;
    const CoverageVector cov = inst.Coverage(chosen);
    best.Offer(chosen, cov.per_color, inst.CoverageRatio(cov));
  });
  result.best_solution = best.solution;
  result.best_coverage = best.coverage;
  result.optimum_min_ratio = best.ratio;
  CoverageVector cov{best.coverage};
  result.feasible = inst.MeetsDemands(cov, Rational(1));
  return result;
}

}  // namespace

int64_t CountSubsetsUpTo(int n, int k) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t total = 0;
  __int128 binom = 1;  // C(n, size)
  for (int size = 0; size <= std::min(n, k); ++size) {
    if (size > 0) binom = binom * (n - size + 1) / size;
    if (binom > kMax - total) return kMax;
    total += static_cast<int64_t>(binom);
  }
  return total;
}

ExactResult ExactPccds(const CoverageInstance& inst, int64_t budget) {
  return SolveCoverage(inst, nullptr, budget);
}

ExactResult ExactPccdsMatroid(const CoverageInstance& inst,
                              const MatroidOracle& matroid, int64_t budget) {
  return SolveCoverage(inst, &matroid, budget);
}

ExactResult ExactMaxSat(const CnfInstance& phi, int64_t budget) {
  const int n = phi.num_vars();
  const int k = phi.budget();
  CheckBudget(n, k, budget);
  Incumbent best;
  ExactResult result;
  Assignment assignment;
  std::vector<int> vars;
  ForEachSubsetUpTo(n, k, [&](const std::vector<int>& idx) {
    ++result.subsets_enumerated;
    assignment.values.assign(n, 0);
    vars.clear();
    for (int i : idx) {
      assignment.values[i] = 1;
      vars.push_back(i + 1);
    }
    const std::vector<int64_t> counts = phi.SatisfiedCounts(assignment);
    best.Offer(vars, counts, phi.SatisfactionRatio(counts));
  });
  result.best_solution = best.solution;
  result.best_coverage = best.coverage;
  result.optimum_min_ratio = best.ratio;
  result.feasible = phi.MeetsDemands(best.coverage, Rational(1));
  return result;
}

}  // namespace fairmc
