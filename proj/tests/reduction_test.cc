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


#include "fairmc/reduction.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fairmc/errors.h"
#include "fairmc/exact.h"
#include "fairmc/generate.h"
#include "oracles.h"

namespace fairmc {
namespace {

Assignment Values(std::vector<uint8_t> v) {
  Assignment a;
  a.values = std::move(v);
  return a;
}

CnfInstance RandomCnf(std::mt19937_64& gen, int n, int m, int width) {
  GeneratorParams p;
  p.num_sets = n;
  p.num_elements = m;
  p.clause_width = width;
  p.num_colors = 2;
  p.budget = 2;
  return GenerateCnf(p, gen()).formula;
}

TEST(RandomAssignmentTest, DefaultProbability) {
  const CnfInstance phi = CnfInstance::Create(1, {{1}}, {0}, {Rational(1)}, 1);
  EXPECT_EQ(DefaultTrueProbability(phi, Rational(1, 2)), Rational(1, 4));
}

TEST(RandomAssignmentTest, SeededAndCalibrated) {
  std::mt19937_64 gen(51);
  const CnfInstance phi = RandomCnf(gen, 6, 8, 3);
  EXPECT_EQ(RandomAssignment(phi, Rational(1, 4), 9),
            RandomAssignment(phi, Rational(1, 4), 9));
  EXPECT_THROW(RandomAssignment(phi, Rational(0), 9), InputError);
  const Rational p(1, 4);
  Rng rng(52);
  const int n = 100000;
  std::vector<int> ones(phi.num_vars(), 0);
  for (int i = 0; i < n; ++i) {
    const Assignment a = RandomAssignment(phi, p, rng);
    for (int v = 0; v < phi.num_vars(); ++v) ones[v] += a.values[v];
  }
  const double sigma = std::sqrt(0.25 * 0.75 / n);
  for (int c : ones) EXPECT_NEAR(static_cast<double>(c) / n, 0.25, 3 * sigma);
}

TEST(ReduceTest, NegativeClauseLeavesEmptyUniverse) {
  const CnfInstance phi =
      CnfInstance::Create(1, {{-1}}, {0}, {Rational(3)}, 1);
  const ReductionOutput red =
      ReduceWithAssignment(phi, Rational(1, 2), Values({0}));
  EXPECT_EQ(red.negative_counts, (std::vector<int64_t>{1}));
  EXPECT_EQ(red.cov.num_elements(), 0);
  EXPECT_EQ(red.cov.num_sets(), 0);
  EXPECT_EQ(red.cov.demand(0), Rational(1));  // 3 - 1 / (1/2)
}

TEST(ReduceTest, MonotoneFormulaUnderAllTrueIsTheEncoding) {
  const CnfInstance phi = CnfInstance::Create(
      4, {{1, 2}, {3}, {2, 4}, {1, 4}, {2}}, {0, 0, 1, 1, 1},
      {Rational(2), Rational(2)}, 2);
  const ReductionOutput red =
      ReduceWithAssignment(phi, Rational(1, 2), Values({1, 1, 1, 1}));
  const CoverageInstance enc = phi.MonotoneEncoding();
  EXPECT_EQ(red.negative_counts, (std::vector<int64_t>{0, 0}));
  EXPECT_EQ(red.cov.num_elements(), phi.num_clauses());
  EXPECT_EQ(red.var_of_set, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(red.cov.demands(), phi.demands());
  for (uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<SetId> s;
    for (int v = 0; v < 4; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    EXPECT_EQ(red.cov.Coverage(s), enc.Coverage(s));
  }
  EXPECT_EQ(ExactPccds(red.cov).optimum_min_ratio,
            ExactPccds(enc).optimum_min_ratio);
}

TEST(ReduceTest, SurvivorsHoldOnlyTruePositiveLiterals) {
  std::mt19937_64 gen(53);
  for (int i = 0; i < 200; ++i) {
    const CnfInstance phi = RandomCnf(gen, 8, 12, 3);
    const ReductionOutput red =
        ReduceInstance(phi, Rational(1, 2), gen(), Rational(1, 2));
    const auto& psi = red.seed_assignment.values;
    std::vector<int64_t> neg(phi.num_colors(), 0);
    std::vector<char> survived(phi.num_clauses(), 0);
    for (ElemId e = 0; e < red.cov.num_elements(); ++e) {
      const int c = red.clause_of_element[e];
      survived[c] = 1;
      EXPECT_EQ(red.cov.color(e), phi.clause_color(c));
      std::vector<int> expect;
      for (Literal lit : phi.clauses()[c]) {
        EXPECT_FALSE(lit < 0 && psi[-lit - 1] == 0);
        if (lit > 0 && psi[lit - 1] == 1) expect.push_back(lit);
      }
      std::vector<int> got;
      for (SetId v : red.cov.Containing(e)) got.push_back(red.var_of_set[v]);
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(got, expect);
    }
    for (int c = 0; c < phi.num_clauses(); ++c) {
      if (!survived[c]) ++neg[phi.clause_color(c)];
    }
    EXPECT_EQ(red.negative_counts, neg);
    for (int x : red.var_of_set) EXPECT_EQ(psi[x - 1], 1);
  }
}

TEST(LiftTest, EmptyAndFullChoices) {
  std::mt19937_64 gen(54);
  const CnfInstance phi = RandomCnf(gen, 6, 10, 2);
  const ReductionOutput red =
      ReduceInstance(phi, Rational(1, 2), 3, Rational(2, 3));
  EXPECT_EQ(LiftSolution(phi, red, {}).Weight(), 0);
  std::vector<SetId> all;
  for (SetId v = 0; v < red.cov.num_sets(); ++v) all.push_back(v);
  const Assignment lifted = LiftSolution(phi, red, all);
  for (int x = 1; x <= phi.num_vars(); ++x) {
    const bool surviving = std::count(red.var_of_set.begin(),
                                      red.var_of_set.end(), x) > 0;
    EXPECT_EQ(lifted.values[x - 1], surviving ? 1 : 0);
  }
  const std::vector<SetId> bad = {red.cov.num_sets()};
  EXPECT_THROW(LiftSolution(phi, red, bad), InputError);
}

TEST(LiftTest, SatisfiedCountsDominateCoveragePlusNegatives) {
  std::mt19937_64 gen(55);
  for (int i = 0; i < 200; ++i) {
    const CnfInstance phi = RandomCnf(gen, 7, 10, 3);
    const ReductionOutput red =
        ReduceInstance(phi, Rational(1, 2), gen(), Rational(1, 2));
    std::vector<SetId> chosen;
    for (SetId v = 0; v < red.cov.num_sets(); ++v) {
      if (gen() % 2) chosen.push_back(v);
    }
    const std::vector<int64_t> sat =
        phi.SatisfiedCounts(LiftSolution(phi, red, chosen));
    const CoverageVector cov = red.cov.Coverage(chosen);
    for (int c = 0; c < phi.num_colors(); ++c) {
      EXPECT_GE(sat[c], cov.per_color[c] + red.negative_counts[c]);
    }
  }
}

TEST(ReduceAndSolveTest, TrialFormulaAndPreconditions) {
  const CnfInstance phi =
      CnfInstance::Create(3, {{1, 2}, {-3}}, {0, 0}, {Rational(2)}, 2);
  EXPECT_EQ(AutoReductionTrials(phi, Rational(1, 2)), 64);
  EXPECT_THROW(ReduceAndSolve(phi, Rational(1, 2), ExactCoverageSolver(), 0, 1),
               InputError);
}

TEST(ReduceAndSolveTest, MonotoneSingleRoundMatchesEncoding) {
  // With p close to one, the all-true round is the likely one; any round
  // lifts to an assignment no better than the encoding optimum.
  const CnfInstance phi = CnfInstance::Create(
      4, {{1, 2}, {3}, {2, 4}, {1, 4}}, {0, 0, 1, 1},
      {Rational(2), Rational(2)}, 2);
  const ExactResult direct = ExactPccds(phi.MonotoneEncoding());
  for (Seed s = 0; s < 20; ++s) {
    const ReduceSolveResult r = ReduceAndSolve(
        phi, Rational(1, 2), ExactCoverageSolver(), 1, s, Rational(99, 100));
    ASSERT_TRUE(r.has_assignment);
    EXPECT_LE(r.ratio, direct.optimum_min_ratio);
    const ReductionOutput red =
        ReduceInstance(phi, Rational(1, 2), DeriveSeed(s, 0),
                       Rational(99, 100));
    if (red.seed_assignment.Weight() == 4) {
      EXPECT_EQ(r.ratio, direct.optimum_min_ratio);
    }
  }
}

TEST(ReduceAndSolveTest, YesInstanceSucceedsOftenEnough) {
  // k = 2, r = 1, eps = 1/2, trials = ceil(4 (2r/eps)^k) = 64.
  std::mt19937_64 gen(56);
  GeneratorParams p;
  p.num_sets = 8;
  p.num_elements = 10;
  p.num_colors = 1;
  p.budget = 2;
  const CnfInstance phi = GenerateCnf(p, 57).formula;
  ASSERT_TRUE(ExactMaxSat(phi).feasible);
  const int64_t trials = AutoReductionTrials(phi, Rational(1, 2));
  ASSERT_EQ(trials, 64);
  int success = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const ReduceSolveResult r = ReduceAndSolve(
        phi, Rational(1, 2), ExactCoverageSolver(), trials, gen());
    success += r.meets_relaxed ? 1 : 0;
  }
  EXPECT_GE(success, 25);
}

}  // namespace
}  // namespace fairmc
