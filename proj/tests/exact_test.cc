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

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <vector>

#include "fairmc/errors.h"
#include "fairmc/generate.h"
#include "fairmc/matroid.h"
#include "oracles.h"

namespace fairmc {
namespace {

using Desc = CoverageInstance::Description;

std::optional<oracle::BigRational> AsBig(const MinRatio& r) {
  if (r.unbounded) return std::nullopt;
  return oracle::Big(r.value);
}

Desc Path() {
  Desc d;
  d.num_elements = 3;
  d.colors = {0, 0, 0};
  d.sets = {{0, 1}, {1, 2}};
  d.demands = {Rational(2)};
  d.budget = 1;
  return d;
}

TEST(ExactTest, PathExamplePicksLowestSet) {
  const ExactResult r = ExactPccds(CoverageInstance::Create(Path()));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.best_solution, (std::vector<int>{0}));
  EXPECT_EQ(r.best_coverage, (std::vector<int64_t>{2}));
  EXPECT_EQ(r.optimum_min_ratio, MinRatio::Of(Rational(1)));
  EXPECT_EQ(r.subsets_enumerated, 3);
}

TEST(ExactTest, FullFamilyAndInfeasibleDemand) {
  Desc d = Path();
  d.budget = 2;
  d.demands = {Rational(3)};
  EXPECT_TRUE(ExactPccds(CoverageInstance::Create(d)).feasible);
  d.demands = {Rational(4)};
  const ExactResult r = ExactPccds(CoverageInstance::Create(d));
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.optimum_min_ratio, MinRatio::Of(Rational(3, 4)));
}

TEST(ExactTest, EnumerationBudgetIsEnforced) {
  EXPECT_EQ(CountSubsetsUpTo(6, 3), 1 + 6 + 15 + 20);
  EXPECT_EQ(CountSubsetsUpTo(3, 5), 8);
  Desc d = Path();
  EXPECT_THROW(ExactPccds(CoverageInstance::Create(d), 2), SizeError);
}

TEST(ExactTest, MatchesBitmaskOracle) {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(gen() % 8);
    const int k = 1 + static_cast<int>(gen() % 3);
    const Desc d = oracle::RandomDesc(gen, n, 3 + gen() % 8, 2, 3, k);
    const ExactResult r = ExactPccds(CoverageInstance::Create(d));
    const oracle::BruteResult b = oracle::BrutePccds(d, d.budget);
    EXPECT_EQ(r.feasible, b.feasible);
    EXPECT_EQ(AsBig(r.optimum_min_ratio), b.ratio);
    EXPECT_EQ(oracle::MinRatio(oracle::Coverage(d, r.best_solution),
                               d.demands),
              b.ratio);
    EXPECT_LE(static_cast<int>(r.best_solution.size()), d.budget);
  }
}

TEST(ExactTest, MatroidVariant) {
  Desc d = Path();
  d.budget = 2;
  d.demands = {Rational(3)};
  const CoverageInstance inst = CoverageInstance::Create(d);
  const ExactResult u =
      ExactPccdsMatroid(inst, MatroidOracle::Uniform(2, 2));
  EXPECT_EQ(u.optimum_min_ratio, ExactPccds(inst).optimum_min_ratio);
  const MatroidOracle forbid =
      MatroidOracle::Partition(2, {{0, 1}}, {1});
  EXPECT_FALSE(ExactPccdsMatroid(inst, forbid).feasible);
  EXPECT_TRUE(ExactPccds(inst).feasible);

  std::mt19937_64 gen(22);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(gen() % 6);
    const Desc rd = oracle::RandomDesc(gen, n, 6, 2, 3, 3);
    std::vector<std::vector<int64_t>> cols(n, std::vector<int64_t>(3));
    for (auto& c : cols) {
      for (auto& x : c) x = static_cast<int64_t>(gen() % 2);
    }
    const MatroidOracle m = MatroidOracle::Linear(2, cols);
    const ExactResult r = ExactPccdsMatroid(CoverageInstance::Create(rd), m);
    const oracle::BruteResult b = oracle::BrutePccds(
        rd, rd.budget, [&](const std::vector<int>& s) {
          return oracle::RankModP(2, cols, s) == static_cast<int>(s.size());
        });
    EXPECT_EQ(r.feasible, b.feasible);
    EXPECT_EQ(AsBig(r.optimum_min_ratio), b.ratio);
    EXPECT_TRUE(m.IsIndependent(r.best_solution));
  }
}

TEST(ExactMaxSatTest, NegativeClauseNeedsNoTrueVariable) {
  const CnfInstance phi =
      CnfInstance::Create(1, {{-1}}, {0}, {Rational(1)}, 0);
  const ExactResult r = ExactMaxSat(phi);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(r.best_solution.empty());
}

TEST(ExactMaxSatTest, MatchesTruthTable) {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 100; ++i) {
    GeneratorParams p;
    p.num_sets = 2 + static_cast<int>(gen() % 9);
    p.num_elements = 3 + static_cast<int>(gen() % 10);
    p.num_colors = 1 + static_cast<int>(gen() % 2);
    p.budget = std::min(p.num_sets, 1 + static_cast<int>(gen() % 3));
    p.clause_width = std::min(3, p.num_sets);
    p.demand_mode = gen() % 2 ? DemandMode::kPlanted : DemandMode::kRandom;
    const CnfInstance phi = GenerateCnf(p, gen()).formula;
    const ExactResult r = ExactMaxSat(phi);
    const oracle::TruthTableResult t = oracle::TruthTableMaxSat(phi);
    EXPECT_EQ(r.feasible, t.feasible);
    EXPECT_EQ(AsBig(r.optimum_min_ratio), t.ratio);
  }
}

TEST(ExactMaxSatTest, MonotoneAgreesWithEncoding) {
  const CnfInstance phi = CnfInstance::Create(
      4, {{1, 2}, {3}, {2, 4}, {1, 4}}, {0, 0, 1, 1},
      {Rational(2), Rational(2)}, 2);
  const ExactResult sat = ExactMaxSat(phi);
  const ExactResult cov = ExactPccds(phi.MonotoneEncoding());
  EXPECT_EQ(sat.feasible, cov.feasible);
  EXPECT_EQ(sat.optimum_min_ratio, cov.optimum_min_ratio);
}

}  // namespace
}  // namespace fairmc
