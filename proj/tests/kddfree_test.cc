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


#include "fairmc/kddfree.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "fairmc/errors.h"
#include "fairmc/generate.h"
#include "fairmc/matroid.h"
#include "oracles.h"

namespace fairmc {
namespace {

using Desc = CoverageInstance::Description;

Desc Disjoint(int sets, int per_set, Rational demand, int budget) {
  Desc d;
  d.num_elements = sets * per_set;
  d.colors.assign(d.num_elements, 0);
  for (int s = 0; s < sets; ++s) {
    std::vector<ElemId> members;
    for (int i = 0; i < per_set; ++i) members.push_back(s * per_set + i);
    d.sets.push_back(members);
  }
  d.demands = {demand};
  d.budget = budget;
  return d;
}

TEST(SplitColorsTest, UnitDemandsAreSmall) {
  Desc d = Disjoint(3, 2, Rational(1), 2);
  d.colors = {0, 1, 0, 1, 0, 1};
  d.demands = {Rational(1), Rational(1)};
  const ColorSplit split =
      SplitColors(CoverageInstance::Create(d), Rational(1, 2), 3, 2);
  EXPECT_EQ(split.small, (std::vector<ColorId>{0, 1}));
  EXPECT_TRUE(split.large.empty());
}

TEST(SplitColorsTest, WholeClassAboveThresholdIsLarge) {
  // 2 k^2 d / eps = 2 * 1 * 1 / (1/2) = 4 < 6.
  const Desc d = Disjoint(3, 2, Rational(6), 1);
  const ColorSplit split =
      SplitColors(CoverageInstance::Create(d), Rational(1, 2), 1, 1);
  EXPECT_TRUE(split.small.empty());
  EXPECT_EQ(split.large, (std::vector<ColorId>{0}));
}

TEST(SplitColorsTest, MatchesThresholdRecomputation) {
  std::mt19937_64 gen(41);
  for (int i = 0; i < 100; ++i) {
    const Desc d = oracle::RandomDesc(gen, 6, 30, 3, 2, 1 + gen() % 2);
    const CoverageInstance inst = CoverageInstance::Create(d);
    const Rational eps(1 + static_cast<int64_t>(gen() % 9), 10);
    const int k = inst.budget();
    const ColorSplit split = SplitColors(inst, eps, k, 1);
    for (ColorId j = 0; j < inst.num_colors(); ++j) {
      const bool small = oracle::Big(d.demands[j]) <=
                         oracle::BigRational(2 * k * k) / oracle::Big(eps);
      EXPECT_EQ(std::count(split.small.begin(), split.small.end(), j),
                small ? 1 : 0);
      EXPECT_EQ(std::count(split.large.begin(), split.large.end(), j),
                small ? 0 : 1);
    }
  }
}

TEST(LabelCodingTest, NoSmallColorsGiveEmptyLabeling) {
  const CoverageInstance inst =
      CoverageInstance::Create(Disjoint(3, 2, Rational(6), 1));
  const ColorSplit split = SplitColors(inst, Rational(1, 2), 1, 1);
  EXPECT_EQ(LabelCount(split, Rational(1, 2), 1, 1), 0);
  const Labeling l = LabelCoding(inst, split, Rational(1, 2), 1, 1, 3);
  EXPECT_EQ(l.num_labels, 0);
  for (int x : l.label) EXPECT_EQ(x, -1);
}

TEST(LabelCodingTest, SingleElementLabelIsUniform) {
  const CoverageInstance inst =
      CoverageInstance::Create(Disjoint(1, 1, Rational(1), 1));
  const Rational eps(1, 2);
  const ColorSplit split = SplitColors(inst, eps, 1, 1);
  const int q = LabelCount(split, eps, 1, 1);
  ASSERT_EQ(q, 4);  // ceil(2 * 1 * 1 * 1 / (1/2))
  std::vector<int> counts(q, 0);
  Rng rng(42);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    ++counts[LabelCoding(inst, split, eps, 1, 1, rng).label[0]];
  }
  const double sigma = std::sqrt(0.25 * 0.75 / n);
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / n, 0.25, 3 * sigma);
}

TEST(LabelCodingTest, ColorfulProbabilityAtLeastExpMinusSize) {
  const CoverageInstance inst =
      CoverageInstance::Create(Disjoint(2, 2, Rational(3), 1));
  const Rational eps(1, 2);
  const ColorSplit split = SplitColors(inst, eps, 1, 1);
  const int q = LabelCount(split, eps, 1, 1);
  const std::vector<ElemId> x = {0, 1, 2};
  ASSERT_LE(static_cast<int>(x.size()), q);
  Rng rng(43);
  const int n = 100000;
  int colorful = 0;
  for (int i = 0; i < n; ++i) {
    const Labeling l = LabelCoding(inst, split, eps, 1, 1, rng);
    std::set<int> seen;
    for (ElemId e : x) seen.insert(l.label[e]);
    colorful += seen.size() == x.size() ? 1 : 0;
  }
  const double bound = std::exp(-3.0);
  const double sigma = std::sqrt(bound * (1 - bound) / n);
  EXPECT_GE(static_cast<double>(colorful) / n, bound - 3 * sigma);
  // Exact value q(q-1)(q-2)/q^3.
  const double exact = static_cast<double>(q) * (q - 1) * (q - 2) / q / q / q;
  EXPECT_NEAR(static_cast<double>(colorful) / n, exact,
              3 * std::sqrt(exact * (1 - exact) / n));
}

TEST(KddBucketsTest, OnlyLabelClassesWithoutLargeColors) {
  Desc d = Disjoint(3, 2, Rational(1), 2);
  d.sets[2] = {0, 1};
  const CoverageInstance inst = CoverageInstance::Create(d);
  const ColorSplit split = SplitColors(inst, Rational(1, 2), 2, 2);
  ASSERT_TRUE(split.large.empty());
  const int q = LabelCount(split, Rational(1, 2), 2, 2);
  const std::vector<int> f = {0, 1, 2, 3, 0, 1};
  const Labeling l = LabelingFromFunction(inst, split, q, f);
  const std::vector<KddBag> bags =
      KddBuckets(inst, split, l, Rational(1, 2), 2, 2);
  ASSERT_EQ(bags.size(), 2u);
  for (const KddBag& b : bags) EXPECT_FALSE(b.has_index);
  // Sets 0 and 2 share the element ids, hence the same label set.
  EXPECT_EQ(bags[0].gamma, (std::vector<int>{0, 1}));
  EXPECT_EQ(bags[0].members, (std::vector<SetId>{0, 2}));
  EXPECT_EQ(bags[1].members, (std::vector<SetId>{1}));
}

TEST(KddBucketsTest, EveryVertexInBagsAndDegreeClassesHold) {
  std::mt19937_64 gen(44);
  const Rational eps(1, 5);
  for (int i = 0; i < 100; ++i) {
    GeneratorParams p;
    p.num_sets = 8;
    p.num_elements = 40;
    p.d = 2;
    p.num_colors = 2;
    p.budget = 1;
    p.demand_mode = DemandMode::kRandom;
    const CoverageInstance inst =
        GenerateKddFreeInstance(p, gen()).instance;
    const ColorSplit split = SplitColors(inst, eps, 1, 2);
    const Labeling l = LabelCoding(inst, split, eps, 1, 2, gen());
    const std::vector<KddBag> bags = KddBuckets(inst, split, l, eps, 1, 2);
    std::vector<int> plain(8, 0), indexed(8, 0);
    for (const KddBag& b : bags) {
      for (SetId v : b.members) {
        ++(b.has_index ? indexed : plain)[v];
        std::set<int> gamma;
        for (ElemId e : inst.Neighbors(v)) {
          if (l.label[e] >= 0) gamma.insert(l.label[e]);
        }
        EXPECT_EQ(std::vector<int>(gamma.begin(), gamma.end()), b.gamma);
        for (size_t c = 0; c < split.large.size() && b.has_index; ++c) {
          const int a = b.index[c];
          const oracle::BigRational deg = inst.JDegree(v, split.large[c]);
          oracle::BigRational top = oracle::BigRational(4) / oracle::Big(eps);
          for (int s = 0; s < a; ++s) top *= 1 + oracle::Big(eps);
          EXPECT_LE(deg, top);
          if (a > 0) EXPECT_GT(deg, top / (1 + oracle::Big(eps)));
        }
      }
    }
    for (int v = 0; v < 8; ++v) {
      EXPECT_EQ(plain[v], 1);
      EXPECT_EQ(indexed[v], split.large.empty() ? 0 : 1);
    }
  }
}

TEST(HighDegreeSetTest, DefinitionExamples) {
  Desc d;
  d.num_elements = 12;
  d.colors.assign(12, 0);
  d.sets = {{0, 1, 2, 3, 4}, {0, 10}, {11}};
  d.demands = {Rational(1)};
  d.budget = 1;
  const CoverageInstance inst = CoverageInstance::Create(d);
  const std::vector<ElemId> x = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_EQ(HighDegreeSet(inst, x, 0, Rational(2), 2),
            (std::vector<SetId>{0}));
  // Degree d - 1 excludes even a full hit.
  EXPECT_TRUE(HighDegreeSet(inst, std::vector<ElemId>{11}, 0, Rational(2), 2)
                  .empty());
  EXPECT_TRUE(HighDegreeBoundHolds(10, 1, Rational(2), 2));
  EXPECT_FALSE(HighDegreeBoundHolds(10, 5, Rational(2), 2));
  EXPECT_TRUE(HighDegreeBoundHolds(3, 100, Rational(2), 2));  // out of range
}

TEST(HighDegreeSetTest, BoundOnKddFreeInstances) {
  std::mt19937_64 gen(45);
  for (int d : {2, 3}) {
    for (int i = 0; i < 40; ++i) {
      GeneratorParams p;
      p.num_sets = 10;
      p.num_elements = 30;
      p.d = d;
      p.budget = 1;
      p.demand_mode = DemandMode::kRandom;
      const CoverageInstance inst =
          GenerateKddFreeInstance(p, gen()).instance;
      std::vector<ElemId> x;
      for (ElemId e = 0; e < 30; ++e) {
        if (gen() % 3 != 0) x.push_back(e);
      }
      const Rational beta(2);
      if (!(Rational(static_cast<int64_t>(x.size())) / Rational(4) >
            Rational(d))) {
        continue;
      }
      const auto ahd = HighDegreeSet(inst, x, 0, beta, d);
      double bound = d - 1;
      for (int s = 0; s < d - 1; ++s) bound *= 4;
      EXPECT_LE(static_cast<double>(ahd.size()), bound);
    }
  }
}

TEST(PerfectHashFamilyTest, TrivialShapes) {
  const auto constant = PerfectHashFamily(5, 1, HashFamilyMode::kExhaustive);
  ASSERT_EQ(constant.size(), 1u);
  EXPECT_EQ(constant[0], (std::vector<int>(5, 0)));
  const auto identity = PerfectHashFamily(4, 4, HashFamilyMode::kExhaustive);
  ASSERT_EQ(identity.size(), 1u);
  EXPECT_EQ(identity[0], (std::vector<int>{0, 1, 2, 3}));
}

TEST(PerfectHashFamilyTest, SixThreeCoversAllTwentySubsets) {
  for (HashFamilyMode mode :
       {HashFamilyMode::kExhaustive, HashFamilyMode::kRandomVerified}) {
    const auto family = PerfectHashFamily(6, 3, mode, 46);
    EXPECT_TRUE(IsPerfectHashFamily(family, 6, 3));
    int subsets = 0;
    for (uint32_t s = 0; s < 64; ++s) {
      if (std::popcount(s) != 3) continue;
      ++subsets;
      bool ok = false;
      for (const auto& f : family) {
        std::set<int> images;
        for (int i = 0; i < 6; ++i) {
          if (s >> i & 1) images.insert(f[i]);
        }
        ok = ok || images.size() == 3;
      }
      EXPECT_TRUE(ok);
    }
    EXPECT_EQ(subsets, 20);
  }
  EXPECT_FALSE(IsPerfectHashFamily({{0, 0, 1, 1, 2, 2}}, 6, 3));
}

TEST(KddPccdsTest, ZeroBudget) {
  Desc d = Disjoint(2, 1, Rational(0), 0);
  KddOptions options;
  const SolveResult ok =
      KddPccds(CoverageInstance::Create(d), Rational(1, 2), options, 1);
  EXPECT_EQ(ok.status, SolveStatus::kSolved);
  EXPECT_TRUE(ok.solution.empty());
  d.demands = {Rational(1)};
  EXPECT_EQ(KddPccds(CoverageInstance::Create(d), Rational(1, 2), options, 1)
                .status,
            SolveStatus::kNo);
}

TEST(KddPccdsTest, SingleCoveringSetIsFound) {
  Desc d = Disjoint(3, 3, Rational(3), 1);
  const SolveResult r =
      KddPccds(CoverageInstance::Create(d), Rational(3, 10), {}, 2);
  EXPECT_EQ(r.status, SolveStatus::kSolved);
  ASSERT_EQ(r.solution.size(), 1u);
}

TEST(KddPccdsTest, StrictModeRejectsNonFreeInput) {
  Desc d = Disjoint(2, 2, Rational(2), 1);
  d.sets = {{0, 1}, {0, 1}, {2, 3}};
  EXPECT_THROW(KddPccds(CoverageInstance::Create(d), Rational(1, 2), {}, 1),
               InputError);
}

TEST(KddPccdsTest, RepetitionFormulaAndCap) {
  bool capped = false;
  EXPECT_EQ(LabelingRepetitions(1, 1, 2, 1, Rational(1, 2), 200, &capped),
            200);
  EXPECT_TRUE(capped);
  // 2 k^3 k* d r / eps = 4 and ceil(e^4) = ceil(54.598).
  EXPECT_EQ(LabelingRepetitions(1, 1, 1, 1, Rational(1, 2), 1000, &capped),
            55);
  EXPECT_FALSE(capped);
}

TEST(KddPccdsTest, PlantedSuccessRate) {
  std::mt19937_64 gen(47);
  int success = 0, derand = 0;
  for (int i = 0; i < 30; ++i) {
    GeneratorParams p;
    p.num_sets = 6 + static_cast<int>(gen() % 7);
    p.num_elements = 8 + static_cast<int>(gen() % 7);
    p.d = 2;
    p.num_colors = 1 + static_cast<int>(gen() % 2);
    p.budget = 1 + static_cast<int>(gen() % 3);
    const GeneratedCoverage g = GenerateKddFreeInstance(p, gen());
    KddOptions options;
    const SolveResult r = KddPccds(g.instance, Rational(3, 10), options, gen());
    success += r.status == SolveStatus::kSolved ? 1 : 0;
    if (r.status == SolveStatus::kSolved) {
      EXPECT_TRUE(g.instance.MeetsDemands(g.instance.Coverage(r.solution),
                                          Rational(7, 10)));
    }
    options.derandomize = true;
    derand += KddPccds(g.instance, Rational(3, 10), options, 0).status ==
                      SolveStatus::kSolved
                  ? 1
                  : 0;
  }
  EXPECT_GE(success, 18);
  EXPECT_GE(derand, 18);
}

TEST(KddPccdsMatroidTest, ForbiddenPairIsNo) {
  Desc d = Disjoint(3, 2, Rational(4), 2);
  d.sets[2] = {};
  const CoverageInstance inst = CoverageInstance::Create(d);
  const MatroidOracle m = MatroidOracle::Partition(3, {{0, 1}, {2}}, {1, 1});
  const SolveResult r = KddPccdsMatroid(inst, m, Rational(3, 10), {}, 3);
  EXPECT_NE(r.status, SolveStatus::kSolved);
  const SolveResult free = KddPccds(inst, Rational(3, 10), {}, 3);
  EXPECT_EQ(free.status, SolveStatus::kSolved);
}

TEST(KddPccdsMatroidTest, ResultsAreIndependent) {
  std::mt19937_64 gen(48);
  int agree = 0, feasible = 0;
  for (int i = 0; i < 30; ++i) {
    GeneratorParams p;
    p.num_sets = 8;
    p.num_elements = 12;
    p.budget = 2;
    const GeneratedCoverage g = GenerateKddFreeInstance(p, gen());
    const MatroidOracle m = RandomLinearMatroid(8, 2, g.planted, gen());
    const SolveResult r = KddPccdsMatroid(g.instance, m, Rational(3, 10), {},
                                          gen());
    EXPECT_TRUE(m.IsIndependent(r.solution));
    ++feasible;
    agree += r.status == SolveStatus::kSolved ? 1 : 0;
  }
  EXPECT_GE(agree * 10, feasible * 6);
}

}  // namespace
}  // namespace fairmc
