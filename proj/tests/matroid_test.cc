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


#include "fairmc/matroid.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "fairmc/errors.h"
#include "oracles.h"

namespace fairmc {
namespace {

using Set = std::vector<int>;

std::vector<std::vector<int64_t>> Identity3PlusSum() {
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
}

std::vector<std::vector<int64_t>> RandomColumns(std::mt19937_64& gen, int n,
                                                int dim, int64_t p) {
  std::vector<std::vector<int64_t>> cols(n, std::vector<int64_t>(dim));
  for (auto& c : cols) {
    for (auto& x : c) x = static_cast<int64_t>(gen() % p);
  }
  return cols;
}

Set Members(uint32_t mask, int n) {
  Set out;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

TEST(MatroidTest, UniformIndependence) {
  const MatroidOracle m = MatroidOracle::Uniform(3, 2);
  EXPECT_TRUE(m.IsIndependent(Set{0, 1}));
  EXPECT_FALSE(m.IsIndependent(Set{0, 1, 2}));
  EXPECT_EQ(m.Rank(Set{}), 0);
  EXPECT_EQ(m.Rank(Set{0, 1, 2}), 2);
  EXPECT_EQ(m.Rank(), 2);
  EXPECT_THROW(m.IsIndependent(Set{0, 0}), InputError);
  EXPECT_THROW(m.IsIndependent(Set{5}), InputError);
}

TEST(MatroidTest, LinearDependenceOverGf2) {
  const MatroidOracle m = MatroidOracle::Linear(2, Identity3PlusSum());
  EXPECT_TRUE(m.IsIndependent(Set{0, 1, 2}));
  EXPECT_FALSE(m.IsIndependent(Set{0, 1, 3}));
  EXPECT_TRUE(m.IsIndependent(Set{1, 2, 3}));
  EXPECT_EQ(m.Rank(), 3);
}

TEST(MatroidTest, PartitionCapacities) {
  const MatroidOracle m =
      MatroidOracle::Partition(4, {{0, 1}, {2, 3}}, {1, 2});
  EXPECT_TRUE(m.IsIndependent(Set{0, 2, 3}));
  EXPECT_FALSE(m.IsIndependent(Set{0, 1}));
  EXPECT_EQ(m.Rank(), 3);
  EXPECT_THROW(MatroidOracle::Partition(3, {{0, 1}}, {1}), InputError);
}

TEST(MatroidTest, TruncationExamples) {
  const MatroidOracle u = MatroidOracle::Uniform(3, 3).Truncate(2);
  const MatroidOracle expect = MatroidOracle::Uniform(3, 2);
  for (uint32_t s = 0; s < 8; ++s) {
    EXPECT_EQ(u.IsIndependent(Members(s, 3)),
              expect.IsIndependent(Members(s, 3)));
  }
  const MatroidOracle lin =
      MatroidOracle::Linear(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).Truncate(2);
  for (uint32_t s = 0; s < 8; ++s) {
    EXPECT_EQ(lin.IsIndependent(Members(s, 3)), std::popcount(s) <= 2);
  }
}

TEST(MatroidTest, ContractionExamples) {
  const MatroidOracle u = MatroidOracle::Uniform(3, 2).Contract(0);
  EXPECT_FALSE(u.InGround(0));
  EXPECT_EQ(u.Rank(), 1);
  EXPECT_TRUE(u.IsIndependent(Set{1}));
  EXPECT_FALSE(u.IsIndependent(Set{1, 2}));
  const MatroidOracle lin =
      MatroidOracle::Linear(2, Identity3PlusSum()).Contract(0);
  EXPECT_TRUE(lin.IsIndependent(Set{1, 2}));
  EXPECT_FALSE(lin.IsIndependent(Set{1, 3}));
  EXPECT_THROW(lin.IsIndependent(Set{0}), InputError);
}

TEST(MatroidTest, GreedyRepresentativeSubset) {
  const MatroidOracle u = MatroidOracle::Uniform(3, 2);
  EXPECT_EQ(u.MaximalIndependentSubset(Set{0, 1, 2}), (Set{0, 1}));
  const MatroidOracle parallel =
      MatroidOracle::Linear(3, {{1, 2}, {1, 2}, {2, 1}, {1, 2}});
  EXPECT_EQ(parallel.MaximalIndependentSubset(Set{3, 0, 1}), (Set{0}));
}

TEST(MatroidTest, LinearMatchesGaussianEliminationOracle) {
  std::mt19937_64 gen(7);
  for (int64_t p : {2, 3, 5, 7}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto cols = RandomColumns(gen, 6, 1 + gen() % 4, p);
      const MatroidOracle m = MatroidOracle::Linear(p, cols);
      for (uint32_t s = 0; s < 64; ++s) {
        const Set sub = Members(s, 6);
        EXPECT_EQ(m.Rank(sub), oracle::RankModP(p, cols, sub));
        EXPECT_EQ(m.IsIndependent(sub),
                  oracle::RankModP(p, cols, sub) ==
                      static_cast<int>(sub.size()));
      }
    }
  }
}

TEST(MatroidTest, DerivedOraclesMatchDefinitions) {
  std::mt19937_64 gen(8);
  for (int rep = 0; rep < 30; ++rep) {
    const auto cols = RandomColumns(gen, 6, 3, 2);
    const MatroidOracle m = MatroidOracle::Linear(2, cols);
    const int cap = static_cast<int>(gen() % (m.Rank() + 1));
    const MatroidOracle t = m.Truncate(cap);
    for (uint32_t s = 0; s < 64; ++s) {
      const Set sub = Members(s, 6);
      EXPECT_EQ(t.IsIndependent(sub),
                m.IsIndependent(sub) && static_cast<int>(sub.size()) <= cap);
    }
    for (int u = 0; u < 6; ++u) {
      if (!m.IsIndependent(Set{u})) continue;
      const MatroidOracle c = m.Contract(u);
      for (uint32_t s = 0; s < 64; ++s) {
        if (s >> u & 1) continue;
        Set with = Members(s | 1u << u, 6);
        EXPECT_EQ(c.IsIndependent(Members(s, 6)), m.IsIndependent(with));
      }
    }
  }
}

TEST(MatroidTest, RepresentativeSubsetExchange) {
  std::mt19937_64 gen(9);
  for (int rep = 0; rep < 30; ++rep) {
    const auto cols = RandomColumns(gen, 6, 3, 3);
    const MatroidOracle m = MatroidOracle::Linear(3, cols);
    const int k = m.Rank();
    const Set pool = Members(static_cast<uint32_t>(gen() % 64), 6);
    const Set rep_set = m.MaximalIndependentSubset(pool);
    for (int u : pool) {
      for (uint32_t x = 0; x < 64; ++x) {
        const Set xs = Members(x, 6);
        if (!(x >> u & 1) || static_cast<int>(xs.size()) != k ||
            !m.IsIndependent(xs)) {
          continue;
        }
        bool found = false;
        for (int r : rep_set) {
          if (r != u && (x >> r & 1)) continue;
          Set swapped;
          for (int e : xs) {
            if (e != u) swapped.push_back(e);
          }
          swapped.push_back(r);
          std::sort(swapped.begin(), swapped.end());
          if (m.IsIndependent(swapped)) found = true;
        }
        EXPECT_TRUE(found);
      }
    }
  }
}

}  // namespace
}  // namespace fairmc
