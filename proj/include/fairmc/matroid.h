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

#ifndef FAIRMC_MATROID_H_
#define FAIRMC_MATROID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fairmc {

// Independence oracle over the ground set {0, ..., ground_size-1}, backed by a
// uniform, partition or linear (prime field) matroid. Oracles are values:
// Truncate() and Contract() return new oracles.
//
// Truncation is applied before contraction: with a contraction stack C and a
// truncation cap c, S is independent iff S u C is independent in the base
// matroid and |S| + |C| <= c. The effective rank is therefore c - |C|.
class MatroidOracle {
 public:
  enum class Kind { kUniform, kPartition, kLinear };

  static MatroidOracle Uniform(int ground_size, int rank);
  // Every ground element must lie in exactly one block.
  static MatroidOracle Partition(int ground_size,
                                 std::vector<std::vector<int>> blocks,
                                 std::vector<int> capacities);
  // columns[e] is the vector of element e over GF(prime); all columns share
  // one dimension. Entries are reduced modulo prime.
  static MatroidOracle Linear(int64_t prime,
                              std::vector<std::vector<int64_t>> columns);

  Kind kind() const { return kind_; }
  int ground_size() const { return ground_size_; }
  int64_t prime() const { return prime_; }
  const std::vector<int>& contracted() const { return contracted_; }
  std::optional<int> truncation() const { return cap_; }

  // Ground set minus contracted elements.
  bool InGround(int e) const;
  std::vector<int> EffectiveGround() const;

  // S must consist of distinct elements of the effective ground set.
  bool IsIndependent(std::span<const int> s) const;
  // Size of a largest independent subset of S (greedy, ascending order).
  int Rank(std::span<const int> s) const;
  int Rank() const;

  // Caps independent sets at size k; requires 0 <= k <= Rank().
  MatroidOracle Truncate(int k) const;
  // M/u. Requires u in the effective ground set and {u} independent.
  MatroidOracle Contract(int u) const;

  // Greedy inclusion-wise maximal independent subset of `pool`, scanning in
  // ascending element order. The result 1-represents the pool: for any pool
  // element u inside an independent set X of full rank, some u' in the
  // result makes X - u + u' independent.
  std::vector<int> MaximalIndependentSubset(std::span<const int> pool) const;

 private:
  MatroidOracle() = default;
  void CheckSubset(std::span<const int> s) const;
  // Independence in the base matroid of S together with the contracted set.
  bool BaseIndependent(std::span<const int> s) const;
  // Linear backend: reduces `v` against `basis`; returns true and appends the
  // reduced vector when v is not in the span.
  bool Extend(std::vector<std::vector<int64_t>>& basis,
              std::vector<int>& pivots, std::vector<int64_t> v) const;
  int64_t Inverse(int64_t a) const;

  Kind kind_ = Kind::kUniform;
  int ground_size_ = 0;
  // Uniform.
  int uniform_rank_ = 0;
  // Partition.
  std::vector<int> block_of_;
  std::vector<int> capacities_;
  // Linear.
  int64_t prime_ = 2;
  std::vector<std::vector<int64_t>> columns_;
  std::vector<std::vector<int64_t>> contracted_basis_;  // echelon rows
  std::vector<int> contracted_pivots_;

  std::vector<int> contracted_;
  std::vector<char> is_contracted_;
  std::optional<int> cap_;
};

}  // namespace fairmc

#endif  // FAIRMC_MATROID_H_
