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

#include <algorithm>
#include <string>
#include <utility>

#include "fairmc/errors.h"

namespace fairmc {
namespace {

bool IsPrime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int64_t MulMod(int64_t a, int64_t b, int64_t p) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % p);
}

}  // namespace

MatroidOracle MatroidOracle::Uniform(int ground_size, int rank) {
  if (ground_size < 0) throw InputError("negative ground set size");
  if (rank < 0) throw InputError("negative uniform rank");
  MatroidOracle m;
  m.kind_ = Kind::kUniform;
  m.ground_size_ = ground_size;
  m.uniform_rank_ = rank;
  m.is_contracted_.assign(ground_size, 0);
  return m;
}

MatroidOracle MatroidOracle::Partition(int ground_size,
                                       std::vector<std::vector<int>> blocks,
                                       std::vector<int> capacities) {
  if (ground_size < 0) throw InputError("negative ground set size");
  if (blocks.size() != capacities.size()) {
    throw InputError("partition matroid needs one capacity per block");
  }
  MatroidOracle m;
  m.kind_ = Kind::kPartition;
  m.ground_size_ = ground_size;
  m.block_of_.assign(ground_size, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (capacities[b] < 0) throw InputError("negative block capacity");
    for (int e : blocks[b]) {
      if (e < 0 || e >= ground_size) {
        throw InputError("partition block references unknown element " +
                         std::to_string(e));
      }
      if (m.block_of_[e] != -1) {
        throw InputError("element " + std::to_string(e) +
                         " appears in two blocks");
      }
      m.block_of_[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < ground_size; ++e) {
    if (m.block_of_[e] == -1) {
      throw InputError("element " + std::to_string(e) + " is in no block");
    }
  }
  m.capacities_ = std::move(capacities);
  m.is_contracted_.assign(ground_size, 0);
  return m;
}

MatroidOracle MatroidOracle::Linear(int64_t prime,
                                    std::vector<std::vector<int64_t>> columns) {
  if (!IsPrime(prime)) {
    throw InputError("linear matroid field size " + std::to_string(prime) +
                     " is not prime");
  }
  MatroidOracle m;
  m.kind_ = Kind::kLinear;
  m.prime_ = prime;
  m.ground_size_ = static_cast<int>(columns.size());
  const size_t dim = columns.empty() ? 0 : columns.front().size();
  for (auto& col : columns) {
    if (col.size() != dim) {
      throw InputError("linear matroid columns differ in dimension");
    }
    for (auto& x : col) x = ((x % prime) + prime) % prime;
  }
  m.columns_ = std::move(columns);
  m.is_contracted_.assign(m.ground_size_, 0);
  return m;
}

bool MatroidOracle::InGround(int e) const {
  return e >= 0 && e < ground_size_ && !is_contracted_[e];
}

std::vector<int> MatroidOracle::EffectiveGround() const {
  std::vector<int> out;
  for (int e = 0; e < ground_size_; ++e) {
    if (!is_contracted_[e]) out.push_back(e);
  }
  return out;
}

void MatroidOracle::CheckSubset(std::span<const int> s) const {
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (!InGround(sorted[i])) {
      throw InputError("element " + std::to_string(sorted[i]) +
                       " is not in the ground set");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw InputError("element " + std::to_string(sorted[i]) + " repeated");
    }
  }
}

int64_t MatroidOracle::Inverse(int64_t a) const {
  // Fermat: a^(p-2) mod p.
  int64_t result = 1;
  int64_t base = a % prime_;
  int64_t exp = prime_ - 2;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, prime_);
    base = MulMod(base, base, prime_);
    exp >>= 1;
  }
  return result;
}

bool MatroidOracle::Extend(std::vector<std::vector<int64_t>>& basis,
                           std::vector<int>& pivots,
                           std::vector<int64_t> v) const {
  for (size_t i = 0; i < basis.size(); ++i) {
    const int p = pivots[i];
    if (v[p] == 0) continue;
    const int64_t factor = v[p];
    for (size_t c = 0; c < v.size(); ++c) {
      v[c] = (v[c] - MulMod(factor, basis[i][c], prime_) + prime_) % prime_;
    }
  }
  const auto it = std::find_if(v.begin(), v.end(),
                               [](int64_t x) { return x != 0; });
  if (it == v.end()) return false;
  const int pivot = static_cast<int>(it - v.begin());
  const int64_t inv = Inverse(v[pivot]);
  for (auto& x : v) x = MulMod(x, inv, prime_);
  // Keep rows fully reduced so that reduction order does not matter.
  for (auto& row : basis) {
    const int64_t factor = row[pivot];
    if (factor == 0) continue;
    for (size_t c = 0; c < row.size(); ++c) {
      row[c] = (row[c] - MulMod(factor, v[c], prime_) + prime_) % prime_;
    }
  }
  basis.push_back(std::move(v));
  pivots.push_back(pivot);
  return true;
}

bool MatroidOracle::BaseIndependent(std::span<const int> s) const {
  switch (kind_) {
    case Kind::kUniform:
      return static_cast<int>(s.size() + contracted_.size()) <= uniform_rank_;
    case Kind::kPartition: {
      std::vector<int> used(capacities_.size(), 0);
      for (int e : contracted_) ++used[block_of_[e]];
      for (int e : s) {
        if (++used[block_of_[e]] > capacities_[block_of_[e]]) return false;
      }
      return true;
    }
    case Kind::kLinear: {
      auto basis = contracted_basis_;
      auto pivots = contracted_pivots_;
      for (int e : s) {
        if (!Extend(basis, pivots, columns_[e])) return false;
      }
      return true;
    }
  }
  return false;
}

bool MatroidOracle::IsIndependent(std::span<const int> s) const {
  CheckSubset(s);
  if (cap_ && static_cast<int>(s.size() + contracted_.size()) > *cap_) {
    return false;
  }
  return BaseIndependent(s);
}

int MatroidOracle::Rank(std::span<const int> s) const {
  CheckSubset(s);
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> picked;
  for (int e : sorted) {
    picked.push_back(e);
    if (!IsIndependent(picked)) picked.pop_back();
  }
  return static_cast<int>(picked.size());
}

int MatroidOracle::Rank() const {
  const std::vector<int> ground = EffectiveGround();
  return Rank(ground);
}

MatroidOracle MatroidOracle::Truncate(int k) const {
  if (k < 0 || k > Rank()) {
    throw InputError("truncation rank " + std::to_string(k) +
                     " outside [0, rank]");
  }
  MatroidOracle out = *this;
  out.cap_ = k + static_cast<int>(contracted_.size());
  return out;
}

MatroidOracle MatroidOracle::Contract(int u) const {
  if (!InGround(u)) {
    throw InputError("cannot contract element " + std::to_string(u) +
                     " outside the ground set");
  }
  const int single[] = {u};
  if (!IsIndependent(single)) {
    throw InputError("cannot contract dependent element " + std::to_string(u));
  }
  MatroidOracle out = *this;
  out.contracted_.push_back(u);
  out.is_contracted_[u] = 1;
  if (kind_ == Kind::kLinear) {
    out.Extend(out.contracted_basis_, out.contracted_pivots_, columns_[u]);
  }
  return out;
}

std::vector<int> MatroidOracle::MaximalIndependentSubset(
    std::span<const int> pool) const {
  std::vector<int> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  CheckSubset(sorted);
  std::vector<int> picked;
  for (int e : sorted) {
    picked.push_back(e);
    if (!IsIndependent(picked)) picked.pop_back();
  }
  return picked;
}

}  // namespace fairmc
