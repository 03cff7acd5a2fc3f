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

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fairmc/errors.h"
#include "fairmc/exact.h"
#include "fairmc/freqd.h"

namespace fairmc {
namespace {

using boost::multiprecision::cpp_int;

void CheckEps(const Rational& eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1))) {
    throw InputError("epsilon must lie in (0, 1), got " + eps.ToString());
  }
}

// All q-subsets of [p] in lexicographic order.
std::vector<std::vector<int>> Combinations(int p, int q) {
  if (CountSubsetsUpTo(p, q) - CountSubsetsUpTo(p, q - 1) > 10'000'000) {
    throw SizeError("too many subsets to verify a hash family");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> combo(q);
  for (int i = 0; i < q; ++i) combo[i] = i;
  while (true) {
    out.push_back(combo);
    int i = q - 1;
    while (i >= 0 && combo[i] == p - q + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < q; ++j) combo[j] = combo[j - 1] + 1;
  }
  return out;
}

bool InjectiveOn(const std::vector<int>& f, const std::vector<int>& subset) {
  for (size_t a = 0; a < subset.size(); ++a) {
    for (size_t b = a + 1; b < subset.size(); ++b) {
      if (f[subset[a]] == f[subset[b]]) return false;
    }
  }
  return true;
}

}  // namespace

ColorSplit SplitColors(const CoverageInstance& inst, const Rational& eps,
                       int k, int d) {
  CheckEps(eps);
  const Rational threshold =
      Rational(2 * static_cast<int64_t>(k) * k * d) / eps;
  ColorSplit out;
  for (ColorId j : inst.live_colors()) {
    (inst.demand(j) <= threshold ? out.small : out.large).push_back(j);
  }
  return out;
}

int LabelCount(const ColorSplit& split, const Rational& eps, int k, int d) {
  const int64_t z = static_cast<int64_t>(split.small.size());
  if (z == 0) return 0;
  const int64_t count =
      (Rational(2 * static_cast<int64_t>(k) * k * z * d) / eps).Ceil();
  if (count > (1 << 30)) throw SizeError("label count is too large");
  return static_cast<int>(count);
}

std::vector<ElemId> Labeling::SmallElements(const CoverageInstance& inst,
                                            const ColorSplit& split) {
  std::vector<char> small(inst.num_colors(), 0);
  for (ColorId j : split.small) small[j] = 1;
  std::vector<ElemId> out;
  for (ElemId e = 0; e < inst.num_elements(); ++e) {
    if (inst.IsLiveElement(e) && small[inst.color(e)]) out.push_back(e);
  }
  return out;
}

Labeling LabelCoding(const CoverageInstance& inst, const ColorSplit& split,
                     const Rational& eps, int k, int d, Rng& rng) {
  Labeling out;
  out.num_labels = LabelCount(split, eps, k, d);
  out.label.assign(inst.num_elements(), -1);
  if (out.num_labels == 0) return out;
  for (ElemId e : Labeling::SmallElements(inst, split)) {
    out.label[e] = static_cast<int>(rng.UniformBelow(out.num_labels));
  }
  return out;
}

Labeling LabelCoding(const CoverageInstance& inst, const ColorSplit& split,
                     const Rational& eps, int k, int d, Seed seed) {
  Rng rng(seed);
  return LabelCoding(inst, split, eps, k, d, rng);
}

Labeling LabelingFromFunction(const CoverageInstance& inst,
                              const ColorSplit& split, int num_labels,
                              std::span<const int> function) {
  const std::vector<ElemId> small = Labeling::SmallElements(inst, split);
  if (function.size() != small.size()) {
    throw InputError("label function has the wrong domain size");
  }
  Labeling out;
  out.num_labels = num_labels;
  out.label.assign(inst.num_elements(), -1);
  for (size_t i = 0; i < small.size(); ++i) {
    if (function[i] < 0 || function[i] >= num_labels) {
      throw InputError("label out of range");
    }
    out.label[small[i]] = function[i];
  }
  return out;
}

int LargeDegreeClass(int degree, const Rational& eps, int k, int d) {
  CheckEps(eps);
  const cpp_int a = eps.num();
  const cpp_int b = eps.den();
  // degree <= 2kd/eps * ((a+b)/b)^alpha
  //   <=> degree * a * b^alpha <= 2kd * b * (a+b)^alpha.
  cpp_int lhs = cpp_int(degree) * a;
  cpp_int rhs = cpp_int(2) * k * d * b;
  int alpha = 0;
  while (lhs > rhs) {
    lhs *= b;
    rhs *= (a + b);
    ++alpha;
  }
  return alpha;
}

std::vector<KddBag> KddBuckets(const CoverageInstance& inst,
                               const ColorSplit& split,
                               const Labeling& labeling, const Rational& eps,
                               int k, int d) {
  std::map<std::vector<int>, std::vector<SetId>> by_gamma;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<SetId>>
      by_both;
  std::vector<int> index(split.large.size());
  for (SetId v : inst.live_sets()) {
    std::vector<int> gamma;
    for (ElemId e : inst.Neighbors(v)) {
      if (e < static_cast<ElemId>(labeling.label.size()) &&
          labeling.label[e] >= 0) {
        gamma.push_back(labeling.label[e]);
      }
    }
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    by_gamma[gamma].push_back(v);
    if (split.large.empty()) continue;
    for (size_t i = 0; i < split.large.size(); ++i) {
      index[i] = LargeDegreeClass(inst.JDegree(v, split.large[i]), eps, k, d);
    }
    by_both[{index, gamma}].push_back(v);
  }
  std::vector<KddBag> out;
  for (auto& [gamma, members] : by_gamma) {
    out.push_back(KddBag{false, {}, gamma, std::move(members)});
  }
  for (auto& [key, members] : by_both) {
    out.push_back(KddBag{true, key.first, key.second, std::move(members)});
  }
  return out;
}

std::vector<SetId> HighDegreeSet(const CoverageInstance& inst,
                                 std::span<const ElemId> x, ColorId j,
                                 const Rational& beta, int d) {
  if (!(beta > Rational(1))) throw InputError("beta must exceed one");
  if (x.empty()) return {};
  std::vector<int> hits(inst.num_sets(), 0);
  for (ElemId e : x) {
    if (!inst.IsLiveElement(e) || inst.color(e) != j) continue;
    for (SetId v : inst.Containing(e)) ++hits[v];
  }
  // |N_j(v) n X| >= |X| / beta  <=>  hits * beta >= |X|.
  const Rational need = Rational(static_cast<int64_t>(x.size())) / beta;
  std::vector<SetId> out;
  for (SetId v : inst.live_sets()) {
    if (hits[v] == 0) continue;
    if (Rational(hits[v]) >= need && inst.JDegree(v, j) >= d) {
      out.push_back(v);
    }
  }
  return out;
}

bool HighDegreeBoundHolds(int64_t x_size, int64_t ahd_size,
                          const Rational& beta, int d) {
  // Applies only when |X| / (2 beta) > d.
  if (!(Rational(x_size) / (Rational(2) * beta) > Rational(d))) return true;
  const cpp_int a = beta.num();
  const cpp_int b = beta.den();
  cpp_int lhs = ahd_size;
  cpp_int rhs = d - 1;
  for (int i = 0; i < d - 1; ++i) {
    lhs *= b;
    rhs *= 2 * a;
  }
  return lhs <= rhs;
}

bool IsPerfectHashFamily(const std::vector<std::vector<int>>& family, int p,
                         int q) {
  if (q > p) q = p;
  if (q <= 0) return true;
  for (const auto& f : family) {
    if (static_cast<int>(f.size()) != p) return false;
  }
  for (const auto& subset : Combinations(p, q)) {
    bool hit = false;
    for (const auto& f : family) {
      if (InjectiveOn(f, subset)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::vector<int>> PerfectHashFamily(int p, int q,
                                                HashFamilyMode mode, Seed seed,
                                                int64_t max_functions) {
  if (p < 0 || q < 1) throw InputError("hash family needs p >= 0, q >= 1");
  if (q == 1) return {std::vector<int>(p, 0)};
  if (q >= p) {
    std::vector<int> identity(p);
    for (int i = 0; i < p; ++i) identity[i] = i;
    return {identity};
  }
  if (mode == HashFamilyMode::kExhaustive && (p > 12 || q > 4)) {
    throw InputError("exhaustive hash family needs p <= 12 and q <= 4");
  }
  const std::vector<std::vector<int>> subsets = Combinations(p, q);
  std::vector<char> covered(subsets.size(), 0);
  size_t remaining = subsets.size();
  std::vector<std::vector<int>> family;
  auto absorb = [&](const std::vector<int>& f) {
    size_t gained = 0;
    for (size_t i = 0; i < subsets.size(); ++i) {
      if (!covered[i] && InjectiveOn(f, subsets[i])) {
        covered[i] = 1;
        ++gained;
      }
    }
    remaining -= gained;
    return gained;
  };
  if (mode == HashFamilyMode::kExhaustive) {
    for (size_t i = 0; i < subsets.size() && remaining > 0; ++i) {
      if (covered[i]) continue;
      if (static_cast<int64_t>(family.size()) >= max_functions) {
        throw SizeError("hash family search exceeded its budget");
      }
      std::vector<int> f(p);
      for (int x = 0; x < p; ++x) f[x] = x % q;
      for (int r = 0; r < q; ++r) f[subsets[i][r]] = r;
      absorb(f);
      family.push_back(std::move(f));
    }
  } else {
    Rng rng(seed);
    int64_t sampled = 0;
    while (remaining > 0) {
      if (++sampled > max_functions) {
        throw SizeError("hash family search exceeded its budget");
      }
      std::vector<int> f(p);
      for (int& v : f) v = static_cast<int>(rng.UniformBelow(q));
      if (absorb(f) > 0) family.push_back(std::move(f));
    }
  }
  if (!IsPerfectHashFamily(family, p, q)) {
    throw std::logic_error("hash family failed verification");
  }
  return family;
}

int64_t LabelingRepetitions(int k, int original_budget, int d, int colors,
                            const Rational& inner_eps, int64_t cap,
                            bool* capped) {
  if (cap < 1) throw InputError("labeling cap must be positive");
  const double exponent = 2.0 * k * k * k * original_budget * d *
                          std::max(colors, 1) / inner_eps.ToDouble();
  const double log_cap = std::log(static_cast<double>(cap));
  if (capped != nullptr) *capped = exponent > log_cap + 1e-12;
  if (exponent >= log_cap) return cap;
  return std::min<int64_t>(
      cap, std::max<int64_t>(1, static_cast<int64_t>(std::ceil(
                                    std::exp(exponent)))));
}

namespace {

class KddSearch {
 public:
  KddSearch(const CoverageInstance& root, const Rational& slack,
            const Rational& inner_eps, const KddOptions& options)
      : root_(root),
        slack_(slack),
        inner_eps_(inner_eps),
        options_(options),
        small_(root.num_colors(), 0) {
    for (ColorId j :
         SplitColors(root, inner_eps, root.budget(), options.d).small) {
      small_[j] = 1;
    }
  }

  bool Accepts(std::span<const SetId> sets) const {
    const CoverageVector cov = root_.Coverage(sets);
    for (ColorId j : root_.live_colors()) {
      const Rational factor = small_[j] ? Rational(1) : Rational(1) - slack_;
      if (Rational(cov.per_color[j]) < factor * root_.demand(j)) return false;
    }
    return true;
  }

  std::optional<std::vector<SetId>> Run(const MatroidOracle* matroid,
                                        Rng* rng) {
    rng_ = rng;
    std::vector<SetId> chosen;
    if (Search(root_, matroid, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
    return std::nullopt;
  }

 private:
  std::vector<Labeling> Labelings(const CoverageInstance& inst,
                                  const ColorSplit& split, int k) {
    if (!options_.derandomize) {
      return {LabelCoding(inst, split, inner_eps_, k, options_.d, *rng_)};
    }
    const int q = LabelCount(split, inner_eps_, k, options_.d);
    const int p =
        static_cast<int>(Labeling::SmallElements(inst, split).size());
    if (q == 0 || p == 0) {
      return {LabelingFromFunction(inst, split, q, std::vector<int>(p, 0))};
    }
    auto it = families_.find({p, q});
    if (it == families_.end()) {
      const HashFamilyMode mode = (p <= 12 && q <= 4)
                                      ? HashFamilyMode::kExhaustive
                                      : HashFamilyMode::kRandomVerified;
      it = families_.emplace(std::make_pair(p, q),
                             PerfectHashFamily(p, std::min(p, q), mode))
               .first;
    }
    std::vector<Labeling> out;
    for (const auto& f : it->second) {
      out.push_back(LabelingFromFunction(inst, split, q, f));
    }
    return out;
  }

  std::vector<SetId> Branches(const CoverageInstance& inst,
                              const MatroidOracle* matroid) {
    const int k = inst.budget();
    const ColorSplit split = SplitColors(inst, inner_eps_, k, options_.d);
    const Rational beta = Rational(k) / inner_eps_;
    std::vector<char> in_z(inst.num_sets(), 0);
    for (const Labeling& labeling : Labelings(inst, split, k)) {
      for (const KddBag& bag :
           KddBuckets(inst, split, labeling, inner_eps_, k, options_.d)) {
        std::vector<SetId> anchors;
        if (matroid != nullptr) {
          anchors = matroid->MaximalIndependentSubset(bag.members);
        } else {
          anchors = {bag.members.front()};
        }
        for (SetId x : anchors) {
          in_z[x] = 1;
          if (!bag.has_index) continue;
          for (ColorId j : split.large) {
            const std::vector<ElemId> nbrs = inst.JNeighbors(x, j);
            const std::vector<SetId> ahd =
                HighDegreeSet(inst, nbrs, j, beta, options_.d);
            if (!HighDegreeBoundHolds(static_cast<int64_t>(nbrs.size()),
                                      static_cast<int64_t>(ahd.size()), beta,
                                      options_.d)) {
              if (options_.strict) {
                throw std::logic_error("high degree set exceeds its bound");
              }
              throw InputError("instance is not K_{d,d}-free");
            }
            for (SetId v : ahd) in_z[v] = 1;
          }
        }
      }
    }
    std::vector<SetId> z;
    for (SetId v : inst.live_sets()) {
      if (in_z[v]) z.push_back(v);
    }
    return z;
  }

  bool Search(const CoverageInstance& cur, const MatroidOracle* matroid,
              std::vector<SetId>& chosen) {
    if (Accepts(chosen)) return true;
    if (cur.budget() == 0) return false;
    CoverageInstance work = cur;
    if (matroid != nullptr) {
      std::vector<SetId> loops;
      for (SetId v : work.live_sets()) {
        const int single[] = {v};
        if (!matroid->IsIndependent(single)) loops.push_back(v);
      }
      if (!loops.empty()) {
        work = work.Residual(loops, {}, {}, work.demands(), work.budget());
      }
    }
    if (work.live_sets().empty()) return false;
    for (SetId y : Branches(work, matroid)) {
      chosen.push_back(y);
      const CoverageInstance next = PruneInstance(work, y);
      bool found;
      if (matroid != nullptr) {
        const MatroidOracle contracted = matroid->Contract(y);
        found = Search(next, &contracted, chosen);
      } else {
        found = Search(next, nullptr, chosen);
      }
      if (found) return true;
      chosen.pop_back();
    }
    return false;
  }

  const CoverageInstance& root_;
  Rational slack_;
  Rational inner_eps_;
  KddOptions options_;
  std::vector<char> small_;
  Rng* rng_ = nullptr;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> families_;
};

bool ClearlyInfeasible(const CoverageInstance& inst, const Rational& factor) {
  for (ColorId j : inst.live_colors()) {
    if (factor * inst.demand(j) > Rational(inst.ColorClassSize(j))) {
      return true;
    }
  }
  return false;
}

SolveResult Drive(const CoverageInstance& root, const MatroidOracle* matroid,
                  const MatroidOracle* original, const Rational& eps,
                  const KddOptions& options, Seed seed) {
  SolveResult out;
  const int k = root.budget();
  const Rational slack = options.raw_epsilon ? eps * Rational(k) : eps;
  if (ClearlyInfeasible(root, Rational(1) - slack)) return out;
  if (k == 0) {
    out.status = root.MeetsDemands(root.Coverage({}), Rational(1))
                     ? SolveStatus::kSolved
                     : SolveStatus::kNo;
    return out;
  }
  const Rational inner = options.raw_epsilon ? eps : eps / Rational(k);
  KddSearch search(root, slack, inner, options);
  int64_t reps = 1;
  if (!options.derandomize) {
    if (options.repetitions.has_value()) {
      if (*options.repetitions < 1 || options.labeling_cap < 1) {
        throw InputError("repetition counts must be positive");
      }
      reps = std::min(*options.repetitions, options.labeling_cap);
      out.capped = *options.repetitions > options.labeling_cap;
    } else {
      reps = LabelingRepetitions(k, root.original_budget(), options.d,
                                 static_cast<int>(root.live_colors().size()),
                                 inner, options.labeling_cap, &out.capped);
    }
  }
  out.trials_planned = reps;
  for (int64_t t = 0; t < reps; ++t) {
    Rng rng(DeriveSeed(seed, static_cast<uint64_t>(t)));
    out.trials_run = t + 1;
    std::optional<std::vector<SetId>> found = search.Run(matroid, &rng);
    if (!found.has_value()) continue;
    if (original != nullptr && !original->IsIndependent(*found)) {
      throw std::logic_error("matroid search returned a dependent set");
    }
    out.status = SolveStatus::kSolved;
    out.solution = std::move(*found);
    return out;
  }
  out.status = out.capped ? SolveStatus::kBudgetExceeded : SolveStatus::kNo;
  return out;
}

void CheckKdd(const CoverageInstance& inst, const Rational& eps,
              const KddOptions& options) {
  CheckEps(eps);
  if (options.d < 1) throw InputError("d must be at least 1");
  if (options.strict && !inst.IsKddFree(options.d)) {
    throw InputError("instance is not K_{" + std::to_string(options.d) + "," +
                     std::to_string(options.d) + "}-free");
  }
}

}  // namespace

SolveResult KddPccds(const CoverageInstance& inst, const Rational& eps,
                     const KddOptions& options, Seed seed) {
  CheckKdd(inst, eps, options);
  return Drive(inst, nullptr, nullptr, eps, options, seed);
}

SolveResult KddPccdsMatroid(const CoverageInstance& inst,
                            const MatroidOracle& matroid, const Rational& eps,
                            const KddOptions& options, Seed seed) {
  CheckKdd(inst, eps, options);
  if (matroid.ground_size() != inst.num_sets()) {
    throw InputError("matroid ground set does not match the set ids");
  }
  const int k = std::min(inst.budget(), matroid.Rank());
  const MatroidOracle truncated = matroid.Truncate(k);
  const CoverageInstance root = inst.WithBudget(k);
  return Drive(root, &truncated, &matroid, eps, options, seed);
}

}  // namespace fairmc
