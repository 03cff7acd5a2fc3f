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

#include "fairmc/freqd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fairmc/errors.h"

namespace fairmc {
namespace {

using boost::multiprecision::cpp_int;

void CheckEps(const Rational& eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1))) {
    throw InputError("epsilon must lie in (0, 1), got " + eps.ToString());
  }
}

}  // namespace

std::string_view StatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kNo:
      return "no";
    case SolveStatus::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

int BucketLambda(const Rational& eps, int original_budget) {
  CheckEps(eps);
  if (original_budget < 1) throw InputError("k* must be at least 1");
  // eps = a/b; smallest lambda with a (a+b)^lambda >= 2 k* b^(lambda+1).
  const cpp_int a = eps.num();
  const cpp_int b = eps.den();
  cpp_int lhs = a;
  cpp_int rhs = cpp_int(2) * original_budget * b;
  int lambda = 0;
  while (lhs < rhs) {
    lhs *= (a + b);
    rhs *= b;
    ++lambda;
  }
  return lambda;
}

BucketingContext::BucketingContext(Rational eps, int original_budget)
    : eps_(eps),
      original_budget_(original_budget),
      lambda_(BucketLambda(eps, original_budget)) {}

int BucketingContext::Compute(const Rational& demand, int degree) const {
  if (Rational(degree) >= demand) return 0;
  // Here demand > degree >= 0. Find the first alpha with
  // degree * (a+b)^alpha * t.den >= t.num * b^alpha.
  const cpp_int a = eps_.num();
  const cpp_int b = eps_.den();
  cpp_int lhs = cpp_int(degree) * demand.den();
  cpp_int rhs = demand.num();
  for (int alpha = 1; alpha <= lambda_; ++alpha) {
    lhs *= (a + b);
    rhs *= b;
    if (lhs >= rhs) return alpha;
  }
  return lambda_ + 1;
}

int BucketingContext::Index(const Rational& demand, int degree) {
  if (degree < 0) throw InputError("negative degree");
  std::vector<int>& table = cache_[demand];
  while (static_cast<int>(table.size()) <= degree) {
    table.push_back(Compute(demand, static_cast<int>(table.size())));
  }
  return table[degree];
}

BagPartition Bucketing(const CoverageInstance& inst, BucketingContext& ctx) {
  BagPartition out;
  out.lambda = ctx.lambda();
  out.colors = inst.live_colors();
  std::map<std::vector<int>, std::vector<SetId>> groups;
  std::vector<int> key(out.colors.size());
  for (SetId v : inst.live_sets()) {
    for (size_t i = 0; i < out.colors.size(); ++i) {
      const ColorId j = out.colors[i];
      key[i] = ctx.Index(inst.demand(j), inst.JDegree(v, j));
    }
    groups[key].push_back(v);
  }
  out.bags.reserve(groups.size());
  for (auto& [index, members] : groups) {
    out.bags.push_back(Bag{index, std::move(members)});
  }
  return out;
}

BagPartition Bucketing(const CoverageInstance& inst, const Rational& eps) {
  BucketingContext ctx(eps, inst.original_budget());
  return Bucketing(inst, ctx);
}

double BagCountBound(int original_budget, const Rational& eps, int colors) {
  const double e = eps.ToDouble();
  return std::pow(6.0 * std::log2(static_cast<double>(original_budget)) /
                      (e * e),
                  colors);
}

Rational BranchWeights::Total() const {
  Rational total = anchor_mass;
  for (const auto& [v, mass] : others) total += mass;
  return total;
}

Rational BranchWeights::MassOf(SetId v) const {
  if (v == anchor) return anchor_mass;
  auto it = std::lower_bound(
      others.begin(), others.end(), v,
      [](const std::pair<SetId, Rational>& p, SetId x) { return p.first < x; });
  if (it != others.end() && it->first == v) return it->second;
  return Rational(0);
}

BranchWeights BranchDistribution(const CoverageInstance& inst, SetId anchor,
                                 int d) {
  if (!inst.IsLiveSet(anchor)) {
    throw InputError("anchor " + std::to_string(anchor) + " is not live");
  }
  if (d < 1 || d < inst.MaxFrequency()) {
    throw InputError("frequency bound " + std::to_string(d) +
                     " is below the instance frequency");
  }
  const int r = static_cast<int>(inst.live_colors().size());
  BranchWeights out;
  out.anchor = anchor;
  std::vector<Rational> score(inst.num_sets());
  std::vector<int> common(inst.num_sets(), 0);
  std::vector<SetId> touched;
  for (ColorId j : inst.live_colors()) {
    const int own = inst.JDegree(anchor, j);
    if (own == 0) continue;
    touched.clear();
    for (ElemId e : inst.Neighbors(anchor)) {
      if (inst.color(e) != j) continue;
      for (SetId w : inst.Containing(e)) {
        if (w == anchor) continue;
        if (common[w]++ == 0) touched.push_back(w);
      }
    }
    for (SetId w : touched) {
      score[w] += Rational(common[w], own);
      common[w] = 0;
    }
  }
  const Rational scale(1, 2 * static_cast<int64_t>(std::max(r, 1)) * d);
  for (SetId w : inst.live_sets()) {
    if (w == anchor) continue;
    out.others.emplace_back(w, score[w] * scale);
  }
  if (out.Total() > Rational(1)) {
    throw std::logic_error("branch distribution has mass above one");
  }
  return out;
}

SetId SampleVertex(const BranchWeights& weights, Rng& rng) {
  int64_t den = weights.anchor_mass.den();
  for (const auto& [v, mass] : weights.others) {
    den = CheckedLcm(den, mass.den());
  }
  auto scaled = [den](const Rational& m) {
    return static_cast<uint64_t>(m.num() * (den / m.den()));
  };
  uint64_t total = scaled(weights.anchor_mass);
  for (const auto& [v, mass] : weights.others) total += scaled(mass);
  uint64_t draw = rng.UniformBelow(total);
  const uint64_t anchor_part = scaled(weights.anchor_mass);
  if (draw < anchor_part) return weights.anchor;
  draw -= anchor_part;
  for (const auto& [v, mass] : weights.others) {
    const uint64_t part = scaled(mass);
    if (draw < part) return v;
    draw -= part;
  }
  throw std::logic_error("sampling fell through the distribution");
}

SetId SampleVertex(const BranchWeights& weights, Seed seed) {
  Rng rng(seed);
  return SampleVertex(weights, rng);
}

CoverageInstance PruneInstance(const CoverageInstance& inst, SetId u) {
  if (!inst.IsLiveSet(u)) {
    throw InputError("set " + std::to_string(u) + " is not live");
  }
  if (inst.budget() < 1) throw InputError("budget exhausted");
  std::vector<ColorId> satisfied;
  std::vector<Rational> demands = inst.demands();
  for (ColorId j : inst.live_colors()) {
    const int deg = inst.JDegree(u, j);
    if (Rational(deg) >= inst.demand(j)) {
      satisfied.push_back(j);
    } else {
      demands[j] -= Rational(deg);
    }
  }
  std::vector<ElemId> covered(inst.Neighbors(u).begin(),
                              inst.Neighbors(u).end());
  const SetId drop[] = {u};
  return inst.Residual(drop, covered, satisfied, std::move(demands),
                       inst.budget() - 1);
}

std::vector<SetId> PccdsOnce(const CoverageInstance& inst,
                             BucketingContext& ctx, Rng& rng) {
  std::vector<SetId> chosen;
  CoverageInstance cur = inst;
  while (cur.budget() > 0 && !cur.live_sets().empty()) {
    const BagPartition parts = Bucketing(cur, ctx);
    const Bag& bag = parts.bags[rng.UniformBelow(parts.bags.size())];
    const SetId anchor = bag.members.front();
    const BranchWeights weights =
        BranchDistribution(cur, anchor, std::max(1, cur.MaxFrequency()));
    const SetId u = SampleVertex(weights, rng);
    chosen.push_back(u);
    cur = PruneInstance(cur, u);
  }
  return chosen;
}

std::vector<SetId> PccdsOnce(const CoverageInstance& inst,
                             const Rational& eps, Seed seed) {
  if (inst.budget() == 0) return {};
  BucketingContext ctx(eps, inst.original_budget());
  Rng rng(seed);
  return PccdsOnce(inst, ctx, rng);
}

std::vector<SetId> PccdsMatroidOnce(const CoverageInstance& inst,
                                    const MatroidOracle& matroid,
                                    BucketingContext& ctx, Rng& rng) {
  if (matroid.ground_size() != inst.num_sets()) {
    throw InputError("matroid ground set does not match the set ids");
  }
  if (matroid.Rank() != inst.budget()) {
    throw InputError("matroid rank must equal the budget");
  }
  std::vector<SetId> chosen;
  CoverageInstance cur = inst;
  MatroidOracle m = matroid;
  while (cur.budget() > 0) {
    std::vector<SetId> loops;
    for (SetId v : cur.live_sets()) {
      const int single[] = {v};
      if (!m.IsIndependent(single)) loops.push_back(v);
    }
    if (!loops.empty()) {
      cur = cur.Residual(loops, {}, {}, cur.demands(), cur.budget());
    }
    if (cur.live_sets().empty()) break;
    const BagPartition parts = Bucketing(cur, ctx);
    const Bag& bag = parts.bags[rng.UniformBelow(parts.bags.size())];
    const std::vector<int> basis = m.MaximalIndependentSubset(bag.members);
    const SetId anchor = basis[rng.UniformBelow(basis.size())];
    const BranchWeights weights =
        BranchDistribution(cur, anchor, std::max(1, cur.MaxFrequency()));
    const SetId u = SampleVertex(weights, rng);
    const int single[] = {u};
    if (!m.IsIndependent(single)) {
      throw std::logic_error("sampled set is dependent after contraction");
    }
    chosen.push_back(u);
    m = m.Contract(u);
    cur = PruneInstance(cur, u);
  }
  return chosen;
}

std::vector<SetId> PccdsMatroidOnce(const CoverageInstance& inst,
                                    const MatroidOracle& matroid,
                                    const Rational& eps, Seed seed) {
  if (inst.budget() == 0) return {};
  BucketingContext ctx(eps, inst.original_budget());
  Rng rng(seed);
  return PccdsMatroidOnce(inst, matroid, ctx, rng);
}

TrialSchedule AutoTrials(int num_bags, int num_sets, int colors, int d, int k,
                         const Rational& inner_eps, const SolveOptions& options,
                         double extra_factor) {
  if (options.trial_cap < 1) throw InputError("trial cap must be positive");
  TrialSchedule out;
  if (options.trials.has_value()) {
    if (*options.trials < 1) throw InputError("trial count must be positive");
    out.log_uncapped = std::log(static_cast<double>(*options.trials));
    out.capped = *options.trials > options.trial_cap;
    out.count = std::min(*options.trials, options.trial_cap);
    return out;
  }
  const double log_q =
      k * (-std::log(std::max(num_bags, 1)) + std::log(inner_eps.ToDouble()) -
           std::log(2.0 * std::max(colors, 1) * std::max(d, 1)));
  out.log_uncapped = std::log(options.repeat_constant) +
                     std::log(std::log(num_sets + 2.0)) +
                     std::log(std::max(extra_factor, 1.0)) - log_q;
  if (out.log_uncapped >= std::log(static_cast<double>(options.trial_cap))) {
    out.capped = out.log_uncapped >
                 std::log(static_cast<double>(options.trial_cap)) + 1e-12;
    out.count = options.trial_cap;
  } else {
    out.count = std::max<int64_t>(
        1, static_cast<int64_t>(std::ceil(std::exp(out.log_uncapped))));
    out.count = std::min(out.count, options.trial_cap);
  }
  return out;
}

namespace {

// A demand no solution can reach even at the relaxed factor.
bool ClearlyInfeasible(const CoverageInstance& inst, const Rational& factor) {
  for (ColorId j : inst.live_colors()) {
    if (factor * inst.demand(j) > Rational(inst.ColorClassSize(j))) {
      return true;
    }
  }
  return false;
}

template <typename RunFn>
SolveResult RunSchedule(const CoverageInstance& inst, const Rational& factor,
                        const TrialSchedule& schedule, Seed seed, RunFn run) {
  SolveResult out;
  out.trials_planned = schedule.count;
  out.capped = schedule.capped;
  for (int64_t t = 0; t < schedule.count; ++t) {
    Rng rng(DeriveSeed(seed, static_cast<uint64_t>(t)));
    std::vector<SetId> sets = run(rng);
    out.trials_run = t + 1;
    if (inst.MeetsDemands(inst.Coverage(sets), factor)) {
      std::sort(sets.begin(), sets.end());
      out.solution = std::move(sets);
      out.status = SolveStatus::kSolved;
      return out;
    }
  }
  out.status = schedule.capped ? SolveStatus::kBudgetExceeded : SolveStatus::kNo;
  return out;
}

SolveResult TrivialResult(const CoverageInstance& inst,
                          const Rational& factor) {
  SolveResult out;
  out.status = inst.MeetsDemands(inst.Coverage({}), factor)
                   ? SolveStatus::kSolved
                   : SolveStatus::kNo;
  return out;
}

}  // namespace

SolveResult PccdsSolve(const CoverageInstance& inst, const Rational& eps,
                       const SolveOptions& options, Seed seed) {
  CheckEps(eps);
  const Rational factor = Rational(1) - eps;
  if (ClearlyInfeasible(inst, factor)) return SolveResult{};
  if (inst.budget() == 0) return TrivialResult(inst, factor);
  const Rational inner = eps / Rational(3);
  BucketingContext ctx(inner, inst.original_budget());
  const int bags = static_cast<int>(Bucketing(inst, ctx).bags.size());
  const TrialSchedule schedule = AutoTrials(
      bags, static_cast<int>(inst.live_sets().size()),
      static_cast<int>(inst.live_colors().size()),
      std::max(1, inst.MaxFrequency()), inst.budget(), inner, options);
  return RunSchedule(inst, factor, schedule, seed,
                     [&](Rng& rng) { return PccdsOnce(inst, ctx, rng); });
}

SolveResult PccdsMatroidSolve(const CoverageInstance& inst,
                              const MatroidOracle& matroid,
                              const Rational& eps, const SolveOptions& options,
                              Seed seed) {
  CheckEps(eps);
  if (matroid.ground_size() != inst.num_sets()) {
    throw InputError("matroid ground set does not match the set ids");
  }
  const Rational factor = Rational(1) - eps;
  if (ClearlyInfeasible(inst, factor)) return SolveResult{};
  const int k = std::min(inst.budget(), matroid.Rank());
  if (k == 0) return TrivialResult(inst, factor);
  const MatroidOracle truncated = matroid.Truncate(k);
  const CoverageInstance root = inst.WithBudget(k);
  const Rational inner = eps / Rational(3);
  BucketingContext ctx(inner, root.original_budget());
  const int bags = static_cast<int>(Bucketing(root, ctx).bags.size());
  const TrialSchedule schedule = AutoTrials(
      bags, static_cast<int>(root.live_sets().size()),
      static_cast<int>(root.live_colors().size()),
      std::max(1, root.MaxFrequency()), k, inner, options, k);
  return RunSchedule(root, factor, schedule, seed, [&](Rng& rng) {
    std::vector<SetId> sets = PccdsMatroidOnce(root, truncated, ctx, rng);
    if (!matroid.IsIndependent(sets)) {
      throw std::logic_error("matroid run returned a dependent set");
    }
    return sets;
  });
}

bool InductionGuaranteeHolds(const CoverageInstance& inst,
                             const CoverageVector& achieved,
                             const CoverageVector& reference,
                             const Rational& eps) {
  const Rational shrink = eps * Rational(inst.budget()) /
                          Rational(std::max(inst.original_budget(), 1));
  for (ColorId j : inst.live_colors()) {
    const Rational t = inst.demand(j);
    const Rational ref = std::min(Rational(reference.per_color[j]), t);
    const Rational bound = (Rational(1) - Rational(2) * eps) * ref - shrink * t;
    if (Rational(achieved.per_color[j]) < bound) return false;
  }
  return true;
}

bool RescaledGuaranteeHolds(const CoverageInstance& inst,
                            const CoverageVector& achieved,
                            const Rational& eps) {
  return inst.MeetsDemands(achieved, Rational(1) - Rational(3) * eps);
}

}  // namespace fairmc
