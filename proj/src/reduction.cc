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

#include <cmath>
#include <cstdlib>
#include <exception>
#include <utility>
#include <vector>

#include "fairmc/errors.h"
#include "fairmc/exact.h"

namespace fairmc {
namespace {

void CheckEps(const Rational& eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1))) {
    throw InputError("epsilon must lie in (0, 1), got " + eps.ToString());
  }
}

}  // namespace

Assignment RandomAssignment(const CnfInstance& phi, const Rational& p,
                            Rng& rng) {
  if (!(p > Rational(0)) || !(p < Rational(1))) {
    throw InputError("probability must lie in (0, 1)");
  }
  Assignment out;
  out.values.resize(phi.num_vars());
  for (auto& v : out.values) v = rng.Bernoulli(p) ? 1 : 0;
  return out;
}

Assignment RandomAssignment(const CnfInstance& phi, const Rational& p,
                            Seed seed) {
  Rng rng(seed);
  return RandomAssignment(phi, p, rng);
}

Rational DefaultTrueProbability(const CnfInstance& phi, const Rational& eps) {
  return eps / Rational(2 * static_cast<int64_t>(phi.num_colors()));
}

ReductionOutput ReduceWithAssignment(const CnfInstance& phi,
                                     const Rational& eps,
                                     const Assignment& seed_assignment) {
  CheckEps(eps);
  if (static_cast<int>(seed_assignment.values.size()) != phi.num_vars()) {
    throw InputError("assignment size does not match the formula");
  }
  const auto& psi = seed_assignment.values;
  std::vector<int> var_of_set;
  std::vector<int> clause_of_element;
  std::vector<int64_t> negative_counts(phi.num_colors(), 0);
  std::vector<std::vector<int>> kept_vars;  // per surviving clause
  for (int c = 0; c < phi.num_clauses(); ++c) {
    bool negative = false;
    for (Literal lit : phi.clauses()[c]) {
      if (lit < 0 && psi[-lit - 1] == 0) negative = true;
    }
    if (negative) {
      ++negative_counts[phi.clause_color(c)];
      continue;
    }
    std::vector<int> vars;
    for (Literal lit : phi.clauses()[c]) {
      if (lit > 0 && psi[lit - 1] == 1) vars.push_back(lit);
    }
    clause_of_element.push_back(c);
    kept_vars.push_back(std::move(vars));
  }
  std::vector<int> set_of_var(phi.num_vars() + 1, -1);
  for (const auto& vars : kept_vars) {
    for (int x : vars) set_of_var[x] = 0;
  }
  for (int x = 1; x <= phi.num_vars(); ++x) {
    if (set_of_var[x] == 0) {
      set_of_var[x] = static_cast<int>(var_of_set.size());
      var_of_set.push_back(x);
    }
  }
  CoverageInstance::Description desc;
  desc.num_elements = static_cast<int>(kept_vars.size());
  desc.sets.resize(var_of_set.size());
  for (size_t e = 0; e < kept_vars.size(); ++e) {
    desc.colors.push_back(phi.clause_color(clause_of_element[e]));
    for (int x : kept_vars[e]) {
      desc.sets[set_of_var[x]].push_back(static_cast<ElemId>(e));
    }
  }
  const Rational keep = Rational(1) - eps;
  for (ColorId i = 0; i < phi.num_colors(); ++i) {
    desc.demands.push_back(phi.demands()[i] -
                           Rational(negative_counts[i]) / keep);
  }
  desc.budget = phi.budget();
  return ReductionOutput{
      CoverageInstance::Create(desc, /*require_surjective_colors=*/false),
      seed_assignment, std::move(var_of_set), std::move(clause_of_element),
      std::move(negative_counts)};
}

ReductionOutput ReduceInstance(const CnfInstance& phi, const Rational& eps,
                               Seed seed, std::optional<Rational> p) {
  CheckEps(eps);
  const Rational prob = p.value_or(DefaultTrueProbability(phi, eps));
  return ReduceWithAssignment(phi, eps, RandomAssignment(phi, prob, seed));
}

Assignment LiftSolution(const CnfInstance& phi, const ReductionOutput& red,
                        std::span<const SetId> chosen) {
  Assignment out;
  out.values.assign(phi.num_vars(), 0);
  for (SetId v : chosen) {
    if (v < 0 || v >= static_cast<SetId>(red.var_of_set.size())) {
      throw InputError("set id outside the reduced instance");
    }
    out.values[red.var_of_set[v] - 1] = 1;
  }
  return out;
}

CoverageSolver ExactCoverageSolver(int64_t enumeration_budget) {
  return [enumeration_budget](const CoverageInstance& cov, Seed)
             -> std::optional<std::vector<SetId>> {
    return ExactPccds(cov, enumeration_budget).best_solution;
  };
}

int64_t AutoReductionTrials(const CnfInstance& phi, const Rational& eps) {
  CheckEps(eps);
  const double base = 2.0 * phi.num_colors() / eps.ToDouble();
  const double value = 4.0 * std::pow(base, phi.budget());
  if (value > 1e15) throw SizeError("reduction trial count is too large");
  // Exact ceiling for the rational value 4 (2r/eps)^k.
  Rational exact(4);
  const Rational ratio = Rational(2 * static_cast<int64_t>(phi.num_colors())) /
                         eps;
  for (int i = 0; i < phi.budget(); ++i) exact *= ratio;
  return exact.Ceil();
}

ReduceSolveResult ReduceAndSolve(const CnfInstance& phi, const Rational& eps,
                                 const CoverageSolver& solver, int64_t trials,
                                 Seed seed, std::optional<Rational> p) {
  CheckEps(eps);
  if (trials < 1) throw InputError("trials must be at least 1");
  const Rational prob = p.value_or(DefaultTrueProbability(phi, eps));
  ReduceSolveResult out;
  for (int64_t i = 0; i < trials; ++i) {
    const Seed round = DeriveSeed(seed, static_cast<uint64_t>(i));
    ++out.rounds;
    const ReductionOutput red = ReduceInstance(phi, eps, round, prob);
    std::optional<std::vector<SetId>> chosen;
    try {
      chosen = solver(red.cov, DeriveSeed(round, 0));
    } catch (const std::exception&) {
      ++out.failed_rounds;
      continue;
    }
    if (!chosen.has_value()) {
      ++out.empty_rounds;
      continue;
    }
    if (static_cast<int>(chosen->size()) > phi.budget()) {
      ++out.failed_rounds;
      continue;
    }
    Assignment lifted = LiftSolution(phi, red, *chosen);
    std::vector<int64_t> counts = phi.SatisfiedCounts(lifted);
    const MinRatio ratio = phi.SatisfactionRatio(counts);
    const bool better =
        !out.has_assignment || ratio > out.ratio ||
        (ratio == out.ratio && lifted.Weight() < out.best.Weight());
    if (better) {
      out.has_assignment = true;
      out.best = std::move(lifted);
      out.satisfied = std::move(counts);
      out.ratio = ratio;
    }
  }
  if (out.has_assignment) {
    out.meets_relaxed = phi.MeetsDemands(out.satisfied, Rational(1) - eps);
  }
  return out;
}

}  // namespace fairmc
