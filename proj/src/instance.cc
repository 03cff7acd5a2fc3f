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

#include "fairmc/instance.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "fairmc/errors.h"

namespace fairmc {

CoverageInstance CoverageInstance::Create(const Description& description,
                                          bool require_surjective_colors) {
  const int m = description.num_elements;
  const int r = static_cast<int>(description.demands.size());
  if (m < 0) throw InputError("negative element count");
  if (static_cast<int>(description.colors.size()) != m) {
    throw InputError("colors array has " +
                     std::to_string(description.colors.size()) +
                     " entries, expected " + std::to_string(m));
  }
  if (description.budget < 0) throw InputError("negative budget");
  const int kstar = description.original_budget.value_or(description.budget);
  if (kstar < description.budget) {
    throw InputError("budget exceeds original budget");
  }

  CoverageInstance inst;
  inst.colors_ = description.colors;
  inst.demands_ = description.demands;
  inst.budget_ = description.budget;
  inst.original_budget_ = kstar;

  std::vector<char> color_used(r, 0);
  for (int e = 0; e < m; ++e) {
    const ColorId c = inst.colors_[e];
    if (c < 0 || c >= r) {
      throw InputError("element " + std::to_string(e) +
                       " references unknown color " + std::to_string(c));
    }
    color_used[c] = 1;
  }
  if (require_surjective_colors) {
    for (int j = 0; j < r; ++j) {
      if (!color_used[j]) {
        throw InputError("color " + std::to_string(j) + " has no elements");
      }
    }
  }

  inst.adjacency_ = description.sets;
  for (size_t v = 0; v < inst.adjacency_.size(); ++v) {
    auto& adj = inst.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    for (size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] < 0 || adj[i] >= m) {
        throw InputError("set " + std::to_string(v) +
                         " references unknown element " +
                         std::to_string(adj[i]));
      }
      if (i > 0 && adj[i] == adj[i - 1]) {
        throw InputError("set " + std::to_string(v) +
                         " lists element " + std::to_string(adj[i]) +
                         " twice");
      }
    }
  }
  inst.set_live_.assign(inst.adjacency_.size(), 1);
  inst.element_live_.assign(m, 1);
  inst.color_live_.assign(r, 1);
  inst.Rebuild();
  return inst;
}

void CoverageInstance::Rebuild() {
  const int n = num_sets();
  const int m = num_elements();
  const int r = num_colors();
  live_sets_.clear();
  for (SetId v = 0; v < n; ++v) {
    if (set_live_[v]) live_sets_.push_back(v);
  }
  live_colors_.clear();
  for (ColorId j = 0; j < r; ++j) {
    if (color_live_[j]) live_colors_.push_back(j);
  }
  containing_.assign(m, {});
  jdegree_.assign(static_cast<size_t>(n) * r, 0);
  for (SetId v : live_sets_) {
    for (ElemId e : adjacency_[v]) {
      containing_[e].push_back(v);
      ++jdegree_[static_cast<size_t>(v) * r + colors_[e]];
    }
  }
  class_size_.assign(r, 0);
  for (ElemId e = 0; e < m; ++e) {
    if (element_live_[e]) ++class_size_[colors_[e]];
  }
}

bool CoverageInstance::IsLiveSet(SetId v) const {
  return v >= 0 && v < num_sets() && set_live_[v];
}

bool CoverageInstance::IsLiveElement(ElemId e) const {
  return e >= 0 && e < num_elements() && element_live_[e];
}

bool CoverageInstance::IsLiveColor(ColorId j) const {
  return j >= 0 && j < num_colors() && color_live_[j];
}

std::span<const ElemId> CoverageInstance::Neighbors(SetId v) const {
  if (!IsLiveSet(v)) throw InputError("unknown set " + std::to_string(v));
  return adjacency_[v];
}

std::span<const SetId> CoverageInstance::Containing(ElemId e) const {
  if (!IsLiveElement(e)) {
    throw InputError("unknown element " + std::to_string(e));
  }
  return containing_[e];
}

int64_t CoverageInstance::ColorClassSize(ColorId j) const {
  if (!IsLiveColor(j)) throw InputError("unknown color " + std::to_string(j));
  return class_size_[j];
}

int CoverageInstance::JDegree(SetId v, ColorId j) const {
  if (!IsLiveSet(v)) throw InputError("unknown set " + std::to_string(v));
  if (!IsLiveColor(j)) throw InputError("unknown color " + std::to_string(j));
  return jdegree_[static_cast<size_t>(v) * num_colors() + j];
}

std::vector<ElemId> CoverageInstance::JNeighbors(SetId v, ColorId j) const {
  if (!IsLiveColor(j)) throw InputError("unknown color " + std::to_string(j));
  std::vector<ElemId> out;
  for (ElemId e : Neighbors(v)) {
    if (colors_[e] == j) out.push_back(e);
  }
  return out;
}

CoverageVector CoverageInstance::Coverage(std::span<const SetId> sets) const {
  CoverageVector cov;
  cov.per_color.assign(num_colors(), 0);
  std::vector<char> seen(num_elements(), 0);
  std::vector<char> chosen(num_sets(), 0);
  for (SetId v : sets) {
    if (!IsLiveSet(v)) throw InputError("unknown set " + std::to_string(v));
    if (chosen[v]) throw InputError("set " + std::to_string(v) + " repeated");
    chosen[v] = 1;
    for (ElemId e : adjacency_[v]) {
      if (!seen[e]) {
        seen[e] = 1;
        ++cov.per_color[colors_[e]];
      }
    }
  }
  return cov;
}

int CoverageInstance::MaxFrequency() const {
  size_t best = 0;
  for (const auto& c : containing_) best = std::max(best, c.size());
  return static_cast<int>(best);
}

bool CoverageInstance::IsKddFree(int d, int64_t enumeration_limit) const {
  if (d < 1) throw InputError("K_{d,d} check needs d >= 1");
  int64_t nodes = 0;
  const std::vector<SetId>& sets = live_sets_;
  // Depth-first over d-subsets of sets, carrying the common neighborhood and
  // pruning as soon as it drops below d elements.
  std::vector<std::vector<ElemId>> common(d + 1);
  bool found = false;
  auto dfs = [&](auto&& self, size_t start, int depth) -> void {
    if (found) return;
    if (depth == d) {
      found = true;
      return;
    }
    for (size_t i = start; i < sets.size(); ++i) {
      if (++nodes > enumeration_limit) {
        throw SizeError("K_{d,d}-freeness check exceeds enumeration limit");
      }
      const auto& adj = adjacency_[sets[i]];
      auto& next = common[depth + 1];
      next.clear();
      if (depth == 0) {
        next.assign(adj.begin(), adj.end());
      } else {
        std::set_intersection(common[depth].begin(), common[depth].end(),
                              adj.begin(), adj.end(), std::back_inserter(next));
      }
      if (static_cast<int>(next.size()) < d) continue;
      self(self, i + 1, depth + 1);
      if (found) return;
    }
  };
  dfs(dfs, 0, 0);
  return !found;
}

bool CoverageInstance::MeetsDemands(const CoverageVector& coverage,
                                    const Rational& factor) const {
  for (ColorId j : live_colors_) {
    if (Rational(coverage.per_color[j]) < factor * demands_[j]) return false;
  }
  return true;
}

MinRatio CoverageInstance::CoverageRatio(const CoverageVector& coverage) const {
  MinRatio best = MinRatio::Unbounded();
  for (ColorId j : live_colors_) {
    if (!demands_[j].IsPositive()) continue;
    const Rational ratio = Rational(coverage.per_color[j]) / demands_[j];
    if (best.unbounded || ratio < best.value) best = MinRatio::Of(ratio);
  }
  return best;
}

CoverageInstance CoverageInstance::Residual(
    std::span<const SetId> drop_sets, std::span<const ElemId> drop_elements,
    std::span<const ColorId> drop_colors, std::vector<Rational> demands,
    int budget) const {
  if (static_cast<int>(demands.size()) != num_colors()) {
    throw InputError("residual demand vector has wrong size");
  }
  if (budget < 0 || budget > original_budget_) {
    throw InputError("residual budget out of range");
  }
  CoverageInstance out = *this;
  out.demands_ = std::move(demands);
  out.budget_ = budget;
  for (SetId v : drop_sets) {
    if (!IsLiveSet(v)) throw InputError("unknown set " + std::to_string(v));
    out.set_live_[v] = 0;
    out.adjacency_[v].clear();
  }
  for (ColorId j : drop_colors) {
    if (!IsLiveColor(j)) throw InputError("unknown color " + std::to_string(j));
    out.color_live_[j] = 0;
  }
  for (ElemId e : drop_elements) {
    if (!IsLiveElement(e)) {
      throw InputError("unknown element " + std::to_string(e));
    }
    out.element_live_[e] = 0;
  }
  for (ElemId e = 0; e < num_elements(); ++e) {
    if (out.element_live_[e] && !out.color_live_[colors_[e]]) {
      out.element_live_[e] = 0;
    }
  }
  for (SetId v : out.live_sets_) {
    if (!out.set_live_[v]) continue;
    auto& adj = out.adjacency_[v];
    std::erase_if(adj, [&](ElemId e) { return !out.element_live_[e]; });
  }
  out.Rebuild();
  return out;
}

CoverageInstance CoverageInstance::WithBudget(int budget) const {
  if (budget < 0) throw InputError("negative budget");
  CoverageInstance out = *this;
  out.budget_ = budget;
  out.original_budget_ = budget;
  return out;
}

CoverageInstance::Description CoverageInstance::ToDescription() const {
  for (char live : set_live_) {
    if (!live) throw InputError("cannot describe a pruned instance");
  }
  for (char live : element_live_) {
    if (!live) throw InputError("cannot describe a pruned instance");
  }
  for (char live : color_live_) {
    if (!live) throw InputError("cannot describe a pruned instance");
  }
  Description d;
  d.num_elements = num_elements();
  d.colors = colors_;
  d.sets = adjacency_;
  d.demands = demands_;
  d.budget = budget_;
  d.original_budget = original_budget_;
  return d;
}

int Assignment::Weight() const {
  int w = 0;
  for (uint8_t x : values) w += x ? 1 : 0;
  return w;
}

std::vector<int> Assignment::TrueVariables() const {
  std::vector<int> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

CnfInstance CnfInstance::Create(int num_vars,
                                std::vector<std::vector<Literal>> clauses,
                                std::vector<ColorId> clause_colors,
                                std::vector<Rational> demands, int budget) {
  if (num_vars < 0) throw InputError("negative variable count");
  if (budget < 0) throw InputError("negative budget");
  if (clauses.size() != clause_colors.size()) {
    throw InputError("clause and color arrays differ in length");
  }
  const int r = static_cast<int>(demands.size());
  std::vector<char> color_used(r, 0);
  for (size_t c = 0; c < clauses.size(); ++c) {
    auto& clause = clauses[c];
    for (Literal lit : clause) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw InputError("clause " + std::to_string(c + 1) +
                         " has invalid literal " + std::to_string(lit));
      }
    }
    std::sort(clause.begin(), clause.end(), [](Literal a, Literal b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    for (size_t i = 1; i < clause.size(); ++i) {
      if (clause[i] == -clause[i - 1]) {
        throw InputError("clause " + std::to_string(c + 1) +
                         " is tautological in variable " +
                         std::to_string(std::abs(clause[i])));
      }
    }
    const ColorId color = clause_colors[c];
    if (color < 0 || color >= r) {
      throw InputError("clause " + std::to_string(c + 1) +
                       " has color out of range");
    }
    color_used[color] = 1;
  }
  for (int j = 0; j < r; ++j) {
    if (!color_used[j]) {
      throw InputError("color " + std::to_string(j + 1) + " has no clauses");
    }
  }
  CnfInstance inst;
  inst.num_vars_ = num_vars;
  inst.clauses_ = std::move(clauses);
  inst.clause_colors_ = std::move(clause_colors);
  inst.demands_ = std::move(demands);
  inst.budget_ = budget;
  return inst;
}

bool CnfInstance::IsMonotone() const {
  for (const auto& clause : clauses_) {
    for (Literal lit : clause) {
      if (lit < 0) return false;
    }
  }
  return true;
}

bool CnfInstance::IsSatisfied(int clause, const Assignment& assignment) const {
  for (Literal lit : clauses_[clause]) {
    const bool value = assignment.values[std::abs(lit) - 1] != 0;
    if (value == (lit > 0)) return true;
  }
  return false;
}

std::vector<int64_t> CnfInstance::SatisfiedCounts(
    const Assignment& assignment) const {
  if (static_cast<int>(assignment.values.size()) != num_vars_) {
    throw InputError("assignment size does not match variable count");
  }
  std::vector<int64_t> counts(num_colors(), 0);
  for (int c = 0; c < num_clauses(); ++c) {
    if (IsSatisfied(c, assignment)) ++counts[clause_colors_[c]];
  }
  return counts;
}

MinRatio CnfInstance::SatisfactionRatio(std::span<const int64_t> counts) const {
  MinRatio best = MinRatio::Unbounded();
  for (int j = 0; j < num_colors(); ++j) {
    if (!demands_[j].IsPositive()) continue;
    const Rational ratio = Rational(counts[j]) / demands_[j];
    if (best.unbounded || ratio < best.value) best = MinRatio::Of(ratio);
  }
  return best;
}

bool CnfInstance::MeetsDemands(std::span<const int64_t> counts,
                               const Rational& factor) const {
  for (int j = 0; j < num_colors(); ++j) {
    if (Rational(counts[j]) < factor * demands_[j]) return false;
  }
  return true;
}

CoverageInstance CnfInstance::MonotoneEncoding() const {
  if (!IsMonotone()) throw InputError("formula has negative literals");
  CoverageInstance::Description d;
  d.num_elements = num_clauses();
  d.colors = clause_colors_;
  d.sets.assign(num_vars_, {});
  for (int c = 0; c < num_clauses(); ++c) {
    for (Literal lit : clauses_[c]) d.sets[lit - 1].push_back(c);
  }
  d.demands = demands_;
  d.budget = budget_;
  return CoverageInstance::Create(d);
}

}  // namespace fairmc
