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

#include "fairmc/generate.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fairmc/errors.h"

namespace fairmc {
namespace {

void Shuffle(std::vector<int>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.UniformBelow(i)]);
  }
}

// `count` distinct values from [0, n), ascending.
std::vector<int> SampleDistinct(int n, int count, Rng& rng) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + rng.UniformBelow(n - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<ColorId> OntoColors(int m, int r, Rng& rng) {
  std::vector<int> colors(m);
  for (int e = 0; e < m; ++e) {
    colors[e] = e < r ? e : static_cast<int>(rng.UniformBelow(r));
  }
  Shuffle(colors, rng);
  return colors;
}

void CheckParams(const GeneratorParams& p) {
  if (p.num_sets < 1 || p.num_elements < 1 || p.d < 1 || p.num_colors < 1 ||
      p.budget < 0 || p.max_attempts < 1) {
    throw InputError("generator parameters must be positive");
  }
  if (p.num_colors > p.num_elements) {
    throw InputError("more colors than elements");
  }
  if (p.budget > p.num_sets) throw InputError("budget exceeds the set count");
  if (p.budget == 0 && p.demand_mode == DemandMode::kPlanted) {
    throw InputError("planted demands need a positive budget");
  }
}

// Sets demands on `desc`; false when a planted color ends up uncovered.
bool AssignDemands(const GeneratorParams& params,
                   CoverageInstance::Description& desc,
                   std::vector<SetId>& planted, Rng& rng) {
  const int r = params.num_colors;
  std::vector<int64_t> class_size(r, 0);
  for (ColorId c : desc.colors) ++class_size[c];
  desc.demands.assign(r, Rational(0));
  planted.clear();
  if (params.demand_mode == DemandMode::kRandom) {
    for (int j = 0; j < r; ++j) {
      desc.demands[j] = Rational(
          1 + static_cast<int64_t>(rng.UniformBelow(class_size[j])));
    }
    return true;
  }
  planted = SampleDistinct(params.num_sets, params.budget, rng);
  std::vector<char> covered(desc.num_elements, 0);
  for (SetId v : planted) {
    for (ElemId e : desc.sets[v]) covered[e] = 1;
  }
  std::vector<int64_t> count(r, 0);
  for (ElemId e = 0; e < desc.num_elements; ++e) {
    if (covered[e]) ++count[desc.colors[e]];
  }
  for (int j = 0; j < r; ++j) {
    if (count[j] == 0) return false;
    desc.demands[j] = Rational(count[j]);
  }
  return true;
}

// Would adding e to set v close a K_{d,d}?
bool ClosesBiclique(const std::vector<std::vector<char>>& member,
                    const std::vector<std::vector<SetId>>& containing, SetId v,
                    ElemId e, int d) {
  std::vector<SetId> others;
  for (SetId w : containing[e]) {
    if (w != v) others.push_back(w);
  }
  const int need = d - 1;
  if (static_cast<int>(others.size()) < need) return false;
  const int m = static_cast<int>(member[v].size());
  std::vector<int> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  const int n = static_cast<int>(others.size());
  while (true) {
    int common = 0;
    for (ElemId x = 0; x < m && common < need; ++x) {
      if (x == e || !member[v][x]) continue;
      bool all = true;
      for (int i : pick) {
        if (!member[others[i]][x]) {
          all = false;
          break;
        }
      }
      if (all) ++common;
    }
    if (common >= need) return true;
    int i = need - 1;
    while (i >= 0 && pick[i] == n - need + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

DemandMode ParseDemandMode(std::string_view name) {
  if (name == "planted") return DemandMode::kPlanted;
  if (name == "random") return DemandMode::kRandom;
  throw InputError("unknown demand mode \"" + std::string(name) + "\"");
}

GeneratedCoverage GenerateFrequencyInstance(const GeneratorParams& params,
                                            Seed seed) {
  CheckParams(params);
  Rng rng(seed);
  const int n = params.num_sets;
  const int m = params.num_elements;
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    CoverageInstance::Description desc;
    desc.num_elements = m;
    desc.colors = OntoColors(m, params.num_colors, rng);
    desc.sets.assign(n, {});
    const int max_freq = std::min(params.d, n);
    for (ElemId e = 0; e < m; ++e) {
      const int f = 1 + static_cast<int>(rng.UniformBelow(max_freq));
      for (SetId v : SampleDistinct(n, f, rng)) desc.sets[v].push_back(e);
    }
    desc.budget = params.budget;
    std::vector<SetId> planted;
    if (!AssignDemands(params, desc, planted, rng)) continue;
    return GeneratedCoverage{CoverageInstance::Create(desc),
                             std::move(planted)};
  }
  throw SizeError("frequency generator exceeded its attempt cap");
}

GeneratedCoverage GenerateKddFreeInstance(const GeneratorParams& params,
                                          Seed seed) {
  CheckParams(params);
  Rng rng(seed);
  const int n = params.num_sets;
  const int m = params.num_elements;
  const int d = params.d;
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    CoverageInstance::Description desc;
    desc.num_elements = m;
    desc.colors = OntoColors(m, params.num_colors, rng);
    std::vector<std::vector<char>> member(n, std::vector<char>(m, 0));
    std::vector<std::vector<SetId>> containing(m);
    for (ElemId e = 0; e < m; ++e) {
      const int target = 1 + static_cast<int>(rng.UniformBelow(
                                 std::min(d + 1, n)));
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      Shuffle(order, rng);
      for (SetId v : order) {
        if (static_cast<int>(containing[e].size()) == target) break;
        if (ClosesBiclique(member, containing, v, e, d)) continue;
        member[v][e] = 1;
        containing[e].push_back(v);
      }
    }
    desc.sets.assign(n, {});
    for (SetId v = 0; v < n; ++v) {
      for (ElemId e = 0; e < m; ++e) {
        if (member[v][e]) desc.sets[v].push_back(e);
      }
    }
    desc.budget = params.budget;
    std::vector<SetId> planted;
    if (!AssignDemands(params, desc, planted, rng)) continue;
    CoverageInstance inst = CoverageInstance::Create(desc);
    if (!inst.IsKddFree(d)) continue;
    return GeneratedCoverage{std::move(inst), std::move(planted)};
  }
  throw SizeError("K_{d,d}-free generator exceeded its attempt cap");
}

GeneratedCnf GenerateCnf(const GeneratorParams& params, Seed seed) {
  CheckParams(params);
  if (params.clause_width < 1 || params.clause_width > params.num_sets) {
    throw InputError("clause width must lie in [1, variables]");
  }
  Rng rng(seed);
  const int n = params.num_sets;
  const int m = params.num_elements;
  const int r = params.num_colors;
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    const std::vector<ColorId> colors = OntoColors(m, r, rng);
    std::vector<std::vector<Literal>> clauses(m);
    for (auto& clause : clauses) {
      for (int x : SampleDistinct(n, params.clause_width, rng)) {
        const bool negative = !params.monotone && rng.UniformBelow(2) == 1;
        clause.push_back(negative ? -(x + 1) : x + 1);
      }
    }
    std::vector<int64_t> class_size(r, 0);
    for (ColorId c : colors) ++class_size[c];
    std::vector<Rational> demands(r);
    std::vector<int> planted;
    if (params.demand_mode == DemandMode::kRandom) {
      for (int j = 0; j < r; ++j) {
        demands[j] = Rational(
            1 + static_cast<int64_t>(rng.UniformBelow(class_size[j])));
      }
    } else {
      Assignment a;
      a.values.assign(n, 0);
      for (int x : SampleDistinct(n, params.budget, rng)) {
        a.values[x] = 1;
        planted.push_back(x + 1);
      }
      std::vector<int64_t> count(r, 0);
      for (int c = 0; c < m; ++c) {
        for (Literal lit : clauses[c]) {
          if ((lit > 0) == (a.values[std::abs(lit) - 1] == 1)) {
            ++count[colors[c]];
            break;
          }
        }
      }
      if (std::find(count.begin(), count.end(), 0) != count.end()) continue;
      for (int j = 0; j < r; ++j) demands[j] = Rational(count[j]);
    }
    return GeneratedCnf{
        CnfInstance::Create(n, std::move(clauses), colors, std::move(demands),
                            params.budget),
        std::move(planted)};
  }
  throw SizeError("formula generator exceeded its attempt cap");
}

MatroidOracle RandomLinearMatroid(int ground_size, int rank,
                                  const std::vector<int>& independent,
                                  Seed seed, int max_attempts) {
  if (rank < 1 || ground_size < 1) {
    throw InputError("matroid needs positive rank and ground size");
  }
  if (static_cast<int>(independent.size()) > rank) {
    throw InputError("planted independent set is larger than the rank");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<int64_t>> columns(ground_size,
                                              std::vector<int64_t>(rank));
    for (auto& col : columns) {
      for (auto& x : col) x = static_cast<int64_t>(rng.UniformBelow(2));
    }
    MatroidOracle m = MatroidOracle::Linear(2, columns);
    if (m.Rank() == rank && m.IsIndependent(independent)) return m;
  }
  throw SizeError("linear matroid generator exceeded its attempt cap");
}

}  // namespace fairmc
