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

#ifndef FAIRMC_GENERATE_H_
#define FAIRMC_GENERATE_H_

#include <string_view>
#include <vector>

#include "fairmc/instance.h"
#include "fairmc/matroid.h"
#include "fairmc/random.h"

namespace fairmc {

enum class DemandMode {
  kPlanted,  // demands equal the coverage of a hidden size-k solution
  kRandom,   // demands uniform in [1, class size]
};

DemandMode ParseDemandMode(std::string_view name);

struct GeneratorParams {
  int num_sets = 10;      // variables for formulas
  int num_elements = 12;  // clauses for formulas
  int d = 2;              // frequency bound, or the K_{d,d} parameter
  int num_colors = 1;
  int budget = 2;
  DemandMode demand_mode = DemandMode::kPlanted;
  int clause_width = 3;
  bool monotone = false;
  int max_attempts = 1000;
};

struct GeneratedCoverage {
  CoverageInstance instance;
  std::vector<SetId> planted;  // empty in random mode
};

struct GeneratedCnf {
  CnfInstance formula;
  std::vector<int> planted;    // 1-based true variables; empty in random mode
};

// Every element lies in 1..d sets; colors are onto. In planted mode every
// color gets a positive demand (resampled up to max_attempts times).
GeneratedCoverage GenerateFrequencyInstance(const GeneratorParams& params,
                                            Seed seed);

// Edges are added one at a time and skipped when they would close a K_{d,d};
// the result is checked once more at the end.
GeneratedCoverage GenerateKddFreeInstance(const GeneratorParams& params,
                                          Seed seed);

// Clauses over clause_width distinct variables with random signs (all
// positive when monotone).
GeneratedCnf GenerateCnf(const GeneratorParams& params, Seed seed);

// GF(2) matroid of the given rank whose columns at `independent` are
// linearly independent.
MatroidOracle RandomLinearMatroid(int ground_size, int rank,
                                  const std::vector<int>& independent,
                                  Seed seed, int max_attempts = 1000);

}  // namespace fairmc

#endif  // FAIRMC_GENERATE_H_
