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

#ifndef FAIRMC_SOLVE_RESULT_H_
#define FAIRMC_SOLVE_RESULT_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "fairmc/instance.h"

namespace fairmc {

enum class SolveStatus {
  kSolved,          // solution meets the acceptance predicate
  kNo,              // full repetition schedule ran without success
  kBudgetExceeded,  // schedule was larger than the cap; cap ran out first
};

std::string_view StatusName(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kNo;
  std::vector<SetId> solution;  // ascending; empty unless kSolved
  int64_t trials_planned = 0;   // after applying the cap
  int64_t trials_run = 0;
  bool capped = false;          // the uncapped schedule exceeded the cap
};

}  // namespace fairmc

#endif  // FAIRMC_SOLVE_RESULT_H_
