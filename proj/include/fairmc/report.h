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

#ifndef FAIRMC_REPORT_H_
#define FAIRMC_REPORT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairmc/instance.h"
#include "fairmc/matroid.h"
#include "fairmc/random.h"
#include "fairmc/rational.h"
#include "fairmc/solve_result.h"

namespace fairmc {

struct RunReport {
  std::string instance;
  std::string algorithm;
  Rational epsilon;
  Seed seed = 0;
  std::optional<int> d;
  std::string matroid = "none";
  int64_t trials_planned = 0;
  int64_t trials_run = 0;
  SolveStatus outcome = SolveStatus::kNo;
  std::vector<int> solution;          // set ids, or 1-based true variables
  std::vector<int64_t> coverage;      // per color
  std::vector<Rational> demands;      // per color
  bool success = false;
  double wall_ms = 0;
};

// Recomputed from the instance alone: distinct live ids, at most budget()
// of them, independent in `matroid` when given, and coverage at least
// (1 - eps) t_j for every live color.
bool SolutionSucceeds(const CoverageInstance& inst,
                      std::span<const int> solution, const Rational& eps,
                      const MatroidOracle* matroid = nullptr);
// Same for formulas: distinct variables, at most budget() true, and
// satisfied clauses at least (1 - eps) t_i per color.
bool AssignmentSucceeds(const CnfInstance& phi, std::span<const int> solution,
                        const Rational& eps);

// Fills coverage, demands and success for `report.solution`.
void ScoreReport(const CoverageInstance& inst, const Rational& eps,
                 const MatroidOracle* matroid, RunReport& report);
void ScoreReport(const CnfInstance& phi, const Rational& eps,
                 RunReport& report);

std::string ReportTableHeader();
// Tab-separated, wall time last.
std::string ReportTableRow(const RunReport& report);
// One JSON object; wall time only when `with_timing`.
std::string ReportJson(const RunReport& report, bool with_timing = true);

}  // namespace fairmc

#endif  // FAIRMC_REPORT_H_
