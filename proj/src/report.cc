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

#include "fairmc/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fairmc {
namespace {

bool Distinct(std::span<const int> ids) {
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

template <typename T>
std::string Join(const std::vector<T>& values, char sep) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

bool SolutionSucceeds(const CoverageInstance& inst,
                      std::span<const int> solution, const Rational& eps,
                      const MatroidOracle* matroid) {
  if (!Distinct(solution)) return false;
  if (static_cast<int>(solution.size()) > inst.budget()) return false;
  for (int v : solution) {
    if (!inst.IsLiveSet(v)) return false;
  }
  if (matroid != nullptr) {
    for (int v : solution) {
      if (!matroid->InGround(v)) return false;
    }
    if (!matroid->IsIndependent(solution)) return false;
  }
  return inst.MeetsDemands(inst.Coverage(solution), Rational(1) - eps);
}

bool AssignmentSucceeds(const CnfInstance& phi, std::span<const int> solution,
                        const Rational& eps) {
  if (!Distinct(solution)) return false;
  if (static_cast<int>(solution.size()) > phi.budget()) return false;
  Assignment a;
  a.values.assign(phi.num_vars(), 0);
  for (int x : solution) {
    if (x < 1 || x > phi.num_vars()) return false;
    a.values[x - 1] = 1;
  }
  return phi.MeetsDemands(phi.SatisfiedCounts(a), Rational(1) - eps);
}

void ScoreReport(const CoverageInstance& inst, const Rational& eps,
                 const MatroidOracle* matroid, RunReport& report) {
  std::vector<int> valid;
  for (int v : report.solution) {
    if (inst.IsLiveSet(v)) valid.push_back(v);
  }
  std::sort(valid.begin(), valid.end());
  valid.erase(std::unique(valid.begin(), valid.end()), valid.end());
  report.coverage = inst.Coverage(valid).per_color;
  report.demands = inst.demands();
  report.success = SolutionSucceeds(inst, report.solution, eps, matroid);
}

void ScoreReport(const CnfInstance& phi, const Rational& eps,
                 RunReport& report) {
  Assignment a;
  a.values.assign(phi.num_vars(), 0);
  for (int x : report.solution) {
    if (x >= 1 && x <= phi.num_vars()) a.values[x - 1] = 1;
  }
  report.coverage = phi.SatisfiedCounts(a);
  report.demands = phi.demands();
  report.success = AssignmentSucceeds(phi, report.solution, eps);
}

std::string ReportTableHeader() {
  return "instance\talgorithm\tepsilon\tseed\td\tmatroid\ttrials_planned\t"
         "trials_run\toutcome\tsolution\tcoverage\tdemands\tsuccess\twall_ms";
}

std::string ReportTableRow(const RunReport& report) {
  std::ostringstream out;
  out << report.instance << '\t' << report.algorithm << '\t' << report.epsilon
      << '\t' << report.seed << '\t'
      << (report.d ? std::to_string(*report.d) : "-") << '\t' << report.matroid
      << '\t' << report.trials_planned << '\t' << report.trials_run << '\t'
      << StatusName(report.outcome) << '\t'
      << (report.solution.empty() ? "-" : Join(report.solution, ',')) << '\t'
      << Join(report.coverage, ',') << '\t' << Join(report.demands, ',')
      << '\t' << (report.success ? "true" : "false") << '\t' << std::fixed
      << std::setprecision(3) << report.wall_ms;
  return out.str();
}

std::string ReportJson(const RunReport& report, bool with_timing) {
  nlohmann::ordered_json doc;
  doc["instance"] = report.instance;
  doc["algorithm"] = report.algorithm;
  doc["epsilon"] = report.epsilon.ToString();
  doc["seed"] = report.seed;
  doc["d"] = report.d ? nlohmann::ordered_json(*report.d)
                      : nlohmann::ordered_json(nullptr);
  doc["matroid"] = report.matroid;
  doc["trials_planned"] = report.trials_planned;
  doc["trials_run"] = report.trials_run;
  doc["outcome"] = std::string(StatusName(report.outcome));
  doc["solution"] = report.solution;
  doc["coverage"] = report.coverage;
  std::vector<std::string> demands;
  for (const Rational& t : report.demands) demands.push_back(t.ToString());
  doc["demands"] = demands;
  doc["success"] = report.success;
  if (with_timing) doc["wall_ms"] = report.wall_ms;
  return doc.dump();
}

}  // namespace fairmc
