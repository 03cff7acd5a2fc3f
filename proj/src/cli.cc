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

#include "fairmc/cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fairmc/errors.h"
#include "fairmc/exact.h"
#include "fairmc/freqd.h"
#include "fairmc/generate.h"
#include "fairmc/instance.h"
#include "fairmc/io.h"
#include "fairmc/kddfree.h"
#include "fairmc/matroid.h"
#include "fairmc/reduction.h"
#include "fairmc/report.h"

namespace fairmc {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "0.3", "1/3" or "2".
Rational ParseNumber(const std::string& text) {
  const size_t dot = text.find('.');
  if (dot == std::string::npos) return Rational::Parse(text);
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 15 ||
      frac.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("malformed number \"" + text + "\"");
  }
  int64_t den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  const bool negative = !whole.empty() && whole[0] == '-';
  const std::string digits = negative ? whole.substr(1) : whole;
  const Rational int_part =
      digits.empty() ? Rational(0) : Rational::Parse(digits);
  Rational value = int_part + Rational(std::stoll(frac), den);
  return negative ? -value : value;
}

Rational ParseEpsilon(const std::string& text) {
  Rational eps;
  try {
    eps = ParseNumber(text);
  } catch (const InputError& e) {
    throw UsageError(std::string("--epsilon: ") + e.what());
  }
  if (!(eps > Rational(0)) || !(eps < Rational(1))) {
    throw UsageError("--epsilon must lie in (0, 1)");
  }
  return eps;
}

std::optional<int64_t> ParseTrials(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    size_t used = 0;
    const int64_t n = std::stoll(text, &used);
    if (used == text.size() && n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw UsageError("--trials expects a positive integer or 'auto'");
}

int ExitFor(SolveStatus status, bool success) {
  switch (status) {
    case SolveStatus::kSolved:
      return success ? kExitSolved : kExitNo;
    case SolveStatus::kNo:
      return kExitNo;
    case SolveStatus::kBudgetExceeded:
      return kExitBudgetExceeded;
  }
  return kExitNo;
}

struct SolverSettings {
  std::string algorithm = "freqd";
  std::string epsilon_text = "0.3";
  Seed seed = 0;
  std::string trials_text = "auto";
  std::optional<int64_t> trial_cap;
  std::optional<int> d;
  bool strict_kdd = false;
  bool derandomize = false;
};

void CheckAlgorithmFlags(const SolverSettings& s) {
  if (s.algorithm != "freqd" && s.algorithm != "kdd" &&
      s.algorithm != "exact") {
    throw UsageError("unknown algorithm \"" + s.algorithm + "\"");
  }
  if (s.algorithm == "kdd" && !s.d.has_value()) {
    throw UsageError("--algorithm kdd needs --d");
  }
  if (s.algorithm != "kdd" && (s.strict_kdd || s.derandomize)) {
    throw UsageError("--strict-kdd and --derandomize apply to kdd only");
  }
  if (s.trial_cap.has_value() && *s.trial_cap < 1) {
    throw UsageError("--trial-cap must be positive");
  }
}

std::string MatroidName(const MatroidOracle* m) {
  if (m == nullptr) return "none";
  switch (m->kind()) {
    case MatroidOracle::Kind::kUniform:
      return "uniform";
    case MatroidOracle::Kind::kPartition:
      return "partition";
    case MatroidOracle::Kind::kLinear:
      return "linear";
  }
  return "unknown";
}

RunReport RunCoverage(const CoverageInstance& inst, const std::string& id,
                      const SolverSettings& s, const MatroidOracle* matroid) {
  const Rational eps = ParseEpsilon(s.epsilon_text);
  const std::optional<int64_t> trials = ParseTrials(s.trials_text);
  RunReport report;
  report.instance = id;
  report.algorithm = s.algorithm;
  report.epsilon = eps;
  report.seed = s.seed;
  report.d = s.d;
  report.matroid = MatroidName(matroid);
  const auto start = std::chrono::steady_clock::now();
  if (s.algorithm == "exact") {
    const ExactResult r = matroid != nullptr
                              ? ExactPccdsMatroid(inst, *matroid)
                              : ExactPccds(inst);
    report.outcome = r.feasible ? SolveStatus::kSolved : SolveStatus::kNo;
    report.solution = r.best_solution;
    report.trials_planned = report.trials_run = r.subsets_enumerated;
  } else {
    SolveResult r;
    if (s.algorithm == "freqd") {
      SolveOptions options;
      options.trials = trials;
      if (s.trial_cap) options.trial_cap = *s.trial_cap;
      r = matroid != nullptr
              ? PccdsMatroidSolve(inst, *matroid, eps, options, s.seed)
              : PccdsSolve(inst, eps, options, s.seed);
    } else {
      KddOptions options;
      options.d = *s.d;
      options.strict = s.strict_kdd;
      options.derandomize = s.derandomize;
      options.repetitions = trials;
      if (s.trial_cap) options.labeling_cap = *s.trial_cap;
      r = matroid != nullptr
              ? KddPccdsMatroid(inst, *matroid, eps, options, s.seed)
              : KddPccds(inst, eps, options, s.seed);
    }
    report.outcome = r.status;
    report.solution.assign(r.solution.begin(), r.solution.end());
    report.trials_planned = r.trials_planned;
    report.trials_run = r.trials_run;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  ScoreReport(inst, eps, matroid, report);
  return report;
}

RunReport RunFormulaExact(const CnfInstance& phi, const std::string& id,
                          const Rational& eps, Seed seed) {
  RunReport report;
  report.instance = id;
  report.algorithm = "exact";
  report.epsilon = eps;
  report.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  const ExactResult r = ExactMaxSat(phi);
  report.outcome = r.feasible ? SolveStatus::kSolved : SolveStatus::kNo;
  report.solution = r.best_solution;
  report.trials_planned = report.trials_run = r.subsets_enumerated;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  ScoreReport(phi, eps, report);
  return report;
}

RunReport RunReduction(const CnfInstance& phi, const std::string& id,
                       const Rational& eps, const std::string& solver_name,
                       const std::string& trials_text,
                       const std::optional<Rational>& p, Seed seed) {
  CoverageSolver solver;
  if (solver_name == "exact") {
    solver = ExactCoverageSolver();
  } else if (solver_name == "freqd") {
    solver = [eps](const CoverageInstance& cov,
                   Seed s) -> std::optional<std::vector<SetId>> {
      const SolveResult r = PccdsSolve(cov, eps, SolveOptions{}, s);
      if (r.status != SolveStatus::kSolved) return std::nullopt;
      return r.solution;
    };
  } else {
    throw UsageError("unknown reduction solver \"" + solver_name + "\"");
  }
  const std::optional<int64_t> trials = ParseTrials(trials_text);
  const int64_t rounds = trials.value_or(AutoReductionTrials(phi, eps));
  RunReport report;
  report.instance = id;
  report.algorithm = "reduce+" + solver_name;
  report.epsilon = eps;
  report.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  const ReduceSolveResult r = ReduceAndSolve(phi, eps, solver, rounds, seed, p);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  report.trials_planned = rounds;
  report.trials_run = r.rounds;
  if (r.has_assignment) report.solution = r.best.TrueVariables();
  ScoreReport(phi, eps, report);
  report.outcome =
      report.success ? SolveStatus::kSolved : SolveStatus::kNo;
  return report;
}

class ReportSink {
 public:
  ReportSink(std::ostream& out, const std::string& format) : out_(out) {
    if (format == "table") {
      table_ = true;
    } else if (format != "json-lines") {
      throw UsageError("--format must be table or json-lines");
    }
  }

  void Emit(const RunReport& report) {
    if (table_) {
      if (!header_done_) out_ << ReportTableHeader() << '\n';
      header_done_ = true;
      out_ << ReportTableRow(report) << '\n';
    } else {
      out_ << ReportJson(report) << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool table_ = false;
  bool header_done_ = false;
};

void WriteReportFile(const std::string& path, const RunReport& report) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path);
  file << ReportJson(report, /*with_timing=*/false) << '\n';
}

void AddSolverFlags(CLI::App* cmd, SolverSettings& s) {
  cmd->add_option("--algorithm", s.algorithm, "freqd, kdd or exact");
  cmd->add_option("--epsilon", s.epsilon_text, "accuracy in (0,1)");
  cmd->add_option("--seed", s.seed, "master seed");
  cmd->add_option("--trials", s.trials_text, "repetitions: n or auto");
  cmd->add_option("--trial-cap", s.trial_cap, "upper bound on repetitions");
  cmd->add_option("--d", s.d, "K_{d,d} parameter for kdd");
  cmd->add_flag("--strict-kdd", s.strict_kdd,
                "check K_{d,d}-freeness before solving");
  cmd->add_flag("--derandomize", s.derandomize,
                "use a perfect hash family instead of random labels");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Fair maximum coverage solvers", "fairmc"};
  app.require_subcommand(1);

  SolverSettings solve;
  std::string solve_input, solve_matroid, solve_format = "table", solve_out;
  CLI::App* cmd_solve = app.add_subcommand("solve", "solve one instance");
  cmd_solve->add_option("--input", solve_input, "instance file")->required();
  cmd_solve->add_option("--matroid", solve_matroid, "matroid file");
  cmd_solve->add_option("--format", solve_format, "table or json-lines");
  cmd_solve->add_option("--out", solve_out, "write the report as JSON");
  AddSolverFlags(cmd_solve, solve);

  std::string red_input, red_eps = "0.5", red_trials = "auto",
                         red_solver = "exact", red_p, red_format = "table",
                         red_out;
  Seed red_seed = 0;
  CLI::App* cmd_reduce =
      app.add_subcommand("reduce", "fair MaxSAT through coverage");
  cmd_reduce->add_option("--input", red_input, "colored CNF file")->required();
  cmd_reduce->add_option("--epsilon", red_eps, "accuracy in (0,1)");
  cmd_reduce->add_option("--seed", red_seed, "master seed");
  cmd_reduce->add_option("--trials", red_trials, "rounds: n or auto");
  cmd_reduce->add_option("--solver", red_solver, "exact or freqd");
  cmd_reduce->add_option("--p", red_p, "probability of a true variable");
  cmd_reduce->add_option("--format", red_format, "table or json-lines");
  cmd_reduce->add_option("--out", red_out, "write the report as JSON");

  std::string ver_input, ver_solution, ver_matroid, ver_eps = "0",
                                                    ver_format = "table";
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check a claimed solution");
  cmd_verify->add_option("--input", ver_input, "instance file")->required();
  cmd_verify->add_option("--solution", ver_solution, "solution JSON file")
      ->required();
  cmd_verify->add_option("--matroid", ver_matroid, "matroid file");
  cmd_verify->add_option("--epsilon", ver_eps, "slack in [0,1)");
  cmd_verify->add_option("--format", ver_format, "table or json-lines");

  SolverSettings bench;
  bench.algorithm.clear();
  std::string bench_kind = "freq-d", bench_format = "table",
              bench_mode = "planted";
  std::vector<std::string> bench_algorithms = {"freqd", "exact"};
  std::vector<std::string> bench_eps = {"0.3"};
  std::vector<int> bench_n = {10}, bench_m = {12}, bench_k = {2},
                   bench_r = {1}, bench_dd = {2};
  int bench_instances = 10;
  CLI::App* cmd_bench = app.add_subcommand("bench", "parameter sweep");
  cmd_bench->add_option("--kind", bench_kind, "freq-d, kdd-free or cnf");
  cmd_bench->add_option("--algorithms", bench_algorithms, "algorithm list")
      ->delimiter(',');
  cmd_bench->add_option("--instances", bench_instances, "instances per cell");
  cmd_bench->add_option("--n", bench_n, "sets or variables")->delimiter(',');
  cmd_bench->add_option("--m", bench_m, "elements or clauses")
      ->delimiter(',');
  cmd_bench->add_option("--k", bench_k, "budgets")->delimiter(',');
  cmd_bench->add_option("--r", bench_r, "color counts")->delimiter(',');
  cmd_bench->add_option("--gen-d", bench_dd, "frequency or K_{d,d} values")
      ->delimiter(',');
  cmd_bench->add_option("--epsilon", bench_eps, "accuracies")->delimiter(',');
  cmd_bench->add_option("--demand-mode", bench_mode, "planted or random");
  cmd_bench->add_option("--seed", bench.seed, "master seed");
  cmd_bench->add_option("--trials", bench.trials_text, "repetitions");
  cmd_bench->add_option("--trial-cap", bench.trial_cap, "repetition cap");
  cmd_bench->add_option("--format", bench_format, "table or json-lines");

  std::string gen_kind = "freq-d", gen_mode = "planted", gen_out,
              gen_planted;
  GeneratorParams gen;
  Seed gen_seed = 0;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate an instance");
  cmd_gen->add_option("--kind", gen_kind, "freq-d, kdd-free or cnf");
  cmd_gen->add_option("--n", gen.num_sets, "sets or variables");
  cmd_gen->add_option("--m", gen.num_elements, "elements or clauses");
  cmd_gen->add_option("--d", gen.d, "frequency bound or K_{d,d} parameter");
  cmd_gen->add_option("--r", gen.num_colors, "colors");
  cmd_gen->add_option("--k", gen.budget, "budget");
  cmd_gen->add_option("--width", gen.clause_width, "clause width");
  cmd_gen->add_flag("--monotone", gen.monotone, "positive literals only");
  cmd_gen->add_option("--demand-mode", gen_mode, "planted or random");
  cmd_gen->add_option("--seed", gen_seed, "seed");
  cmd_gen->add_option("--out", gen_out, "instance file (default stdout)");
  cmd_gen->add_option("--planted", gen_planted,
                      "write the planted solution as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_solve) {
      CheckAlgorithmFlags(solve);
      ReportSink sink(out, solve_format);
      RunReport report;
      if (DetectInstanceKind(solve_input) == InstanceKind::kCnf) {
        if (solve.algorithm != "exact" || !solve_matroid.empty()) {
          throw UsageError(
              "formulas are solved with --algorithm exact or 'reduce'");
        }
        report = RunFormulaExact(ReadColoredCnf(solve_input), solve_input,
                                 ParseEpsilon(solve.epsilon_text), solve.seed);
      } else {
        const CoverageInstance inst = ReadSetSystem(solve_input);
        std::optional<MatroidOracle> matroid;
        if (!solve_matroid.empty()) {
          matroid = ReadMatroid(solve_matroid, inst.num_sets());
        }
        report = RunCoverage(inst, solve_input, solve,
                             matroid ? &*matroid : nullptr);
      }
      sink.Emit(report);
      WriteReportFile(solve_out, report);
      return ExitFor(report.outcome, report.success);
    }
    if (*cmd_reduce) {
      ReportSink sink(out, red_format);
      const Rational eps = ParseEpsilon(red_eps);
      std::optional<Rational> p;
      if (!red_p.empty()) {
        try {
          p = ParseNumber(red_p);
        } catch (const InputError& e) {
          throw UsageError(std::string("--p: ") + e.what());
        }
      }
      const RunReport report =
          RunReduction(ReadColoredCnf(red_input), red_input, eps, red_solver,
                       red_trials, p, red_seed);
      sink.Emit(report);
      WriteReportFile(red_out, report);
      return ExitFor(report.outcome, report.success);
    }
    if (*cmd_verify) {
      ReportSink sink(out, ver_format);
      Rational eps;
      try {
        eps = ParseNumber(ver_eps);
      } catch (const InputError& e) {
        throw UsageError(std::string("--epsilon: ") + e.what());
      }
      if (eps < Rational(0) || !(eps < Rational(1))) {
        throw UsageError("--epsilon must lie in [0, 1)");
      }
      RunReport report;
      report.instance = ver_input;
      report.algorithm = "verify";
      report.epsilon = eps;
      report.solution = ReadSolution(ver_solution);
      if (DetectInstanceKind(ver_input) == InstanceKind::kCnf) {
        if (!ver_matroid.empty()) {
          throw UsageError("--matroid applies to set systems only");
        }
        ScoreReport(ReadColoredCnf(ver_input), eps, report);
      } else {
        const CoverageInstance inst = ReadSetSystem(ver_input);
        std::optional<MatroidOracle> matroid;
        if (!ver_matroid.empty()) {
          matroid = ReadMatroid(ver_matroid, inst.num_sets());
          report.matroid = MatroidName(&*matroid);
        }
        ScoreReport(inst, eps, matroid ? &*matroid : nullptr, report);
      }
      report.outcome =
          report.success ? SolveStatus::kSolved : SolveStatus::kNo;
      sink.Emit(report);
      return report.success ? kExitSolved : kExitNo;
    }
    if (*cmd_bench) {
      ReportSink sink(out, bench_format);
      if (bench_instances < 1) throw UsageError("--instances must be positive");
      const bool formulas = bench_kind == "cnf";
      if (!formulas && bench_kind != "freq-d" && bench_kind != "kdd-free") {
        throw UsageError("unknown kind \"" + bench_kind + "\"");
      }
      for (const std::string& a : bench_algorithms) {
        const bool ok = formulas ? (a == "reduce" || a == "exact")
                                 : (a == "freqd" || a == "kdd" || a == "exact");
        if (!ok) throw UsageError("algorithm \"" + a + "\" does not fit kind");
      }
      const DemandMode mode = ParseDemandMode(bench_mode);
      uint64_t cell = 0;
      for (int n : bench_n) {
        for (int m : bench_m) {
          for (int k : bench_k) {
            for (int r : bench_r) {
              for (int dd : bench_dd) {
                for (const std::string& eps_text : bench_eps) {
                  const Rational eps = ParseEpsilon(eps_text);
                  GeneratorParams params;
                  params.num_sets = n;
                  params.num_elements = m;
                  params.budget = k;
                  params.num_colors = r;
                  params.d = dd;
                  params.demand_mode = mode;
                  for (int i = 0; i < bench_instances; ++i) {
                    const Seed inst_seed = DeriveSeed(
                        bench.seed, cell * bench_instances + i);
                    const Seed run_seed = DeriveSeed(inst_seed, 1);
                    const std::string id = "cell" + std::to_string(cell) +
                                           "-i" + std::to_string(i);
                    if (formulas) {
                      const CnfInstance phi =
                          GenerateCnf(params, inst_seed).formula;
                      for (const std::string& a : bench_algorithms) {
                        sink.Emit(a == "exact"
                                      ? RunFormulaExact(phi, id, eps, run_seed)
                                      : RunReduction(phi, id, eps, "exact",
                                                     bench.trials_text,
                                                     std::nullopt, run_seed));
                      }
                      continue;
                    }
                    const CoverageInstance inst =
                        bench_kind == "freq-d"
                            ? GenerateFrequencyInstance(params, inst_seed)
                                  .instance
                            : GenerateKddFreeInstance(params, inst_seed)
                                  .instance;
                    for (const std::string& a : bench_algorithms) {
                      SolverSettings s = bench;
                      s.algorithm = a;
                      s.epsilon_text = eps_text;
                      s.seed = run_seed;
                      if (a == "kdd") s.d = dd;
                      sink.Emit(RunCoverage(inst, id, s, nullptr));
                    }
                  }
                  ++cell;
                }
              }
            }
          }
        }
      }
      return kExitSolved;
    }
    if (*cmd_gen) {
      gen.demand_mode = ParseDemandMode(gen_mode);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!gen_out.empty()) {
        file.open(gen_out);
        if (!file) throw DataError("cannot write " + gen_out);
        sink = &file;
      }
      std::vector<int> planted;
      if (gen_kind == "cnf") {
        GeneratedCnf g = GenerateCnf(gen, gen_seed);
        WriteColoredCnf(g.formula, *sink);
        planted = g.planted;
      } else if (gen_kind == "freq-d" || gen_kind == "kdd-free") {
        GeneratedCoverage g = gen_kind == "freq-d"
                                  ? GenerateFrequencyInstance(gen, gen_seed)
                                  : GenerateKddFreeInstance(gen, gen_seed);
        WriteSetSystem(g.instance, *sink);
        planted.assign(g.planted.begin(), g.planted.end());
      } else {
        throw UsageError("unknown kind \"" + gen_kind + "\"");
      }
      if (!gen_planted.empty()) {
        std::ofstream pf(gen_planted);
        if (!pf) throw DataError("cannot write " + gen_planted);
        pf << "{\"solution\": [";
        for (size_t i = 0; i < planted.size(); ++i) {
          pf << (i ? ", " : "") << planted[i];
        }
        pf << "]}\n";
      }
      return kExitSolved;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const InputError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace fairmc
