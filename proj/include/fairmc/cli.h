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

#ifndef FAIRMC_CLI_H_
#define FAIRMC_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace fairmc {

inline constexpr int kExitSolved = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitBudgetExceeded = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

// Runs the fairmc command line; `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace fairmc

#endif  // FAIRMC_CLI_H_
