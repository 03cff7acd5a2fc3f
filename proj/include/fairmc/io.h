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

#ifndef FAIRMC_IO_H_
#define FAIRMC_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fairmc/errors.h"
#include "fairmc/instance.h"
#include "fairmc/matroid.h"

namespace fairmc {

// Malformed file contents; the message starts with "source:line:col:" when a
// position is known.
class ParseError : public DataError {
 public:
  ParseError(std::string_view source, int line, int column,
             const std::string& message);
  explicit ParseError(const std::string& message) : DataError(message) {}
};

// Colored CNF:
//   p ccnf <nvars> <nclauses> <ncolors> <k>
//   d <color> <t>            one per color; t is "n" or "n/d"
//   <color> <lit>... 0       one per clause
// Colors are 1-based in the file, '#' starts a comment line.
CnfInstance ParseColoredCnf(std::istream& in,
                            std::string_view source = "<input>");
CnfInstance ReadColoredCnf(const std::filesystem::path& path);
void WriteColoredCnf(const CnfInstance& phi, std::ostream& out);

// JSON set system with keys "elements", "colors" (0-based color per
// element), "sets", "demands" (strings or integers), "k" and optional
// "kstar".
CoverageInstance ParseSetSystem(std::istream& in,
                                std::string_view source = "<input>");
CoverageInstance ReadSetSystem(const std::filesystem::path& path);
void WriteSetSystem(const CoverageInstance& inst, std::ostream& out);

// JSON matroid over set ids 0..ground_size-1: {"type": "uniform", "rank"},
// {"type": "partition", "blocks", "capacities"} or
// {"type": "linear", "field", "columns"}.
MatroidOracle ParseMatroid(std::istream& in, int ground_size,
                           std::string_view source = "<input>");
MatroidOracle ReadMatroid(const std::filesystem::path& path, int ground_size);

// The "solution" array of a JSON document (set ids, or 1-based true
// variables for formulas).
std::vector<int> ParseSolution(std::istream& in,
                               std::string_view source = "<input>");
std::vector<int> ReadSolution(const std::filesystem::path& path);

// Which parser a file needs, by its first meaningful character.
enum class InstanceKind { kCnf, kSetSystem };
InstanceKind DetectInstanceKind(const std::filesystem::path& path);

}  // namespace fairmc

#endif  // FAIRMC_IO_H_
