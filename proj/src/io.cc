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

#include "fairmc/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fairmc {
namespace {

using nlohmann::json;

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<int64_t> ToInt(std::string_view s) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

json ParseJson(std::istream& in, std::string_view source) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

[[noreturn]] void Fail(std::string_view source, const std::string& what) {
  throw ParseError(std::string(source) + ": " + what);
}

const json& Field(const json& doc, const char* key, std::string_view source) {
  if (!doc.is_object() || !doc.contains(key)) {
    Fail(source, std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

int64_t AsInt(const json& v, std::string_view source, const char* what) {
  if (!v.is_number_integer()) Fail(source, std::string(what) + " must be an integer");
  return v.get<int64_t>();
}

int AsSmallInt(const json& v, std::string_view source, const char* what) {
  const int64_t x = AsInt(v, source, what);
  if (x < std::numeric_limits<int>::min() ||
      x > std::numeric_limits<int>::max()) {
    Fail(source, std::string(what) + " is out of range");
  }
  return static_cast<int>(x);
}

std::vector<int> AsIntArray(const json& v, std::string_view source,
                            const char* what) {
  if (!v.is_array()) Fail(source, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const json& x : v) out.push_back(AsSmallInt(x, source, what));
  return out;
}

Rational AsRational(const json& v, std::string_view source) {
  try {
    if (v.is_number_integer()) return Rational(v.get<int64_t>());
    if (v.is_string()) return Rational::Parse(v.get<std::string>());
  } catch (const InputError& e) {
    Fail(source, e.what());
  }
  Fail(source, "demand must be a string or an integer");
}

}  // namespace

ParseError::ParseError(std::string_view source, int line, int column,
                       const std::string& message)
    : DataError(std::string(source) + ":" + std::to_string(line) + ":" +
                std::to_string(column) + ": " + message) {}

CnfInstance ParseColoredCnf(std::istream& in, std::string_view source) {
  bool have_header = false;
  int64_t num_vars = 0, num_clauses = 0, num_colors = 0, budget = 0;
  std::vector<std::optional<Rational>> demands;
  std::vector<std::vector<Literal>> clauses;
  std::vector<ColorId> clause_colors;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    auto fail = [&](const Token& at, const std::string& msg) {
      throw ParseError(source, line_no, at.column, msg);
    };
    if (!have_header) {
      if (tokens[0].text != "p" || tokens.size() != 6 ||
          tokens[1].text != "ccnf") {
        fail(tokens[0], "expected header 'p ccnf <nvars> <nclauses> "
                        "<ncolors> <k>'");
      }
      int64_t* fields[] = {&num_vars, &num_clauses, &num_colors, &budget};
      for (int i = 0; i < 4; ++i) {
        const std::optional<int64_t> v = ToInt(tokens[2 + i].text);
        if (!v || *v < 0 || *v > (1 << 30)) {
          fail(tokens[2 + i], "malformed header field");
        }
        *fields[i] = *v;
      }
      if (num_colors < 1) fail(tokens[4], "at least one color is required");
      demands.assign(num_colors, std::nullopt);
      have_header = true;
      continue;
    }
    if (tokens[0].text == "p") fail(tokens[0], "duplicate header");
    if (tokens[0].text == "d") {
      if (tokens.size() != 3) fail(tokens[0], "expected 'd <color> <t>'");
      const std::optional<int64_t> color = ToInt(tokens[1].text);
      if (!color || *color < 1 || *color > num_colors) {
        fail(tokens[1], "color out of range");
      }
      if (demands[*color - 1].has_value()) {
        fail(tokens[1], "duplicate demand for color " +
                            std::to_string(*color));
      }
      try {
        demands[*color - 1] = Rational::Parse(tokens[2].text);
      } catch (const InputError& e) {
        fail(tokens[2], e.what());
      }
      continue;
    }
    const std::optional<int64_t> color = ToInt(tokens[0].text);
    if (!color) fail(tokens[0], "expected a clause color");
    if (*color < 1 || *color > num_colors) fail(tokens[0], "color out of range");
    if (tokens.size() < 2 || tokens.back().text != "0") {
      fail(tokens.back(), "clause must end with 0");
    }
    if (static_cast<int64_t>(clauses.size()) >= num_clauses) {
      fail(tokens[0], "more clauses than declared");
    }
    std::vector<Literal> clause;
    for (size_t i = 1; i + 1 < tokens.size(); ++i) {
      const std::optional<int64_t> lit = ToInt(tokens[i].text);
      if (!lit) fail(tokens[i], "malformed literal");
      if (*lit == 0) fail(tokens[i], "literal 0 inside clause body");
      if (*lit > num_vars || -*lit > num_vars) {
        fail(tokens[i], "variable out of range");
      }
      for (Literal prev : clause) {
        if (prev == -*lit) fail(tokens[i], "tautological clause");
      }
      clause.push_back(static_cast<Literal>(*lit));
    }
    clauses.push_back(std::move(clause));
    clause_colors.push_back(static_cast<ColorId>(*color - 1));
  }
  if (!have_header) throw ParseError(source, line_no + 1, 1, "missing header");
  if (static_cast<int64_t>(clauses.size()) != num_clauses) {
    throw ParseError(source, line_no + 1, 1,
                     "expected " + std::to_string(num_clauses) +
                         " clauses, found " + std::to_string(clauses.size()));
  }
  std::vector<Rational> t;
  for (int64_t j = 0; j < num_colors; ++j) {
    if (!demands[j]) {
      throw ParseError(source, line_no + 1, 1,
                       "missing demand for color " + std::to_string(j + 1));
    }
    t.push_back(*demands[j]);
  }
  try {
    return CnfInstance::Create(static_cast<int>(num_vars), std::move(clauses),
                               std::move(clause_colors), std::move(t),
                               static_cast<int>(budget));
  } catch (const InputError& e) {
    Fail(source, e.what());
  }
}

CnfInstance ReadColoredCnf(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseColoredCnf(in, path.string());
}

void WriteColoredCnf(const CnfInstance& phi, std::ostream& out) {
  out << "p ccnf " << phi.num_vars() << ' ' << phi.num_clauses() << ' '
      << phi.num_colors() << ' ' << phi.budget() << '\n';
  for (ColorId j = 0; j < phi.num_colors(); ++j) {
    out << "d " << j + 1 << ' ' << phi.demands()[j] << '\n';
  }
  for (int c = 0; c < phi.num_clauses(); ++c) {
    out << phi.clause_color(c) + 1;
    for (Literal lit : phi.clauses()[c]) out << ' ' << lit;
    out << " 0\n";
  }
}

CoverageInstance ParseSetSystem(std::istream& in, std::string_view source) {
  const json doc = ParseJson(in, source);
  CoverageInstance::Description desc;
  desc.num_elements = AsSmallInt(Field(doc, "elements", source), source,
                                 "elements");
  desc.colors = AsIntArray(Field(doc, "colors", source), source, "colors");
  const json& sets = Field(doc, "sets", source);
  if (!sets.is_array()) Fail(source, "sets must be an array");
  for (const json& s : sets) desc.sets.push_back(AsIntArray(s, source, "sets"));
  const json& demands = Field(doc, "demands", source);
  if (!demands.is_array()) Fail(source, "demands must be an array");
  for (const json& t : demands) desc.demands.push_back(AsRational(t, source));
  desc.budget = AsSmallInt(Field(doc, "k", source), source, "k");
  if (doc.contains("kstar")) {
    desc.original_budget = AsSmallInt(doc.at("kstar"), source, "kstar");
  }
  try {
    return CoverageInstance::Create(desc);
  } catch (const InputError& e) {
    Fail(source, e.what());
  }
}

CoverageInstance ReadSetSystem(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseSetSystem(in, path.string());
}

void WriteSetSystem(const CoverageInstance& inst, std::ostream& out) {
  const CoverageInstance::Description desc = inst.ToDescription();
  json doc;
  doc["elements"] = desc.num_elements;
  doc["colors"] = desc.colors;
  doc["sets"] = desc.sets;
  json demands = json::array();
  for (const Rational& t : desc.demands) demands.push_back(t.ToString());
  doc["demands"] = demands;
  doc["k"] = desc.budget;
  if (inst.original_budget() != inst.budget()) {
    doc["kstar"] = inst.original_budget();
  }
  out << doc.dump() << '\n';
}

MatroidOracle ParseMatroid(std::istream& in, int ground_size,
                           std::string_view source) {
  const json doc = ParseJson(in, source);
  const json& type = Field(doc, "type", source);
  if (!type.is_string()) Fail(source, "type must be a string");
  const std::string kind = type.get<std::string>();
  try {
    if (kind == "uniform") {
      return MatroidOracle::Uniform(
          ground_size, AsSmallInt(Field(doc, "rank", source), source, "rank"));
    }
    if (kind == "partition") {
      const json& blocks = Field(doc, "blocks", source);
      if (!blocks.is_array()) Fail(source, "blocks must be an array");
      std::vector<std::vector<int>> parts;
      for (const json& b : blocks) {
        parts.push_back(AsIntArray(b, source, "blocks"));
      }
      return MatroidOracle::Partition(
          ground_size, parts,
          AsIntArray(Field(doc, "capacities", source), source, "capacities"));
    }
    if (kind == "linear") {
      const int64_t prime = AsInt(Field(doc, "field", source), source, "field");
      const json& cols = Field(doc, "columns", source);
      if (!cols.is_array()) Fail(source, "columns must be an array");
      std::vector<std::vector<int64_t>> columns;
      for (const json& c : cols) {
        if (!c.is_array()) Fail(source, "each column must be an array");
        std::vector<int64_t> col;
        for (const json& x : c) col.push_back(AsInt(x, source, "columns"));
        columns.push_back(std::move(col));
      }
      if (static_cast<int>(columns.size()) != ground_size) {
        Fail(source, "linear matroid needs one column per set");
      }
      return MatroidOracle::Linear(prime, columns);
    }
  } catch (const InputError& e) {
    Fail(source, e.what());
  }
  Fail(source, "unknown matroid type \"" + kind + "\"");
}

MatroidOracle ReadMatroid(const std::filesystem::path& path, int ground_size) {
  std::ifstream in = OpenOrThrow(path);
  return ParseMatroid(in, ground_size, path.string());
}

std::vector<int> ParseSolution(std::istream& in, std::string_view source) {
  const json doc = ParseJson(in, source);
  return AsIntArray(Field(doc, "solution", source), source, "solution");
}

std::vector<int> ReadSolution(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseSolution(in, path.string());
}

InstanceKind DetectInstanceKind(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  std::string line;
  while (std::getline(in, line)) {
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    return tokens[0].text.front() == '{' ? InstanceKind::kSetSystem
                                         : InstanceKind::kCnf;
  }
  throw DataError(path.string() + ": empty file");
}

}  // namespace fairmc
