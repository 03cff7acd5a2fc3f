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

#ifndef FAIRMC_INSTANCE_H_
#define FAIRMC_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairmc/rational.h"

namespace fairmc {

// Dense 0-based identifiers. Pruned instances keep the id spaces of the
// instance they were derived from; removed ids are simply no longer live.
using SetId = int32_t;
using ElemId = int32_t;
using ColorId = int32_t;

// per_color[j] = |N_j(S)|, indexed by color id. Removed colors read 0.
struct CoverageVector {
  std::vector<int64_t> per_color;
  friend bool operator==(const CoverageVector&, const CoverageVector&) = default;
};

// min_j achieved_j / t_j over colors with positive demand. Unbounded when no
// color has positive demand; unbounded compares greater than any value.
struct MinRatio {
  bool unbounded = true;
  Rational value;

  static MinRatio Unbounded() { return MinRatio{}; }
  static MinRatio Of(Rational v) { return MinRatio{false, v}; }

  std::string ToString() const { return unbounded ? "inf" : value.ToString(); }

  friend bool operator==(const MinRatio& a, const MinRatio& b) {
    return a.unbounded == b.unbounded && (a.unbounded || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const MinRatio& a,
                                          const MinRatio& b) {
    if (a.unbounded || b.unbounded) {
      return static_cast<int>(a.unbounded) <=> static_cast<int>(b.unbounded);
    }
    return a.value <=> b.value;
  }
};

// Bipartite incidence structure of a fair maximum coverage instance: left
// vertices are sets, right vertices are colored elements, each color j has a
// demand t_j, and at most `budget` sets may be chosen. `original_budget` is
// the budget of the root instance and survives pruning unchanged.
//
// Instances are immutable; derived instances are produced by Residual().
class CoverageInstance {
 public:
  struct Description {
    int num_elements = 0;
    std::vector<ColorId> colors;               // per element
    std::vector<std::vector<ElemId>> sets;     // per set, element ids
    std::vector<Rational> demands;             // per color
    int budget = 0;
    std::optional<int> original_budget;        // defaults to budget
  };

  // Validates the description. With `require_surjective_colors` every color
  // must own at least one element (user-supplied instances); derived
  // instances such as reduction outputs may contain empty color classes.
  static CoverageInstance Create(const Description& description,
                                 bool require_surjective_colors = true);

  int num_sets() const { return static_cast<int>(adjacency_.size()); }
  int num_elements() const { return static_cast<int>(colors_.size()); }
  int num_colors() const { return static_cast<int>(demands_.size()); }

  bool IsLiveSet(SetId v) const;
  bool IsLiveElement(ElemId e) const;
  bool IsLiveColor(ColorId j) const;
  const std::vector<SetId>& live_sets() const { return live_sets_; }
  const std::vector<ColorId>& live_colors() const { return live_colors_; }

  // Live neighbors of a live set, ascending.
  std::span<const ElemId> Neighbors(SetId v) const;
  // Live sets containing a live element, ascending.
  std::span<const SetId> Containing(ElemId e) const;

  ColorId color(ElemId e) const { return colors_[e]; }
  const Rational& demand(ColorId j) const { return demands_[j]; }
  const std::vector<Rational>& demands() const { return demands_; }
  int budget() const { return budget_; }
  int original_budget() const { return original_budget_; }

  // Number of live elements of color j.
  int64_t ColorClassSize(ColorId j) const;

  // |N_j(v)|. Throws InputError for unknown or removed set/color ids.
  int JDegree(SetId v, ColorId j) const;
  // N_j(v), ascending.
  std::vector<ElemId> JNeighbors(SetId v, ColorId j) const;
  // |N_j(S)| for every color (union, not sum). S must hold distinct live sets.
  CoverageVector Coverage(std::span<const SetId> sets) const;
  // Largest number of live sets containing a single live element.
  int MaxFrequency() const;
  // True iff no d live sets share d live elements. Exhaustive; throws
  // SizeError when more than `enumeration_limit` search nodes are needed.
  bool IsKddFree(int d, int64_t enumeration_limit = 10'000'000) const;

  // per_color[j] >= factor * t_j for every live color j (exact).
  bool MeetsDemands(const CoverageVector& coverage,
                    const Rational& factor) const;
  MinRatio CoverageRatio(const CoverageVector& coverage) const;

  // Instance with the given sets, elements and colors removed, elements of
  // removed colors dropped as well, demands replaced and a new budget.
  // `demands` is indexed by color id over the full id space.
  CoverageInstance Residual(std::span<const SetId> drop_sets,
                            std::span<const ElemId> drop_elements,
                            std::span<const ColorId> drop_colors,
                            std::vector<Rational> demands, int budget) const;

  // Same structure, new budget; the new budget also becomes the original
  // budget (the result is treated as a fresh root instance).
  CoverageInstance WithBudget(int budget) const;

  // Description of a root instance (no removed ids). Throws InputError
  // otherwise.
  Description ToDescription() const;

  friend bool operator==(const CoverageInstance&,
                         const CoverageInstance&) = default;

 private:
  CoverageInstance() = default;
  void Rebuild();

  std::vector<std::vector<ElemId>> adjacency_;
  std::vector<std::vector<SetId>> containing_;
  std::vector<ColorId> colors_;
  std::vector<Rational> demands_;
  std::vector<char> set_live_;
  std::vector<char> element_live_;
  std::vector<char> color_live_;
  int budget_ = 0;
  int original_budget_ = 0;

  // Derived by Rebuild().
  std::vector<SetId> live_sets_;
  std::vector<ColorId> live_colors_;
  std::vector<int32_t> jdegree_;  // num_sets x num_colors
  std::vector<int64_t> class_size_;
};

// Signed DIMACS-style literal: +v or -v for variable v in [1, num_vars].
using Literal = int32_t;

struct Assignment {
  std::vector<uint8_t> values;  // index v-1 holds the value of variable v

  int Weight() const;
  // Variables set to 1, as 1-based ids.
  std::vector<int> TrueVariables() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// CNF formula with colored clauses, per-color demands and a weight budget.
class CnfInstance {
 public:
  // Rejects zero or out-of-range literals, tautological clauses, colors out
  // of range and colors without clauses. Repeated literals are merged.
  static CnfInstance Create(int num_vars,
                            std::vector<std::vector<Literal>> clauses,
                            std::vector<ColorId> clause_colors,
                            std::vector<Rational> demands, int budget);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  int num_colors() const { return static_cast<int>(demands_.size()); }
  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }
  ColorId clause_color(int c) const { return clause_colors_[c]; }
  const std::vector<ColorId>& clause_colors() const { return clause_colors_; }
  const std::vector<Rational>& demands() const { return demands_; }
  int budget() const { return budget_; }

  bool IsMonotone() const;
  bool IsSatisfied(int clause, const Assignment& assignment) const;
  // Satisfied clauses per color.
  std::vector<int64_t> SatisfiedCounts(const Assignment& assignment) const;
  MinRatio SatisfactionRatio(std::span<const int64_t> counts) const;
  // counts[i] >= factor * t_i for every color.
  bool MeetsDemands(std::span<const int64_t> counts,
                    const Rational& factor) const;

  // Set-system encoding of a monotone formula: one set per variable holding
  // the clauses it occurs in. Throws InputError on non-monotone input.
  CoverageInstance MonotoneEncoding() const;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  CnfInstance() = default;

  int num_vars_ = 0;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<ColorId> clause_colors_;
  std::vector<Rational> demands_;
  int budget_ = 0;
};

}  // namespace fairmc

#endif  // FAIRMC_INSTANCE_H_
