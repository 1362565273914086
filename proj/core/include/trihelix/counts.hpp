// Copyright 2026 The trihelix Authors
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
//
// Overlapping hit counts and the 2x2x2 contingency tables derived from them.
//
// A CountRecord stores what a query interface reports: how many items hit
// each single pattern, each pair of patterns, all three, and how many items
// exist in total. Inclusion-exclusion turns that into the eight disjoint
// cells of a contingency table; the "none" cell is whatever the union leaves
// uncovered. Cell indexing matches JointDistribution: index = 4u + 2i + g.

#ifndef TRIHELIX_COUNTS_HPP_
#define TRIHELIX_COUNTS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trihelix/infotheory.hpp"

namespace trihelix {

inline constexpr std::array<const char*, 3> kDefaultLabels = {
    "university", "industry", "government"};

struct CountRecord {
  int year = 0;
  std::uint64_t u = 0;
  std::uint64_t i = 0;
  std::uint64_t g = 0;
  std::uint64_t ui = 0;
  std::uint64_t ug = 0;
  std::uint64_t ig = 0;
  std::uint64_t uig = 0;
  std::uint64_t total = 0;
  std::array<std::string, 3> labels = {kDefaultLabels[0], kDefaultLabels[1],
                                       kDefaultLabels[2]};

  bool operator==(const CountRecord&) const = default;
};

enum class CountField { u, i, g, ui, ug, ig, uig };

std::string_view count_field_name(CountField field);

// Every inclusion-exclusion violation in the record, empty when consistent.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_counts(const CountRecord& record);

// Names of the eight disjoint cells, in index order (4u + 2i + g):
// none, g_only, i_only, ig_only, u_only, ug_only, ui_only, uig.
std::string_view cell_name(std::size_t index);

class ContingencyTable {
 public:
  ContingencyTable(std::array<std::uint64_t, 8> cells,
                   std::array<std::string, 3> labels);

  std::uint64_t cell(int u, int i, int g) const {
    return cells_[static_cast<std::size_t>(4 * u + 2 * i + g)];
  }
  const std::array<std::uint64_t, 8>& cells() const { return cells_; }
  const std::array<std::string, 3>& labels() const { return labels_; }
  std::uint64_t total() const;
  // Items covered by at least one pattern (everything but the none-cell).
  std::uint64_t union_size() const;

  bool operator==(const ContingencyTable&) const = default;

 private:
  std::array<std::uint64_t, 8> cells_;
  std::array<std::string, 3> labels_;
};

// Inclusion-exclusion. Throws InconsistentCounts naming the first negative
// cell if the record is contradictory.
ContingencyTable contingency_from_counts(const CountRecord& record);

// Exact inverse of contingency_from_counts.
CountRecord counts_from_table(const ContingencyTable& table, int year);

// include_none keeps all eight cells over the grand total; exclude_none drops
// the none-cell and renormalizes over the union. Under exclude_none the
// none-cell probability is exactly zero.
enum class NonePolicy { include_none, exclude_none };

std::string_view none_policy_name(NonePolicy policy);
// Accepts "include", "exclude", and the full names; anything else throws.
NonePolicy none_policy_from_name(std::string_view name);

// Throws EmptyPopulation when the chosen denominator (total or union) is 0.
JointDistribution distribution_from_table(const ContingencyTable& table,
                                          NonePolicy policy);

struct PercentPoint {
  int year = 0;
  double percent = 0.0;

  bool operator==(const PercentPoint&) const = default;
};

// 100 * field / total per year, sorted ascending by year. Throws
// EmptyPopulation for a zero total and DuplicateYear for repeated years.
std::vector<PercentPoint> share_series(std::span<const CountRecord> records,
                                       CountField field);

}  // namespace trihelix

#endif  // TRIHELIX_COUNTS_HPP_
