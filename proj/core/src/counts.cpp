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

#include "trihelix/counts.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "trihelix/errors.hpp"

namespace trihelix {
namespace {

// Signed 128-bit keeps every inclusion-exclusion intermediate exact for any
// uint64 inputs, so negativity checks are never confused by wraparound.
using Wide = __int128;

std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 mag =
      neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

struct WideCells {
  // Index = 4u + 2i + g, same as ContingencyTable.
  Wide cells[8];
};

WideCells derive_cells(const CountRecord& r) {
  const Wide u = r.u, i = r.i, g = r.g, ui = r.ui, ug = r.ug, ig = r.ig,
             uig = r.uig, total = r.total;
  WideCells w;
  w.cells[7] = uig;                       // u&i&g
  w.cells[6] = ui - uig;                  // u&i only
  w.cells[5] = ug - uig;                  // u&g only
  w.cells[3] = ig - uig;                  // i&g only
  w.cells[4] = u - ui - ug + uig;         // u only
  w.cells[2] = i - ui - ig + uig;         // i only
  w.cells[1] = g - ug - ig + uig;         // g only
  w.cells[0] = total - (u + i + g - ui - ug - ig + uig);  // none
  return w;
}

}  // namespace

std::string_view count_field_name(CountField field) {
  switch (field) {
    case CountField::u:
      return "u";
    case CountField::i:
      return "i";
    case CountField::g:
      return "g";
    case CountField::ui:
      return "ui";
    case CountField::ug:
      return "ug";
    case CountField::ig:
      return "ig";
    case CountField::uig:
      return "uig";
  }
  throw Error("unknown count field");
}

std::string_view cell_name(std::size_t index) {
  static constexpr std::string_view kNames[8] = {
      "none", "g_only", "i_only", "ig_only",
      "u_only", "ug_only", "ui_only", "uig"};
  if (index >= 8) throw Error("cell index out of range");
  return kNames[index];
}

ValidationReport validate_counts(const CountRecord& r) {
  ValidationReport report;
  auto check = [&](bool ok, const std::string& message) {
    if (!ok) report.violations.push_back(message);
  };

  check(r.uig <= r.ui, "uig exceeds ui");
  check(r.uig <= r.ug, "uig exceeds ug");
  check(r.uig <= r.ig, "uig exceeds ig");
  check(r.ui <= r.u && r.ui <= r.i, "ui exceeds a singleton count");
  check(r.ug <= r.u && r.ug <= r.g, "ug exceeds a singleton count");
  check(r.ig <= r.i && r.ig <= r.g, "ig exceeds a singleton count");

  const WideCells w = derive_cells(r);
  for (std::size_t k = 0; k < 8; ++k) {
    if (w.cells[k] < 0) {
      report.violations.push_back("derived cell " + std::string(cell_name(k)) +
                                  " is negative (" +
                                  wide_to_string(w.cells[k]) + ")");
    }
  }
  return report;
}

ContingencyTable::ContingencyTable(std::array<std::uint64_t, 8> cells,
                                   std::array<std::string, 3> labels)
    : cells_(cells), labels_(std::move(labels)) {}

std::uint64_t ContingencyTable::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : cells_) sum += c;
  return sum;
}

std::uint64_t ContingencyTable::union_size() const {
  return total() - cells_[0];
}

ContingencyTable contingency_from_counts(const CountRecord& r) {
  const WideCells w = derive_cells(r);
  std::array<std::uint64_t, 8> cells{};
  for (std::size_t k = 0; k < 8; ++k) {
    if (w.cells[k] < 0) {
      throw InconsistentCounts(
          "year " + std::to_string(r.year) + ": derived cell " +
              std::string(cell_name(k)) + " is negative (" +
              wide_to_string(w.cells[k]) + ")",
          std::string(cell_name(k)));
    }
    cells[k] = static_cast<std::uint64_t>(w.cells[k]);
  }
  return ContingencyTable(cells, r.labels);
}

CountRecord counts_from_table(const ContingencyTable& t, int year) {
  CountRecord r;
  r.year = year;
  r.labels = t.labels();
  for (int u = 0; u < 2; ++u) {
    for (int i = 0; i < 2; ++i) {
      for (int g = 0; g < 2; ++g) {
        const std::uint64_t c = t.cell(u, i, g);
        if (u) r.u += c;
        if (i) r.i += c;
        if (g) r.g += c;
        if (u && i) r.ui += c;
        if (u && g) r.ug += c;
        if (i && g) r.ig += c;
        if (u && i && g) r.uig += c;
        r.total += c;
      }
    }
  }
  return r;
}

std::string_view none_policy_name(NonePolicy policy) {
  switch (policy) {
    case NonePolicy::include_none:
      return "include_none";
    case NonePolicy::exclude_none:
      return "exclude_none";
  }
  throw Error("unknown none policy");
}

NonePolicy none_policy_from_name(std::string_view name) {
  if (name == "include" || name == "include_none") {
    return NonePolicy::include_none;
  }
  if (name == "exclude" || name == "exclude_none") {
    return NonePolicy::exclude_none;
  }
  throw Error("unknown none policy \"" + std::string(name) +
              "\" (expected include or exclude)");
}

JointDistribution distribution_from_table(const ContingencyTable& t,
                                          NonePolicy policy) {
  const std::uint64_t denom = policy == NonePolicy::include_none
                                  ? t.total()
                                  : t.union_size();
  if (denom == 0) {
    throw EmptyPopulation(policy == NonePolicy::include_none
                              ? "table is empty"
                              : "no item matches any pattern");
  }
  std::vector<double> probs(8, 0.0);
  const double d = static_cast<double>(denom);
  const std::size_t first = policy == NonePolicy::include_none ? 0 : 1;
  for (std::size_t k = first; k < 8; ++k) {
    probs[k] = static_cast<double>(t.cells()[k]) / d;
  }
  return JointDistribution(3, std::move(probs));
}

std::vector<PercentPoint> share_series(std::span<const CountRecord> records,
                                       CountField field) {
  std::vector<PercentPoint> out;
  out.reserve(records.size());
  for (const CountRecord& r : records) {
    if (r.total == 0) {
      throw EmptyPopulation("year " + std::to_string(r.year) +
                            " has zero total");
    }
    std::uint64_t numerator = 0;
    switch (field) {
      case CountField::u:
        numerator = r.u;
        break;
      case CountField::i:
        numerator = r.i;
        break;
      case CountField::g:
        numerator = r.g;
        break;
      case CountField::ui:
        numerator = r.ui;
        break;
      case CountField::ug:
        numerator = r.ug;
        break;
      case CountField::ig:
        numerator = r.ig;
        break;
      case CountField::uig:
        numerator = r.uig;
        break;
    }
    out.push_back({r.year, 100.0 * static_cast<double>(numerator) /
                               static_cast<double>(r.total)});
  }
  std::sort(out.begin(), out.end(),
            [](const PercentPoint& a, const PercentPoint& b) {
              return a.year < b.year;
            });
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].year == out[k - 1].year) {
      throw DuplicateYear("year " + std::to_string(out[k].year) +
                              " appears more than once",
                          out[k].year);
    }
  }
  return out;
}

}  // namespace trihelix
