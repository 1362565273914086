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

#ifndef TRIHELIX_TIMESERIES_HPP_
#define TRIHELIX_TIMESERIES_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trihelix/counts.hpp"
#include "trihelix/infotheory.hpp"

namespace trihelix {

struct SeriesPoint {
  int year = 0;
  double value = 0.0;

  bool operator==(const SeriesPoint&) const = default;
};

// A yearly transmission series with the settings it was produced under.
struct TransmissionSeries {
  std::vector<SeriesPoint> points;  // sorted ascending by year
  Unit unit = Unit::bit;
  NonePolicy none_policy = NonePolicy::exclude_none;
  std::string source;  // dataset name or file tag, may be empty
};

// Three-way transmission per year. Records are validated first; a bad record
// fails with the year named in the error. Years must be unique; output is
// sorted ascending regardless of input order.
TransmissionSeries transmission_series(std::span<const CountRecord> records,
                                       NonePolicy policy, Unit unit,
                                       std::string source = {});

// Trailing moving average: the point labeled year Y averages the window
// ending at Y, so the output is window-1 points shorter. window must be
// >= 1 (InvalidWindow) and <= series length (WindowTooLarge).
TransmissionSeries moving_average(const TransmissionSeries& series,
                                  int window);

enum class TrendDirection { rising, falling, flat };

std::string_view trend_direction_name(TrendDirection direction);

// Mean of the first k points vs mean of the last k. Ties within 1e-15 of
// zero difference count as flat.
struct TrendReport {
  double early_mean = 0.0;
  double late_mean = 0.0;
  int k = 0;
  TrendDirection direction = TrendDirection::flat;
};

// Requires 1 <= k <= length / 2, else InvalidWindow.
TrendReport trend_summary(const TransmissionSeries& series, int k);

// CSV with header "year,<column>" and one row per point, LF line endings.
// Values print with enough digits to round-trip exactly.
std::string render_series_csv(std::span<const SeriesPoint> points,
                              std::string_view column);

// Inverse of render_series_csv: returns the points and the value column's
// name. Throws FormatError (1-based line, field column) on malformed input
// and DuplicateYear on repeated years.
std::pair<std::vector<SeriesPoint>, std::string> parse_series_csv(
    std::string_view text);

}  // namespace trihelix

#endif  // TRIHELIX_TIMESERIES_HPP_
