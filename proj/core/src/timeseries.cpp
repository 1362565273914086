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

#include "trihelix/timeseries.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "trihelix/errors.hpp"

namespace trihelix {
namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

int parse_year_field(std::string_view field, int line, int column) {
  if (field.empty()) throw FormatError("empty year field", line, column);
  std::size_t k = field[0] == '-' ? 1 : 0;
  if (k == field.size()) throw FormatError("bad year field", line, column);
  long value = 0;
  for (; k < field.size(); ++k) {
    if (field[k] < '0' || field[k] > '9') {
      throw FormatError("year is not an integer: \"" + std::string(field) +
                            "\"",
                        line, column);
    }
    value = value * 10 + (field[k] - '0');
    if (value > 1000000) {
      throw FormatError("year out of range", line, column);
    }
  }
  return field[0] == '-' ? -static_cast<int>(value) : static_cast<int>(value);
}

double parse_double_field(std::string_view field, int line, int column) {
  if (field.empty()) throw FormatError("empty value field", line, column);
  std::string copy(field);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    throw FormatError("value is not a finite number: \"" + copy + "\"", line,
                      column);
  }
  return v;
}

}  // namespace

TransmissionSeries transmission_series(std::span<const CountRecord> records,
                                       NonePolicy policy, Unit unit,
                                       std::string source) {
  TransmissionSeries series;
  series.unit = unit;
  series.none_policy = policy;
  series.source = std::move(source);
  series.points.reserve(records.size());

  for (const CountRecord& r : records) {
    const ValidationReport report = validate_counts(r);
    if (!report.ok()) {
      std::string message = "year " + std::to_string(r.year) + ":";
      for (const std::string& v : report.violations) message += " " + v + ";";
      message.pop_back();
      throw InconsistentCounts(message);
    }
    const ContingencyTable table = contingency_from_counts(r);
    JointDistribution dist = [&] {
      try {
        return distribution_from_table(table, policy);
      } catch (const EmptyPopulation& e) {
        throw EmptyPopulation("year " + std::to_string(r.year) + ": " +
                              e.what());
      }
    }();
    const TransmissionValue t =
        convert_units(transmission3_entropy_form(dist), unit);
    series.points.push_back({r.year, t.value});
  }

  std::sort(series.points.begin(), series.points.end(),
            [](const SeriesPoint& a, const SeriesPoint& b) {
              return a.year < b.year;
            });
  for (std::size_t k = 1; k < series.points.size(); ++k) {
    if (series.points[k].year == series.points[k - 1].year) {
      throw DuplicateYear("year " + std::to_string(series.points[k].year) +
                              " appears more than once",
                          series.points[k].year);
    }
  }
  return series;
}

TransmissionSeries moving_average(const TransmissionSeries& series,
                                  int window) {
  if (window < 1) {
    throw InvalidWindow("window must be at least 1, got " +
                        std::to_string(window));
  }
  const std::size_t n = series.points.size();
  if (static_cast<std::size_t>(window) > n) {
    throw WindowTooLarge("window " + std::to_string(window) +
                         " exceeds series length " + std::to_string(n));
  }
  TransmissionSeries out;
  out.unit = series.unit;
  out.none_policy = series.none_policy;
  out.source = series.source;
  out.points.reserve(n - window + 1);
  for (std::size_t end = static_cast<std::size_t>(window); end <= n; ++end) {
    double sum = 0.0;
    for (std::size_t k = end - window; k < end; ++k) {
      sum += series.points[k].value;
    }
    out.points.push_back({series.points[end - 1].year, sum / window});
  }
  return out;
}

std::string_view trend_direction_name(TrendDirection direction) {
  switch (direction) {
    case TrendDirection::rising:
      return "rising";
    case TrendDirection::falling:
      return "falling";
    case TrendDirection::flat:
      return "flat";
  }
  throw Error("unknown trend direction");
}

TrendReport trend_summary(const TransmissionSeries& series, int k) {
  const std::size_t n = series.points.size();
  if (k < 1 || static_cast<std::size_t>(2 * k) > n) {
    throw InvalidWindow("trend width " + std::to_string(k) +
                        " needs a series of at least " + std::to_string(2 * k) +
                        " points, got " + std::to_string(n));
  }
  TrendReport report;
  report.k = k;
  double early = 0.0, late = 0.0;
  for (int j = 0; j < k; ++j) {
    early += series.points[static_cast<std::size_t>(j)].value;
    late += series.points[n - 1 - static_cast<std::size_t>(j)].value;
  }
  report.early_mean = early / k;
  report.late_mean = late / k;
  const double diff = report.late_mean - report.early_mean;
  if (std::abs(diff) <= 1e-15) {
    report.direction = TrendDirection::flat;
  } else {
    report.direction =
        diff > 0 ? TrendDirection::rising : TrendDirection::falling;
  }
  return report;
}

std::string render_series_csv(std::span<const SeriesPoint> points,
                              std::string_view column) {
  std::string out = "year," + std::string(column) + "\n";
  for (const SeriesPoint& p : points) {
    out += std::to_string(p.year) + "," + format_value(p.value) + "\n";
  }
  return out;
}

std::pair<std::vector<SeriesPoint>, std::string> parse_series_csv(
    std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || lines[0].empty()) {
    throw FormatError("missing header line", 1);
  }
  const std::vector<std::string_view> header = split_fields(lines[0]);
  if (header.size() != 2 || header[0] != "year" || header[1].empty()) {
    throw FormatError("header must be \"year,<column>\", got \"" +
                          std::string(lines[0]) + "\"",
                      1);
  }

  std::vector<SeriesPoint> points;
  std::unordered_set<int> seen_years;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    const int line_no = static_cast<int>(ln + 1);
    const std::vector<std::string_view> fields = split_fields(lines[ln]);
    if (fields.size() != 2) {
      throw FormatError("expected 2 fields, got " +
                            std::to_string(fields.size()),
                        line_no);
    }
    SeriesPoint p;
    p.year = parse_year_field(fields[0], line_no, 1);
    p.value = parse_double_field(fields[1], line_no, 2);
    if (!seen_years.insert(p.year).second) {
      throw DuplicateYear("year " + std::to_string(p.year) +
                              " appears more than once",
                          p.year);
    }
    points.push_back(p);
  }
  return {std::move(points), std::string(header[1])};
}

}  // namespace trihelix
