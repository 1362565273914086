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
// Report generation: per-year entropy/transmission breakdowns, share series,
// trend summaries, SVG charts, and a provenance block tying the numbers to
// their settings and source caveats. All output is deterministic; rerunning
// a report writes byte-identical files.

#ifndef TRIHELIX_REPORT_HPP_
#define TRIHELIX_REPORT_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trihelix/counts.hpp"
#include "trihelix/datasets.hpp"
#include "trihelix/infotheory.hpp"
#include "trihelix/timeseries.hpp"

namespace trihelix {

// One year of marginal entropies and transmissions, all in one unit.
struct BreakdownRow {
  int year = 0;
  double h_u = 0.0;
  double h_i = 0.0;
  double h_g = 0.0;
  double t_ui = 0.0;
  double t_ug = 0.0;
  double t_ig = 0.0;
  double t_uig = 0.0;
};

std::vector<BreakdownRow> compute_breakdown(std::span<const CountRecord> records,
                                            NonePolicy policy, Unit unit);

// Header: year,h_u_<unit>,...,t_uig_<unit>. Values round-trip exactly.
std::string render_breakdown_csv(std::span<const BreakdownRow> rows,
                                 Unit unit);

struct ReportOptions {
  NonePolicy none_policy = NonePolicy::exclude_none;
  Unit unit = Unit::millibit;
  int window = 2;   // moving-average width
  int trend_k = 3;  // early/late mean width
};

// A named file rendered to bytes, relative to the report directory.
struct ReportFile {
  std::string name;
  std::string content;
};

struct ReportBundle {
  std::string dataset;
  std::vector<ReportFile> files;
};

// Builds every report file in memory:
//   breakdown.csv          per-year entropies and transmissions
//   transmission.csv       the three-way series
//   transmission_ma.csv    its trailing moving average
//   trend.json             early/late means and direction
//   share_<axis>.csv (x3)  percent share per axis
//   transmission.svg       raw + smoothed chart
//   shares.svg             all three share curves on one chart
//   provenance.json        settings, source note, caveats
ReportBundle build_report(const DatasetDescriptor& dataset,
                          const ReportOptions& options);

// Writes each file under out_dir (created if needed), atomically per file.
// Throws IoError on any filesystem failure.
void write_report(const ReportBundle& bundle,
                  const std::filesystem::path& out_dir);

// A single polyline on a chart.
struct ChartSeries {
  std::string label;
  std::vector<SeriesPoint> points;
};

// Self-contained deterministic SVG line chart, one polyline per series.
std::string svg_line_chart(std::string_view title, std::string_view y_label,
                           std::span<const ChartSeries> series);

}  // namespace trihelix

#endif  // TRIHELIX_REPORT_HPP_
