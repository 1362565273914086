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

#include "trihelix/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "trihelix/errors.hpp"
#include "trihelix/version.hpp"

namespace trihelix {
namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string format_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string axis_slug(std::string_view label, int index) {
  std::string out;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (out.empty()) out = "axis" + std::to_string(index);
  return out;
}

JointDistribution record_distribution(const CountRecord& r,
                                      NonePolicy policy) {
  const ValidationReport report = validate_counts(r);
  if (!report.ok()) {
    std::string message = "year " + std::to_string(r.year) + ":";
    for (const std::string& v : report.violations) message += " " + v + ";";
    message.pop_back();
    throw InconsistentCounts(message);
  }
  try {
    return distribution_from_table(contingency_from_counts(r), policy);
  } catch (const EmptyPopulation& e) {
    throw EmptyPopulation("year " + std::to_string(r.year) + ": " + e.what());
  }
}

constexpr const char* kPalette[] = {"#2c6fbb", "#c23b23", "#2e8b57",
                                    "#7d4bb6"};

}  // namespace

std::vector<BreakdownRow> compute_breakdown(
    std::span<const CountRecord> records, NonePolicy policy, Unit unit) {
  std::vector<BreakdownRow> rows;
  rows.reserve(records.size());
  for (const CountRecord& r : records) {
    const JointDistribution dist = record_distribution(r, policy);
    const int a0[] = {0}, a1[] = {1}, a2[] = {2};
    const int a01[] = {0, 1}, a02[] = {0, 2}, a12[] = {1, 2};
    auto as_unit = [&](TransmissionValue v) {
      return convert_units(v, unit).value;
    };
    BreakdownRow row;
    row.year = r.year;
    row.h_u = as_unit(entropy(marginalize(dist, a0)));
    row.h_i = as_unit(entropy(marginalize(dist, a1)));
    row.h_g = as_unit(entropy(marginalize(dist, a2)));
    row.t_ui = as_unit(transmission2(marginalize(dist, a01)));
    row.t_ug = as_unit(transmission2(marginalize(dist, a02)));
    row.t_ig = as_unit(transmission2(marginalize(dist, a12)));
    row.t_uig = as_unit(transmission3_entropy_form(dist));
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const BreakdownRow& a, const BreakdownRow& b) {
              return a.year < b.year;
            });
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].year == rows[k - 1].year) {
      throw DuplicateYear("year " + std::to_string(rows[k].year) +
                              " appears more than once",
                          rows[k].year);
    }
  }
  return rows;
}

std::string render_breakdown_csv(std::span<const BreakdownRow> rows,
                                 Unit unit) {
  const std::string suffix = "_" + std::string(unit_name(unit));
  std::string out = "year";
  for (const char* column :
       {"h_u", "h_i", "h_g", "t_ui", "t_ug", "t_ig", "t_uig"}) {
    out += "," + std::string(column) + suffix;
  }
  out += "\n";
  for (const BreakdownRow& r : rows) {
    out += std::to_string(r.year);
    for (double v : {r.h_u, r.h_i, r.h_g, r.t_ui, r.t_ug, r.t_ig, r.t_uig}) {
      out += "," + format_value(v);
    }
    out += "\n";
  }
  return out;
}

std::string svg_line_chart(std::string_view title, std::string_view y_label,
                           std::span<const ChartSeries> series) {
  constexpr double kWidth = 720, kHeight = 440;
  constexpr double kLeft = 70, kRight = 700, kTop = 48, kBottom = 390;

  int year_min = 0, year_max = 0;
  double v_min = 0, v_max = 0;
  bool any = false;
  for (const ChartSeries& s : series) {
    for (const SeriesPoint& p : s.points) {
      if (!any) {
        year_min = year_max = p.year;
        v_min = v_max = p.value;
        any = true;
      } else {
        year_min = std::min(year_min, p.year);
        year_max = std::max(year_max, p.year);
        v_min = std::min(v_min, p.value);
        v_max = std::max(v_max, p.value);
      }
    }
  }
  if (!any) {
    year_min = year_max = 0;
    v_min = v_max = 0;
  }
  double pad = (v_max - v_min) * 0.06;
  if (pad <= 0) pad = std::abs(v_max) * 0.1 + 1.0;
  v_min -= pad;
  v_max += pad;

  auto x_of = [&](int year) {
    if (year_max == year_min) return (kLeft + kRight) / 2;
    return kLeft + (kRight - kLeft) * (year - year_min) /
                       static_cast<double>(year_max - year_min);
  };
  auto y_of = [&](double v) {
    return kBottom - (kBottom - kTop) * (v - v_min) / (v_max - v_min);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_coord(kWidth) + "\" height=\"" + format_coord(kHeight) +
         "\" viewBox=\"0 0 " + format_coord(kWidth) + " " +
         format_coord(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + format_coord(kWidth) +
         "\" height=\"" + format_coord(kHeight) + "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + format_coord(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" +
         escape_xml(title) + "</text>\n";
  svg += "<text x=\"12\" y=\"" + format_coord((kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 12 " +
         format_coord((kTop + kBottom) / 2) + ")\">" +
         escape_xml(y_label) + "</text>\n";

  // Horizontal grid and value ticks.
  constexpr int kTicks = 5;
  for (int t = 0; t < kTicks; ++t) {
    const double v = v_min + (v_max - v_min) * t / (kTicks - 1);
    const double y = y_of(v);
    svg += "<line x1=\"" + format_coord(kLeft) + "\" y1=\"" + format_coord(y) +
           "\" x2=\"" + format_coord(kRight) + "\" y2=\"" + format_coord(y) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + format_coord(kLeft - 8) + "\" y=\"" +
           format_coord(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           format_tick(v) + "</text>\n";
  }

  // Year ticks.
  const int span = year_max - year_min;
  const int step = span > 12 ? (span + 11) / 12 : 1;
  for (int year = year_min; year <= year_max; year += step) {
    const double x = x_of(year);
    svg += "<line x1=\"" + format_coord(x) + "\" y1=\"" +
           format_coord(kBottom) + "\" x2=\"" + format_coord(x) + "\" y2=\"" +
           format_coord(kBottom + 5) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + format_coord(x) + "\" y=\"" +
           format_coord(kBottom + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           std::to_string(year) + "</text>\n";
  }

  svg += "<line x1=\"" + format_coord(kLeft) + "\" y1=\"" +
         format_coord(kTop) + "\" x2=\"" + format_coord(kLeft) + "\" y2=\"" +
         format_coord(kBottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + format_coord(kLeft) + "\" y1=\"" +
         format_coord(kBottom) + "\" x2=\"" + format_coord(kRight) +
         "\" y2=\"" + format_coord(kBottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % 4];
    std::string pts;
    for (const SeriesPoint& p : series[s].points) {
      if (!pts.empty()) pts += " ";
      pts += format_coord(x_of(p.year)) + "," + format_coord(y_of(p.value));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    for (const SeriesPoint& p : series[s].points) {
      svg += "<circle cx=\"" + format_coord(x_of(p.year)) + "\" cy=\"" +
             format_coord(y_of(p.value)) + "\" r=\"2.5\" fill=\"" +
             std::string(color) + "\"/>\n";
    }
    const double ly = kTop + 16 * static_cast<double>(s);
    svg += "<rect x=\"" + format_coord(kRight - 150) + "\" y=\"" +
           format_coord(ly - 9) + "\" width=\"10\" height=\"10\" fill=\"" +
           std::string(color) + "\"/>\n";
    svg += "<text x=\"" + format_coord(kRight - 136) + "\" y=\"" +
           format_coord(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" +
           escape_xml(series[s].label) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

ReportBundle build_report(const DatasetDescriptor& dataset,
                          const ReportOptions& options) {
  ReportBundle bundle;
  bundle.dataset = dataset.name;

  const std::span<const CountRecord> records = dataset.records;
  const std::string unit_suffix = std::string(unit_name(options.unit));

  const std::vector<BreakdownRow> breakdown =
      compute_breakdown(records, options.none_policy, options.unit);
  bundle.files.push_back(
      {"breakdown.csv", render_breakdown_csv(breakdown, options.unit)});

  const TransmissionSeries series = transmission_series(
      records, options.none_policy, options.unit, dataset.name);
  bundle.files.push_back(
      {"transmission.csv",
       render_series_csv(series.points, "t_uig_" + unit_suffix)});

  const TransmissionSeries smoothed = moving_average(series, options.window);
  bundle.files.push_back(
      {"transmission_ma.csv",
       render_series_csv(smoothed.points,
                         "t_uig_ma" + std::to_string(options.window) + "_" +
                             unit_suffix)});

  const TrendReport trend = trend_summary(series, options.trend_k);
  nlohmann::ordered_json trend_json;
  trend_json["dataset"] = dataset.name;
  trend_json["quantity"] = "t_uig";
  trend_json["unit"] = std::string(unit_name(options.unit));
  trend_json["none_policy"] =
      std::string(none_policy_name(options.none_policy));
  trend_json["k"] = trend.k;
  trend_json["early_mean"] = trend.early_mean;
  trend_json["late_mean"] = trend.late_mean;
  trend_json["direction"] = std::string(trend_direction_name(trend.direction));
  bundle.files.push_back({"trend.json", trend_json.dump(2) + "\n"});

  const CountField fields[3] = {CountField::u, CountField::i, CountField::g};
  std::vector<ChartSeries> share_chart;
  for (int axis = 0; axis < 3; ++axis) {
    const std::vector<PercentPoint> shares =
        share_series(records, fields[axis]);
    std::vector<SeriesPoint> points;
    points.reserve(shares.size());
    for (const PercentPoint& p : shares) points.push_back({p.year, p.percent});
    const std::string slug = axis_slug(dataset.labels[axis], axis);
    bundle.files.push_back(
        {"share_" + slug + ".csv", render_series_csv(points, "percent")});
    share_chart.push_back({dataset.labels[axis], std::move(points)});
  }

  std::vector<ChartSeries> transmission_chart;
  transmission_chart.push_back({"yearly", series.points});
  transmission_chart.push_back(
      {"trailing mean, window " + std::to_string(options.window),
       smoothed.points});
  bundle.files.push_back(
      {"transmission.svg",
       svg_line_chart(dataset.name + ": three-way transmission",
                      "t_uig [" + unit_suffix + "]", transmission_chart)});
  bundle.files.push_back(
      {"shares.svg", svg_line_chart(dataset.name + ": share of yearly total",
                                    "share [%]", share_chart)});

  nlohmann::ordered_json provenance;
  provenance["tool"] = "trihelix";
  provenance["version"] = kVersion;
  provenance["dataset"] = dataset.name;
  provenance["labels"] = dataset.labels;
  provenance["source"] = dataset.source_note;
  provenance["caveats"] = dataset.caveats;
  provenance["settings"] = {
      {"none_policy", std::string(none_policy_name(options.none_policy))},
      {"unit", std::string(unit_name(options.unit))},
      {"window", options.window},
      {"trend_k", options.trend_k}};
  provenance["notes"] = {
      "moving averages are trailing windows labeled by their final year",
      "distributions come from eight-cell tables derived from overlapping "
      "counts by inclusion-exclusion",
      "years are reported in ascending order"};
  bundle.files.push_back({"provenance.json", provenance.dump(2) + "\n"});

  return bundle;
}

void write_report(const ReportBundle& bundle,
                  const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }
  for (const ReportFile& file : bundle.files) {
    const fs::path final_path = out_dir / file.name;
    const fs::path tmp_path = out_dir / (file.name + ".tmp");
    {
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write " + tmp_path.string());
      out.write(file.content.data(),
                static_cast<std::streamsize>(file.content.size()));
      if (!out) throw IoError("cannot write " + tmp_path.string());
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) {
      throw IoError("cannot move " + tmp_path.string() + " into place: " +
                    ec.message());
    }
  }
}

}  // namespace trihelix
