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

#include "trihelix/datasets.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "trihelix/errors.hpp"

namespace trihelix {
namespace {

struct RawRow {
  int year;
  std::uint64_t u, i, g, ui, ug, ig, uig, total;
};

// Yearly hits for "university"/"industry"/"government" and their Boolean
// combinations in the USPTO full-text patent database; total = patents
// issued that year.
constexpr RawRow kUsptoRows[] = {
    {1993, 3063, 9716, 2619, 401, 588, 334, 63, 110540},
    {1994, 3359, 10568, 2855, 479, 684, 390, 89, 114564},
    {1995, 3710, 10800, 2828, 529, 771, 410, 93, 114864},
    {1996, 4552, 12147, 3149, 703, 963, 488, 114, 122953},
    {1997, 5406, 12699, 3604, 814, 1199, 583, 168, 125884},
    {1998, 7623, 17068, 4708, 1254, 1658, 807, 266, 166801},
    {1999, 8326, 18553, 4856, 1352, 1735, 844, 235, 170265},
    {2000, 8488, 19368, 4831, 1399, 1776, 865, 267, 176350},
    {2001, 9190, 20812, 5136, 1591, 1868, 996, 296, 184172},
    {2002, 9228, 21089, 5242, 1619, 1928, 1047, 352, 184531},
};

// Yearly web-page hits for the same free-text terms from AltaVista advanced
// queries with year delineation (retrieved May 15, 2003); total = yearly
// url:* count.
constexpr RawRow kWebTextRows[] = {
    {1993, 2205, 441, 1041, 49, 49, 46, 25, 18437},
    {1994, 12722, 2178, 3579, 1007, 1174, 719, 391, 135265},
    {1995, 66719, 13190, 21187, 5140, 6861, 4541, 2036, 640967},
    {1996, 216548, 45938, 66839, 16257, 21729, 15894, 6945, 2308162},
    {1997, 478164, 110434, 166550, 37122, 51259, 35230, 16224, 5740624},
    {1998, 842665, 243611, 343066, 71306, 95478, 78922, 32318, 14379504},
    {1999, 1415659, 471387, 669844, 131979, 178892, 157446, 61899, 33053057},
    {2000, 3005285, 975976, 1385296, 245470, 342218, 298731, 117318,
     86537251},
    {2001, 5381142, 2419632, 3014141, 523922, 724722, 679407, 247734,
     186175482},
    {2002, 10408179, 7779754, 7301276, 1216090, 1646210, 1567669, 550263,
     492815972},
};

// Yearly counts of pages linking into .edu/.com/.gov from AltaVista link:
// queries with year delineation (retrieved May 15, 2003); total = yearly
// link:* count.
constexpr RawRow kWebLinkRows[] = {
    {1993, 721, 753, 26, 32, 16, 21, 13, 140631},
    {1994, 10653, 5969, 5070, 1281, 454, 1657, 264, 155429},
    {1995, 58559, 85344, 63208, 16060, 4168, 30666, 2707, 971806},
    {1996, 185571, 213755, 40505, 52853, 13816, 15191, 9713, 4215445},
    {1997, 383999, 586804, 76767, 118249, 25447, 29842, 18723, 8410235},
    {1998, 714592, 1512795, 206683, 177352, 49238, 59734, 33695, 21190676},
    {1999, 1410789, 3372441, 341635, 346610, 92354, 126961, 63192, 42521722},
    {2000, 2212642, 10057844, 577433, 622780, 194573, 244278, 151641,
     92177426},
    {2001, 3722856, 30497559, 1328142, 1344270, 373437, 599161, 305180,
     196204140},
    {2002, 8564790, 81698935, 4035084, 3058198, 1159347, 1758589, 757120,
     501734312},
};

std::vector<CountRecord> rows_to_records(std::span<const RawRow> rows,
                                         const std::array<std::string, 3>&
                                             labels) {
  std::vector<CountRecord> out;
  out.reserve(rows.size());
  for (const RawRow& row : rows) {
    CountRecord r;
    r.year = row.year;
    r.u = row.u;
    r.i = row.i;
    r.g = row.g;
    r.ui = row.ui;
    r.ug = row.ug;
    r.ig = row.ig;
    r.uig = row.uig;
    r.total = row.total;
    r.labels = labels;
    out.push_back(std::move(r));
  }
  return out;
}

DatasetDescriptor make_uspto() {
  DatasetDescriptor d;
  d.name = "uspto_1993_2002";
  d.labels = {"university", "industry", "government"};
  d.source_note =
      "Yearly hit counts for the free-text terms 'university', 'industry', "
      "and 'government' and their Boolean combinations in the full-text "
      "database of the U.S. Patent and Trademark Office, 1993-2002; the "
      "total column is the number of patents issued in each year.";
  d.caveats = {
      "Coverage here starts in 1993. The pre-1993 segment of this series "
      "(1976-1992), previously reported as roughly constant at -0.190 +/- "
      "0.008 (unit unstated by the source), cannot be recomputed from this "
      "dataset because the underlying yearly counts are not available.",
      "The free-text term 'industry' is a weak proxy for industrial "
      "activity: most patents held by firms never use the word, so the "
      "industrial dimension is systematically undercounted relative to "
      "assignee-based measures (which themselves capture only a minority "
      "of patents)."};
  d.records = rows_to_records(kUsptoRows, d.labels);
  return d;
}

DatasetDescriptor make_web_text() {
  DatasetDescriptor d;
  d.name = "web_text_1993_2002";
  d.labels = {"university", "industry", "government"};
  d.source_note =
      "Yearly web-page hit counts for the free-text terms 'university', "
      "'industry', and 'government' and their Boolean combinations, from "
      "AltaVista advanced search queries delineated by year as retrieved "
      "on May 15, 2003; the total column is the yearly count of pages "
      "matching url:*.";
  d.caveats = {
      "Search-engine counts are engine- and date-specific: pages are "
      "continuously rewritten and re-indexed, so these are snapshots from "
      "the retrieval date, not a stable archive of each year.",
      "The engine's undelineated grand total for url:* (1,504,185,772 "
      "pages at retrieval) exceeds the sum of the yearly totals; the "
      "yearly totals are used as the per-year populations here."};
  d.records = rows_to_records(kWebTextRows, d.labels);
  return d;
}

DatasetDescriptor make_web_links() {
  DatasetDescriptor d;
  d.name = "web_links_1993_2002";
  d.labels = {".edu", ".com", ".gov"};
  d.source_note =
      "Yearly counts of web pages linking into the .edu, .com, and .gov "
      "domains and their Boolean combinations, from AltaVista link: "
      "queries delineated by year as retrieved on May 15, 2003; the total "
      "column is the yearly count of pages matching link:*.";
  d.caveats = {
      "Search-engine counts are engine- and date-specific snapshots from "
      "the retrieval date.",
      ".edu and .gov are effectively U.S. domains while .com is used "
      "worldwide; links into .com outnumber the other two domains by an "
      "order of magnitude, which skews the joint distribution toward the "
      ".com axis."};
  d.records = rows_to_records(kWebLinkRows, d.labels);
  return d;
}

std::uint64_t parse_count_field(std::string_view field, int line, int column) {
  if (field.empty()) {
    throw FormatError("empty field", line, column);
  }
  std::uint64_t value = 0;
  for (char c : field) {
    if (c < '0' || c > '9') {
      throw FormatError("field is not a nonnegative integer: \"" +
                            std::string(field) + "\"",
                        line, column);
    }
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10) {
      throw FormatError("count too large: \"" + std::string(field) + "\"",
                        line, column);
    }
    value = value * 10 + digit;
  }
  return value;
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

}  // namespace

std::vector<CountRecord> parse_count_csv(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || lines[0] != kCountCsvHeader) {
    throw FormatError("header must be \"" + std::string(kCountCsvHeader) +
                          "\"",
                      1);
  }

  std::vector<CountRecord> records;
  std::unordered_set<int> seen_years;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    const int line_no = static_cast<int>(ln + 1);
    const std::vector<std::string_view> fields = split_fields(lines[ln]);
    if (fields.size() != 9) {
      throw FormatError("expected 9 fields, got " +
                            std::to_string(fields.size()),
                        line_no);
    }
    CountRecord r;
    const std::uint64_t year = parse_count_field(fields[0], line_no, 1);
    if (year > 1000000) {
      throw FormatError("year out of range", line_no, 1);
    }
    r.year = static_cast<int>(year);
    r.u = parse_count_field(fields[1], line_no, 2);
    r.i = parse_count_field(fields[2], line_no, 3);
    r.g = parse_count_field(fields[3], line_no, 4);
    r.ui = parse_count_field(fields[4], line_no, 5);
    r.ug = parse_count_field(fields[5], line_no, 6);
    r.ig = parse_count_field(fields[6], line_no, 7);
    r.uig = parse_count_field(fields[7], line_no, 8);
    r.total = parse_count_field(fields[8], line_no, 9);
    if (!seen_years.insert(r.year).second) {
      throw DuplicateYear("year " + std::to_string(r.year) +
                              " appears more than once",
                          r.year);
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string render_count_csv(std::span<const CountRecord> records) {
  std::string out(kCountCsvHeader);
  out += "\n";
  for (const CountRecord& r : records) {
    out += std::to_string(r.year);
    for (std::uint64_t v : {r.u, r.i, r.g, r.ui, r.ug, r.ig, r.uig, r.total}) {
      out += ",";
      out += std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

const DatasetDescriptor& builtin_dataset(std::string_view name) {
  static const DatasetDescriptor uspto = make_uspto();
  static const DatasetDescriptor web_text = make_web_text();
  static const DatasetDescriptor web_links = make_web_links();
  if (name == uspto.name) return uspto;
  if (name == web_text.name) return web_text;
  if (name == web_links.name) return web_links;

  std::string known;
  for (const std::string& n : builtin_dataset_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw UnknownDataset("no dataset named \"" + std::string(name) +
                       "\" (available: " + known + ")");
}

std::vector<std::string> builtin_dataset_names() {
  return {"uspto_1993_2002", "web_text_1993_2002", "web_links_1993_2002"};
}

DatasetDescriptor dataset_from_records(std::string name,
                                       std::vector<CountRecord> records,
                                       std::string source_note) {
  for (const CountRecord& r : records) {
    const ValidationReport report = validate_counts(r);
    if (!report.ok()) {
      std::string message = "year " + std::to_string(r.year) + ":";
      for (const std::string& v : report.violations) message += " " + v + ";";
      message.pop_back();
      throw InconsistentCounts(message);
    }
  }
  std::sort(records.begin(), records.end(),
            [](const CountRecord& a, const CountRecord& b) {
              return a.year < b.year;
            });
  for (std::size_t k = 1; k < records.size(); ++k) {
    if (records[k].year == records[k - 1].year) {
      throw DuplicateYear("year " + std::to_string(records[k].year) +
                              " appears more than once",
                          records[k].year);
    }
  }
  DatasetDescriptor d;
  d.name = std::move(name);
  d.labels = records.empty()
                 ? std::array<std::string, 3>{kDefaultLabels[0],
                                              kDefaultLabels[1],
                                              kDefaultLabels[2]}
                 : records.front().labels;
  d.source_note = std::move(source_note);
  d.records = std::move(records);
  return d;
}

}  // namespace trihelix
