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
// The count CSV codec and the built-in yearly datasets.
//
// Count CSV format: first line exactly
//   year,u,i,g,ui,ug,ig,uig,total
// then one row of nonnegative integers per year. LF and CRLF both parse;
// blank lines are skipped; rendering always emits LF.

#ifndef TRIHELIX_DATASETS_HPP_
#define TRIHELIX_DATASETS_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trihelix/counts.hpp"

namespace trihelix {

inline constexpr std::string_view kCountCsvHeader =
    "year,u,i,g,ui,ug,ig,uig,total";

// Throws FormatError with the 1-based line and field position for malformed
// input, DuplicateYear for a repeated year. Records come back in file order
// with default labels; consistency (validate_counts) is the caller's call.
std::vector<CountRecord> parse_count_csv(std::string_view text);

std::string render_count_csv(std::span<const CountRecord> records);

// A named count collection plus the context needed to report on it honestly.
struct DatasetDescriptor {
  std::string name;
  std::array<std::string, 3> labels;
  std::string source_note;
  std::vector<std::string> caveats;
  std::vector<CountRecord> records;  // sorted ascending by year, validated
};

// Names: uspto_1993_2002, web_text_1993_2002, web_links_1993_2002.
// Unknown names throw UnknownDataset listing the valid ones.
const DatasetDescriptor& builtin_dataset(std::string_view name);

std::vector<std::string> builtin_dataset_names();

// Wraps records parsed from a file into a descriptor after validating every
// record (InconsistentCounts names the offending year).
DatasetDescriptor dataset_from_records(std::string name,
                                       std::vector<CountRecord> records,
                                       std::string source_note);

}  // namespace trihelix

#endif  // TRIHELIX_DATASETS_HPP_
