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
// Turns a pile of documents into yearly overlapping counts, so that small
// local corpora can be analyzed with the same pipeline as the big built-in
// series. Matching is deliberately simple and fully specified here rather
// than delegated to an HTML parser; these are hit counters, not browsers.

#ifndef TRIHELIX_CORPUS_HPP_
#define TRIHELIX_CORPUS_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trihelix/counts.hpp"

namespace trihelix {

struct Document {
  std::string identifier;         // path or synthetic name, used in errors
  std::optional<int> year;        // publication year; required for scanning
  std::string body;               // raw text or markup
  std::optional<std::string> sidecar_title;  // metadata title, if provided
};

enum class ScanMode { free_text, title_words, link_domains };

std::string_view scan_mode_name(ScanMode mode);
ScanMode scan_mode_from_name(std::string_view name);

// Three patterns to count, one per axis. Text modes match whole words,
// case-insensitively, with any non-alphanumeric byte or the text edge as a
// boundary. Link mode matches hostname suffixes on label boundaries
// (".edu" matches web.mit.edu and edu, not fakeedu.net).
struct ScanSpec {
  ScanMode mode = ScanMode::free_text;
  std::array<std::string, 3> patterns;

  static ScanSpec for_mode(ScanMode mode);  // mode's default patterns
};

// Case-insensitive whole-word containment per the rule above.
bool contains_word(std::string_view text, std::string_view word);

// Content of the first <title> element (any case), tags stripped, whitespace
// collapsed and trimmed. Falls back to the sidecar title; absent if neither
// yields anything.
std::optional<std::string> extract_title(const Document& doc);

// Outbound link targets: href attribute values plus bare http(s) URLs in the
// body, in order of appearance, duplicates kept.
std::vector<std::string> extract_links(const Document& doc);

// Lowercased hostname of a link target, or nullopt when there is none to
// parse (relative links, mailto, empty hosts).
std::optional<std::string> link_host(std::string_view target);

// True when host equals the pattern or ends with ".pattern" (a leading dot
// on the pattern is ignored).
bool host_matches_domain(std::string_view host, std::string_view pattern);

// The subset of `patterns` matched by at least one of the document's links.
std::set<std::string> extract_link_domains(
    const Document& doc, std::span<const std::string> patterns);

// One CountRecord per year, sorted ascending, labels taken from the spec's
// patterns; total counts every document of that year. Order-independent and
// shard-mergeable: scanning a concatenation equals summing per-year scans.
// Documents without a year abort the scan with MissingYear listing every
// offender.
std::vector<CountRecord> scan_corpus(std::span<const Document> docs,
                                     const ScanSpec& spec);

// Loads every regular file in the directory (non-recursive, sorted by name)
// as a document. "<name>.meta" files are sidecars for "<name>", not
// documents; they hold "key: value" lines with keys year and title. Without
// a sidecar year, a leading "YYYY_" filename prefix supplies the year.
// Throws IoError when the directory or a file is unreadable.
std::vector<Document> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace trihelix

#endif  // TRIHELIX_CORPUS_HPP_
