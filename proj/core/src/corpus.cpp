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

#include "trihelix/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "trihelix/errors.hpp"

namespace trihelix {
namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (lower(a[k]) != lower(b[k])) return false;
  }
  return true;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

// First case-insensitive occurrence of `needle` at or after `from`.
std::size_t ifind(std::string_view text, std::string_view needle,
                  std::size_t from) {
  if (needle.empty() || text.size() < needle.size()) {
    return std::string_view::npos;
  }
  for (std::size_t k = from; k + needle.size() <= text.size(); ++k) {
    if (iequals(text.substr(k, needle.size()), needle)) return k;
  }
  return std::string_view::npos;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool in_space = true;  // swallows leading whitespace
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out += ' ';
      in_space = false;
      out += c;
    }
  }
  return out;
}

std::string strip_tags(std::string_view s) {
  std::string out;
  bool in_tag = false;
  for (char c : s) {
    if (c == '<') {
      in_tag = true;
    } else if (c == '>') {
      in_tag = false;
    } else if (!in_tag) {
      out += c;
    }
  }
  return out;
}

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' ||
         c == '-' || c == '.';
}

// True at positions where an href attribute name starts as its own word.
bool href_at(std::string_view text, std::size_t pos) {
  if (!iequals(text.substr(pos, 4), "href")) return false;
  return pos == 0 || !is_word_char(text[pos - 1]);
}

constexpr std::string_view kUrlStops = "\"'<>";

std::size_t url_end(std::string_view text, std::size_t start) {
  std::size_t end = start;
  while (end < text.size() &&
         !std::isspace(static_cast<unsigned char>(text[end])) &&
         kUrlStops.find(text[end]) == std::string_view::npos) {
    ++end;
  }
  return end;
}

}  // namespace

std::string_view scan_mode_name(ScanMode mode) {
  switch (mode) {
    case ScanMode::free_text:
      return "free_text";
    case ScanMode::title_words:
      return "title_words";
    case ScanMode::link_domains:
      return "link_domains";
  }
  throw Error("unknown scan mode");
}

ScanMode scan_mode_from_name(std::string_view name) {
  if (name == "free_text") return ScanMode::free_text;
  if (name == "title_words") return ScanMode::title_words;
  if (name == "link_domains") return ScanMode::link_domains;
  throw Error("unknown scan mode \"" + std::string(name) +
              "\" (expected free_text, title_words, or link_domains)");
}

ScanSpec ScanSpec::for_mode(ScanMode mode) {
  ScanSpec spec;
  spec.mode = mode;
  if (mode == ScanMode::link_domains) {
    spec.patterns = {".edu", ".com", ".gov"};
  } else {
    spec.patterns = {"university", "industry", "government"};
  }
  return spec;
}

bool contains_word(std::string_view text, std::string_view word) {
  if (word.empty()) return false;
  std::size_t pos = 0;
  while ((pos = ifind(text, word, pos)) != std::string_view::npos) {
    const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
    const std::size_t end = pos + word.size();
    const bool right_ok = end == text.size() || !is_word_char(text[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::optional<std::string> extract_title(const Document& doc) {
  const std::string_view body = doc.body;
  std::size_t pos = 0;
  while ((pos = ifind(body, "<title", pos)) != std::string_view::npos) {
    const std::size_t tag_end = body.find('>', pos);
    if (tag_end == std::string_view::npos) break;
    // "<title" must be the whole tag name ("<titlebar>" is something else).
    const std::string_view between = body.substr(pos + 6, tag_end - (pos + 6));
    if (!between.empty() && is_word_char(between[0])) {
      pos = tag_end;
      continue;
    }
    const std::size_t close = ifind(body, "</title", tag_end + 1);
    if (close == std::string_view::npos) break;
    const std::string title = collapse_whitespace(
        strip_tags(body.substr(tag_end + 1, close - tag_end - 1)));
    if (!title.empty()) return title;
    break;
  }
  if (doc.sidecar_title) {
    const std::string title = collapse_whitespace(*doc.sidecar_title);
    if (!title.empty()) return title;
  }
  return std::nullopt;
}

std::vector<std::string> extract_links(const Document& doc) {
  const std::string_view body = doc.body;
  std::vector<std::string> links;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (href_at(body, pos)) {
      std::size_t k = pos + 4;
      while (k < body.size() &&
             std::isspace(static_cast<unsigned char>(body[k]))) {
        ++k;
      }
      if (k < body.size() && body[k] == '=') {
        ++k;
        while (k < body.size() &&
               std::isspace(static_cast<unsigned char>(body[k]))) {
          ++k;
        }
        if (k < body.size() && (body[k] == '"' || body[k] == '\'')) {
          const char quote = body[k];
          const std::size_t end = body.find(quote, k + 1);
          if (end != std::string_view::npos) {
            if (end > k + 1) {
              links.emplace_back(body.substr(k + 1, end - k - 1));
            }
            pos = end + 1;
            continue;
          }
        } else if (k < body.size()) {
          const std::size_t end = url_end(body, k);
          if (end > k) {
            links.emplace_back(body.substr(k, end - k));
            pos = end;
            continue;
          }
        }
      }
      pos += 4;
      continue;
    }
    if (iequals(body.substr(pos, 7), "http://") ||
        iequals(body.substr(pos, 8), "https://")) {
      const std::size_t end = url_end(body, pos);
      links.emplace_back(body.substr(pos, end - pos));
      pos = end;
      continue;
    }
    ++pos;
  }
  return links;
}

std::optional<std::string> link_host(std::string_view target) {
  std::size_t authority = std::string_view::npos;
  const std::size_t colon = target.find(':');
  if (target.starts_with("//")) {
    authority = 2;
  } else if (colon != std::string_view::npos && colon > 0 &&
             target.substr(colon + 1, 2) == "//") {
    bool scheme_ok = std::isalpha(static_cast<unsigned char>(target[0])) != 0;
    for (std::size_t k = 1; k < colon && scheme_ok; ++k) {
      scheme_ok = is_scheme_char(target[k]);
    }
    if (!scheme_ok) return std::nullopt;
    authority = colon + 3;
  } else {
    return std::nullopt;  // relative link or opaque scheme, no host
  }

  std::size_t end = authority;
  while (end < target.size() && target[end] != '/' && target[end] != '?' &&
         target[end] != '#') {
    ++end;
  }
  std::string_view host = target.substr(authority, end - authority);
  const std::size_t at = host.rfind('@');
  if (at != std::string_view::npos) host.remove_prefix(at + 1);
  const std::size_t port = host.find(':');
  if (port != std::string_view::npos) host = host.substr(0, port);
  if (host.empty()) return std::nullopt;
  return to_lower(host);
}

bool host_matches_domain(std::string_view host, std::string_view pattern) {
  while (!pattern.empty() && pattern.front() == '.') pattern.remove_prefix(1);
  if (pattern.empty() || host.empty()) return false;
  const std::string h = to_lower(host);
  const std::string p = to_lower(pattern);
  if (h == p) return true;
  return h.size() > p.size() && h.ends_with(p) &&
         h[h.size() - p.size() - 1] == '.';
}

std::set<std::string> extract_link_domains(
    const Document& doc, std::span<const std::string> patterns) {
  std::set<std::string> matched;
  for (const std::string& target : extract_links(doc)) {
    const std::optional<std::string> host = link_host(target);
    if (!host) continue;
    for (const std::string& pattern : patterns) {
      if (host_matches_domain(*host, pattern)) matched.insert(pattern);
    }
  }
  return matched;
}

std::vector<CountRecord> scan_corpus(std::span<const Document> docs,
                                     const ScanSpec& spec) {
  for (const std::string& pattern : spec.patterns) {
    if (pattern.empty()) throw Error("scan patterns must be nonempty");
  }

  std::vector<std::string> missing;
  for (const Document& doc : docs) {
    if (!doc.year) missing.push_back(doc.identifier);
  }
  if (!missing.empty()) {
    std::string message = "documents without a year:";
    for (const std::string& id : missing) message += " " + id + ",";
    message.pop_back();
    throw MissingYear(message, std::move(missing));
  }

  std::map<int, CountRecord> by_year;
  for (const Document& doc : docs) {
    bool m[3] = {false, false, false};
    switch (spec.mode) {
      case ScanMode::free_text:
        for (int a = 0; a < 3; ++a) {
          m[a] = contains_word(doc.body, spec.patterns[a]);
        }
        break;
      case ScanMode::title_words: {
        const std::optional<std::string> title = extract_title(doc);
        if (title) {
          for (int a = 0; a < 3; ++a) {
            m[a] = contains_word(*title, spec.patterns[a]);
          }
        }
        break;
      }
      case ScanMode::link_domains: {
        const std::set<std::string> matched =
            extract_link_domains(doc, spec.patterns);
        for (int a = 0; a < 3; ++a) {
          m[a] = matched.count(spec.patterns[a]) > 0;
        }
        break;
      }
    }

    CountRecord& r = by_year[*doc.year];
    r.year = *doc.year;
    r.labels = spec.patterns;
    r.u += m[0];
    r.i += m[1];
    r.g += m[2];
    r.ui += m[0] && m[1];
    r.ug += m[0] && m[2];
    r.ig += m[1] && m[2];
    r.uig += m[0] && m[1] && m[2];
    r.total += 1;
  }

  std::vector<CountRecord> records;
  records.reserve(by_year.size());
  for (auto& [year, record] : by_year) records.push_back(std::move(record));
  return records;
}

std::vector<Document> load_corpus_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }

  std::vector<fs::path> paths;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  if (ec) {
    throw IoError("cannot list " + dir.string() + ": " + ec.message());
  }
  std::sort(paths.begin(), paths.end());

  auto read_file = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read " + p.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + p.string());
    return buffer.str();
  };

  std::vector<Document> docs;
  for (const fs::path& path : paths) {
    if (path.extension() == ".meta") continue;

    Document doc;
    doc.identifier = path.string();
    doc.body = read_file(path);

    const fs::path sidecar = fs::path(path.string() + ".meta");
    if (fs::is_regular_file(sidecar)) {
      const std::string meta = read_file(sidecar);
      std::istringstream lines(meta);
      std::string line;
      int line_no = 0;
      while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
          throw FormatError("sidecar " + sidecar.string() +
                                ": expected \"key: value\"",
                            line_no);
        }
        const std::string key(collapse_whitespace(line.substr(0, colon)));
        const std::string value(
            collapse_whitespace(line.substr(colon + 1)));
        if (key == "year") {
          if (value.empty() ||
              !std::all_of(value.begin(), value.end(), [](char c) {
                return c >= '0' && c <= '9';
              }) ||
              value.size() > 6) {
            throw FormatError("sidecar " + sidecar.string() +
                                  ": year is not a nonnegative integer",
                              line_no, 2);
          }
          doc.year = std::stoi(value);
        } else if (key == "title") {
          doc.sidecar_title = value;
        }
      }
    }

    if (!doc.year) {
      const std::string name = path.filename().string();
      if (name.size() >= 5 && name[4] == '_' &&
          std::all_of(name.begin(), name.begin() + 4, [](char c) {
            return c >= '0' && c <= '9';
          })) {
        doc.year = std::stoi(name.substr(0, 4));
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace trihelix
