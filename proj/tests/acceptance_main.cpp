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
// Acceptance suite: one self-contained check per release criterion, each
// printing a PASS/FAIL line. The process exit code is the failure count.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "trihelix/corpus.hpp"
#include "trihelix/counts.hpp"
#include "trihelix/datasets.hpp"
#include "trihelix/infotheory.hpp"
#include "trihelix/report.hpp"
#include "trihelix/synth.hpp"
#include "trihelix/timeseries.hpp"

namespace {

using trihelix::ContingencyTable;
using trihelix::CountRecord;
using trihelix::Document;
using trihelix::JointDistribution;
using trihelix::NonePolicy;
using trihelix::Regime;
using trihelix::RegimeSpec;
using trihelix::ScanMode;
using trihelix::ScanSpec;
using trihelix::TrendDirection;

struct CheckFailure {
  std::string reason;
};

void require(bool condition, const std::string& reason) {
  if (!condition) throw CheckFailure{reason};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Frozen reference values for the built-in patent series, in bits.
constexpr double kUsptoExclude[10] = {
    -0.18308726498216488, -0.17929682761901811, -0.16815432948499032,
    -0.15766911749983081, -0.1658594160991862,  -0.16363314193345735,
    -0.15214467361406459, -0.14793961528493882, -0.14724284987372505,
    -0.15117940171030853};
constexpr double kUsptoInclude[10] = {
    -4.483261991938825e-05,  3.6789087315303171e-05, -4.8166249560388508e-05,
    -0.0001826509700086909,  1.9271375771512389e-05, 0.00016534750816177279,
    -0.00018416710662905178, -2.3672214886527598e-05, -4.5910741280685841e-05,
    0.00021288933233243323};

double three_way_bits(const JointDistribution& dist) {
  return trihelix::transmission3_entropy_form(dist).value;
}

double three_way_direct_bits(const JointDistribution& dist) {
  return trihelix::transmission3_direct_form(dist).value;
}

// ---------------------------------------------------------------------------
// Criterion 1: the three canonical triples hit exact endpoints.

void criterion_extremes() {
  const JointDistribution parity(
      3, {0.25, 0.0, 0.0, 0.25, 0.0, 0.25, 0.25, 0.0});
  const JointDistribution correlated(
      3, {0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5});

  for (auto form : {three_way_bits, three_way_direct_bits}) {
    require(std::abs(form(parity) + 1.0) <= 1e-12,
            "parity triple should give -1 bit, got " + fmt(form(parity)));
    require(std::abs(form(correlated) - 1.0) <= 1e-12,
            "correlated triple should give +1 bit, got " +
                fmt(form(correlated)));
  }

  const double probs[][3] = {
      {0.5, 0.5, 0.5}, {0.3, 0.7, 0.2}, {0.9, 0.1, 0.5}, {0.25, 0.5, 0.75}};
  for (const double* p : probs) {
    std::vector<double> cells(8);
    for (std::size_t idx = 0; idx < 8; ++idx) {
      const bool u = (idx >> 2) & 1u, i = (idx >> 1) & 1u, g = idx & 1u;
      cells[idx] =
          (u ? p[0] : 1 - p[0]) * (i ? p[1] : 1 - p[1]) * (g ? p[2] : 1 - p[2]);
    }
    const JointDistribution product(3, cells);
    for (auto form : {three_way_bits, three_way_direct_bits}) {
      require(std::abs(form(product)) <= 1e-12,
              "independent product should give 0, got " + fmt(form(product)));
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 2: the two production formulas and the standalone oracle agree.

void criterion_formulas_agree() {
  std::vector<JointDistribution> dists;
  std::mt19937_64 rng(0xacce5502);
  for (int k = 0; k < 1000; ++k) {
    dists.push_back(trihelix_test::random_distribution(rng, 3, true));
  }
  for (const std::string& name : trihelix::builtin_dataset_names()) {
    for (const CountRecord& r : trihelix::builtin_dataset(name).records) {
      const ContingencyTable table = trihelix::contingency_from_counts(r);
      dists.push_back(trihelix::distribution_from_table(
          table, NonePolicy::include_none));
      dists.push_back(trihelix::distribution_from_table(
          table, NonePolicy::exclude_none));
    }
  }

  for (std::size_t k = 0; k < dists.size(); ++k) {
    const double entropy_form = three_way_bits(dists[k]);
    const double direct_form = three_way_direct_bits(dists[k]);
    const double oracle = trihelix::oracle_transmission3(dists[k]).value;
    require(std::abs(entropy_form - direct_form) <= 1e-12,
            "distribution " + std::to_string(k) + ": entropy form " +
                fmt(entropy_form) + " vs direct form " + fmt(direct_form));
    require(std::abs(entropy_form - oracle) <= 1e-12,
            "distribution " + std::to_string(k) + ": entropy form " +
                fmt(entropy_form) + " vs oracle " + fmt(oracle));
  }
}

// ---------------------------------------------------------------------------
// Criterion 3: the patent series is negative throughout under union
// normalization, drifts toward zero, and matches the frozen values under
// both normalizations.

void criterion_patent_series() {
  const trihelix::DatasetDescriptor& uspto =
      trihelix::builtin_dataset("uspto_1993_2002");

  const trihelix::TransmissionSeries excluded = trihelix::transmission_series(
      uspto.records, NonePolicy::exclude_none, trihelix::Unit::bit);
  require(excluded.points.size() == 10, "expected ten yearly points");
  for (std::size_t k = 0; k < 10; ++k) {
    require(excluded.points[k].value < 0.0,
            std::to_string(excluded.points[k].year) +
                " should be negative under union normalization, got " +
                fmt(excluded.points[k].value));
    require(std::abs(excluded.points[k].value - kUsptoExclude[k]) <= 1e-12,
            std::to_string(excluded.points[k].year) + ": got " +
                fmt(excluded.points[k].value) + ", frozen " +
                fmt(kUsptoExclude[k]));
  }
  const double early = (excluded.points[0].value + excluded.points[1].value +
                        excluded.points[2].value) /
                       3.0;
  const double late = (excluded.points[7].value + excluded.points[8].value +
                       excluded.points[9].value) /
                      3.0;
  require(late > early, "1993-95 mean " + fmt(early) +
                            " should sit below the 2000-02 mean " + fmt(late));

  const trihelix::TransmissionSeries included = trihelix::transmission_series(
      uspto.records, NonePolicy::include_none, trihelix::Unit::bit);
  for (std::size_t k = 0; k < 10; ++k) {
    require(std::abs(included.points[k].value - kUsptoInclude[k]) <= 1e-12,
            std::to_string(included.points[k].year) +
                " under the grand total: got " +
                fmt(included.points[k].value) + ", frozen " +
                fmt(kUsptoInclude[k]));
  }
  const double first = included.points[0].value;
  require(first < 0.0, "1993 under the grand total should stay negative");
  require(std::abs(first) > 1e-5 && std::abs(first) < 1e-3,
          "1993 under the grand total should be of order 1e-4, got " +
              fmt(first));
}

// ---------------------------------------------------------------------------
// Criteria 4 and 5: opposite drift in the two web series.

TrendDirection web_trend(const std::string& dataset) {
  const trihelix::TransmissionSeries series = trihelix::transmission_series(
      trihelix::builtin_dataset(dataset).records, NonePolicy::exclude_none,
      trihelix::Unit::bit);
  return trihelix::trend_summary(series, 3).direction;
}

void criterion_web_text_falls() {
  const TrendDirection direction = web_trend("web_text_1993_2002");
  require(direction == TrendDirection::falling,
          std::string("web text trend should fall, got ") +
              std::string(trihelix::trend_direction_name(direction)));
}

void criterion_web_links_rise() {
  const TrendDirection links = web_trend("web_links_1993_2002");
  const TrendDirection text = web_trend("web_text_1993_2002");
  require(links == TrendDirection::rising,
          std::string("web link trend should rise, got ") +
              std::string(trihelix::trend_direction_name(links)));
  require(links != TrendDirection::flat && text != TrendDirection::flat,
          "neither web trend should be flat");
  require(links != text, "the web series should drift in opposite directions");
}

// ---------------------------------------------------------------------------
// Criterion 6: the first axis's share of patents roughly doubles.

void criterion_university_share() {
  const trihelix::DatasetDescriptor& uspto =
      trihelix::builtin_dataset("uspto_1993_2002");
  const std::vector<trihelix::PercentPoint> shares =
      trihelix::share_series(uspto.records, trihelix::CountField::u);
  require(shares.size() == 10, "expected ten share points");
  require(shares.front().year == 1993 && shares.back().year == 2002,
          "share series should span 1993-2002");
  require(std::abs(shares.front().percent - 2.77) <= 0.01,
          "1993 share should be 2.77%, got " + fmt(shares.front().percent));
  require(std::abs(shares.back().percent - 5.00) <= 0.01,
          "2002 share should be 5.00%, got " + fmt(shares.back().percent));
  require(shares.back().percent > shares.front().percent,
          "the share should rise across the decade");
}

// ---------------------------------------------------------------------------
// Criterion 7: overlapping counts and disjoint tables convert both ways
// without loss.

void criterion_round_trip() {
  for (const std::string& name : trihelix::builtin_dataset_names()) {
    for (const CountRecord& r : trihelix::builtin_dataset(name).records) {
      const ContingencyTable table = trihelix::contingency_from_counts(r);
      const CountRecord back = trihelix::counts_from_table(table, r.year);
      require(back == r, name + " year " + std::to_string(r.year) +
                             " does not survive the round trip");
    }
  }

  const ContingencyTable first93 = trihelix::contingency_from_counts(
      trihelix::builtin_dataset("uspto_1993_2002").records.front());
  const std::array<std::uint64_t, 8> expected = {96402, 1760, 9044, 271,
                                                 2137,  525,  338,  63};
  require(first93.cells() == expected, "1993 cells came out wrong");
  require(first93.total() == 110540, "1993 total came out wrong");
  require(first93.union_size() == 14138, "1993 union came out wrong");

  std::mt19937_64 rng(0xacce5507);
  for (int k = 0; k < 10000; ++k) {
    const CountRecord r = trihelix_test::random_record(rng, 1900 + k % 200);
    const ContingencyTable table = trihelix::contingency_from_counts(r);
    const CountRecord back = trihelix::counts_from_table(table, r.year);
    require(back == r,
            "random record " + std::to_string(k) + " round trip failed");
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: Monte Carlo recovery. Plug-in estimates from sampled
// populations must cover the analytic value within five bootstrap standard
// errors in at least 99 of 100 seeds for every regime/coupling combination.

double three_way_from_cells(const std::array<std::uint64_t, 8>& cells,
                            std::uint64_t n) {
  std::vector<double> p(8);
  for (std::size_t k = 0; k < 8; ++k) {
    p[k] = static_cast<double>(cells[k]) / static_cast<double>(n);
  }
  return three_way_bits(JointDistribution(3, std::move(p)));
}

void criterion_monte_carlo() {
  constexpr std::uint64_t kPopulation = 100000;
  constexpr int kSeeds = 100;
  constexpr int kBootstrap = 200;

  int combo_index = 0;
  for (Regime regime :
       {Regime::coordinated, Regime::uncoupled, Regime::bilateral}) {
    for (double coupling : {0.1, 0.5, 1.0}) {
      RegimeSpec spec;
      spec.regime = regime;
      spec.coupling = coupling;
      if (regime != Regime::coordinated) {
        spec.p_u = 0.5;
        spec.p_i = 0.4;
        spec.p_g = 0.6;
      }
      const JointDistribution dist = trihelix::regime_distribution(spec);
      const double target = three_way_bits(dist);

      int covered = 0;
      for (int seed = 0; seed < kSeeds; ++seed) {
        const CountRecord record = trihelix::sample_population(
            dist, kPopulation,
            static_cast<std::uint64_t>(combo_index) * 1000003 + seed);
        const ContingencyTable table = trihelix::contingency_from_counts(record);
        const double estimate =
            three_way_from_cells(table.cells(), kPopulation);

        double empirical[8];
        for (std::size_t k = 0; k < 8; ++k) {
          empirical[k] = static_cast<double>(table.cells()[k]) /
                         static_cast<double>(kPopulation);
        }

        std::mt19937_64 boot_rng(0xb00757ull * (combo_index + 1) * 131 +
                                 static_cast<std::uint64_t>(seed));
        double replicates[kBootstrap];
        for (int b = 0; b < kBootstrap; ++b) {
          std::array<std::uint64_t, 8> resampled{};
          std::uint64_t remaining = kPopulation;
          double mass_left = 1.0;
          for (std::size_t k = 0; k < 7; ++k) {
            if (remaining == 0 || mass_left <= 0.0) {
              resampled[k] = 0;
              mass_left -= empirical[k];
              continue;
            }
            const double conditional = empirical[k] / mass_left;
            std::uint64_t draw;
            if (conditional <= 0.0) {
              draw = 0;
            } else if (conditional >= 1.0) {
              draw = remaining;
            } else {
              draw = std::binomial_distribution<std::uint64_t>(
                  remaining, conditional)(boot_rng);
            }
            resampled[k] = draw;
            remaining -= draw;
            mass_left -= empirical[k];
          }
          resampled[7] = remaining;
          replicates[b] = three_way_from_cells(resampled, kPopulation);
        }

        double mean = 0.0;
        for (double v : replicates) mean += v;
        mean /= kBootstrap;
        double variance = 0.0;
        for (double v : replicates) variance += (v - mean) * (v - mean);
        variance /= kBootstrap - 1;
        const double stderr_boot = std::sqrt(variance);

        if (std::abs(estimate - target) <= 5.0 * stderr_boot) ++covered;
      }

      require(covered >= 99,
              std::string(trihelix::regime_name(regime)) + " coupling " +
                  fmt(coupling) + ": only " + std::to_string(covered) +
                  "/100 seeds within five bootstrap errors of " + fmt(target));
      ++combo_index;
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 9: scanning equals a naive independent count on hand-built and
// mutated corpora.

std::array<bool, 3> naive_text_flags(const std::string& text,
                                     const std::array<std::string, 3>& words) {
  std::set<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!current.empty()) {
      tokens.insert(current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.insert(current);
  return {tokens.count(words[0]) > 0, tokens.count(words[1]) > 0,
          tokens.count(words[2]) > 0};
}

std::vector<CountRecord> records_from_flags(
    const std::vector<std::pair<int, std::array<bool, 3>>>& flags,
    const std::array<std::string, 3>& labels) {
  std::map<int, CountRecord> by_year;
  for (const auto& [year, m] : flags) {
    CountRecord& r = by_year[year];
    r.year = year;
    r.labels = labels;
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
  for (auto& [year, record] : by_year) records.push_back(std::move(record));
  return records;
}

std::vector<CountRecord> merge_records(std::vector<CountRecord> a,
                                       const std::vector<CountRecord>& b) {
  std::map<int, CountRecord> by_year;
  for (const CountRecord& r : a) by_year[r.year] = r;
  for (const CountRecord& r : b) {
    if (by_year.count(r.year) == 0) {
      by_year[r.year] = r;
      continue;
    }
    CountRecord& m = by_year[r.year];
    m.u += r.u;
    m.i += r.i;
    m.g += r.g;
    m.ui += r.ui;
    m.ug += r.ug;
    m.ig += r.ig;
    m.uig += r.uig;
    m.total += r.total;
  }
  std::vector<CountRecord> merged;
  for (auto& [year, record] : by_year) merged.push_back(std::move(record));
  return merged;
}

CountRecord doubled(const CountRecord& r) {
  CountRecord d = r;
  d.u *= 2;
  d.i *= 2;
  d.g *= 2;
  d.ui *= 2;
  d.ug *= 2;
  d.ig *= 2;
  d.uig *= 2;
  d.total *= 2;
  return d;
}

void criterion_scan_oracle() {
  // Hand-counted fixtures first.
  {
    std::vector<Document> docs(3);
    docs[0] = {"a", 1999, "The University of X announced.", {}};
    docs[1] = {"b", 1999, "University and industry collaborate.", {}};
    docs[2] = {"c", 1999, "A government report.", {}};
    const std::vector<CountRecord> records =
        trihelix::scan_corpus(docs, ScanSpec::for_mode(ScanMode::free_text));
    require(records.size() == 1 && records[0].year == 1999 &&
                records[0].u == 2 && records[0].i == 1 && records[0].g == 1 &&
                records[0].ui == 1 && records[0].ug == 0 &&
                records[0].ig == 0 && records[0].uig == 0 &&
                records[0].total == 3,
            "hand-counted text fixture came out wrong");
  }
  {
    std::vector<Document> docs(1);
    docs[0] = {"p", 2001,
               "<a href=\"http://web.mit.edu/x\">m</a> "
               "<a href=\"https://example.com\">e</a>",
               {}};
    const std::vector<CountRecord> records = trihelix::scan_corpus(
        docs, ScanSpec::for_mode(ScanMode::link_domains));
    require(records.size() == 1 && records[0].u == 1 && records[0].i == 1 &&
                records[0].g == 0 && records[0].ui == 1 &&
                records[0].uig == 0 && records[0].total == 1,
            "hand-counted link fixture came out wrong");
  }

  const std::array<std::string, 3> words = {"university", "industry",
                                            "government"};
  const char* token_pool[] = {
      "university", "industry",  "government",   "University", "INDUSTRY",
      "Government", "research",  "collaborate",  "announced",  "report",
      "universities", "industrial", "governmental", "xuniversity",
      "industry2", "govern", "ment"};
  const char* separators[] = {" ", ", ", ".\n", " (", ") ", "\t"};

  const std::pair<const char*, std::array<bool, 3>> host_pool[] = {
      {"web.mit.edu", {true, false, false}},
      {"cs.stanford.edu", {true, false, false}},
      {"example.com", {false, true, false}},
      {"www.nsf.gov", {false, false, true}},
      {"fakeedu.net", {false, false, false}},
      {"gov.example.net", {false, false, false}},
  };

  std::mt19937_64 rng(0xacce5509);
  for (int round = 0; round < 1000; ++round) {
    const ScanMode mode = round % 3 == 0   ? ScanMode::free_text
                          : round % 3 == 1 ? ScanMode::title_words
                                           : ScanMode::link_domains;
    const ScanSpec spec = ScanSpec::for_mode(mode);

    std::vector<Document> docs;
    std::vector<std::pair<int, std::array<bool, 3>>> expected_flags;
    const int doc_count = 3 + static_cast<int>(rng() % 12);
    for (int d = 0; d < doc_count; ++d) {
      const int year = 1998 + static_cast<int>(rng() % 3);
      Document doc;
      doc.identifier = "doc" + std::to_string(round) + "_" + std::to_string(d);
      doc.year = year;

      if (mode == ScanMode::link_domains) {
        std::array<bool, 3> flags = {false, false, false};
        const int link_count = 1 + static_cast<int>(rng() % 5);
        for (int l = 0; l < link_count; ++l) {
          const auto& [host, host_flags] = host_pool[rng() % 6];
          doc.body += "<a href=\"http://" + std::string(host) +
                      "/p\">x</a> ";
          for (int a = 0; a < 3; ++a) flags[a] = flags[a] || host_flags[a];
        }
        expected_flags.push_back({year, flags});
      } else {
        std::string text;
        const int token_count = 2 + static_cast<int>(rng() % 15);
        for (int t = 0; t < token_count; ++t) {
          text += token_pool[rng() % 17];
          text += separators[rng() % 6];
        }
        if (mode == ScanMode::free_text) {
          doc.body = text;
        } else {
          // Put decoy pattern words outside the title; only the title counts.
          doc.body = "<title>" + text + "</title> university industry";
        }
        expected_flags.push_back({year, naive_text_flags(text, words)});
      }
      docs.push_back(std::move(doc));
    }

    const std::vector<CountRecord> expected =
        records_from_flags(expected_flags, spec.patterns);
    const std::vector<CountRecord> scanned = trihelix::scan_corpus(docs, spec);
    require(scanned == expected,
            "round " + std::to_string(round) + ": scan disagrees with the "
            "naive oracle");

    std::vector<Document> upper = docs;
    for (Document& doc : upper) {
      for (char& c : doc.body) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
    }
    require(trihelix::scan_corpus(upper, spec) == expected,
            "round " + std::to_string(round) + ": scan is case sensitive");

    std::vector<Document> shuffled = docs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    require(trihelix::scan_corpus(shuffled, spec) == expected,
            "round " + std::to_string(round) + ": scan depends on doc order");

    const std::size_t cut = docs.size() / 2;
    const std::vector<Document> left(docs.begin(), docs.begin() + cut);
    const std::vector<Document> right(docs.begin() + cut, docs.end());
    std::vector<CountRecord> merged = trihelix::scan_corpus(right, spec);
    if (!left.empty()) {
      merged = merge_records(trihelix::scan_corpus(left, spec), merged);
    }
    require(merged == expected,
            "round " + std::to_string(round) + ": shard merge disagrees");

    std::vector<Document> twice = docs;
    twice.insert(twice.end(), docs.begin(), docs.end());
    std::vector<CountRecord> expected_double;
    for (const CountRecord& r : expected) expected_double.push_back(doubled(r));
    require(trihelix::scan_corpus(twice, spec) == expected_double,
            "round " + std::to_string(round) + ": duplication did not double");
  }
}

// ---------------------------------------------------------------------------
// Criterion 10: reports disclose the pre-1993 coverage gap.

void criterion_provenance() {
  const trihelix::ReportBundle bundle = trihelix::build_report(
      trihelix::builtin_dataset("uspto_1993_2002"), trihelix::ReportOptions{});
  const trihelix::ReportFile* provenance = nullptr;
  for (const trihelix::ReportFile& file : bundle.files) {
    if (file.name == "provenance.json") provenance = &file;
  }
  require(provenance != nullptr, "no provenance.json in the bundle");
  for (const char* needle :
       {"1976-1992", "cannot be recomputed", "-0.190"}) {
    require(provenance->content.find(needle) != std::string::npos,
            std::string("provenance should mention \"") + needle + "\"");
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  const char* title;
  double time_limit_s;  // 0 means untimed
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "extreme triples hit the exact endpoints", 1.0, criterion_extremes},
      {2, "three independent formulas agree everywhere", 5.0,
       criterion_formulas_agree},
      {3, "patent series stays negative and drifts upward", 0.0,
       criterion_patent_series},
      {4, "web text series falls", 0.0, criterion_web_text_falls},
      {5, "web link series rises, opposite the text series", 0.0,
       criterion_web_links_rise},
      {6, "university patent share roughly doubles", 0.0,
       criterion_university_share},
      {7, "counts and tables convert both ways exactly", 0.0,
       criterion_round_trip},
      {8, "sampled estimates land within five bootstrap errors", 60.0,
       criterion_monte_carlo},
      {9, "scanning matches a naive oracle under mutation", 0.0,
       criterion_scan_oracle},
      {10, "provenance carries the source gap caveats", 0.0,
       criterion_provenance},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const CheckFailure& f) {
      failure = f.reason;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    if (failure.empty() && criterion.time_limit_s > 0.0 &&
        elapsed > criterion.time_limit_s) {
      failure = "took " + std::to_string(elapsed) + "s, limit " +
                std::to_string(criterion.time_limit_s) + "s";
    }

    if (failure.empty()) {
      if (criterion.time_limit_s > 0.0) {
        std::printf("PASS criterion %d: %s (%.2fs < %.0fs)\n", criterion.number,
                    criterion.title, elapsed, criterion.time_limit_s);
      } else {
        std::printf("PASS criterion %d: %s (%.2fs)\n", criterion.number,
                    criterion.title, elapsed);
      }
    } else {
      std::printf("FAIL criterion %d: %s: %s\n", criterion.number,
                  criterion.title, failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures;
}
