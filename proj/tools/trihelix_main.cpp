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
// Command line front end: compute, report, scan, synth, datasets.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trihelix/corpus.hpp"
#include "trihelix/counts.hpp"
#include "trihelix/datasets.hpp"
#include "trihelix/errors.hpp"
#include "trihelix/infotheory.hpp"
#include "trihelix/report.hpp"
#include "trihelix/synth.hpp"
#include "trihelix/timeseries.hpp"
#include "trihelix/version.hpp"

namespace {

using trihelix::DatasetDescriptor;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw trihelix::IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw trihelix::IoError("cannot read " + path.string());
  return buffer.str();
}

// Shared dataset selection for compute and report.
struct SourceArgs {
  std::string dataset;
  std::string file;

  DatasetDescriptor load() const {
    if (!dataset.empty()) return trihelix::builtin_dataset(dataset);
    const std::filesystem::path path(file);
    return trihelix::dataset_from_records(path.stem().string(),
                                          trihelix::parse_count_csv(
                                              read_file(path)),
                                          "file: " + path.string());
  }
};

void add_source_options(CLI::App* cmd, SourceArgs* args) {
  CLI::Option* dataset = cmd->add_option(
      "--dataset", args->dataset, "Name of a built-in dataset");
  CLI::Option* file = cmd->add_option(
      "--file", args->file, "Path to a count CSV file");
  dataset->excludes(file);
  file->excludes(dataset);
}

struct GlobalArgs {
  std::string none_policy = "exclude";
  std::string unit;  // empty means the command default
  int window = 2;
  int trend_k = 3;
  std::string out;
  std::uint64_t seed = 0;

  trihelix::NonePolicy policy() const {
    return trihelix::none_policy_from_name(none_policy);
  }
  trihelix::Unit unit_or(trihelix::Unit fallback) const {
    return unit.empty() ? fallback : trihelix::unit_from_name(unit);
  }
};

int run(int argc, char** argv) {
  CLI::App app{
      "Signed three-way transmission analysis of overlapping hit counts"};
  app.set_version_flag("--version", trihelix::kVersion);
  app.require_subcommand(1);

  GlobalArgs global;
  app.add_option("--none-policy", global.none_policy,
                 "How to treat items matching no pattern: include | exclude")
      ->capture_default_str();
  app.add_option("--unit", global.unit,
                 "Output unit: bit | millibit | nat (default: bit for "
                 "compute and synth, millibit for report)");
  app.add_option("--window", global.window,
                 "Moving-average window in years (report)")
      ->capture_default_str();
  app.add_option("--trend-k", global.trend_k,
                 "Early/late mean width in years (report)")
      ->capture_default_str();
  app.add_option("--out", global.out,
                 "Output directory (report; default <dataset>_report)");
  app.add_option("--seed", global.seed, "Random seed (synth)")
      ->capture_default_str();

  SourceArgs compute_source;
  CLI::App* compute = app.add_subcommand(
      "compute",
      "Print per-year entropies and transmissions as CSV on stdout");
  compute->fallthrough();
  add_source_options(compute, &compute_source);

  SourceArgs report_source;
  CLI::App* report = app.add_subcommand(
      "report", "Write series, trend, share, chart, and provenance files");
  report->fallthrough();
  add_source_options(report, &report_source);

  std::string scan_dir;
  std::string scan_mode = "free_text";
  std::vector<std::string> scan_patterns;
  CLI::App* scan = app.add_subcommand(
      "scan", "Scan a document directory into yearly counts (CSV on stdout)");
  scan->fallthrough();
  scan->add_option("dir", scan_dir, "Directory of documents")
      ->required();
  scan->add_option("--mode", scan_mode,
                   "free_text | title_words | link_domains")
      ->capture_default_str();
  scan->add_option("--patterns", scan_patterns,
                   "Three patterns, one per axis (default depends on mode)")
      ->expected(3);

  std::string synth_regime;
  double synth_pu = 0.5, synth_pi = 0.5, synth_pg = 0.5, synth_coupling = 0.0;
  std::uint64_t synth_n = 100000;
  int synth_year = 0;
  CLI::App* synth = app.add_subcommand(
      "synth",
      "Sample a synthetic population (CSV on stdout, analytic value on "
      "stderr)");
  synth->fallthrough();
  synth->add_option("--regime", synth_regime,
                    "coordinated | uncoupled | bilateral")
      ->required();
  synth->add_option("--pu", synth_pu, "Marginal for axis 1")
      ->capture_default_str();
  synth->add_option("--pi", synth_pi, "Marginal for axis 2")
      ->capture_default_str();
  synth->add_option("--pg", synth_pg, "Marginal for axis 3")
      ->capture_default_str();
  synth->add_option("--coupling", synth_coupling, "Coupling strength in [0,1]")
      ->capture_default_str();
  synth->add_option("--n", synth_n, "Population size")
      ->capture_default_str();
  synth->add_option("--year", synth_year, "Year stamped on the output row")
      ->capture_default_str();

  CLI::App* datasets =
      app.add_subcommand("datasets", "List the built-in datasets");
  datasets->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    if (compute_source.dataset.empty() && compute_source.file.empty()) {
      std::cerr << "error: compute needs --dataset or --file\n";
      return 2;
    }
    const DatasetDescriptor data = compute_source.load();
    const std::vector<trihelix::BreakdownRow> rows = trihelix::compute_breakdown(
        data.records, global.policy(), global.unit_or(trihelix::Unit::bit));
    std::cout << trihelix::render_breakdown_csv(
        rows, global.unit_or(trihelix::Unit::bit));
    return 0;
  }

  if (report->parsed()) {
    if (report_source.dataset.empty() && report_source.file.empty()) {
      std::cerr << "error: report needs --dataset or --file\n";
      return 2;
    }
    const DatasetDescriptor data = report_source.load();
    trihelix::ReportOptions options;
    options.none_policy = global.policy();
    options.unit = global.unit_or(trihelix::Unit::millibit);
    options.window = global.window;
    options.trend_k = global.trend_k;
    const trihelix::ReportBundle bundle = trihelix::build_report(data, options);
    const std::filesystem::path out_dir =
        global.out.empty() ? std::filesystem::path(data.name + "_report")
                           : std::filesystem::path(global.out);
    trihelix::write_report(bundle, out_dir);
    for (const trihelix::ReportFile& file : bundle.files) {
      std::cout << (out_dir / file.name).string() << "\n";
    }
    return 0;
  }

  if (scan->parsed()) {
    trihelix::ScanSpec spec =
        trihelix::ScanSpec::for_mode(trihelix::scan_mode_from_name(scan_mode));
    if (!scan_patterns.empty()) {
      spec.patterns = {scan_patterns[0], scan_patterns[1], scan_patterns[2]};
    }
    const std::vector<trihelix::Document> docs =
        trihelix::load_corpus_dir(scan_dir);
    const std::vector<trihelix::CountRecord> records =
        trihelix::scan_corpus(docs, spec);
    std::cout << trihelix::render_count_csv(records);
    return 0;
  }

  if (synth->parsed()) {
    trihelix::RegimeSpec spec;
    spec.regime = trihelix::regime_from_name(synth_regime);
    spec.p_u = synth_pu;
    spec.p_i = synth_pi;
    spec.p_g = synth_pg;
    spec.coupling = synth_coupling;
    spec.population = synth_n;
    spec.seed = global.seed;
    const trihelix::JointDistribution dist = trihelix::regime_distribution(spec);
    const trihelix::CountRecord record =
        trihelix::sample_population(dist, spec.population, spec.seed,
                                    synth_year);
    const trihelix::TransmissionValue analytic = trihelix::convert_units(
        trihelix::transmission3_entropy_form(dist),
        global.unit_or(trihelix::Unit::bit));
    std::cout << trihelix::render_count_csv({&record, 1});
    char analytic_str[64];
    std::snprintf(analytic_str, sizeof(analytic_str), "%.17g", analytic.value);
    std::cerr << "analytic t_uig = " << analytic_str << " "
              << trihelix::unit_name(analytic.unit) << " ("
              << trihelix::regime_name(spec.regime) << ", coupling="
              << synth_coupling << ")\n";
    return 0;
  }

  // datasets
  for (const std::string& name : trihelix::builtin_dataset_names()) {
    const DatasetDescriptor& d = trihelix::builtin_dataset(name);
    std::cout << d.name << "  " << d.records.front().year << "-"
              << d.records.back().year << "  " << d.labels[0] << "/"
              << d.labels[1] << "/" << d.labels[2] << "\n";
    std::cout << "    " << d.source_note << "\n";
    for (const std::string& caveat : d.caveats) {
      std::cout << "    caveat: " << caveat << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const trihelix::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
