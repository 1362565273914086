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

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "trihelix/corpus.hpp"
#include "trihelix/counts.hpp"
#include "trihelix/infotheory.hpp"
#include "trihelix/synth.hpp"

namespace {

trihelix::JointDistribution skewed_triple() {
  return trihelix::JointDistribution(
      3, {0.35, 0.05, 0.15, 0.02, 0.2, 0.08, 0.1, 0.05});
}

trihelix::CountRecord patent_like_row() {
  trihelix::CountRecord r;
  r.year = 1993;
  r.u = 3063;
  r.i = 9716;
  r.g = 2619;
  r.ui = 401;
  r.ug = 588;
  r.ig = 334;
  r.uig = 63;
  r.total = 110540;
  return r;
}

std::vector<trihelix::Document> synthetic_corpus() {
  const char* bodies[] = {
      "The university opened a new lab.",
      "Industry and government signed the agreement.",
      "university industry government, all three.",
      "Nothing relevant in this one at all.",
      "Universities would not count, university does.",
  };
  std::vector<trihelix::Document> docs;
  docs.reserve(200);
  for (int k = 0; k < 200; ++k) {
    trihelix::Document doc;
    doc.identifier = "doc" + std::to_string(k);
    doc.year = 1995 + k % 5;
    doc.body = bodies[k % 5];
    docs.push_back(std::move(doc));
  }
  return docs;
}

void BM_Entropy3(benchmark::State& state) {
  const trihelix::JointDistribution dist = skewed_triple();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trihelix::entropy_bits(dist));
  }
}
BENCHMARK(BM_Entropy3);

void BM_Transmission3EntropyForm(benchmark::State& state) {
  const trihelix::JointDistribution dist = skewed_triple();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trihelix::transmission3_entropy_form(dist));
  }
}
BENCHMARK(BM_Transmission3EntropyForm);

void BM_Transmission3DirectForm(benchmark::State& state) {
  const trihelix::JointDistribution dist = skewed_triple();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trihelix::transmission3_direct_form(dist));
  }
}
BENCHMARK(BM_Transmission3DirectForm);

void BM_CountsToTransmission(benchmark::State& state) {
  const trihelix::CountRecord record = patent_like_row();
  for (auto _ : state) {
    const trihelix::ContingencyTable table =
        trihelix::contingency_from_counts(record);
    const trihelix::JointDistribution dist = trihelix::distribution_from_table(
        table, trihelix::NonePolicy::exclude_none);
    benchmark::DoNotOptimize(trihelix::transmission3_entropy_form(dist));
  }
}
BENCHMARK(BM_CountsToTransmission);

void BM_SamplePopulation(benchmark::State& state) {
  const trihelix::JointDistribution dist = skewed_triple();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trihelix::sample_population(dist, n, seed++));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_SamplePopulation)->Arg(10000);

void BM_ScanCorpus(benchmark::State& state) {
  const std::vector<trihelix::Document> docs = synthetic_corpus();
  const trihelix::ScanSpec spec =
      trihelix::ScanSpec::for_mode(trihelix::ScanMode::free_text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trihelix::scan_corpus(docs, spec));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(docs.size()));
}
BENCHMARK(BM_ScanCorpus);

}  // namespace

BENCHMARK_MAIN();
