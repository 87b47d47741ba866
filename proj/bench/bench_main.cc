// Copyright 2026 The Disassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels on a fixed synthetic workload.

#include <benchmark/benchmark.h>

#include "disassoc/anonymize.h"
#include "disassoc/metrics.h"
#include "disassoc/parallel.h"
#include "disassoc/reconstruct.h"
#include "disassoc/verify.h"

namespace disassoc {
namespace {

const Dataset& Workload() {
  static Dataset d = [] {
    SynthOptions o;
    o.records = 100000;
    o.domain = 5000;
    o.avg_len = 10;
    o.seed = 5;
    return GenerateSynthetic(o);
  }();
  return d;
}

Params BenchParams() {
  Params p;
  p.k = 5;
  return p;
}

const std::vector<RawCluster>& Clusters() {
  static auto c = HorizontalPartition(Workload(), BenchParams());
  return c;
}

const DisassociatedDataset& Published() {
  static auto p = Anonymize(Workload(), BenchParams()).published;
  return p;
}

void BM_SupportsSerial(benchmark::State& s) {
  const Dataset& d = Workload();
  for (auto _ : s) {
    benchmark::DoNotOptimize(serial::ComputeSupports(d.records,
                                                     d.dictionary.size()));
  }
}
void BM_SupportsParallel(benchmark::State& s) {
  const Dataset& d = Workload();
  for (auto _ : s) {
    benchmark::DoNotOptimize(ComputeSupports(d.records, d.dictionary.size()));
  }
}

void BM_VerticalSerial(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(
        serial::PartitionClusters(Clusters(), BenchParams()));
  }
}
void BM_VerticalParallel(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(PartitionClusters(Clusters(), BenchParams()));
  }
}

void BM_AuditSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::Audit(Published()));
}
void BM_AuditParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(Audit(Published()));
}

void BM_ReconstructSerial(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(serial::Reconstruct(Published(), 1));
  }
}
void BM_ReconstructParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(Reconstruct(Published(), 1));
}

// The naive miner is exponential in record length, so the miner is compared
// against itself on one thread.
void BM_MineTopK(benchmark::State& s) {
  SetThreadCount(static_cast<int>(s.range(0)));
  for (auto _ : s) {
    benchmark::DoNotOptimize(MineTopK(Workload().records, 1000));
  }
  SetThreadCount(0);
}

BENCHMARK(BM_SupportsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupportsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerticalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerticalParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReconstructSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReconstructParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MineTopK)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

// Builds the shared inputs up front so no timed benchmark pays for them.
void WarmUp() {
  Workload();
  Clusters();
  Published();
}

}  // namespace disassoc

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  disassoc::WarmUp();
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
