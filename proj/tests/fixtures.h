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

#ifndef DISASSOC_TESTS_FIXTURES_H_
#define DISASSOC_TESTS_FIXTURES_H_

// Hand-built inputs from the worked example (ten web-search records) and
// the small counter-example nodes used across tests.

#include <string>
#include <vector>

#include "disassoc/anonymize.h"
#include "disassoc/dataset.h"
#include "disassoc/horizontal.h"
#include "disassoc/model.h"

namespace disassoc::testing {

// Term ids in first-appearance order of the example dataset.
enum ExampleTerm : TermId {
  kItunes = 0,
  kFlu,
  kMadonna,
  kIkea,
  kRuby,
  kViagra,
  kAudiA4,
  kSonyTv,
  kDigitalCamera,
  kPanicDisorder,
  kPlayboy,
  kIphoneSdk,
};

inline const char* kExampleText =
    "itunes flu madonna ikea ruby\n"
    "madonna flu viagra ruby audi_a4 sony_tv\n"
    "itunes madonna audi_a4 ikea sony_tv\n"
    "itunes flu viagra\n"
    "itunes flu madonna audi_a4 sony_tv\n"
    "madonna digital_camera panic_disorder playboy\n"
    "iphone_sdk madonna ikea ruby\n"
    "iphone_sdk digital_camera madonna playboy\n"
    "iphone_sdk digital_camera panic_disorder\n"
    "iphone_sdk digital_camera madonna ikea ruby\n";

inline Dataset ExampleDataset() {
  return ParseDatasetText(kExampleText).dataset;
}

// The two five-record clusters of the example, fed around horpart.
inline std::vector<RawCluster> ExampleClusters(const Dataset& d) {
  return {MakeCluster(d, {0, 1, 2, 3, 4}), MakeCluster(d, {5, 6, 7, 8, 9})};
}

inline Params ExampleParams(bool refine = true) {
  Params p;
  p.k = 3;
  p.m = 2;
  p.max_cluster_size = 6;
  p.refine = refine;
  return p;
}

inline ClusterNode Leaf(std::size_t size, std::vector<RecordChunk> chunks,
                        std::vector<TermId> term_chunk = {}) {
  LeafCluster leaf;
  leaf.partition.size = size;
  leaf.partition.record_chunks = std::move(chunks);
  leaf.partition.term_chunk = std::move(term_chunk);
  return ClusterNode(std::move(leaf));
}

inline std::vector<Record> Repeat(const Record& r, std::size_t n) {
  return std::vector<Record>(n, r);
}

inline std::vector<Record> Concat(std::vector<Record> a,
                                  const std::vector<Record>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Five records, chunks {a} x3 and {b,c} x3, empty term chunk: too few
// subrecords for k = 3, m = 2. a = 0, b = 1, c = 2.
inline ClusterNode UnsafeBoundNode() {
  return Leaf(5, {{{0}, Repeat({0}, 3)}, {{1, 2}, Repeat({1, 2}, 3)}});
}

// Joint of P1 (3 records {a,x}) and P2 (4 records {b}) with a shared chunk
// over {a,o}. `safe` drops the lone {o} subrecord so the chunk is
// 3-anonymous. a = 0, b = 1, o = 2, x = 3.
inline ClusterNode SharedChunkNode(bool safe) {
  JointCluster joint;
  joint.children.push_back(Leaf(3, {{{0, 3}, Repeat({0, 3}, 3)}}));
  joint.children.push_back(Leaf(4, {{{1}, Repeat({1}, 4)}}));
  SharedChunk sc;
  sc.domain = {0, 2};
  sc.subrecords = Repeat({0, 2}, 3);
  if (!safe) sc.subrecords.push_back({2});
  joint.shared_chunks.push_back(std::move(sc));
  return ClusterNode(std::move(joint));
}

}  // namespace disassoc::testing

#endif  // DISASSOC_TESTS_FIXTURES_H_
