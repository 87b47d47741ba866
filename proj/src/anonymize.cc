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

#include "disassoc/anonymize.h"

#include <algorithm>
#include <random>
#include <utility>

#include "disassoc/error.h"
#include "disassoc/parallel.h"

namespace disassoc {

namespace serial {

std::vector<ClusterNode> PartitionClusters(std::vector<RawCluster> clusters,
                                           const Params& params) {
  std::vector<ClusterNode> forest;
  forest.reserve(clusters.size());
  for (auto& c : clusters) {
    LeafCluster leaf;
    leaf.partition = PartitionCluster(c, params);
    leaf.source = std::move(c);
    forest.emplace_back(std::move(leaf));
  }
  return forest;
}

}  // namespace serial

std::vector<ClusterNode> PartitionClusters(std::vector<RawCluster> clusters,
                                           const Params& params) {
  const auto n = static_cast<std::ptrdiff_t>(clusters.size());
  std::vector<ClusterNode> forest(clusters.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(ThreadCount())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    LeafCluster leaf;
    leaf.partition = PartitionCluster(clusters[i], params);
    leaf.source = std::move(clusters[i]);
    forest[i] = ClusterNode(std::move(leaf));
  }
  return forest;
}

AnonymizeResult AnonymizeClusters(std::vector<RawCluster> clusters,
                                  const TermDictionary& dictionary,
                                  const Params& params) {
  params.Validate();
  AnonymizeResult result;
  result.clusters = clusters.size();
  result.published.k = params.k;
  result.published.m = params.m;
  result.published.dictionary = dictionary;
  auto forest = PartitionClusters(std::move(clusters), params);
  if (params.refine) {
    RefineResult refined = Refine(std::move(forest), params);
    forest = std::move(refined.forest);
    result.merges = std::move(refined.merges);
  }
  result.published.forest = std::move(forest);
  if (params.shuffle) ShuffleSubrecords(result.published, params.seed);
  return result;
}

AnonymizeResult Anonymize(const Dataset& dataset, const Params& params) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no records");
  }
  params.Validate();
  if (dataset.size() < static_cast<std::size_t>(params.k)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dataset has fewer than k records");
  }
  return AnonymizeClusters(HorizontalPartition(dataset, params),
                           dataset.dictionary, params);
}

namespace {

void ShuffleNode(ClusterNode& node, std::mt19937_64& rng) {
  if (node.is_leaf()) {
    for (auto& c : node.leaf().partition.record_chunks) {
      std::shuffle(c.subrecords.begin(), c.subrecords.end(), rng);
    }
    return;
  }
  for (auto& child : node.joint().children) ShuffleNode(child, rng);
  for (auto& sc : node.joint().shared_chunks) {
    std::shuffle(sc.subrecords.begin(), sc.subrecords.end(), rng);
  }
}

}  // namespace

void ShuffleSubrecords(DisassociatedDataset& published, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5348554646ULL);
  for (auto& node : published.forest) ShuffleNode(node, rng);
}

}  // namespace disassoc
