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

#ifndef DISASSOC_ANONYMIZE_H_
#define DISASSOC_ANONYMIZE_H_

#include <cstdint>
#include <vector>

#include "disassoc/dataset.h"
#include "disassoc/horizontal.h"
#include "disassoc/model.h"
#include "disassoc/refine.h"

namespace disassoc {

struct AnonymizeResult {
  DisassociatedDataset published;
  std::vector<MergeRecord> merges;
  std::size_t clusters = 0;
};

// Full pipeline: horizontal partitioning, per-cluster vertical partitioning
// (parallel over clusters), optional refining and optional shuffling.
// Throws kEmptyDataset for an empty dataset and kInvalidArgument when the
// dataset holds fewer than k records.
AnonymizeResult Anonymize(const Dataset& dataset, const Params& params);

// Same pipeline starting from an existing horizontal partition.
AnonymizeResult AnonymizeClusters(std::vector<RawCluster> clusters,
                                  const TermDictionary& dictionary,
                                  const Params& params);

// Vertical partitioning of every cluster. The serial variant is the
// reference the parallel one is tested against.
std::vector<ClusterNode> PartitionClusters(std::vector<RawCluster> clusters,
                                           const Params& params);
namespace serial {
std::vector<ClusterNode> PartitionClusters(std::vector<RawCluster> clusters,
                                           const Params& params);
}  // namespace serial

// Puts every chunk's subrecords in a seeded random order.
void ShuffleSubrecords(DisassociatedDataset& published, std::uint64_t seed);

}  // namespace disassoc

#endif  // DISASSOC_ANONYMIZE_H_
