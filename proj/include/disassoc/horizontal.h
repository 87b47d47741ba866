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

#ifndef DISASSOC_HORIZONTAL_H_
#define DISASSOC_HORIZONTAL_H_

#include <cstddef>
#include <vector>

#include "disassoc/dataset.h"

namespace disassoc {

// A horizontal partition. `positions[i]` is the index of `records[i]` in the
// source dataset.
struct RawCluster {
  std::vector<Record> records;
  std::vector<std::size_t> positions;

  std::size_t size() const { return records.size(); }
};

// Recursive most-frequent-term splitting (HORPART).
//
// A sub-dataset with fewer than max_cluster_size records becomes a cluster.
// Otherwise it is split on the most frequent term outside `ignore` (ties to
// the smallest id; sensitive terms never split) whose split leaves every
// non-empty side with at least k records: the records that carry it,
// recursed with the term added to `ignore`, and the rest. With no such term
// the sub-dataset is halved by position when both halves keep k records,
// and emitted whole otherwise. Output order is left-to-right recursion
// order.
std::vector<RawCluster> HorizontalPartition(const Dataset& dataset,
                                            const Params& params);

// Wraps a subset of the dataset, by position, as a cluster.
RawCluster MakeCluster(const Dataset& dataset,
                       const std::vector<std::size_t>& positions);

}  // namespace disassoc

#endif  // DISASSOC_HORIZONTAL_H_
