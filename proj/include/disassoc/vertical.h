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

#ifndef DISASSOC_VERTICAL_H_
#define DISASSOC_VERTICAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "disassoc/dataset.h"
#include "disassoc/horizontal.h"

namespace disassoc {

// A bag of non-empty subrecords over `domain`, stored content-sorted.
struct RecordChunk {
  std::vector<TermId> domain;
  std::vector<Record> subrecords;

  friend bool operator==(const RecordChunk&, const RecordChunk&) = default;
};

// Vertical partition of one cluster: record chunks plus the term chunk.
struct VerticalPartition {
  std::size_t size = 0;
  std::vector<RecordChunk> record_chunks;
  std::vector<TermId> term_chunk;

  friend bool operator==(const VerticalPartition&,
                         const VerticalPartition&) = default;
};

// Number of subrecords (with multiplicity) containing every term of
// `itemset` (ascending).
std::size_t ChunkSupport(std::span<const Record> subrecords,
                         std::span<const TermId> itemset);

// Every itemset of 1..m terms occurring in the bag occurs at least k times.
bool IsKmAnonymous(std::span<const Record> subrecords, int k, int m);
inline bool IsKmAnonymous(const RecordChunk& chunk, int k, int m) {
  return IsKmAnonymous(chunk.subrecords, k, m);
}

// Every distinct non-empty subrecord occurs at least k times.
bool IsKAnonymous(std::span<const Record> subrecords, int k);

namespace serial {
// Definition-level check: enumerates every itemset of the domain up to size
// m and scans the bag for each. Exponential; for tests.
bool IsKmAnonymous(std::span<const TermId> domain,
                   std::span<const Record> subrecords, int k, int m);
}  // namespace serial

// Projects records onto `domain` (ascending), dropping empty projections and
// sorting the bag.
RecordChunk ProjectChunk(std::span<const Record> records,
                         std::span<const TermId> domain);

// Greedy VERPART followed by EnforceRecordCountBound.
VerticalPartition PartitionCluster(const RawCluster& cluster,
                                   const Params& params);

// Non-empty subrecords across all record chunks.
std::size_t SubrecordCount(const VerticalPartition& vp);

// size + k * (min(m, v) - 1), v = number of record chunks.
std::int64_t RecordCountBound(const VerticalPartition& vp, int k, int m);

// The record-count condition: enough subrecords, or a non-empty term chunk.
bool SatisfiesRecordCountBound(const VerticalPartition& vp, int k, int m);

// Moves least frequent record-chunk terms (lowest support, then highest id)
// into the term chunk until SatisfiesRecordCountBound holds.
VerticalPartition EnforceRecordCountBound(VerticalPartition vp,
                                          const Params& params);

// All terms of the partition, ascending.
std::vector<TermId> PartitionDomain(const VerticalPartition& vp);

}  // namespace disassoc

#endif  // DISASSOC_VERTICAL_H_
