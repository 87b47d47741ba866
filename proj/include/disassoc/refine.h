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

#ifndef DISASSOC_REFINE_H_
#define DISASSOC_REFINE_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "disassoc/model.h"

namespace disassoc {

// tcs(t): how many leaf term chunks of the forest contain t. Indexed by id.
std::vector<std::uint32_t> TermChunkSupport(
    const std::vector<ClusterNode>& forest);

// Sort key used to line up clusters whose term chunks look alike.
struct ClusterOrderKey {
  // (-tcs(t), t) for every term of the (virtual) term chunk, ascending.
  std::vector<std::pair<std::int64_t, TermId>> terms;
  // Smallest original record position under the node; breaks full ties.
  std::size_t min_position = 0;

  // Lexicographic on `terms`; an empty term chunk sorts after any other.
  friend bool operator<(const ClusterOrderKey& a, const ClusterOrderKey& b);
};

ClusterOrderKey MakeOrderKey(const ClusterNode& node,
                             const std::vector<std::uint32_t>& tcs);

struct SharedChunkBuild {
  std::vector<SharedChunk> chunks;
  std::vector<TermId> placed;  // ascending
};

// Packs candidate terms of two nodes into shared chunk domains, greedily by
// combined support. Each leaf contributes the projection of its records onto
// (its term chunk ∩ domain). Domains meeting the record/shared terms of the
// two nodes must be k-anonymous, the rest k^m-anonymous. Candidates that fit
// nowhere are left out of `placed`. Leaves must still carry their source
// records.
SharedChunkBuild BuildSharedChunks(const ClusterNode& a, const ClusterNode& b,
                                   const std::vector<TermId>& candidates,
                                   const Params& params);

// Both sides of the merge criterion as exact fractions.
struct MergeRatios {
  std::uint64_t shared_support = 0;  // sum of placed-term supports
  std::uint64_t joint_size = 0;
  std::uint64_t term_chunk_hits = 0;  // sum over leaves of placed terms held
  std::uint64_t leaf_size = 0;        // sum of sizes of those leaves

  double lhs() const;
  double rhs() const;
  bool holds() const;  // lhs >= rhs, compared exactly
};

MergeRatios ComputeMergeRatios(const std::vector<TermId>& placed,
                               const std::vector<SharedChunk>& chunks,
                               const ClusterNode& a, const ClusterNode& b);

struct MergeRecord {
  std::vector<TermId> placed;
  MergeRatios ratios;
  std::size_t pass = 0;
};

struct RefineResult {
  std::vector<ClusterNode> forest;
  std::vector<MergeRecord> merges;
  std::size_t passes = 0;
};

// Joins adjacent clusters (in order-key order) pairwise, pass after pass,
// until a pass commits no merge. Every node joins at most one merge per pass.
RefineResult Refine(std::vector<ClusterNode> forest, const Params& params);

}  // namespace disassoc

#endif  // DISASSOC_REFINE_H_
