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

#ifndef DISASSOC_RECONSTRUCT_H_
#define DISASSOC_RECONSTRUCT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "disassoc/dataset.h"
#include "disassoc/model.h"
#include "disassoc/verify.h"

namespace disassoc {

// How term-chunk terms are spread over the records of their cluster.
enum class TermPolicy {
  kSingle,   // exactly one random record
  kUniform,  // one random record, plus every other with probability 1/size
};

std::optional<TermPolicy> ParseTermPolicy(std::string_view name);
const char* TermPolicyName(TermPolicy policy);

// Samples one dataset the published data could have come from. Records are
// emitted root by root, leaf by leaf. Each root draws from its own generator
// seeded from (seed, root index), so the result does not depend on the
// thread count. Throws Error(kReconstructionStuck) if a cluster cannot be
// filled within its retry budget.
Dataset Reconstruct(const DisassociatedDataset& published, std::uint64_t seed,
                    TermPolicy policy = TermPolicy::kSingle);

// Reconstructs the records of one node with `rng`.
std::vector<Record> ReconstructNode(const ClusterNode& node,
                                    std::mt19937_64& rng, TermPolicy policy);

// Seed of the generator used for root `index`.
std::uint64_t RootSeed(std::uint64_t seed, std::size_t index);

namespace serial {
Dataset Reconstruct(const DisassociatedDataset& published, std::uint64_t seed,
                    TermPolicy policy = TermPolicy::kSingle);
}  // namespace serial

// Deterministic exhaustive listing of distinct reconstructions of a small
// node (records sorted within each listing), at most `limit` of them.
// Throws Error(kTooLarge) beyond `limits`.
std::vector<std::vector<Record>> EnumerateReconstructions(
    const ClusterNode& node, std::size_t limit,
    const OracleLimits& limits = {});

}  // namespace disassoc

#endif  // DISASSOC_RECONSTRUCT_H_
