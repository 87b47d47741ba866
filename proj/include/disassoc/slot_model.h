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

#ifndef DISASSOC_SLOT_MODEL_H_
#define DISASSOC_SLOT_MODEL_H_

// Flattened view of a cluster node as record slots plus the chunks that must
// be distributed over them. Shared by the exhaustive oracle and the
// reconstruction sampler so both apply the same validity rules:
//  - a record chunk puts each subrecord in a distinct slot of its leaf;
//  - a shared chunk puts each subrecord in a distinct slot of some leaf below
//    its joint, never in a leaf whose record chunks (or the shared chunks of
//    joints between the two) hold one of the subrecord's terms;
//  - no slot receives the same term twice;
//  - term-chunk terms may be added to any slots of their leaf (at least one);
//  - every slot ends non-empty.

#include <cstddef>
#include <memory>
#include <vector>

#include "disassoc/model.h"

namespace disassoc {

struct SlotModel {
  struct Leaf {
    std::size_t first_slot = 0;
    std::size_t size = 0;
    const VerticalPartition* partition = nullptr;
  };
  struct Target {
    std::size_t leaf = 0;
    std::vector<TermId> forbidden;  // ascending
  };
  struct Unit {
    bool shared = false;
    std::size_t leaf = 0;  // owning leaf of a record chunk
    const std::vector<Record>* subrecords = nullptr;
    const std::vector<TermId>* domain = nullptr;
    // Shared chunks only: every leaf below the joint, in slot order, so the
    // target slots form one contiguous range. Shared by the joint's chunks.
    std::shared_ptr<const std::vector<Target>> targets;
  };

  std::vector<Leaf> leaves;
  // Record chunks in leaf order, then shared chunks, deepest joints first.
  std::vector<Unit> units;
  std::vector<std::size_t> slot_leaf;

  std::size_t slots() const { return slot_leaf.size(); }
};

// The node must outlive the model.
SlotModel BuildSlotModel(const ClusterNode& node);

}  // namespace disassoc

#endif  // DISASSOC_SLOT_MODEL_H_
