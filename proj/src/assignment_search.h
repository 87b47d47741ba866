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

#ifndef DISASSOC_SRC_ASSIGNMENT_SEARCH_H_
#define DISASSOC_SRC_ASSIGNMENT_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "disassoc/model.h"
#include "disassoc/slot_model.h"
#include "disassoc/verify.h"

namespace disassoc::internal {

// Exhaustive enumeration of chunk-subrecord-to-slot assignments for a small
// node, terms and slots encoded as 64-bit masks. Identical subrecords of one
// chunk are placed in increasing slot order and the first record chunk of
// every leaf is pinned, so assignments are visited once up to slot
// relabelling within a leaf.
class AssignmentSearch {
 public:
  // Throws Error(kTooLarge) when the node exceeds `limits` (or 64 slots or
  // terms).
  AssignmentSearch(const ClusterNode& node, const OracleLimits& limits);

  // Calls `visit` with the per-slot term masks of every valid assignment
  // (no duplicate terms, every slot non-empty or fillable from its leaf's
  // term chunk). Stops early when `visit` returns false.
  void Run(const std::function<bool(const std::vector<std::uint64_t>&)>& visit);

  std::size_t slots() const { return model_.slots(); }
  std::size_t slot_leaf(std::size_t slot) const {
    return model_.slot_leaf[slot];
  }
  std::size_t leaves() const { return model_.leaves.size(); }
  std::size_t leaf_first_slot(std::size_t leaf) const {
    return model_.leaves[leaf].first_slot;
  }
  std::size_t leaf_size(std::size_t leaf) const {
    return model_.leaves[leaf].size;
  }
  // Term-chunk mask of a leaf.
  std::uint64_t term_chunk_mask(std::size_t leaf) const {
    return tc_masks_[leaf];
  }
  // Local bit index -> term id.
  const std::vector<TermId>& terms() const { return terms_; }
  std::uint64_t Mask(const std::vector<TermId>& items) const;

 private:
  struct Item {
    std::size_t unit = 0;
    std::uint64_t mask = 0;
    bool same_as_prev = false;
    long fixed_slot = -1;
    std::vector<std::size_t> eligible;
  };

  bool Dfs(std::size_t i, std::size_t prev_pos);

  SlotModel model_;
  std::vector<TermId> terms_;
  std::vector<std::uint64_t> tc_masks_;
  std::vector<Item> items_;
  std::vector<std::uint64_t> base_;
  std::vector<std::uint64_t> unit_used_;
  const std::function<bool(const std::vector<std::uint64_t>&)>* visit_ =
      nullptr;
};

}  // namespace disassoc::internal

#endif  // DISASSOC_SRC_ASSIGNMENT_SEARCH_H_
