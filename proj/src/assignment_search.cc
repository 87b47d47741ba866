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

#include "assignment_search.h"

#include <algorithm>
#include <string>

#include "disassoc/error.h"

namespace disassoc::internal {

AssignmentSearch::AssignmentSearch(const ClusterNode& node,
                                   const OracleLimits& limits)
    : model_(BuildSlotModel(node)) {
  terms_ = NodeDomain(node);
  if (model_.slots() > limits.max_records || model_.slots() > 64) {
    throw Error(ErrorCode::kTooLarge,
                "node has " + std::to_string(model_.slots()) +
                    " records, oracle limit is " +
                    std::to_string(limits.max_records));
  }
  if (terms_.size() > limits.max_terms || terms_.size() > 64) {
    throw Error(ErrorCode::kTooLarge,
                "node has " + std::to_string(terms_.size()) +
                    " terms, oracle limit is " +
                    std::to_string(limits.max_terms));
  }
  for (const auto& leaf : model_.leaves) {
    tc_masks_.push_back(Mask(leaf.partition->term_chunk));
  }

  std::vector<bool> leaf_pinned(model_.leaves.size(), false);
  for (std::size_t u = 0; u < model_.units.size(); ++u) {
    const auto& unit = model_.units[u];
    std::vector<Record> bag(*unit.subrecords);
    std::sort(bag.begin(), bag.end());
    bool pin = !unit.shared && !leaf_pinned[unit.leaf];
    if (pin) leaf_pinned[unit.leaf] = true;
    for (std::size_t j = 0; j < bag.size(); ++j) {
      Item item;
      item.unit = u;
      item.mask = Mask(bag[j]);
      item.same_as_prev = j > 0 && bag[j] == bag[j - 1];
      if (!unit.shared) {
        const auto& leaf = model_.leaves[unit.leaf];
        for (std::size_t s = 0; s < leaf.size; ++s) {
          item.eligible.push_back(leaf.first_slot + s);
        }
        if (pin) item.fixed_slot = static_cast<long>(leaf.first_slot + j);
      } else {
        for (const auto& target : *unit.targets) {
          if (item.mask & Mask(target.forbidden)) continue;
          const auto& leaf = model_.leaves[target.leaf];
          for (std::size_t s = 0; s < leaf.size; ++s) {
            item.eligible.push_back(leaf.first_slot + s);
          }
        }
      }
      items_.push_back(std::move(item));
    }
  }
}

std::uint64_t AssignmentSearch::Mask(const std::vector<TermId>& items) const {
  std::uint64_t mask = 0;
  for (TermId t : items) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it != terms_.end() && *it == t) {
      mask |= std::uint64_t{1} << (it - terms_.begin());
    }
  }
  return mask;
}

void AssignmentSearch::Run(
    const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  base_.assign(model_.slots(), 0);
  unit_used_.assign(model_.units.size(), 0);
  visit_ = &visit;
  Dfs(0, 0);
  visit_ = nullptr;
}

bool AssignmentSearch::Dfs(std::size_t i, std::size_t prev_pos) {
  if (i == items_.size()) {
    for (std::size_t s = 0; s < base_.size(); ++s) {
      if (base_[s] == 0 && tc_masks_[model_.slot_leaf[s]] == 0) return true;
    }
    return (*visit_)(base_);
  }
  const Item& item = items_[i];
  std::uint64_t& used = unit_used_[item.unit];
  auto try_slot = [&](std::size_t s, std::size_t pos) {
    std::uint64_t bit = std::uint64_t{1} << s;
    if ((used & bit) || (base_[s] & item.mask)) return true;
    used |= bit;
    base_[s] |= item.mask;
    bool go_on = Dfs(i + 1, pos);
    base_[s] &= ~item.mask;
    used &= ~bit;
    return go_on;
  };
  if (item.fixed_slot >= 0) {
    auto s = static_cast<std::size_t>(item.fixed_slot);
    if (s >= base_.size() || model_.slot_leaf[s] != model_.slot_leaf[item.eligible.front()]) {
      return true;  // more subrecords than records: nothing valid
    }
    return try_slot(s, 0);
  }
  std::size_t start = item.same_as_prev ? prev_pos + 1 : 0;
  for (std::size_t p = start; p < item.eligible.size(); ++p) {
    if (!try_slot(item.eligible[p], p)) return false;
  }
  return true;
}

}  // namespace disassoc::internal
