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

#ifndef DISASSOC_ITEMSET_UTIL_H_
#define DISASSOC_ITEMSET_UTIL_H_

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "disassoc/dataset.h"

namespace disassoc {

struct RecordHash {
  std::size_t operator()(const Record& r) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (TermId t : r) {
      h ^= t;
      h *= 0x100000001b3ULL;
    }
    return h ^ r.size();
  }
};

template <typename V>
using RecordMap = std::unordered_map<Record, V, RecordHash>;

// Calls f(subset) for every non-empty subset of `items` (ascending) with at
// most `max_size` elements. The subset buffer is reused between calls.
template <typename F>
void ForEachSubset(std::span<const TermId> items, int max_size, F&& f) {
  if (max_size <= 0 || items.empty()) return;
  Record buf;
  buf.reserve(static_cast<std::size_t>(max_size));
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < items.size(); ++i) {
      buf.push_back(items[i]);
      f(static_cast<const Record&>(buf));
      if (static_cast<int>(buf.size()) < max_size) rec(i + 1);
      buf.pop_back();
    }
  };
  rec(0);
}

}  // namespace disassoc

#endif  // DISASSOC_ITEMSET_UTIL_H_
