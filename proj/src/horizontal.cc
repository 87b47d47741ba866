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

#include "disassoc/horizontal.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "disassoc/error.h"

namespace disassoc {
namespace {

struct Task {
  std::vector<std::size_t> positions;
  std::vector<TermId> ignore;
};

class Partitioner {
 public:
  Partitioner(const Dataset& dataset, const Params& params)
      : dataset_(dataset),
        params_(params),
        k_(static_cast<std::size_t>(params.k)),
        counts_(dataset.dictionary.size(), 0),
        blocked_(dataset.dictionary.size(), 0) {
    for (TermId t : params.sensitive_terms) {
      if (t < blocked_.size()) blocked_[t] = 1;
    }
  }

  std::vector<RawCluster> Run() {
    std::vector<RawCluster> out;
    std::vector<Task> stack;
    Task root;
    root.positions.resize(dataset_.size());
    for (std::size_t i = 0; i < dataset_.size(); ++i) root.positions[i] = i;
    stack.push_back(std::move(root));
    const std::size_t k = static_cast<std::size_t>(params_.k);
    const std::size_t limit = static_cast<std::size_t>(params_.max_cluster_size);

    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      const std::size_t n = task.positions.size();
      if (n == 0) continue;
      if (n < limit) {
        out.push_back(MakeCluster(dataset_, task.positions));
        continue;
      }
      auto split = MostFrequent(task);
      if (split) {
        TermId a = *split;
        Task with, without;
        with.ignore = task.ignore;
        with.ignore.push_back(a);
        without.ignore = std::move(task.ignore);
        for (std::size_t p : task.positions) {
          (Contains(dataset_.records[p], a) ? with : without)
              .positions.push_back(p);
        }
        // Left branch (records with a) is emitted first.
        stack.push_back(std::move(without));
        stack.push_back(std::move(with));
        continue;
      }
      if (n >= 2 * k) {
        std::size_t half = n / 2;
        Task left, right;
        left.positions.assign(task.positions.begin(),
                              task.positions.begin() + half);
        right.positions.assign(task.positions.begin() + half,
                               task.positions.end());
        left.ignore = task.ignore;
        right.ignore = std::move(task.ignore);
        stack.push_back(std::move(right));
        stack.push_back(std::move(left));
        continue;
      }
      out.push_back(MakeCluster(dataset_, task.positions));
    }
    return out;
  }

 private:
  // Most frequent admissible term not ignored or sensitive; ties to the
  // smallest id.
  std::optional<TermId> MostFrequent(const Task& task) {
    touched_.clear();
    for (std::size_t p : task.positions) {
      for (TermId t : dataset_.records[p]) {
        if (counts_[t]++ == 0) touched_.push_back(t);
      }
    }
    std::optional<TermId> best;
    std::uint32_t best_count = 0;
    for (TermId t : touched_) {
      std::uint32_t c = counts_[t];
      counts_[t] = 0;
      if (blocked_[t]) continue;
      if (std::find(task.ignore.begin(), task.ignore.end(), t) !=
          task.ignore.end()) {
        continue;
      }
      // Splits leaving a non-empty side with fewer than k records are
      // skipped.
      const std::size_t n = task.positions.size();
      if (c < k_ || (c != n && n - c < k_)) continue;
      if (c > best_count || (c == best_count && best && t < *best)) {
        best = t;
        best_count = c;
      }
    }
    return best;
  }

  const Dataset& dataset_;
  const Params& params_;
  std::size_t k_;
  std::vector<std::uint32_t> counts_;
  std::vector<char> blocked_;
  std::vector<TermId> touched_;
};

}  // namespace

RawCluster MakeCluster(const Dataset& dataset,
                       const std::vector<std::size_t>& positions) {
  RawCluster c;
  c.positions = positions;
  c.records.reserve(positions.size());
  for (std::size_t p : positions) c.records.push_back(dataset.records.at(p));
  return c;
}

std::vector<RawCluster> HorizontalPartition(const Dataset& dataset,
                                            const Params& params) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "cannot partition an empty dataset");
  }
  params.Validate();
  return Partitioner(dataset, params).Run();
}

}  // namespace disassoc
