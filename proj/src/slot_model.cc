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

#include "disassoc/slot_model.h"

#include <algorithm>

namespace disassoc {
namespace {

struct Builder {
  SlotModel model;

  // Returns the leaf indices under `node`. `shared_below` collects, per leaf
  // index, the shared-chunk terms of joints visited so far beneath the
  // current joint.
  std::vector<std::size_t> Visit(const ClusterNode& node,
                                 std::vector<std::vector<TermId>>& shared_below) {
    if (node.is_leaf()) {
      const VerticalPartition& vp = node.leaf().partition;
      SlotModel::Leaf leaf;
      leaf.first_slot = model.slot_leaf.size();
      leaf.size = vp.size;
      leaf.partition = &vp;
      std::size_t index = model.leaves.size();
      model.leaves.push_back(leaf);
      model.slot_leaf.insert(model.slot_leaf.end(), vp.size, index);
      shared_below.emplace_back();
      for (const auto& c : vp.record_chunks) {
        SlotModel::Unit u;
        u.leaf = index;
        u.subrecords = &c.subrecords;
        u.domain = &c.domain;
        record_units.push_back(std::move(u));
      }
      return {index};
    }
    const JointCluster& joint = node.joint();
    std::vector<std::size_t> leaves;
    for (const auto& child : joint.children) {
      auto sub = Visit(child, shared_below);
      leaves.insert(leaves.end(), sub.begin(), sub.end());
    }
    if (!joint.shared_chunks.empty()) {
      auto targets = std::make_shared<std::vector<SlotModel::Target>>();
      targets->reserve(leaves.size());
      for (std::size_t li : leaves) {
        SlotModel::Target t;
        t.leaf = li;
        t.forbidden = shared_below[li];
        for (const auto& c : model.leaves[li].partition->record_chunks) {
          t.forbidden.insert(t.forbidden.end(), c.domain.begin(),
                             c.domain.end());
        }
        std::sort(t.forbidden.begin(), t.forbidden.end());
        t.forbidden.erase(std::unique(t.forbidden.begin(), t.forbidden.end()),
                          t.forbidden.end());
        targets->push_back(std::move(t));
      }
      for (const auto& sc : joint.shared_chunks) {
        SlotModel::Unit u;
        u.shared = true;
        u.subrecords = &sc.subrecords;
        u.domain = &sc.domain;
        u.targets = targets;
        shared_units.push_back(std::move(u));
      }
    }
    // Shared terms of this joint are forbidden for ancestors' chunks landing
    // in these leaves.
    for (std::size_t li : leaves) {
      for (const auto& sc : joint.shared_chunks) {
        shared_below[li].insert(shared_below[li].end(), sc.domain.begin(),
                                sc.domain.end());
      }
    }
    return leaves;
  }

  std::vector<SlotModel::Unit> record_units;
  std::vector<SlotModel::Unit> shared_units;
};

}  // namespace

SlotModel BuildSlotModel(const ClusterNode& node) {
  Builder b;
  std::vector<std::vector<TermId>> shared_below;
  b.Visit(node, shared_below);
  b.model.units = std::move(b.record_units);
  for (auto& u : b.shared_units) b.model.units.push_back(std::move(u));
  return std::move(b.model);
}

}  // namespace disassoc
