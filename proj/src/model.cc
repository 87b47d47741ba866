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

#include "disassoc/model.h"

#include <algorithm>

namespace disassoc {
namespace {

void SortUnique(std::vector<TermId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::size_t NodeSize(const ClusterNode& node) {
  std::size_t n = 0;
  ForEachLeaf(node, [&](const LeafCluster& l) { n += l.partition.size; });
  return n;
}

void ForEachLeaf(const ClusterNode& node,
                 const std::function<void(const LeafCluster&)>& f) {
  if (node.is_leaf()) {
    f(node.leaf());
    return;
  }
  for (const auto& c : node.joint().children) ForEachLeaf(c, f);
}

void ForEachLeaf(ClusterNode& node,
                 const std::function<void(LeafCluster&)>& f) {
  if (node.is_leaf()) {
    f(node.leaf());
    return;
  }
  for (auto& c : node.joint().children) ForEachLeaf(c, f);
}

void ForEachJoint(const ClusterNode& node,
                  const std::function<void(const JointCluster&)>& f) {
  if (node.is_leaf()) return;
  f(node.joint());
  for (const auto& c : node.joint().children) ForEachJoint(c, f);
}

std::vector<TermId> VirtualTermChunk(const ClusterNode& node) {
  std::vector<TermId> out;
  ForEachLeaf(node, [&](const LeafCluster& l) {
    out.insert(out.end(), l.partition.term_chunk.begin(),
               l.partition.term_chunk.end());
  });
  SortUnique(out);
  return out;
}

std::vector<TermId> NodeDomain(const ClusterNode& node) {
  std::vector<TermId> out;
  ForEachLeaf(node, [&](const LeafCluster& l) {
    auto d = PartitionDomain(l.partition);
    out.insert(out.end(), d.begin(), d.end());
  });
  ForEachJoint(node, [&](const JointCluster& j) {
    for (const auto& sc : j.shared_chunks) {
      out.insert(out.end(), sc.domain.begin(), sc.domain.end());
    }
  });
  SortUnique(out);
  return out;
}

std::vector<TermId> RecordAndSharedTerms(const ClusterNode& node) {
  std::vector<TermId> out;
  ForEachLeaf(node, [&](const LeafCluster& l) {
    for (const auto& c : l.partition.record_chunks) {
      out.insert(out.end(), c.domain.begin(), c.domain.end());
    }
  });
  ForEachJoint(node, [&](const JointCluster& j) {
    for (const auto& sc : j.shared_chunks) {
      out.insert(out.end(), sc.domain.begin(), sc.domain.end());
    }
  });
  SortUnique(out);
  return out;
}

std::size_t LeafCount(const ClusterNode& node) {
  std::size_t n = 0;
  ForEachLeaf(node, [&](const LeafCluster&) { ++n; });
  return n;
}

}  // namespace disassoc
