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

#ifndef DISASSOC_MODEL_H_
#define DISASSOC_MODEL_H_

// The published form: a forest of simple (leaf) and joint clusters.

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "disassoc/dataset.h"
#include "disassoc/horizontal.h"
#include "disassoc/vertical.h"

namespace disassoc {

// Chunk shared by the leaves of a joint cluster. `strict_k` is set when the
// domain meets a record or shared chunk domain below the joint, in which
// case plain k-anonymity is required instead of k^m-anonymity.
struct SharedChunk {
  std::vector<TermId> domain;
  std::vector<Record> subrecords;
  bool strict_k = false;

  friend bool operator==(const SharedChunk&, const SharedChunk&) = default;
};

// `source` holds the original records while anonymizing; it is never
// published and is empty for clusters read back from a file.
struct LeafCluster {
  VerticalPartition partition;
  RawCluster source;
};

struct ClusterNode;

struct JointCluster {
  std::vector<ClusterNode> children;
  std::vector<SharedChunk> shared_chunks;
};

struct ClusterNode {
  std::variant<LeafCluster, JointCluster> value;

  ClusterNode() = default;
  ClusterNode(LeafCluster leaf) : value(std::move(leaf)) {}
  ClusterNode(JointCluster joint) : value(std::move(joint)) {}

  bool is_leaf() const { return std::holds_alternative<LeafCluster>(value); }
  LeafCluster& leaf() { return std::get<LeafCluster>(value); }
  const LeafCluster& leaf() const { return std::get<LeafCluster>(value); }
  JointCluster& joint() { return std::get<JointCluster>(value); }
  const JointCluster& joint() const { return std::get<JointCluster>(value); }
};

struct DisassociatedDataset {
  int k = 0;
  int m = 0;
  TermDictionary dictionary;
  std::vector<ClusterNode> forest;
};

// Published record count: sum of leaf sizes.
std::size_t NodeSize(const ClusterNode& node);

// Depth-first, children in order.
void ForEachLeaf(const ClusterNode& node,
                 const std::function<void(const LeafCluster&)>& f);
void ForEachLeaf(ClusterNode& node,
                 const std::function<void(LeafCluster&)>& f);
void ForEachJoint(const ClusterNode& node,
                  const std::function<void(const JointCluster&)>& f);

// Union of the term chunks of the node's leaves, ascending.
std::vector<TermId> VirtualTermChunk(const ClusterNode& node);

// Every term appearing anywhere in the node, ascending.
std::vector<TermId> NodeDomain(const ClusterNode& node);

// Terms in record chunks of the node's leaves and shared chunks of its
// joints (the node itself included), ascending.
std::vector<TermId> RecordAndSharedTerms(const ClusterNode& node);

std::size_t LeafCount(const ClusterNode& node);

}  // namespace disassoc

#endif  // DISASSOC_MODEL_H_
