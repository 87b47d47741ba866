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

#include "disassoc/refine.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "disassoc/itemset_util.h"

namespace disassoc {

std::vector<std::uint32_t> TermChunkSupport(
    const std::vector<ClusterNode>& forest) {
  std::vector<std::uint32_t> tcs;
  for (const auto& node : forest) {
    ForEachLeaf(node, [&](const LeafCluster& l) {
      for (TermId t : l.partition.term_chunk) {
        if (t >= tcs.size()) tcs.resize(t + 1, 0);
        ++tcs[t];
      }
    });
  }
  return tcs;
}

bool operator<(const ClusterOrderKey& a, const ClusterOrderKey& b) {
  if (a.terms.empty() != b.terms.empty()) return b.terms.empty();
  if (a.terms != b.terms) return a.terms < b.terms;
  return a.min_position < b.min_position;
}

ClusterOrderKey MakeOrderKey(const ClusterNode& node,
                             const std::vector<std::uint32_t>& tcs) {
  ClusterOrderKey key;
  for (TermId t : VirtualTermChunk(node)) {
    std::int64_t support = t < tcs.size() ? tcs[t] : 0;
    key.terms.emplace_back(-support, t);
  }
  std::sort(key.terms.begin(), key.terms.end());
  key.min_position = std::numeric_limits<std::size_t>::max();
  ForEachLeaf(node, [&](const LeafCluster& l) {
    for (std::size_t p : l.source.positions) {
      key.min_position = std::min(key.min_position, p);
    }
  });
  return key;
}

namespace {

using OccurrenceKey = std::uint64_t;  // leaf index << 32 | record index

void InsertSorted(Record& r, TermId t) {
  r.insert(std::upper_bound(r.begin(), r.end(), t), t);
}

}  // namespace

SharedChunkBuild BuildSharedChunks(const ClusterNode& a, const ClusterNode& b,
                                   const std::vector<TermId>& candidates,
                                   const Params& params) {
  SharedChunkBuild out;
  if (candidates.empty()) return out;
  const std::size_t k = static_cast<std::size_t>(params.k);

  std::vector<const LeafCluster*> leaves;
  auto collect = [&](const LeafCluster& l) { leaves.push_back(&l); };
  ForEachLeaf(a, collect);
  ForEachLeaf(b, collect);

  std::unordered_map<TermId, std::vector<OccurrenceKey>> occ;
  for (std::size_t li = 0; li < leaves.size(); ++li) {
    const LeafCluster& leaf = *leaves[li];
    Record usable = Intersect(leaf.partition.term_chunk, candidates);
    if (usable.empty()) continue;
    for (std::size_t ri = 0; ri < leaf.source.records.size(); ++ri) {
      for (TermId t : Intersect(leaf.source.records[ri], usable)) {
        occ[t].push_back((static_cast<OccurrenceKey>(li) << 32) | ri);
      }
    }
  }

  std::vector<TermId> remaining;
  for (TermId t : candidates) {
    if (occ.count(t) != 0) remaining.push_back(t);
  }
  std::sort(remaining.begin(), remaining.end(), [&](TermId x, TermId y) {
    std::size_t sx = occ[x].size(), sy = occ[y].size();
    if (sx != sy) return sx > sy;
    return x < y;
  });

  std::vector<TermId> restricted = RecordAndSharedTerms(a);
  {
    auto rb = RecordAndSharedTerms(b);
    restricted.insert(restricted.end(), rb.begin(), rb.end());
    std::sort(restricted.begin(), restricted.end());
  }
  auto is_restricted = [&](TermId t) {
    return std::binary_search(restricted.begin(), restricted.end(), t);
  };

  while (!remaining.empty()) {
    std::vector<TermId> current;
    bool strict = false;
    std::unordered_map<OccurrenceKey, Record> proj;
    std::vector<TermId> rest;
    for (TermId t : remaining) {
      const auto& hits = occ[t];
      if (hits.size() < k) {
        rest.push_back(t);
        continue;
      }
      bool strict_after = strict || is_restricted(t);
      bool ok = true;
      if (strict_after) {
        std::unordered_set<OccurrenceKey> touched(hits.begin(), hits.end());
        RecordMap<std::size_t> counts;
        for (const auto& [key, p] : proj) {
          if (touched.count(key) == 0) ++counts[p];
        }
        for (OccurrenceKey key : hits) {
          auto it = proj.find(key);
          Record p = it == proj.end() ? Record{} : it->second;
          InsertSorted(p, t);
          ++counts[p];
        }
        for (const auto& [p, c] : counts) {
          if (c < k) {
            ok = false;
            break;
          }
        }
      } else if (params.m > 1 && !current.empty()) {
        RecordMap<std::size_t> counts;
        for (OccurrenceKey key : hits) {
          auto it = proj.find(key);
          if (it == proj.end()) continue;
          ForEachSubset(it->second, params.m - 1,
                        [&](const Record& s) { ++counts[s]; });
        }
        for (const auto& [s, c] : counts) {
          if (c < k) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        rest.push_back(t);
        continue;
      }
      current.push_back(t);
      strict = strict_after;
      for (OccurrenceKey key : hits) InsertSorted(proj[key], t);
    }
    if (current.empty()) break;
    SharedChunk chunk;
    chunk.domain = current;
    std::sort(chunk.domain.begin(), chunk.domain.end());
    chunk.subrecords.reserve(proj.size());
    for (auto& [key, p] : proj) chunk.subrecords.push_back(std::move(p));
    std::sort(chunk.subrecords.begin(), chunk.subrecords.end());
    chunk.strict_k = strict;
    out.placed.insert(out.placed.end(), chunk.domain.begin(),
                      chunk.domain.end());
    out.chunks.push_back(std::move(chunk));
    remaining = std::move(rest);
  }
  std::sort(out.placed.begin(), out.placed.end());
  return out;
}

double MergeRatios::lhs() const {
  return joint_size == 0 ? 0.0
                         : static_cast<double>(shared_support) /
                               static_cast<double>(joint_size);
}

double MergeRatios::rhs() const {
  return leaf_size == 0 ? 0.0
                        : static_cast<double>(term_chunk_hits) /
                              static_cast<double>(leaf_size);
}

bool MergeRatios::holds() const {
  // shared_support / joint_size >= term_chunk_hits / leaf_size
  return static_cast<unsigned __int128>(shared_support) * leaf_size >=
         static_cast<unsigned __int128>(term_chunk_hits) * joint_size;
}

MergeRatios ComputeMergeRatios(const std::vector<TermId>& placed,
                               const std::vector<SharedChunk>& chunks,
                               const ClusterNode& a, const ClusterNode& b) {
  MergeRatios r;
  for (const auto& chunk : chunks) {
    for (TermId t : placed) {
      r.shared_support += ChunkSupport(chunk.subrecords, std::span(&t, 1));
    }
  }
  r.joint_size = NodeSize(a) + NodeSize(b);
  auto visit = [&](const LeafCluster& l) {
    std::size_t u = Intersect(l.partition.term_chunk, placed).size();
    if (u == 0) return;
    r.term_chunk_hits += u;
    r.leaf_size += l.partition.size;
  };
  ForEachLeaf(a, visit);
  ForEachLeaf(b, visit);
  return r;
}

namespace {

struct MergePlan {
  SharedChunkBuild build;
  MergeRatios ratios;
};

std::optional<MergePlan> PlanMerge(const ClusterNode& a, const ClusterNode& b,
                                   const Params& params) {
  std::vector<TermId> candidates =
      Intersect(VirtualTermChunk(a), VirtualTermChunk(b));
  std::erase_if(candidates, [&](TermId t) { return params.IsSensitive(t); });
  // A leaf that relies on its term chunk for the record-count condition
  // keeps at least one term of it.
  auto reserve = [&](const LeafCluster& l) {
    const auto& tc = l.partition.term_chunk;
    if (tc.empty()) return;
    if (static_cast<std::int64_t>(SubrecordCount(l.partition)) >=
        RecordCountBound(l.partition, params.k, params.m)) {
      return;
    }
    if (Intersect(tc, candidates).size() == tc.size()) {
      std::erase(candidates, tc.back());
    }
  };
  ForEachLeaf(a, reserve);
  ForEachLeaf(b, reserve);
  if (candidates.empty()) return std::nullopt;

  MergePlan plan;
  plan.build = BuildSharedChunks(a, b, candidates, params);
  if (plan.build.placed.empty()) return std::nullopt;
  plan.ratios = ComputeMergeRatios(plan.build.placed, plan.build.chunks, a, b);
  if (!plan.ratios.holds()) return std::nullopt;
  return plan;
}

ClusterNode CommitMerge(ClusterNode a, ClusterNode b, MergePlan plan) {
  JointCluster joint;
  joint.children.push_back(std::move(a));
  joint.children.push_back(std::move(b));
  for (auto& child : joint.children) {
    ForEachLeaf(child, [&](LeafCluster& l) {
      std::erase_if(l.partition.term_chunk, [&](TermId t) {
        return std::binary_search(plan.build.placed.begin(),
                                  plan.build.placed.end(), t);
      });
    });
  }
  joint.shared_chunks = std::move(plan.build.chunks);
  return ClusterNode(std::move(joint));
}

}  // namespace

RefineResult Refine(std::vector<ClusterNode> forest, const Params& params) {
  RefineResult result;
  while (true) {
    ++result.passes;
    auto tcs = TermChunkSupport(forest);
    std::vector<ClusterOrderKey> keys;
    keys.reserve(forest.size());
    for (const auto& node : forest) keys.push_back(MakeOrderKey(node, tcs));
    std::vector<std::size_t> order(forest.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x,
                                                     std::size_t y) {
      return keys[x] < keys[y];
    });

    std::vector<ClusterNode> next;
    next.reserve(forest.size());
    bool changed = false;
    std::size_t i = 0;
    while (i < order.size()) {
      if (i + 1 < order.size()) {
        ClusterNode& a = forest[order[i]];
        ClusterNode& b = forest[order[i + 1]];
        if (auto plan = PlanMerge(a, b, params)) {
          result.merges.push_back(
              {plan->build.placed, plan->ratios, result.passes});
          next.push_back(CommitMerge(std::move(a), std::move(b),
                                     std::move(*plan)));
          changed = true;
          i += 2;
          continue;
        }
      }
      next.push_back(std::move(forest[order[i]]));
      ++i;
    }
    forest = std::move(next);
    if (!changed) break;
  }
  result.forest = std::move(forest);
  return result;
}

}  // namespace disassoc
