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

#include "disassoc/vertical.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <limits>
#include <utility>

#include "disassoc/itemset_util.h"

namespace disassoc {

std::size_t ChunkSupport(std::span<const Record> subrecords,
                         std::span<const TermId> itemset) {
  std::size_t n = 0;
  for (const Record& r : subrecords) {
    if (ContainsAll(r, itemset)) ++n;
  }
  return n;
}

bool IsKmAnonymous(std::span<const Record> subrecords, int k, int m) {
  RecordMap<std::size_t> counts;
  for (const Record& r : subrecords) {
    ForEachSubset(r, m, [&](const Record& s) { ++counts[s]; });
  }
  for (const auto& [itemset, c] : counts) {
    if (c < static_cast<std::size_t>(k)) return false;
  }
  return true;
}

bool IsKAnonymous(std::span<const Record> subrecords, int k) {
  RecordMap<std::size_t> counts;
  for (const Record& r : subrecords) {
    if (!r.empty()) ++counts[r];
  }
  for (const auto& [rec, c] : counts) {
    if (c < static_cast<std::size_t>(k)) return false;
  }
  return true;
}

namespace serial {

bool IsKmAnonymous(std::span<const TermId> domain,
                   std::span<const Record> subrecords, int k, int m) {
  bool ok = true;
  ForEachSubset(domain, m, [&](const Record& s) {
    std::size_t c = ChunkSupport(subrecords, s);
    if (c != 0 && c < static_cast<std::size_t>(k)) ok = false;
  });
  return ok;
}

}  // namespace serial

RecordChunk ProjectChunk(std::span<const Record> records,
                         std::span<const TermId> domain) {
  RecordChunk chunk;
  chunk.domain.assign(domain.begin(), domain.end());
  for (const Record& r : records) {
    Record sub = Intersect(r, domain);
    if (!sub.empty()) chunk.subrecords.push_back(std::move(sub));
  }
  std::sort(chunk.subrecords.begin(), chunk.subrecords.end());
  return chunk;
}

namespace {

class GreedyPacker {
 public:
  GreedyPacker(const RawCluster& cluster, int k, int m)
      : records_(cluster.records), k_(k), m_(m) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
      for (TermId t : records_[i]) tids_[t].push_back(i);
    }
  }

  std::size_t Support(TermId t) const {
    auto it = tids_.find(t);
    return it == tids_.end() ? 0 : it->second.size();
  }

  const std::unordered_map<TermId, std::vector<std::size_t>>& tids() const {
    return tids_;
  }

  // Packs `remaining` (already in priority order) into chunk domains.
  std::vector<std::vector<TermId>> Pack(std::vector<TermId> remaining) {
    std::vector<std::vector<TermId>> domains;
    while (!remaining.empty()) {
      current_.clear();
      std::vector<TermId> rest;
      for (TermId t : remaining) {
        if (CanAdd(t)) {
          current_.insert(t);
        } else {
          rest.push_back(t);
        }
      }
      std::vector<TermId> domain(current_.begin(), current_.end());
      std::sort(domain.begin(), domain.end());
      domains.push_back(std::move(domain));
      remaining = std::move(rest);
    }
    return domains;
  }

 private:
  // Only itemsets containing t can change status when t joins the set, so
  // counting those is equivalent to revalidating the whole chunk.
  bool CanAdd(TermId t) {
    const auto& ids = tids_.at(t);
    if (ids.size() < static_cast<std::size_t>(k_)) return false;
    if (m_ <= 1 || current_.empty()) return true;
    RecordMap<std::size_t> counts;
    Record partner;
    for (std::size_t rid : ids) {
      partner.clear();
      for (TermId u : records_[rid]) {
        if (current_.count(u) != 0) partner.push_back(u);
      }
      ForEachSubset(partner, m_ - 1, [&](const Record& s) { ++counts[s]; });
    }
    for (const auto& [itemset, c] : counts) {
      if (c < static_cast<std::size_t>(k_)) return false;
    }
    return true;
  }

  const std::vector<Record>& records_;
  int k_;
  int m_;
  std::unordered_map<TermId, std::vector<std::size_t>> tids_;
  std::unordered_set<TermId> current_;
};

}  // namespace

VerticalPartition PartitionCluster(const RawCluster& cluster,
                                   const Params& params) {
  GreedyPacker packer(cluster, params.k, params.m);
  std::vector<std::pair<TermId, std::size_t>> terms;
  for (const auto& [t, ids] : packer.tids()) terms.emplace_back(t, ids.size());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  VerticalPartition vp;
  vp.size = cluster.size();
  std::vector<TermId> remaining;
  for (const auto& [t, support] : terms) {
    if (support < static_cast<std::size_t>(params.k) || params.IsSensitive(t)) {
      vp.term_chunk.push_back(t);
    } else {
      remaining.push_back(t);
    }
  }
  std::sort(vp.term_chunk.begin(), vp.term_chunk.end());
  for (auto& domain : packer.Pack(std::move(remaining))) {
    vp.record_chunks.push_back(ProjectChunk(cluster.records, domain));
  }
  return EnforceRecordCountBound(std::move(vp), params);
}

std::size_t SubrecordCount(const VerticalPartition& vp) {
  std::size_t n = 0;
  for (const auto& c : vp.record_chunks) {
    for (const auto& s : c.subrecords) n += s.empty() ? 0 : 1;
  }
  return n;
}

std::int64_t RecordCountBound(const VerticalPartition& vp, int k, int m) {
  std::int64_t v = static_cast<std::int64_t>(vp.record_chunks.size());
  std::int64_t h = std::min<std::int64_t>(m, v);
  return static_cast<std::int64_t>(vp.size) + k * (h - 1);
}

bool SatisfiesRecordCountBound(const VerticalPartition& vp, int k, int m) {
  if (!vp.term_chunk.empty()) return true;
  return static_cast<std::int64_t>(SubrecordCount(vp)) >=
         RecordCountBound(vp, k, m);
}

VerticalPartition EnforceRecordCountBound(VerticalPartition vp,
                                          const Params& params) {
  while (!SatisfiesRecordCountBound(vp, params.k, params.m) &&
         !vp.record_chunks.empty()) {
    std::size_t best_chunk = 0;
    TermId best_term = 0;
    std::size_t best_support = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < vp.record_chunks.size(); ++c) {
      const RecordChunk& chunk = vp.record_chunks[c];
      for (TermId t : chunk.domain) {
        std::size_t s = ChunkSupport(chunk.subrecords, std::span(&t, 1));
        if (s < best_support || (s == best_support && t > best_term)) {
          best_support = s;
          best_term = t;
          best_chunk = c;
        }
      }
    }
    RecordChunk& chunk = vp.record_chunks[best_chunk];
    std::erase(chunk.domain, best_term);
    std::vector<Record> kept;
    for (Record& s : chunk.subrecords) {
      std::erase(s, best_term);
      if (!s.empty()) kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    chunk.subrecords = std::move(kept);
    if (chunk.domain.empty()) {
      vp.record_chunks.erase(vp.record_chunks.begin() +
                             static_cast<std::ptrdiff_t>(best_chunk));
    }
    vp.term_chunk.insert(std::upper_bound(vp.term_chunk.begin(),
                                          vp.term_chunk.end(), best_term),
                         best_term);
  }
  return vp;
}

std::vector<TermId> PartitionDomain(const VerticalPartition& vp) {
  std::vector<TermId> out(vp.term_chunk);
  for (const auto& c : vp.record_chunks) {
    out.insert(out.end(), c.domain.begin(), c.domain.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace disassoc
