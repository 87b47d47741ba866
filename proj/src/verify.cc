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

#include "disassoc/verify.h"

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "assignment_search.h"
#include "disassoc/error.h"
#include "disassoc/itemset_util.h"
#include "disassoc/parallel.h"

namespace disassoc {
namespace {

std::string Join(const std::vector<TermId>& terms) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ",";
    os << terms[i];
  }
  os << "}";
  return os.str();
}

std::vector<TermId> Overlap(const std::vector<TermId>& a,
                            const std::vector<TermId>& b) {
  std::vector<TermId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool IsStrictlyAscending(const std::vector<TermId>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) return false;
  }
  return true;
}

class Auditor {
 public:
  Auditor(int k, int m) : k_(k), m_(m) {}

  AuditReport Run(const ClusterNode& node, const std::string& location) {
    Visit(node, location);
    report_.passed = report_.violations.empty();
    return std::move(report_);
  }

 private:
  void Add(const std::string& location, ViolationKind kind,
           std::string detail) {
    report_.violations.push_back({location, kind, std::move(detail)});
  }

  // Chunk-local structure shared by record and shared chunks.
  void CheckChunkContents(const std::string& loc,
                          const std::vector<TermId>& domain,
                          const std::vector<Record>& subrecords,
                          std::size_t size) {
    if (!IsStrictlyAscending(domain)) {
      Add(loc, ViolationKind::kDomainCoverage, "domain not ascending");
    }
    if (subrecords.size() > size) {
      Add(loc, ViolationKind::kDomainCoverage,
          std::to_string(subrecords.size()) + " subrecords exceed " +
              std::to_string(size) + " records");
    }
    std::vector<bool> used(domain.size(), false);
    for (const auto& sr : subrecords) {
      if (sr.empty()) {
        Add(loc, ViolationKind::kDomainCoverage, "empty subrecord");
        continue;
      }
      if (!IsStrictlyAscending(sr)) {
        Add(loc, ViolationKind::kDomainCoverage,
            "subrecord " + Join(sr) + " has repeated or unsorted terms");
      }
      for (TermId t : sr) {
        auto it = std::lower_bound(domain.begin(), domain.end(), t);
        if (it == domain.end() || *it != t) {
          Add(loc, ViolationKind::kDomainCoverage,
              "subrecord term " + std::to_string(t) + " outside domain");
        } else {
          used[it - domain.begin()] = true;
        }
      }
    }
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (!used[i]) {
        Add(loc, ViolationKind::kDomainCoverage,
            "domain term " + std::to_string(domain[i]) + " unused");
      }
    }
  }

  void Visit(const ClusterNode& node, const std::string& loc) {
    if (node.is_leaf()) {
      VisitLeaf(node.leaf().partition, loc);
      return;
    }
    const JointCluster& joint = node.joint();
    if (joint.children.empty()) {
      Add(loc, ViolationKind::kDomainCoverage, "joint without children");
    }
    for (std::size_t i = 0; i < joint.children.size(); ++i) {
      Visit(joint.children[i], loc + ".children[" + std::to_string(i) + "]");
    }
    VisitJoint(node, loc);
  }

  void VisitLeaf(const VerticalPartition& vp, const std::string& loc) {
    if (vp.size == 0) {
      Add(loc, ViolationKind::kDomainCoverage, "empty cluster");
    }
    for (std::size_t i = 0; i < vp.record_chunks.size(); ++i) {
      const auto& c = vp.record_chunks[i];
      std::string cloc = loc + ".record_chunks[" + std::to_string(i) + "]";
      CheckChunkContents(cloc, c.domain, c.subrecords, vp.size);
      if (!IsKmAnonymous(c.subrecords, k_, m_)) {
        Add(cloc, ViolationKind::kChunkKm,
            "record chunk " + Join(c.domain) + " is not k^m-anonymous");
      }
    }
    if (!IsStrictlyAscending(vp.term_chunk)) {
      Add(loc, ViolationKind::kDomainCoverage, "term chunk not ascending");
    }
    // Record-chunk domains and the term chunk partition the leaf domain.
    std::vector<std::vector<TermId>> parts;
    for (const auto& c : vp.record_chunks) parts.push_back(c.domain);
    parts.push_back(vp.term_chunk);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        auto common = Overlap(parts[i], parts[j]);
        if (!common.empty()) {
          Add(loc, ViolationKind::kDomainOverlap,
              "leaf domains share " + Join(common));
        }
      }
    }
    if (!SatisfiesRecordCountBound(vp, k_, m_)) {
      Add(loc, ViolationKind::kLemma2Bound,
          std::to_string(SubrecordCount(vp)) + " subrecords < " +
              std::to_string(RecordCountBound(vp, k_, m_)) +
              " and the term chunk is empty");
    }
  }

  void VisitJoint(const ClusterNode& node, const std::string& loc) {
    const JointCluster& joint = node.joint();
    std::vector<TermId> below;  // T^r
    for (const auto& child : joint.children) {
      auto t = RecordAndSharedTerms(child);
      below.insert(below.end(), t.begin(), t.end());
    }
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    std::vector<TermId> term_chunks = VirtualTermChunk(node);
    std::size_t size = NodeSize(node);

    for (std::size_t i = 0; i < joint.shared_chunks.size(); ++i) {
      const auto& sc = joint.shared_chunks[i];
      std::string cloc = loc + ".shared_chunks[" + std::to_string(i) + "]";
      CheckChunkContents(cloc, sc.domain, sc.subrecords, size);
      bool k_anon = IsKAnonymous(sc.subrecords, k_);
      if (!Overlap(sc.domain, below).empty()) {
        if (!k_anon) {
          Add(cloc, ViolationKind::kProperty1,
              "shared chunk " + Join(sc.domain) + " meets " +
                  Join(Overlap(sc.domain, below)) +
                  " below it but is not k-anonymous");
        }
      } else if (!IsKmAnonymous(sc.subrecords, k_, m_)) {
        Add(cloc, ViolationKind::kChunkKm,
            "shared chunk " + Join(sc.domain) + " is not k^m-anonymous");
      }
      if (sc.strict_k && !k_anon) {
        Add(cloc, ViolationKind::kChunkK,
            "shared chunk flagged strict is not k-anonymous");
      }
      auto in_tc = Overlap(sc.domain, term_chunks);
      if (!in_tc.empty()) {
        Add(cloc, ViolationKind::kDomainOverlap,
            "shared terms " + Join(in_tc) + " also in descendant term chunks");
      }
      for (std::size_t j = i + 1; j < joint.shared_chunks.size(); ++j) {
        auto common = Overlap(sc.domain, joint.shared_chunks[j].domain);
        if (!common.empty()) {
          Add(cloc, ViolationKind::kDomainOverlap,
              "shared domains share " + Join(common));
        }
      }
    }
  }

  int k_;
  int m_;
  AuditReport report_;
};

std::string RootLocation(std::size_t i) {
  return "forest[" + std::to_string(i) + "]";
}

AuditReport Concat(std::vector<AuditReport>& parts) {
  AuditReport out;
  for (auto& r : parts) {
    for (auto& v : r.violations) out.violations.push_back(std::move(v));
  }
  out.passed = out.violations.empty();
  return out;
}

}  // namespace

const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kChunkKm:
      return "ChunkKm";
    case ViolationKind::kChunkK:
      return "ChunkK";
    case ViolationKind::kLemma2Bound:
      return "Lemma2Bound";
    case ViolationKind::kProperty1:
      return "Property1";
    case ViolationKind::kDomainOverlap:
      return "DomainOverlap";
    case ViolationKind::kDomainCoverage:
      return "DomainCoverage";
  }
  return "Unknown";
}

std::size_t AuditReport::Count(ViolationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [&](const Violation& v) { return v.kind == kind; }));
}

AuditReport AuditNode(const ClusterNode& node, int k, int m,
                      const std::string& location) {
  return Auditor(k, m).Run(node, location);
}

AuditReport Audit(const DisassociatedDataset& published) {
  const auto n = static_cast<std::int64_t>(published.forest.size());
  std::vector<AuditReport> parts(published.forest.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(ThreadCount()) \
    if (n > 64)
  for (std::int64_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    parts[idx] = AuditNode(published.forest[idx], published.k, published.m,
                           RootLocation(idx));
  }
  return Concat(parts);
}

namespace serial {
AuditReport Audit(const DisassociatedDataset& published) {
  std::vector<AuditReport> parts;
  for (std::size_t i = 0; i < published.forest.size(); ++i) {
    parts.push_back(AuditNode(published.forest[i], published.k, published.m,
                              RootLocation(i)));
  }
  return Concat(parts);
}
}  // namespace serial

GuaranteeResult CheckGuarantee(const ClusterNode& node, int k, int m,
                               const OracleLimits& limits) {
  internal::AssignmentSearch search(node, limits);
  const auto& terms = search.terms();
  std::vector<std::uint64_t> itemsets;
  std::vector<std::vector<TermId>> itemset_terms;
  ForEachSubset(std::span<const TermId>(terms), std::max(m, 1),
                [&](const Record& s) {
                  itemsets.push_back(search.Mask(s));
                  itemset_terms.push_back(s);
                });
  std::vector<std::size_t> best(itemsets.size(), 0);
  const auto need = static_cast<std::size_t>(k);
  std::size_t unresolved = itemsets.size();
  GuaranteeResult result;

  search.Run([&](const std::vector<std::uint64_t>& base) {
    ++result.reconstructions_examined;
    for (std::size_t i = 0; i < itemsets.size(); ++i) {
      if (best[i] >= need) continue;
      std::size_t count = 0;
      for (std::size_t s = 0; s < base.size(); ++s) {
        std::uint64_t rec = base[s] | search.term_chunk_mask(search.slot_leaf(s));
        if ((rec & itemsets[i]) == itemsets[i]) ++count;
      }
      if (count > best[i]) {
        best[i] = count;
        if (best[i] >= need) --unresolved;
      }
    }
    return unresolved > 0;
  });

  for (std::size_t i = 0; i < itemsets.size(); ++i) {
    if (best[i] > 0 && best[i] < need) {
      result.holds = false;
      result.witness = itemset_terms[i];
      result.witness_best = best[i];
      break;
    }
  }
  return result;
}

std::size_t MaxSupportOverReconstructions(const ClusterNode& node,
                                          const std::vector<TermId>& itemset,
                                          const OracleLimits& limits) {
  internal::AssignmentSearch search(node, limits);
  Record s = itemset;
  Canonicalize(s);
  for (TermId t : s) {
    if (!std::binary_search(search.terms().begin(), search.terms().end(), t)) {
      return 0;
    }
  }
  const std::uint64_t mask = search.Mask(s);
  std::size_t best = 0;
  search.Run([&](const std::vector<std::uint64_t>& base) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::uint64_t rec = base[i] | search.term_chunk_mask(search.slot_leaf(i));
      if ((rec & mask) == mask) ++count;
    }
    best = std::max(best, count);
    return best < base.size();
  });
  return best;
}

}  // namespace disassoc
