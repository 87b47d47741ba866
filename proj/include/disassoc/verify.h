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

#ifndef DISASSOC_VERIFY_H_
#define DISASSOC_VERIFY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "disassoc/model.h"

namespace disassoc {

enum class ViolationKind {
  kChunkKm,         // record or shared chunk not k^m-anonymous
  kChunkK,          // chunk flagged strict_k is not k-anonymous
  kLemma2Bound,     // too few subrecords and an empty term chunk
  kProperty1,       // shared chunk meeting record/shared terms below it is
                    // not k-anonymous
  kDomainOverlap,   // sibling domains or term chunks intersect
  kDomainCoverage,  // subrecords outside the domain, unused domain terms,
                    // more subrecords than records
};

const char* ViolationKindName(ViolationKind kind);

struct Violation {
  std::string location;  // e.g. "forest[2].children[0]"
  ViolationKind kind;
  std::string detail;
};

struct AuditReport {
  bool passed = true;
  std::vector<Violation> violations;

  std::size_t Count(ViolationKind kind) const;
};

// Recomputes every anonymity condition from the raw chunk contents.
AuditReport Audit(const DisassociatedDataset& published);
// Audits one node with the given parameters; `location` prefixes messages.
AuditReport AuditNode(const ClusterNode& node, int k, int m,
                      const std::string& location = "node");

namespace serial {
AuditReport Audit(const DisassociatedDataset& published);
}  // namespace serial

struct OracleLimits {
  std::size_t max_records = 8;
  std::size_t max_terms = 10;
};

struct GuaranteeResult {
  bool holds = true;
  // First itemset found with 0 < best achievable count < k.
  std::vector<TermId> witness;
  std::size_t witness_best = 0;
  std::size_t reconstructions_examined = 0;
};

// Exhaustive check over every valid reconstruction of the node: each itemset
// of at most m node terms is either absent from all reconstructions or
// present in at least k records of some reconstruction. Throws
// Error(kTooLarge) when the node exceeds `limits`.
GuaranteeResult CheckGuarantee(const ClusterNode& node, int k, int m,
                               const OracleLimits& limits = {});
inline bool BruteForceGuarantee(const ClusterNode& node, int k, int m,
                                const OracleLimits& limits = {}) {
  return CheckGuarantee(node, k, m, limits).holds;
}

// Best achievable number of records containing `itemset` over all valid
// reconstructions of the node (0 when no reconstruction has one).
std::size_t MaxSupportOverReconstructions(const ClusterNode& node,
                                          const std::vector<TermId>& itemset,
                                          const OracleLimits& limits = {});

}  // namespace disassoc

#endif  // DISASSOC_VERIFY_H_
