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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "closure.h"
#include "disassoc/anonymize.h"
#include "disassoc/error.h"
#include "disassoc/metrics.h"
#include "disassoc/reconstruct.h"
#include "disassoc/refine.h"
#include "disassoc/verify.h"
#include "fixtures.h"

namespace disassoc {
namespace {

using namespace disassoc::testing;  // NOLINT
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void Criterion(int id, const char* name, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.Expect(false, std::string("exception: ") + e.what());
  }
  double t = Seconds(start);
  if (limit_s > 0 && t >= limit_s) {
    std::ostringstream s;
    s << "took " << t << " s, limit " << limit_s << " s";
    o.Expect(false, s.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, t,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

Dataset Synthetic(std::size_t records, std::size_t domain, double avg_len,
                  std::uint64_t seed) {
  SynthOptions o;
  o.records = records;
  o.domain = domain;
  o.avg_len = avg_len;
  o.seed = seed;
  return GenerateSynthetic(o);
}

std::vector<TermId> TermSet(std::span<const Record> records) {
  std::vector<TermId> out;
  for (const auto& r : records) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TermId> PublishedTerms(const DisassociatedDataset& published) {
  std::vector<TermId> out;
  for (const auto& root : published.forest) {
    auto d = NodeDomain(root);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ExamplePartition(Outcome& o) {
  Dataset d = ExampleDataset();
  auto forest = PartitionClusters(ExampleClusters(d), ExampleParams(false));
  o.Expect(forest.size() == 2, "expected two clusters");
  const VerticalPartition& p1 = forest[0].leaf().partition;
  const VerticalPartition& p2 = forest[1].leaf().partition;
  o.Expect(p1.record_chunks.size() == 2, "P1 chunk count");
  if (p1.record_chunks.size() == 2) {
    o.Expect(p1.record_chunks[0].domain ==
                 std::vector<TermId>{kItunes, kFlu, kMadonna},
             "P1 first chunk domain");
    o.Expect(p1.record_chunks[1].domain ==
                 std::vector<TermId>{kAudiA4, kSonyTv},
             "P1 second chunk domain");
  }
  o.Expect(p1.term_chunk == std::vector<TermId>{kIkea, kRuby, kViagra},
           "P1 term chunk");
  o.Expect(p2.record_chunks.size() == 1 &&
               p2.record_chunks[0].domain ==
                   std::vector<TermId>{kMadonna, kDigitalCamera, kIphoneSdk},
           "P2 chunk domain");
  o.Expect(p2.term_chunk ==
               std::vector<TermId>{kIkea, kRuby, kPanicDisorder, kPlayboy},
           "P2 term chunk");
}

void ExampleRefine(Outcome& o) {
  Dataset d = ExampleDataset();
  auto forest = PartitionClusters(ExampleClusters(d), ExampleParams());
  RefineResult r = Refine(forest, ExampleParams());
  o.Expect(r.forest.size() == 1 && !r.forest[0].is_leaf(),
           "expected one joint cluster");
  if (!o.ok) return;
  const JointCluster& j = r.forest[0].joint();
  o.Expect(j.shared_chunks.size() == 1 &&
               j.shared_chunks[0].domain == std::vector<TermId>{kIkea, kRuby},
           "shared chunk domain");
  o.Expect(j.children.size() == 2, "joint children");
  if (!o.ok) return;
  o.Expect(j.children[0].leaf().partition.term_chunk ==
               std::vector<TermId>{kViagra},
           "first leaf term chunk");
  o.Expect(j.children[1].leaf().partition.term_chunk ==
               std::vector<TermId>{kPanicDisorder, kPlayboy},
           "second leaf term chunk");
  o.Expect(r.merges.size() == 1, "one logged merge");
  if (!o.ok) return;
  const MergeRatios& m = r.merges[0].ratios;
  o.Expect(m.shared_support == 8 && m.joint_size == 10 &&
               m.term_chunk_hits == 4 && m.leaf_size == 10,
           "ratio operands");
  o.Expect(m.lhs() == 0.8 && m.rhs() == 0.4 && m.holds(), "ratio values");
}

void BoundCounterExample(Outcome& o) {
  ClusterNode node = UnsafeBoundNode();
  AuditReport before = AuditNode(node, 3, 2);
  o.Expect(!before.passed && before.Count(ViolationKind::kLemma2Bound) == 1,
           "audit must report the record-count bound");
  std::size_t best = MaxSupportOverReconstructions(node, {0, 1});
  o.Expect(best > 0 && best < 3, "itemset {a,b} must be exposed");
  o.Expect(!BruteForceGuarantee(node, 3, 2), "oracle must fail");
  VerticalPartition fixed =
      EnforceRecordCountBound(node.leaf().partition, ExampleParams());
  ClusterNode repaired = Leaf(fixed.size, fixed.record_chunks, fixed.term_chunk);
  o.Expect(AuditNode(repaired, 3, 2).passed, "repaired node audit");
  o.Expect(BruteForceGuarantee(repaired, 3, 2), "repaired node oracle");
}

void OracleFuzz(Outcome& o) {
  std::mt19937_64 rng(2024);
  for (int k : {2, 3}) {
    int datasets = 0;
    while (datasets < 250) {
      std::uniform_int_distribution<int> nrec(k, 8), len(1, 5), nterm(2, 8);
      int n = nrec(rng);
      int terms = nterm(rng);
      std::uniform_int_distribution<int> tok(0, terms - 1);
      std::string text;
      for (int r = 0; r < n; ++r) {
        int l = len(rng);
        for (int i = 0; i < l; ++i) text += "t" + std::to_string(tok(rng)) + " ";
        text += "\n";
      }
      Dataset d = ParseDatasetText(text).dataset;
      Params p;
      p.k = k;
      p.m = 2;
      p.max_cluster_size = std::uniform_int_distribution<int>(k, 8)(rng);
      p.refine = datasets % 4 != 3;
      auto published = Anonymize(d, p).published;
      ++datasets;
      AuditReport audit = Audit(published);
      if (!audit.passed) {
        o.Expect(false, "audit failed on:\n" + text + audit.violations[0].detail);
        return;
      }
      for (const auto& root : published.forest) {
        if (!BruteForceGuarantee(root, k, 2)) {
          o.Expect(false, "oracle failed (k=" + std::to_string(k) + ") on:\n" +
                              text);
          return;
        }
      }
    }
  }
}

Dataset& Criterion5Dataset() {
  static Dataset d = Synthetic(100000, 5000, 10, 5);
  return d;
}

Params Criterion5Params() {
  Params p;
  p.k = 5;
  p.m = 2;
  return p;
}

DisassociatedDataset& Criterion5Published() {
  static DisassociatedDataset published =
      Anonymize(Criterion5Dataset(), Criterion5Params()).published;
  return published;
}

void InvariantsAtScale(Outcome& o) {
  const Dataset& d = Criterion5Dataset();
  const DisassociatedDataset& published = Criterion5Published();
  AuditReport audit = Audit(published);
  o.Expect(audit.passed, audit.passed ? "" : "audit: " +
                                                 audit.violations[0].location +
                                                 " " +
                                                 audit.violations[0].detail);
  o.Expect(PublishedTerms(published) == TermSet(d.records),
           "published term set differs from the original");
  std::size_t total = 0;
  bool sizes_ok = true;
  for (const auto& root : published.forest) {
    total += NodeSize(root);
    ForEachLeaf(root, [&](const LeafCluster& l) {
      sizes_ok = sizes_ok && l.partition.size <=
                                 static_cast<std::size_t>(
                                     Criterion5Params().max_cluster_size);
    });
  }
  o.Expect(total == d.size(), "published record count differs");
  o.Expect(sizes_ok, "cluster above max cluster size");
}

void Scaling(Outcome& o) {
  Params p = Criterion5Params();
  auto median_time = [&](const Dataset& d) {
    std::vector<double> t;
    for (int run = 0; run < 3; ++run) {
      auto start = Clock::now();
      Anonymize(d, p);
      t.push_back(Seconds(start));
    }
    std::sort(t.begin(), t.end());
    return t[1];
  };
  double small = median_time(Criterion5Dataset());
  double large = median_time(Synthetic(200000, 5000, 10, 5));
  std::ostringstream s;
  s << "100k " << small << " s, 200k " << large << " s, ratio "
    << large / small;
  o.Expect(large <= 3 * small, s.str());
  if (o.ok) o.detail = s.str();
}

void MetricIdentities(Outcome& o) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Dataset d = Synthetic(2000 + 100 * seed, 50 + 10 * seed, 4 + seed % 5,
                          seed);
    auto top = MineTopK(d.records, 200);
    o.Expect(Tkd(top, top) == 0.0, "tkd identity");
    SupportTable s = ComputeSupports(d.records, d.dictionary.size());
    std::size_t present = 0;
    for (auto c : s.counts) present += c > 0 ? 1 : 0;
    for (std::size_t lo = 0; lo < present; lo += 9) {
      std::size_t hi = std::min(present, lo + 20);
      o.Expect(PairRelativeError(d, d, lo, hi) == 0.0, "pair re identity");
    }
  }
}

void TlostGolden(Outcome& o) {
  Dataset d = ExampleDataset();
  for (bool refine : {true, false}) {
    auto published = AnonymizeClusters(ExampleClusters(d), d.dictionary,
                                       ExampleParams(refine))
                         .published;
    double t = Tlost(d, published, 3);
    double want = refine ? 0.0 : 2.0 / 7.0;
    o.Expect(t == want, (refine ? "refined tlost " : "unrefined tlost ") +
                            std::to_string(t));
  }
}

void ReTrend(Outcome& o) {
  Dataset d = Synthetic(50000, 1000, 8, 9);
  std::vector<double> re;
  std::ostringstream s;
  for (int k : {2, 5, 10, 20}) {
    Params p;
    p.k = k;
    p.m = 2;
    auto published = Anonymize(d, p).published;
    Dataset recon = Reconstruct(published, 1);
    re.push_back(PairRelativeError(d, recon, 200, 220));
    s << "k=" << k << " re=" << re.back() << " ";
  }
  for (std::size_t i = 1; i < re.size(); ++i) {
    o.Expect(re[i] >= re[i - 1] - 0.02, "re decreases: " + s.str());
  }
  if (o.ok) o.detail = s.str();
}

void Closure(Outcome& o) {
  const DisassociatedDataset& published = Criterion5Published();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TermPolicy policy = seed % 2 ? TermPolicy::kUniform : TermPolicy::kSingle;
    Dataset recon = Reconstruct(published, seed, policy);
    std::string err = CheckClosure(published, recon.records);
    if (!err.empty()) {
      o.Expect(false, "seed " + std::to_string(seed) + ": " + err);
      return;
    }
  }
}

}  // namespace
}  // namespace disassoc

int main() {
  using namespace disassoc;  // NOLINT
  Criterion(1, "example vertical partition golden", 1, ExamplePartition);
  Criterion(2, "example refine golden", 1, ExampleRefine);
  Criterion(3, "record-count bound counter-example", 1, BoundCounterExample);
  Criterion(4, "guarantee oracle fuzz", 300, OracleFuzz);
  Criterion(5, "invariants at 100k records", 600, InvariantsAtScale);
  Criterion(6, "anonymization scaling 100k -> 200k", 0, Scaling);
  Criterion(7, "metric identities", 0, MetricIdentities);
  Criterion(8, "tlost golden values", 1, TlostGolden);
  Criterion(9, "re trend over k", 0, ReTrend);
  Criterion(10, "reconstruction closure", 300, Closure);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
