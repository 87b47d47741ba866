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

#ifndef DISASSOC_METRICS_H_
#define DISASSOC_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "disassoc/dataset.h"
#include "disassoc/model.h"
#include "disassoc/reconstruct.h"

namespace disassoc {

struct Itemset {
  std::vector<TermId> terms;  // ascending
  std::uint64_t support = 0;

  friend bool operator==(const Itemset&, const Itemset&) = default;
};

// Ranking used for top-K lists: support descending, then smaller itemsets,
// then lexicographic term order.
bool RanksBefore(const Itemset& a, const Itemset& b);

// The K best itemsets of at most `max_size` terms (support >= 1). Level-wise
// candidate generation with tidlists; the support threshold rises to the
// K-th best support seen so far.
std::vector<Itemset> MineTopK(std::span<const Record> records, std::size_t K,
                              std::size_t max_size = 4);

namespace serial {
// Counts every subset of every record; exponential in record length.
std::vector<Itemset> MineTopK(std::span<const Record> records, std::size_t K,
                              std::size_t max_size = 4);
}  // namespace serial

// 1 - |common itemsets| / |orig_top|. Supports are ignored.
double Tkd(const std::vector<Itemset>& orig_top,
           const std::vector<Itemset>& other_top);

// |s_o - s_p| / ((s_o + s_p) / 2); 0 when both are zero.
double RelativeError(double s_orig, double s_other);

// Terms ranked [lo, hi) by support in `supports` (descending, id ascending).
// Throws kInvalidArgument when hi exceeds the number of terms present.
std::vector<TermId> RankRangeTerms(const SupportTable& supports,
                                   std::size_t lo, std::size_t hi);

// Support of every unordered pair of `terms` (row-major, i < j), scaled by
// 1/scale.
std::vector<double> PairSupports(std::span<const Record> records,
                                 const std::vector<TermId>& terms,
                                 double scale = 1.0);

// Mean relative error over term pairs whose ranks in `orig` fall in
// [lo, hi); pairs absent from both datasets are skipped.
double PairRelativeError(const Dataset& orig, const Dataset& other,
                         std::size_t lo, std::size_t hi);
// Same with the comparison supports divided by `other_scale`.
double PairRelativeError(std::span<const Record> orig,
                         std::span<const Record> other, std::size_t lo,
                         std::size_t hi, double other_scale = 1.0);

// Share of terms with support > k in `orig` that appear only in term chunks.
double Tlost(const Dataset& orig, const DisassociatedDataset& published,
             int k);

// Support guaranteed by the chunks alone: chunk supports of `itemset` over
// record and shared chunks, plus one per term chunk holding a single term.
std::uint64_t LowerBoundSupport(const DisassociatedDataset& published,
                                std::span<const TermId> itemset);
// Records whose supports are exactly the lower bounds: every chunk subrecord
// plus one singleton per term-chunk entry.
std::vector<Record> LowerBoundRecords(const DisassociatedDataset& published);

struct MetricsOptions {
  std::size_t top_k = 1000;
  std::size_t pair_lo = 200;
  std::size_t pair_hi = 220;
  std::size_t reconstructions = 1;
  std::uint64_t seed = 0;
  std::size_t max_itemset_size = 4;
  TermPolicy policy = TermPolicy::kSingle;
};

struct MetricsReport {
  double tkd = 0;
  double tkd_a = 0;
  double re = 0;
  double re_a = 0;
  double tlost = 0;
  int k = 0;
  int m = 0;
  std::size_t top_k = 0;
  std::size_t pair_lo = 0;
  std::size_t pair_hi = 0;
  std::size_t reconstructions = 0;
};

// tkd and re use supports averaged over `reconstructions` samples (sample i
// is seeded with seed + i); tkd_a and re_a use the lower-bound records.
MetricsReport RunMetrics(const Dataset& orig,
                         const DisassociatedDataset& published,
                         const MetricsOptions& options);

std::string FormatReportText(const MetricsReport& report);
std::string FormatReportJson(const MetricsReport& report);

}  // namespace disassoc

#endif  // DISASSOC_METRICS_H_
