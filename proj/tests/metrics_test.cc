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

#include "disassoc/metrics.h"

#include <gtest/gtest.h>

#include <random>

#include "disassoc/anonymize.h"
#include "disassoc/error.h"
#include "disassoc/parallel.h"
#include "fixtures.h"

namespace disassoc {
namespace {

using namespace disassoc::testing;  // NOLINT

DisassociatedDataset ExamplePublished(bool refine) {
  Dataset d = ExampleDataset();
  return AnonymizeClusters(ExampleClusters(d), d.dictionary,
                           ExampleParams(refine))
      .published;
}

std::vector<Record> RandomRecords(std::uint64_t seed, std::size_t n,
                                  TermId domain, std::size_t max_len) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<TermId> tok(0, domain - 1);
  std::vector<Record> records(n);
  for (auto& r : records) {
    std::size_t l = len(rng);
    for (std::size_t i = 0; i < l; ++i) r.push_back(tok(rng));
    Canonicalize(r);
  }
  return records;
}

TEST(MineTopKTest, SmallExample) {
  std::vector<Record> records = {{0, 1}, {0, 1}, {0}};
  auto top = MineTopK(records, 2);
  EXPECT_EQ(top, (std::vector<Itemset>{{{0}, 3}, {{1}, 2}}));
  // Ties in support prefer the smaller itemset.
  top = MineTopK(records, 3);
  EXPECT_EQ(top[2], (Itemset{{0, 1}, 2}));
}

TEST(MineTopKTest, ExampleDataset) {
  Dataset d = ExampleDataset();
  auto top = MineTopK(d.records, 3);
  EXPECT_EQ(top, (std::vector<Itemset>{
                     {{kMadonna}, 8}, {{kItunes}, 4}, {{kFlu}, 4}}));
}

TEST(MineTopKTest, MatchesNaiveCounting) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto records = RandomRecords(seed, 300, 25, 7);
    for (std::size_t K : {1, 10, 50, 200}) {
      EXPECT_EQ(MineTopK(records, K), serial::MineTopK(records, K))
          << "seed " << seed << " K " << K;
    }
    EXPECT_EQ(MineTopK(records, 40, 2), serial::MineTopK(records, 40, 2));
  }
}

TEST(MineTopKTest, ThreadCountDoesNotMatter) {
  auto records = RandomRecords(5, 5000, 60, 9);
  SetThreadCount(1);
  auto one = MineTopK(records, 300);
  SetThreadCount(4);
  auto four = MineTopK(records, 300);
  SetThreadCount(0);
  EXPECT_EQ(one, four);
}

TEST(MineTopKTest, FewerItemsetsThanK) {
  std::vector<Record> records = {{0}};
  EXPECT_EQ(MineTopK(records, 10), (std::vector<Itemset>{{{0}, 1}}));
  EXPECT_TRUE(MineTopK(std::vector<Record>{}, 10).empty());
}

TEST(TkdTest, Identities) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto top = MineTopK(RandomRecords(seed, 200, 30, 6), 100);
    EXPECT_EQ(Tkd(top, top), 0.0);
  }
  std::vector<Itemset> a = {{{0}, 5}, {{1}, 4}};
  std::vector<Itemset> b = {{{0}, 1}, {{2}, 1}};
  EXPECT_DOUBLE_EQ(Tkd(a, b), 0.5);
  EXPECT_DOUBLE_EQ(Tkd(a, {}), 1.0);
  EXPECT_THROW(Tkd({}, a), Error);
}

TEST(RelativeErrorTest, Values) {
  EXPECT_DOUBLE_EQ(RelativeError(3, 1), 1.0);
  EXPECT_DOUBLE_EQ(RelativeError(2, 0), 2.0);
  EXPECT_DOUBLE_EQ(RelativeError(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(RelativeError(4, 4), 0.0);
}

TEST(PairRelativeErrorTest, IdentityOnArbitraryData) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto records = RandomRecords(seed, 400, 40, 8);
    SupportTable s = ComputeSupports(records);
    std::size_t present = 0;
    for (auto c : s.counts) present += c > 0 ? 1 : 0;
    for (std::size_t lo = 0; lo + 5 <= present; lo += 7) {
      EXPECT_EQ(PairRelativeError(records, records, lo, lo + 5), 0.0);
    }
  }
}

TEST(PairRelativeErrorTest, ScaledComparison) {
  std::vector<Record> orig = {{0, 1}, {0, 1}, {0}};
  std::vector<Record> doubled = Concat(orig, orig);
  EXPECT_DOUBLE_EQ(PairRelativeError(orig, doubled, 0, 2, 2.0), 0.0);
  // Pair {0,1}: 2 vs 1.
  std::vector<Record> other = {{0, 1}, {0}, {1}};
  EXPECT_NEAR(PairRelativeError(orig, other, 0, 2), 2.0 / 3.0, 1e-12);
}

TEST(RankRangeTermsTest, OrderAndBounds) {
  Dataset d = ExampleDataset();
  SupportTable s = ComputeSupports(d.records, d.dictionary.size());
  EXPECT_EQ(RankRangeTerms(s, 0, 3),
            (std::vector<TermId>{kMadonna, kItunes, kFlu}));
  EXPECT_THROW(RankRangeTerms(s, 0, 13), Error);
  EXPECT_THROW(RankRangeTerms(s, 3, 2), Error);
}

TEST(TlostTest, ExampleValues) {
  Dataset d = ExampleDataset();
  EXPECT_DOUBLE_EQ(Tlost(d, ExamplePublished(false), 3), 2.0 / 7.0);
  EXPECT_DOUBLE_EQ(Tlost(d, ExamplePublished(true), 3), 0.0);
}

TEST(LowerBoundTest, ExampleValues) {
  DisassociatedDataset published = ExamplePublished(false);
  std::vector<TermId> flu_itunes = {kItunes, kFlu};
  std::vector<TermId> ikea = {kIkea};
  std::vector<TermId> split = {kItunes, kAudiA4};
  EXPECT_EQ(LowerBoundSupport(published, flu_itunes), 3u);
  EXPECT_EQ(LowerBoundSupport(published, ikea), 2u);
  EXPECT_EQ(LowerBoundSupport(published, split), 0u);
  EXPECT_THROW(LowerBoundSupport(published, {}), Error);

  auto records = LowerBoundRecords(published);
  SupportTable s = ComputeSupports(records);
  EXPECT_EQ(s[kIkea], 2u);
  EXPECT_EQ(s[kMadonna], 8u);
  // Refining moves ikea into a shared chunk with exact support.
  EXPECT_EQ(LowerBoundSupport(ExamplePublished(true), ikea), 4u);
}

TEST(RunMetricsTest, ReportAndFormats) {
  SynthOptions o;
  o.records = 3000;
  o.domain = 300;
  o.avg_len = 6;
  Dataset d = GenerateSynthetic(o);
  Params p;
  p.k = 3;
  auto published = Anonymize(d, p).published;
  MetricsOptions mo;
  mo.top_k = 100;
  mo.pair_lo = 20;
  mo.pair_hi = 30;
  mo.reconstructions = 2;
  MetricsReport r = RunMetrics(d, published, mo);
  EXPECT_GE(r.tkd, 0.0);
  EXPECT_LE(r.tkd, 1.0);
  EXPECT_GE(r.re, 0.0);
  EXPECT_LE(r.re, 2.0);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.reconstructions, 2u);
  EXPECT_EQ(RunMetrics(d, published, mo).re, r.re);
  std::string text = FormatReportText(r);
  EXPECT_EQ(text.rfind("tkd=", 0), 0u);
  EXPECT_NE(text.find("pair_range=20:30"), std::string::npos);
  std::string json = FormatReportJson(r);
  EXPECT_NE(json.find("\"pair_range\""), std::string::npos);
}

}  // namespace
}  // namespace disassoc
