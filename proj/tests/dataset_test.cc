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

#include "disassoc/dataset.h"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "disassoc/error.h"
#include "disassoc/parallel.h"
#include "fixtures.h"

namespace disassoc {
namespace {

TEST(ParseTest, ExampleDictionaryInFirstAppearanceOrder) {
  Dataset d = testing::ExampleDataset();
  ASSERT_EQ(d.size(), 10u);
  EXPECT_EQ(d.dictionary.size(), 12u);
  EXPECT_EQ(d.dictionary.Token(testing::kMadonna), "madonna");
  EXPECT_EQ(d.dictionary.Token(testing::kIphoneSdk), "iphone_sdk");
  EXPECT_EQ(d.records[3], (Record{testing::kItunes, testing::kFlu,
                                  testing::kViagra}));
}

TEST(ParseTest, DeduplicatesTokensAndSkipsEmptyLines) {
  ParseResult r = ParseDatasetText("a b a\n\n   \nb  c\tc\n");
  EXPECT_EQ(r.dataset.size(), 2u);
  EXPECT_EQ(r.duplicates_removed, 2u);
  EXPECT_EQ(r.lines_skipped, 2u);
  EXPECT_EQ(r.dataset.records[0], (Record{0, 1}));
  EXPECT_EQ(r.dataset.records[1], (Record{1, 2}));
}

TEST(ParseTest, EmptyInputIsAnError) {
  try {
    ParseDatasetText("\n \n");
    FAIL() << "expected EmptyDataset";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDataset);
  }
}

TEST(WriteTest, SortsTokensByIdWithSingleSpaces) {
  ParseResult r = ParseDatasetText("b a\nc   a\n");
  EXPECT_EQ(SerializeDataset(r.dataset), "b a\na c\n");
}

TEST(WriteTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::ostringstream text;
    std::uniform_int_distribution<int> len(1, 6), tok(0, 15);
    for (int r = 0; r < 20; ++r) {
      int n = len(rng);
      for (int i = 0; i < n; ++i) text << "w" << tok(rng) << " ";
      text << "\n";
    }
    Dataset once = ParseDatasetText(text.str()).dataset;
    Dataset twice = ParseDatasetText(SerializeDataset(once)).dataset;
    EXPECT_EQ(SerializeDataset(once), SerializeDataset(twice));
    EXPECT_EQ(once.records, twice.records);
  }
}

TEST(SupportTest, ExampleCounts) {
  Dataset d = testing::ExampleDataset();
  SupportTable s = ComputeSupports(d.records);
  EXPECT_EQ(s[testing::kMadonna], 8u);
  EXPECT_EQ(s[testing::kItunes], 4u);
  EXPECT_EQ(s[testing::kIkea], 4u);
  EXPECT_EQ(s[testing::kAudiA4], 3u);
  EXPECT_EQ(s[testing::kViagra], 2u);
  EXPECT_EQ(s[999], 0u);
}

TEST(SupportTest, ParallelMatchesSerialReference) {
  SynthOptions o;
  o.records = 20000;
  o.domain = 300;
  o.avg_len = 6;
  o.seed = 3;
  Dataset d = GenerateSynthetic(o);
  for (int threads : {1, 4}) {
    SetThreadCount(threads);
    EXPECT_EQ(ComputeSupports(d.records, d.dictionary.size()).counts,
              serial::ComputeSupports(d.records, d.dictionary.size()).counts);
  }
  SetThreadCount(0);
}

TEST(SynthTest, DeterministicForSeed) {
  SynthOptions o;
  o.records = 500;
  o.domain = 50;
  o.avg_len = 4;
  o.seed = 7;
  EXPECT_EQ(SerializeDataset(GenerateSynthetic(o)),
            SerializeDataset(GenerateSynthetic(o)));
  SynthOptions other = o;
  other.seed = 8;
  EXPECT_NE(SerializeDataset(GenerateSynthetic(o)),
            SerializeDataset(GenerateSynthetic(other)));
}

TEST(SynthTest, ShapeMatchesOptions) {
  SynthOptions o;
  o.records = 20000;
  o.domain = 200;
  o.avg_len = 8;
  o.seed = 1;
  Dataset d = GenerateSynthetic(o);
  ASSERT_EQ(d.size(), o.records);
  double total = 0;
  for (const auto& r : d.records) {
    ASSERT_FALSE(r.empty());
    ASSERT_LE(r.size(), o.domain);
    for (std::size_t i = 1; i < r.size(); ++i) ASSERT_LT(r[i - 1], r[i]);
    total += static_cast<double>(r.size());
  }
  EXPECT_NEAR(total / static_cast<double>(d.size()), 8.0, 0.3);
  EXPECT_LE(d.dictionary.size(), o.domain);
  // Zipfian: the most common term is far above the median one.
  SupportTable s = ComputeSupports(d.records);
  std::vector<std::uint32_t> sorted = s.counts;
  std::sort(sorted.rbegin(), sorted.rend());
  EXPECT_GT(sorted.front(), 10 * sorted[sorted.size() / 2]);
}

TEST(ParamsTest, Validation) {
  Params p;
  EXPECT_NO_THROW(p.Validate());
  p.k = 1;
  EXPECT_THROW(p.Validate(), Error);
  p.k = 5;
  p.max_cluster_size = 4;
  EXPECT_THROW(p.Validate(), Error);
}

TEST(ParseTest, ExampleFileMatchesFixture) {
  std::ifstream in(std::string(DISASSOC_TEST_DATA) + "/web_search.txt");
  ASSERT_TRUE(in);
  Dataset d = ParseDataset(in).dataset;
  EXPECT_EQ(d, testing::ExampleDataset());
  EXPECT_EQ(ParseDatasetText(SerializeDataset(d)).dataset, d);
}

}  // namespace
}  // namespace disassoc
