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

#ifndef DISASSOC_DATASET_H_
#define DISASSOC_DATASET_H_

// Set-valued datasets: term dictionary, records, support counting, text I/O
// and the synthetic market-basket generator.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace disassoc {

using TermId = std::uint32_t;

// A record is a set of terms kept as a strictly ascending id vector.
using Record = std::vector<TermId>;

// Sorts and deduplicates in place; returns the number of duplicates dropped.
std::size_t Canonicalize(Record& record);

bool Contains(const Record& record, TermId term);

// True iff every term of `subset` (ascending) is in `record` (ascending).
bool ContainsAll(const Record& record, std::span<const TermId> subset);

// Ascending intersection of two ascending id ranges.
Record Intersect(std::span<const TermId> a, std::span<const TermId> b);

// Bijection between external tokens and dense ids 0..size()-1. Ids are
// handed out in first-appearance order.
class TermDictionary {
 public:
  TermDictionary() = default;
  explicit TermDictionary(std::vector<std::string> tokens);

  // Returns the id of `token`, adding it if new.
  TermId Intern(std::string_view token);
  std::optional<TermId> Find(std::string_view token) const;
  const std::string& Token(TermId id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  friend bool operator==(const TermDictionary& a, const TermDictionary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TermId> index_;
};

struct Dataset {
  std::vector<Record> records;
  TermDictionary dictionary;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Per-term containment counts, indexed by TermId.
struct SupportTable {
  std::vector<std::uint32_t> counts;

  std::uint32_t operator[](TermId t) const {
    return t < counts.size() ? counts[t] : 0;
  }
  std::size_t size() const { return counts.size(); }
  bool empty() const { return counts.empty(); }
};

struct Params {
  int k = 5;
  int m = 2;
  int max_cluster_size = 30;
  std::uint64_t seed = 0;
  bool refine = true;
  // Publish subrecords in seeded random order instead of content order.
  bool shuffle = false;
  // Terms forced into term chunks and kept out of splitting (l-diversity).
  std::vector<TermId> sensitive_terms;

  // Throws kInvalidArgument when k < 2, m < 1 or max_cluster_size < k.
  void Validate() const;
  bool IsSensitive(TermId t) const;
};

struct ParseResult {
  Dataset dataset;
  std::size_t duplicates_removed = 0;
  std::size_t lines_skipped = 0;
};

// One record per non-blank line, whitespace separated tokens. Throws
// kEmptyDataset when no record survives.
ParseResult ParseDataset(std::istream& in);
ParseResult ParseDatasetText(std::string_view text);

// Bit-exact text format: tokens in TermId order joined by single spaces,
// one "\n"-terminated line per record.
void WriteDataset(const Dataset& dataset, std::ostream& out);
std::string SerializeDataset(const Dataset& dataset);

// Table sized to the largest id seen plus one; empty for no records.
SupportTable ComputeSupports(std::span<const Record> records);
// Same, but sized to `num_terms` (use the dictionary size).
SupportTable ComputeSupports(std::span<const Record> records,
                             std::size_t num_terms);

namespace serial {
SupportTable ComputeSupports(std::span<const Record> records,
                             std::size_t num_terms);
}  // namespace serial

struct SynthOptions {
  std::size_t records = 1000;
  std::size_t domain = 100;
  double avg_len = 5.0;
  std::uint64_t seed = 0;
};

// Poisson record lengths clamped to [1, domain]; terms drawn without
// replacement from a Zipf(1.0) law over the domain. Token of the rank-r term
// is "t<r>"; ids are renumbered in first-appearance order.
Dataset GenerateSynthetic(const SynthOptions& options);

}  // namespace disassoc

#endif  // DISASSOC_DATASET_H_
