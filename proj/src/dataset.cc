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

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "disassoc/error.h"
#include "disassoc/parallel.h"

namespace disassoc {

std::size_t Canonicalize(Record& record) {
  std::sort(record.begin(), record.end());
  auto last = std::unique(record.begin(), record.end());
  std::size_t removed = static_cast<std::size_t>(record.end() - last);
  record.erase(last, record.end());
  return removed;
}

bool Contains(const Record& record, TermId term) {
  return std::binary_search(record.begin(), record.end(), term);
}

bool ContainsAll(const Record& record, std::span<const TermId> subset) {
  return std::includes(record.begin(), record.end(), subset.begin(),
                       subset.end());
}

Record Intersect(std::span<const TermId> a, std::span<const TermId> b) {
  Record out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

TermDictionary::TermDictionary(std::vector<std::string> tokens) {
  for (auto& t : tokens) {
    if (index_.count(t) != 0) {
      throw Error(ErrorCode::kMalformedInput, "duplicate token '" + t + "'");
    }
    Intern(t);
  }
}

TermId TermDictionary::Intern(std::string_view token) {
  auto it = index_.find(std::string(token));
  if (it != index_.end()) return it->second;
  TermId id = static_cast<TermId>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), id);
  return id;
}

std::optional<TermId> TermDictionary::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Params::Validate() const {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  if (max_cluster_size < k) {
    throw Error(ErrorCode::kInvalidArgument, "max-cluster-size must be >= k");
  }
}

bool Params::IsSensitive(TermId t) const {
  return std::find(sensitive_terms.begin(), sensitive_terms.end(), t) !=
         sensitive_terms.end();
}

ParseResult ParseDataset(std::istream& in) {
  ParseResult result;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string token;
    Record record;
    while (tokens >> token) {
      record.push_back(result.dataset.dictionary.Intern(token));
    }
    if (record.empty()) {
      ++result.lines_skipped;
      continue;
    }
    result.duplicates_removed += Canonicalize(record);
    result.dataset.records.push_back(std::move(record));
  }
  if (result.dataset.records.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no records");
  }
  return result;
}

ParseResult ParseDatasetText(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseDataset(in);
}

void WriteDataset(const Dataset& dataset, std::ostream& out) {
  for (const Record& r : dataset.records) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != 0) out << ' ';
      out << dataset.dictionary.Token(r[i]);
    }
    out << '\n';
  }
}

std::string SerializeDataset(const Dataset& dataset) {
  std::ostringstream out;
  WriteDataset(dataset, out);
  return out.str();
}

namespace {

std::size_t MaxIdPlusOne(std::span<const Record> records) {
  std::size_t n = 0;
  for (const Record& r : records) {
    if (!r.empty()) n = std::max<std::size_t>(n, r.back() + 1);
  }
  return n;
}

}  // namespace

namespace serial {

SupportTable ComputeSupports(std::span<const Record> records,
                             std::size_t num_terms) {
  SupportTable table;
  table.counts.assign(num_terms, 0);
  for (const Record& r : records) {
    for (TermId t : r) ++table.counts.at(t);
  }
  return table;
}

}  // namespace serial

SupportTable ComputeSupports(std::span<const Record> records) {
  return ComputeSupports(records, MaxIdPlusOne(records));
}

SupportTable ComputeSupports(std::span<const Record> records,
                             std::size_t num_terms) {
  // Small inputs are not worth a parallel region.
  if (records.size() < 4096 || ThreadCount() == 1) {
    return serial::ComputeSupports(records, num_terms);
  }
  SupportTable table;
  table.counts.assign(num_terms, 0);
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel num_threads(ThreadCount())
  {
    std::vector<std::uint32_t> local(num_terms, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (TermId t : records[i]) ++local[t];
    }
#pragma omp critical
    for (std::size_t t = 0; t < num_terms; ++t) table.counts[t] += local[t];
  }
  return table;
}

Dataset GenerateSynthetic(const SynthOptions& options) {
  if (options.records < 1 || options.domain < 1 || options.avg_len < 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic generator needs records, domain >= 1 and "
                "avg_len >= 1");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<double> weights(options.domain);
  for (std::size_t r = 0; r < options.domain; ++r) {
    weights[r] = 1.0 / static_cast<double>(r + 1);
  }
  std::discrete_distribution<std::size_t> zipf(weights.begin(),
                                                weights.end());
  std::poisson_distribution<std::size_t> length(options.avg_len);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Dataset out;
  out.records.reserve(options.records);
  std::vector<char> picked(options.domain, 0);
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < options.records; ++i) {
    std::size_t len = std::clamp<std::size_t>(length(rng), 1, options.domain);
    ranks.clear();
    if (2 * len <= options.domain) {
      while (ranks.size() < len) {
        std::size_t r = zipf(rng);
        if (picked[r]) continue;
        picked[r] = 1;
        ranks.push_back(r);
      }
    } else {
      // Dense case: weighted sampling without replacement by exponential
      // keys, cheaper than rejection when most of the domain is drawn.
      std::vector<std::pair<double, std::size_t>> keys(options.domain);
      for (std::size_t r = 0; r < options.domain; ++r) {
        keys[r] = {-std::log(unit(rng)) / weights[r], r};
      }
      std::partial_sort(keys.begin(), keys.begin() + len, keys.end());
      for (std::size_t j = 0; j < len; ++j) ranks.push_back(keys[j].second);
    }
    Record record;
    record.reserve(len);
    for (std::size_t r : ranks) {
      picked[r] = 0;
      record.push_back(out.dictionary.Intern("t" + std::to_string(r)));
    }
    Canonicalize(record);
    out.records.push_back(std::move(record));
  }
  return out;
}

}  // namespace disassoc
