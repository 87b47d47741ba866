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

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "disassoc/error.h"
#include "disassoc/itemset_util.h"
#include "disassoc/parallel.h"
#include "json.hpp"

namespace disassoc {
namespace {

using TidList = std::vector<std::uint32_t>;

struct Frequent {
  Record terms;
  TidList tids;
};

std::size_t NumTerms(std::span<const Record> records) {
  std::size_t n = 0;
  for (const auto& r : records) {
    if (!r.empty()) n = std::max<std::size_t>(n, r.back() + 1);
  }
  return n;
}

// Support of the K-th best itemset in `pool` (1 if the pool is smaller).
std::uint64_t KthSupport(const std::vector<Itemset>& pool, std::size_t K) {
  if (pool.size() < K) return 1;
  std::vector<std::uint64_t> s;
  s.reserve(pool.size());
  for (const auto& it : pool) s.push_back(it.support);
  std::nth_element(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(K - 1),
                   s.end(), std::greater<>());
  return std::max<std::uint64_t>(s[K - 1], 1);
}

TidList IntersectTids(const TidList& a, const TidList& b) {
  TidList out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void Finalize(std::vector<Itemset>& pool, std::size_t K) {
  std::sort(pool.begin(), pool.end(), RanksBefore);
  if (pool.size() > K) pool.resize(K);
}

// Level-2 supports by direct pair counting over the frequent items.
std::vector<Frequent> CountPairs(std::span<const Record> records,
                                 const std::vector<Frequent>& items,
                                 std::uint64_t sigma,
                                 std::vector<Itemset>& pool) {
  std::size_t num_terms = NumTerms(records);
  std::vector<std::int32_t> local(num_terms, -1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    local[items[i].terms[0]] = static_cast<std::int32_t>(i);
  }
  const std::size_t f = items.size();
  std::unordered_map<std::uint64_t, std::uint32_t> counts;
  std::vector<std::int32_t> present;
  for (const auto& r : records) {
    present.clear();
    for (TermId t : r) {
      if (local[t] >= 0) present.push_back(local[t]);
    }
    for (std::size_t a = 0; a < present.size(); ++a) {
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        auto lo = static_cast<std::uint64_t>(std::min(present[a], present[b]));
        auto hi = static_cast<std::uint64_t>(std::max(present[a], present[b]));
        ++counts[lo * f + hi];
      }
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint32_t>> kept;
  for (const auto& [key, c] : counts) {
    if (c >= sigma) kept.emplace_back(key, c);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Frequent> out;
  for (const auto& [key, c] : kept) {
    Record terms{items[key / f].terms[0], items[key % f].terms[0]};
    std::sort(terms.begin(), terms.end());
    pool.push_back({terms, c});
    out.push_back({std::move(terms), {}});
  }
  return out;
}

}  // namespace

bool RanksBefore(const Itemset& a, const Itemset& b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
  return a.terms < b.terms;
}

std::vector<Itemset> MineTopK(std::span<const Record> records, std::size_t K,
                              std::size_t max_size) {
  std::vector<Itemset> pool;
  if (K == 0 || max_size == 0) return pool;
  const std::size_t num_terms = NumTerms(records);
  std::vector<TidList> tids(num_terms);
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (TermId t : records[i]) tids[t].push_back(static_cast<std::uint32_t>(i));
  }
  for (TermId t = 0; t < num_terms; ++t) {
    if (!tids[t].empty()) pool.push_back({{t}, tids[t].size()});
  }
  std::uint64_t sigma = KthSupport(pool, K);
  std::vector<Frequent> level;
  for (TermId t = 0; t < num_terms; ++t) {
    if (tids[t].size() >= sigma) level.push_back({{t}, std::move(tids[t])});
  }
  tids.clear();
  std::vector<TidList> singles(num_terms);
  for (auto& fr : level) singles[fr.terms[0]] = std::move(fr.tids);

  for (std::size_t size = 2; size <= max_size && level.size() >= 2; ++size) {
    if (size == 2) {
      level = CountPairs(records, level, sigma, pool);
      sigma = KthSupport(pool, K);
      continue;
    }
    // Supports raised since the level was produced: prune first.
    RecordMap<std::uint64_t> known;
    for (const auto& it : pool) {
      if (it.terms.size() == size - 1) known.emplace(it.terms, it.support);
    }
    std::erase_if(level, [&](const Frequent& fr) {
      auto it = known.find(fr.terms);
      return it == known.end() || it->second < sigma;
    });
    std::sort(level.begin(), level.end(),
              [](const Frequent& a, const Frequent& b) {
                return a.terms < b.terms;
              });
    // Join itemsets sharing all but the last term; every (size-1)-subset
    // must itself be frequent.
    std::vector<Record> candidates;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        const Record& a = level[i].terms;
        const Record& b = level[j].terms;
        if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
        Record cand = a;
        cand.push_back(b.back());
        bool ok = true;
        for (std::size_t drop = 0; drop + 2 < cand.size() && ok; ++drop) {
          Record sub;
          for (std::size_t x = 0; x < cand.size(); ++x) {
            if (x != drop) sub.push_back(cand[x]);
          }
          auto it = known.find(sub);
          ok = it != known.end() && it->second >= sigma;
        }
        if (ok) candidates.push_back(std::move(cand));
      }
    }
    std::vector<std::uint64_t> support(candidates.size(), 0);
    const auto n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(ThreadCount()) \
    if (n > 32)
    for (std::int64_t c = 0; c < n; ++c) {
      const Record& cand = candidates[static_cast<std::size_t>(c)];
      TidList acc = singles[cand[0]];
      for (std::size_t x = 1; x < cand.size() && acc.size() >= sigma; ++x) {
        acc = IntersectTids(acc, singles[cand[x]]);
      }
      support[static_cast<std::size_t>(c)] = acc.size();
    }
    std::vector<Frequent> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (support[c] < sigma) continue;
      pool.push_back({candidates[c], support[c]});
      next.push_back({std::move(candidates[c]), {}});
    }
    level = std::move(next);
    sigma = KthSupport(pool, K);
  }
  Finalize(pool, K);
  return pool;
}

namespace serial {
std::vector<Itemset> MineTopK(std::span<const Record> records, std::size_t K,
                              std::size_t max_size) {
  RecordMap<std::uint64_t> counts;
  for (const auto& r : records) {
    ForEachSubset(std::span<const TermId>(r), static_cast<int>(max_size),
                  [&](const Record& s) { ++counts[s]; });
  }
  std::vector<Itemset> pool;
  pool.reserve(counts.size());
  for (auto& [terms, c] : counts) pool.push_back({terms, c});
  Finalize(pool, K);
  return pool;
}
}  // namespace serial

double Tkd(const std::vector<Itemset>& orig_top,
           const std::vector<Itemset>& other_top) {
  if (orig_top.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tkd needs a non-empty top-K");
  }
  std::set<Record> other;
  for (const auto& it : other_top) other.insert(it.terms);
  std::size_t common = 0;
  for (const auto& it : orig_top) common += other.count(it.terms);
  return 1.0 - static_cast<double>(common) /
                   static_cast<double>(orig_top.size());
}

double RelativeError(double s_orig, double s_other) {
  if (s_orig == 0 && s_other == 0) return 0;
  double diff = s_orig > s_other ? s_orig - s_other : s_other - s_orig;
  return diff / ((s_orig + s_other) / 2);
}

std::vector<TermId> RankRangeTerms(const SupportTable& supports,
                                   std::size_t lo, std::size_t hi) {
  std::vector<TermId> present;
  for (TermId t = 0; t < supports.size(); ++t) {
    if (supports[t] > 0) present.push_back(t);
  }
  if (lo > hi || hi > present.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair rank range " + std::to_string(lo) + ":" +
                    std::to_string(hi) + " exceeds the " +
                    std::to_string(present.size()) + " terms present");
  }
  std::stable_sort(present.begin(), present.end(), [&](TermId a, TermId b) {
    return supports[a] > supports[b];
  });
  return {present.begin() + static_cast<std::ptrdiff_t>(lo),
          present.begin() + static_cast<std::ptrdiff_t>(hi)};
}

std::vector<double> PairSupports(std::span<const Record> records,
                                 const std::vector<TermId>& terms,
                                 double scale) {
  const std::size_t n = terms.size();
  std::unordered_map<TermId, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local.emplace(terms[i], i);
  std::vector<std::uint64_t> counts(n * n, 0);
  std::vector<std::size_t> present;
  for (const auto& r : records) {
    present.clear();
    for (TermId t : r) {
      auto it = local.find(t);
      if (it != local.end()) present.push_back(it->second);
    }
    for (std::size_t a = 0; a < present.size(); ++a) {
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        std::size_t i = std::min(present[a], present[b]);
        std::size_t j = std::max(present[a], present[b]);
        ++counts[i * n + j];
      }
    }
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(static_cast<double>(counts[i * n + j]) / scale);
    }
  }
  return out;
}

double PairRelativeError(std::span<const Record> orig,
                         std::span<const Record> other, std::size_t lo,
                         std::size_t hi, double other_scale) {
  auto terms = RankRangeTerms(ComputeSupports(orig), lo, hi);
  auto so = PairSupports(orig, terms);
  auto sp = PairSupports(other, terms, other_scale);
  double total = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < so.size(); ++i) {
    if (so[i] == 0 && sp[i] == 0) continue;
    total += RelativeError(so[i], sp[i]);
    ++pairs;
  }
  return pairs == 0 ? 0.0 : total / static_cast<double>(pairs);
}

double PairRelativeError(const Dataset& orig, const Dataset& other,
                         std::size_t lo, std::size_t hi) {
  return PairRelativeError(orig.records, other.records, lo, hi);
}

double Tlost(const Dataset& orig, const DisassociatedDataset& published,
             int k) {
  SupportTable supports = ComputeSupports(orig.records);
  std::vector<char> in_chunk(supports.size(), 0);
  auto mark = [&](const std::vector<TermId>& domain) {
    for (TermId t : domain) {
      if (t < in_chunk.size()) in_chunk[t] = 1;
    }
  };
  for (const auto& root : published.forest) {
    ForEachLeaf(root, [&](const LeafCluster& leaf) {
      for (const auto& c : leaf.partition.record_chunks) mark(c.domain);
    });
    ForEachJoint(root, [&](const JointCluster& joint) {
      for (const auto& sc : joint.shared_chunks) mark(sc.domain);
    });
  }
  std::size_t frequent = 0;
  std::size_t lost = 0;
  for (TermId t = 0; t < supports.size(); ++t) {
    if (supports[t] <= static_cast<std::uint32_t>(std::max(k, 0))) continue;
    ++frequent;
    if (!in_chunk[t]) ++lost;
  }
  return frequent == 0 ? 0.0
                       : static_cast<double>(lost) /
                             static_cast<double>(frequent);
}

std::uint64_t LowerBoundSupport(const DisassociatedDataset& published,
                                std::span<const TermId> itemset) {
  Record s(itemset.begin(), itemset.end());
  Canonicalize(s);
  if (s.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty itemset");
  }
  std::uint64_t total = 0;
  auto chunk = [&](const std::vector<TermId>& domain,
                   const std::vector<Record>& subrecords) {
    if (ContainsAll(domain, s)) total += ChunkSupport(subrecords, s);
  };
  for (const auto& root : published.forest) {
    ForEachLeaf(root, [&](const LeafCluster& leaf) {
      for (const auto& c : leaf.partition.record_chunks) {
        chunk(c.domain, c.subrecords);
      }
      if (s.size() == 1 && Contains(leaf.partition.term_chunk, s[0])) ++total;
    });
    ForEachJoint(root, [&](const JointCluster& joint) {
      for (const auto& sc : joint.shared_chunks) {
        chunk(sc.domain, sc.subrecords);
      }
    });
  }
  return total;
}

std::vector<Record> LowerBoundRecords(const DisassociatedDataset& published) {
  std::vector<Record> out;
  for (const auto& root : published.forest) {
    ForEachLeaf(root, [&](const LeafCluster& leaf) {
      for (const auto& c : leaf.partition.record_chunks) {
        out.insert(out.end(), c.subrecords.begin(), c.subrecords.end());
      }
      for (TermId t : leaf.partition.term_chunk) out.push_back({t});
    });
    ForEachJoint(root, [&](const JointCluster& joint) {
      for (const auto& sc : joint.shared_chunks) {
        out.insert(out.end(), sc.subrecords.begin(), sc.subrecords.end());
      }
    });
  }
  return out;
}

MetricsReport RunMetrics(const Dataset& orig,
                         const DisassociatedDataset& published,
                         const MetricsOptions& options) {
  if (options.reconstructions == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "at least one reconstruction is required");
  }
  MetricsReport report;
  report.k = published.k;
  report.m = published.m;
  report.top_k = options.top_k;
  report.pair_lo = options.pair_lo;
  report.pair_hi = options.pair_hi;
  report.reconstructions = options.reconstructions;

  // Averaging over n samples equals mining their concatenation: top-K order
  // is scale-free and pair supports are divided by n.
  std::vector<Record> samples;
  for (std::size_t i = 0; i < options.reconstructions; ++i) {
    Dataset d = Reconstruct(published, options.seed + i, options.policy);
    samples.insert(samples.end(), std::make_move_iterator(d.records.begin()),
                   std::make_move_iterator(d.records.end()));
  }
  std::vector<Record> bounds = LowerBoundRecords(published);

  auto orig_top = MineTopK(orig.records, options.top_k,
                           options.max_itemset_size);
  if (!orig_top.empty()) {
    report.tkd = Tkd(orig_top, MineTopK(samples, options.top_k,
                                        options.max_itemset_size));
    report.tkd_a = Tkd(orig_top, MineTopK(bounds, options.top_k,
                                          options.max_itemset_size));
  }
  report.re = PairRelativeError(
      orig.records, samples, options.pair_lo, options.pair_hi,
      static_cast<double>(options.reconstructions));
  report.re_a =
      PairRelativeError(orig.records, bounds, options.pair_lo, options.pair_hi);
  report.tlost = Tlost(orig, published, published.k);
  return report;
}

std::string FormatReportText(const MetricsReport& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  os << "tkd=" << r.tkd << "\n"
     << "tkd_a=" << r.tkd_a << "\n"
     << "re=" << r.re << "\n"
     << "re_a=" << r.re_a << "\n"
     << "tlost=" << r.tlost << "\n"
     << "k=" << r.k << "\n"
     << "m=" << r.m << "\n"
     << "K=" << r.top_k << "\n"
     << "pair_range=" << r.pair_lo << ":" << r.pair_hi << "\n"
     << "reconstructions=" << r.reconstructions << "\n";
  return os.str();
}

std::string FormatReportJson(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["tkd"] = r.tkd;
  j["tkd_a"] = r.tkd_a;
  j["re"] = r.re;
  j["re_a"] = r.re_a;
  j["tlost"] = r.tlost;
  j["k"] = r.k;
  j["m"] = r.m;
  j["K"] = r.top_k;
  j["pair_range"] = {r.pair_lo, r.pair_hi};
  j["reconstructions"] = r.reconstructions;
  return j.dump(2) + "\n";
}

}  // namespace disassoc
