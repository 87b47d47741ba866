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

#include "disassoc/reconstruct.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "assignment_search.h"
#include "disassoc/error.h"
#include "disassoc/parallel.h"
#include "disassoc/slot_model.h"

namespace disassoc {
namespace {

bool SharesTerm(const Record& a, const Record& b) {
  for (TermId t : a) {
    if (std::find(b.begin(), b.end(), t) != b.end()) return true;
  }
  return false;
}

bool MeetsSorted(const Record& a, const std::vector<TermId>& sorted) {
  for (TermId t : a) {
    if (std::binary_search(sorted.begin(), sorted.end(), t)) return true;
  }
  return false;
}

template <typename T>
const T& Pick(const std::vector<T>& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

class NodeSampler {
 public:
  NodeSampler(const ClusterNode& node, std::mt19937_64& rng, TermPolicy policy)
      : model_(BuildSlotModel(node)), rng_(rng), policy_(policy) {}

  std::vector<Record> Run() {
    const std::size_t budget = std::max<std::size_t>(10 * model_.slots(), 10);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
      if (PlaceChunks()) return Finish();
    }
    throw Error(ErrorCode::kReconstructionStuck,
                "no valid placement found in " + std::to_string(budget) +
                    " attempts for a cluster of " +
                    std::to_string(model_.slots()) + " records");
  }

 private:
  struct Piece {
    std::size_t unit;
    const Record* terms;
  };

  void Put(std::size_t slot, std::size_t unit, const Record& sr) {
    pieces_[slot].push_back({unit, &sr});
    terms_[slot].insert(terms_[slot].end(), sr.begin(), sr.end());
  }

  // Target of a shared unit covering `slot`, or null.
  const SlotModel::Target* TargetAt(const SlotModel::Unit& unit,
                                    std::size_t slot) const {
    const auto& targets = *unit.targets;
    std::size_t leaf = model_.slot_leaf[slot];
    std::size_t first = targets.front().leaf;
    if (leaf < first || leaf > targets.back().leaf) return nullptr;
    return &targets[leaf - first];
  }

  bool CanHost(const SlotModel::Unit& unit, const Record& sr,
               std::size_t slot) const {
    if (!unit.shared) return unit.leaf == model_.slot_leaf[slot];
    const SlotModel::Target* target = TargetAt(unit, slot);
    return target != nullptr && !MeetsSorted(sr, target->forbidden);
  }

  // Uniform over the eligible slots of a shared unit: rejection sampling on
  // the joint's slot range, then an exhaustive scan if that keeps missing.
  std::optional<std::size_t> PickSharedSlot(const SlotModel::Unit& unit,
                                            const Record& sr) {
    const auto& targets = *unit.targets;
    const std::size_t lo = model_.leaves[targets.front().leaf].first_slot;
    const auto& last = model_.leaves[targets.back().leaf];
    const std::size_t hi = last.first_slot + last.size;
    auto ok = [&](std::size_t s) {
      return used_[s] != stamp_ && !SharesTerm(sr, terms_[s]) &&
             !MeetsSorted(sr, TargetAt(unit, s)->forbidden);
    };
    std::uniform_int_distribution<std::size_t> any(lo, hi - 1);
    for (int tries = 0; tries < 64; ++tries) {
      std::size_t s = any(rng_);
      if (ok(s)) return s;
    }
    eligible_.clear();
    for (const auto& target : targets) {
      if (MeetsSorted(sr, target.forbidden)) continue;
      const auto& leaf = model_.leaves[target.leaf];
      for (std::size_t s = leaf.first_slot; s < leaf.first_slot + leaf.size;
           ++s) {
        if (used_[s] != stamp_ && !SharesTerm(sr, terms_[s])) {
          eligible_.push_back(s);
        }
      }
    }
    if (eligible_.empty()) return std::nullopt;
    return Pick(eligible_, rng_);
  }

  bool PlaceChunks() {
    const std::size_t n = model_.slots();
    pieces_.assign(n, {});
    terms_.assign(n, {});
    used_.assign(n, 0);
    stamp_ = 0;
    std::vector<std::size_t> order;
    for (std::size_t u = 0; u < model_.units.size(); ++u) {
      const auto& unit = model_.units[u];
      const auto& bag = *unit.subrecords;
      if (!unit.shared) {
        const auto& leaf = model_.leaves[unit.leaf];
        if (bag.size() > leaf.size) return false;
        order.resize(leaf.size);
        std::iota(order.begin(), order.end(), leaf.first_slot);
        std::shuffle(order.begin(), order.end(), rng_);
        for (std::size_t j = 0; j < bag.size(); ++j) Put(order[j], u, bag[j]);
        continue;
      }
      order.resize(bag.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng_);
      ++stamp_;
      for (std::size_t j : order) {
        const Record& sr = bag[j];
        std::optional<std::size_t> s = PickSharedSlot(unit, sr);
        if (!s) return false;
        used_[*s] = stamp_;
        Put(*s, u, sr);
      }
    }
    return RepairEmptySlots();
  }

  // Slots of leaves without term-chunk terms must be filled from chunks:
  // move a piece out of a slot that holds two or more.
  bool RepairEmptySlots() {
    struct Move {
      std::size_t from;
      std::size_t index;
    };
    std::vector<Move> donors;
    for (std::size_t s = 0; s < model_.slots(); ++s) {
      if (!pieces_[s].empty()) continue;
      const auto& leaf = model_.leaves[model_.slot_leaf[s]];
      if (!leaf.partition->term_chunk.empty()) continue;
      donors.clear();
      for (std::size_t t = 0; t < model_.slots(); ++t) {
        if (pieces_[t].size() < 2) continue;
        for (std::size_t i = 0; i < pieces_[t].size(); ++i) {
          const Piece& p = pieces_[t][i];
          if (CanHost(model_.units[p.unit], *p.terms, s)) donors.push_back({t, i});
        }
      }
      if (donors.empty()) return false;
      Move mv = Pick(donors, rng_);
      Piece p = pieces_[mv.from][mv.index];
      pieces_[mv.from].erase(pieces_[mv.from].begin() +
                             static_cast<std::ptrdiff_t>(mv.index));
      terms_[mv.from].clear();
      for (const Piece& q : pieces_[mv.from]) {
        terms_[mv.from].insert(terms_[mv.from].end(), q.terms->begin(),
                               q.terms->end());
      }
      Put(s, p.unit, *p.terms);
    }
    return true;
  }

  std::vector<Record> Finish() {
    for (const auto& leaf : model_.leaves) {
      const auto& tc = leaf.partition->term_chunk;
      if (tc.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick_slot(0, leaf.size - 1);
      std::bernoulli_distribution extra(1.0 / static_cast<double>(leaf.size));
      for (TermId t : tc) {
        std::size_t chosen = pick_slot(rng_);
        for (std::size_t j = 0; j < leaf.size; ++j) {
          bool add = j == chosen ||
                     (policy_ == TermPolicy::kUniform && extra(rng_));
          if (!add) continue;
          auto& rec = terms_[leaf.first_slot + j];
          if (std::find(rec.begin(), rec.end(), t) == rec.end()) {
            rec.push_back(t);
          }
        }
      }
      std::uniform_int_distribution<std::size_t> pick_term(0, tc.size() - 1);
      for (std::size_t j = 0; j < leaf.size; ++j) {
        auto& rec = terms_[leaf.first_slot + j];
        if (rec.empty()) rec.push_back(tc[pick_term(rng_)]);
      }
    }
    for (auto& rec : terms_) std::sort(rec.begin(), rec.end());
    return std::move(terms_);
  }

  SlotModel model_;
  std::mt19937_64& rng_;
  TermPolicy policy_;
  std::vector<std::vector<Piece>> pieces_;
  std::vector<Record> terms_;
  // used_[s] == stamp_ marks slots taken by the shared unit being placed.
  std::vector<std::uint32_t> used_;
  std::uint32_t stamp_ = 0;
  std::vector<std::size_t> eligible_;
};

Dataset Assemble(const DisassociatedDataset& published,
                 std::vector<std::vector<Record>>& parts) {
  Dataset out;
  out.dictionary = published.dictionary;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.records.reserve(total);
  for (auto& p : parts) {
    for (auto& r : p) out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::optional<TermPolicy> ParseTermPolicy(std::string_view name) {
  if (name == "single") return TermPolicy::kSingle;
  if (name == "uniform") return TermPolicy::kUniform;
  return std::nullopt;
}

const char* TermPolicyName(TermPolicy policy) {
  return policy == TermPolicy::kSingle ? "single" : "uniform";
}

std::uint64_t RootSeed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Record> ReconstructNode(const ClusterNode& node,
                                    std::mt19937_64& rng, TermPolicy policy) {
  return NodeSampler(node, rng, policy).Run();
}

Dataset Reconstruct(const DisassociatedDataset& published, std::uint64_t seed,
                    TermPolicy policy) {
  const auto n = static_cast<std::int64_t>(published.forest.size());
  std::vector<std::vector<Record>> parts(published.forest.size());
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(dynamic, 16) num_threads(ThreadCount()) \
    if (n > 64)
  for (std::int64_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    try {
      std::mt19937_64 rng(RootSeed(seed, idx));
      parts[idx] = ReconstructNode(published.forest[idx], rng, policy);
    } catch (const Error& e) {
#pragma omp critical(disassoc_reconstruct_error)
      {
        if (!failed) message = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw Error(ErrorCode::kReconstructionStuck, message);
  return Assemble(published, parts);
}

namespace serial {
Dataset Reconstruct(const DisassociatedDataset& published, std::uint64_t seed,
                    TermPolicy policy) {
  std::vector<std::vector<Record>> parts;
  for (std::size_t i = 0; i < published.forest.size(); ++i) {
    std::mt19937_64 rng(RootSeed(seed, i));
    parts.push_back(ReconstructNode(published.forest[i], rng, policy));
  }
  return Assemble(published, parts);
}
}  // namespace serial

std::vector<std::vector<Record>> EnumerateReconstructions(
    const ClusterNode& node, std::size_t limit, const OracleLimits& limits) {
  std::vector<std::vector<Record>> out;
  if (limit == 0) return out;
  internal::AssignmentSearch search(node, limits);
  const auto& terms = search.terms();
  std::set<std::vector<std::uint64_t>> seen;

  // Term-chunk placements: every (leaf, term) pair picks a non-empty subset
  // of the leaf's slots.
  struct Choice {
    std::size_t leaf;
    std::uint64_t bit;
  };
  std::vector<Choice> choices;
  for (std::size_t l = 0; l < search.leaves(); ++l) {
    std::uint64_t tc = search.term_chunk_mask(l);
    for (std::size_t b = 0; b < 64; ++b) {
      if (tc >> b & 1) choices.push_back({l, std::uint64_t{1} << b});
    }
  }

  std::vector<std::uint64_t> recs;
  std::function<bool(std::size_t)> place = [&](std::size_t c) -> bool {
    if (c == choices.size()) {
      for (std::uint64_t r : recs) {
        if (r == 0) return true;
      }
      std::vector<std::uint64_t> key(recs);
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) {
        std::vector<Record> listing;
        for (std::uint64_t mask : key) {
          Record r;
          for (std::size_t b = 0; b < terms.size(); ++b) {
            if (mask >> b & 1) r.push_back(terms[b]);
          }
          listing.push_back(std::move(r));
        }
        std::sort(listing.begin(), listing.end());
        out.push_back(std::move(listing));
      }
      return out.size() < limit;
    }
    const Choice& ch = choices[c];
    const std::size_t first = search.leaf_first_slot(ch.leaf);
    const std::size_t size = search.leaf_size(ch.leaf);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << size);
         ++subset) {
      for (std::size_t j = 0; j < size; ++j) {
        if (subset >> j & 1) recs[first + j] |= ch.bit;
      }
      bool go_on = place(c + 1);
      for (std::size_t j = 0; j < size; ++j) {
        if (subset >> j & 1) recs[first + j] &= ~ch.bit;
      }
      if (!go_on) return false;
    }
    return true;
  };

  search.Run([&](const std::vector<std::uint64_t>& base) {
    recs = base;
    return place(0);
  });
  return out;
}

}  // namespace disassoc
