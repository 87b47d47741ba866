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

#include "disassoc/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disassoc/anonymize.h"
#include "disassoc/codec.h"
#include "disassoc/dataset.h"
#include "disassoc/error.h"
#include "disassoc/metrics.h"
#include "disassoc/parallel.h"
#include "disassoc/reconstruct.h"
#include "disassoc/verify.h"

namespace disassoc::cli {
namespace {

struct Options {
  // shared
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  int threads = 0;
  // anonymize
  int k = 5;
  int m = 2;
  int max_cluster_size = 30;
  bool no_refine = false;
  bool shuffle = false;
  std::string sensitive;
  // verify
  bool brute_force = false;
  // reconstruct
  std::size_t count = 1;
  std::string term_policy = "single";
  // metrics
  std::string original;
  std::string anonymized;
  std::size_t topk = 1000;
  std::string pair_range = "200:220";
  std::size_t reconstructions = 1;
  // synth
  std::size_t records = 1000;
  std::size_t domain = 100;
  double avg_len = 5.0;
};

int StatusFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
      return kUsage;
    case ErrorCode::kIo:
      return kIoError;
    case ErrorCode::kEmptyDataset:
    case ErrorCode::kMalformedInput:
    case ErrorCode::kTooLarge:
    case ErrorCode::kReconstructionStuck:
      return kStructural;
  }
  return kStructural;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

Dataset ReadDatasetFile(const std::string& path, std::ostream& err) {
  auto in = OpenIn(path);
  ParseResult parsed = ParseDataset(in);
  if (parsed.duplicates_removed > 0 || parsed.lines_skipped > 0) {
    err << "read " << path << ": " << parsed.dataset.size() << " records, "
        << parsed.duplicates_removed << " duplicate terms removed, "
        << parsed.lines_skipped << " empty lines skipped\n";
  }
  return std::move(parsed.dataset);
}

DisassociatedDataset ReadPublishedFile(const std::string& path) {
  auto in = OpenIn(path);
  return ReadPublished(in);
}

// Re-expresses `data` with the ids of `target`, appending unknown tokens.
Dataset Remap(const Dataset& data, const TermDictionary& target) {
  Dataset out;
  out.dictionary = target;
  std::vector<TermId> ids(data.dictionary.size());
  for (TermId t = 0; t < data.dictionary.size(); ++t) {
    ids[t] = out.dictionary.Intern(data.dictionary.Token(t));
  }
  out.records.reserve(data.records.size());
  for (const auto& r : data.records) {
    Record mapped;
    mapped.reserve(r.size());
    for (TermId t : r) mapped.push_back(ids[t]);
    Canonicalize(mapped);
    out.records.push_back(std::move(mapped));
  }
  return out;
}

std::vector<TermId> ReadSensitive(const std::string& path,
                                  const TermDictionary& dictionary) {
  auto in = OpenIn(path);
  std::vector<TermId> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (auto id = dictionary.Find(token)) out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Anonymize(const Options& o, std::ostream& err) {
  Dataset data = ReadDatasetFile(o.input, err);
  Params params;
  params.k = o.k;
  params.m = o.m;
  params.max_cluster_size = o.max_cluster_size;
  params.seed = o.seed;
  params.refine = !o.no_refine;
  params.shuffle = o.shuffle;
  if (!o.sensitive.empty()) {
    params.sensitive_terms = ReadSensitive(o.sensitive, data.dictionary);
  }
  AnonymizeResult result = disassoc::Anonymize(data, params);
  WriteFile(o.output, EncodePublished(result.published));
  err << "anonymize: " << data.size() << " records, " << result.clusters
      << " clusters, " << result.merges.size() << " merges\n";
  return kOk;
}

int Verify(const Options& o, std::ostream& out) {
  DisassociatedDataset published = ReadPublishedFile(o.input);
  AuditReport report = Audit(published);
  for (const auto& v : report.violations) {
    out << v.location << " " << ViolationKindName(v.kind) << " " << v.detail
        << "\n";
  }
  bool ok = report.passed;
  if (o.brute_force) {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < published.forest.size(); ++i) {
      try {
        GuaranteeResult g =
            CheckGuarantee(published.forest[i], published.k, published.m);
        ++checked;
        if (!g.holds) {
          ok = false;
          out << "forest[" << i << "] Guarantee itemset {";
          for (std::size_t j = 0; j < g.witness.size(); ++j) {
            out << (j ? "," : "") << published.dictionary.Token(g.witness[j]);
          }
          out << "} reaches at most " << g.witness_best << " records\n";
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kTooLarge) throw;
        ++skipped;
      }
    }
    out << "brute-force: " << checked << " nodes checked, " << skipped
        << " over the size limit\n";
  }
  out << (ok ? "PASS" : "FAIL") << " " << report.violations.size()
      << " violations\n";
  return ok ? kOk : kViolations;
}

int Reconstruct(const Options& o, std::ostream& err) {
  auto policy = ParseTermPolicy(o.term_policy);
  if (!policy) {
    throw Error(ErrorCode::kInvalidArgument,
                "--term-policy must be single or uniform");
  }
  DisassociatedDataset published = ReadPublishedFile(o.input);
  std::filesystem::path dir = o.output.empty() ? "." : o.output;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());
  for (std::size_t i = 0; i < o.count; ++i) {
    Dataset d = disassoc::Reconstruct(published, o.seed + i, *policy);
    auto path = dir / ("recon-" + std::to_string(o.seed) + "-" +
                       std::to_string(i) + ".txt");
    WriteFile(path.string(), SerializeDataset(d));
    err << "reconstruct: wrote " << path.string() << " (" << d.size()
        << " records)\n";
  }
  return kOk;
}

int Metrics(const Options& o, std::ostream& out, std::ostream& err) {
  MetricsOptions mo;
  auto colon = o.pair_range.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    mo.pair_lo = std::stoul(o.pair_range.substr(0, colon));
    mo.pair_hi = std::stoul(o.pair_range.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "--pair-range must be lo:hi");
  }
  mo.top_k = o.topk;
  mo.reconstructions = o.reconstructions;
  mo.seed = o.seed;
  DisassociatedDataset published = ReadPublishedFile(o.anonymized);
  Dataset orig = Remap(ReadDatasetFile(o.original, err), published.dictionary);
  MetricsReport report = RunMetrics(orig, published, mo);
  out << FormatReportText(report);
  if (!o.output.empty()) WriteFile(o.output, FormatReportJson(report));
  return kOk;
}

int Synth(const Options& o) {
  SynthOptions so;
  so.records = o.records;
  so.domain = o.domain;
  so.avg_len = o.avg_len;
  so.seed = o.seed;
  if (so.records == 0 || so.domain == 0 || !(so.avg_len > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "--records, --domain and --avg-len must be positive");
  }
  WriteFile(o.output, SerializeDataset(GenerateSynthetic(so)));
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Disassociation anonymizer for set-valued data", "disassoc"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads,
                    "Worker threads (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* anon = app.add_subcommand("anonymize", "Disassociate a dataset");
  anon->add_option("-k", o.k, "Anonymity parameter k");
  anon->add_option("-m", o.m, "Adversary knowledge m");
  anon->add_option("--max-cluster-size", o.max_cluster_size,
                   "Upper bound on cluster size");
  anon->add_option("--seed", o.seed, "Seed for --shuffle");
  anon->add_flag("--no-refine", o.no_refine, "Skip the refining step");
  anon->add_flag("--shuffle", o.shuffle, "Publish subrecords in random order");
  anon->add_option("--sensitive", o.sensitive,
                   "File of sensitive terms, one per line");
  anon->add_option("-i,--input", o.input, "Input dataset")->required();
  anon->add_option("-o,--output", o.output, "Output JSON")->required();
  add_threads(anon);

  CLI::App* verify = app.add_subcommand("verify", "Audit a disassociated file");
  verify->add_option("-i,--input", o.input, "Disassociated JSON")->required();
  verify->add_flag("--brute-force", o.brute_force,
                   "Also run the exhaustive guarantee check on small nodes");
  add_threads(verify);

  CLI::App* recon =
      app.add_subcommand("reconstruct", "Sample possible original datasets");
  recon->add_option("-i,--input", o.input, "Disassociated JSON")->required();
  recon->add_option("-o,--output", o.output, "Output directory");
  recon->add_option("--seed", o.seed, "Seed of the first sample");
  recon->add_option("--count", o.count, "Number of samples")
      ->check(CLI::PositiveNumber);
  recon->add_option("--term-policy", o.term_policy, "single or uniform")
      ->check(CLI::IsMember({"single", "uniform"}));
  add_threads(recon);

  CLI::App* metrics = app.add_subcommand("metrics", "Information-loss report");
  metrics->add_option("--original", o.original, "Original dataset")
      ->required();
  metrics->add_option("--anonymized", o.anonymized, "Disassociated JSON")
      ->required();
  metrics->add_option("--topk", o.topk, "Number of top itemsets")
      ->check(CLI::PositiveNumber);
  metrics->add_option("--pair-range", o.pair_range,
                      "Term rank range lo:hi for pair errors");
  metrics->add_option("--reconstructions", o.reconstructions,
                      "Samples averaged for tkd and re")
      ->check(CLI::PositiveNumber);
  metrics->add_option("--seed", o.seed, "Seed of the first sample");
  metrics->add_option("-o,--output", o.output, "Also write the JSON report");
  add_threads(metrics);

  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
  synth->add_option("--records", o.records, "Number of records");
  synth->add_option("--domain", o.domain, "Number of distinct terms");
  synth->add_option("--avg-len", o.avg_len, "Mean record length");
  synth->add_option("--seed", o.seed, "Generator seed");
  synth->add_option("-o,--output", o.output, "Output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* sub = app.get_subcommands().empty() ? &app
                                                  : app.get_subcommands()[0];
    err << sub->help();
    return kUsage;
  }

  SetThreadCount(o.threads);
  try {
    if (*anon) return Anonymize(o, err);
    if (*verify) return Verify(o, out);
    if (*recon) return Reconstruct(o, err);
    if (*metrics) return Metrics(o, out, err);
    if (*synth) return Synth(o);
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return StatusFor(e);
  }
  return kUsage;
}

}  // namespace disassoc::cli
