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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"

namespace disassoc {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("disassoc_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  void Write(const std::string& name, const std::string& content) const {
    std::ofstream(Path(name), std::ios::binary) << content;
  }
  std::string ReadBack(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, AnonymizeVerifyReconstructMetrics) {
  Write("in.txt", testing::kExampleText);
  ASSERT_EQ(Run({"anonymize", "-k", "2", "-m", "2", "--max-cluster-size", "5",
                 "-i", Path("in.txt"), "-o", Path("out.json")}),
            cli::kOk)
      << err_.str();
  ASSERT_EQ(Run({"verify", "-i", Path("out.json"), "--brute-force"}),
            cli::kOk)
      << out_.str();
  EXPECT_NE(out_.str().find("PASS 0 violations"), std::string::npos);

  ASSERT_EQ(Run({"reconstruct", "-i", Path("out.json"), "-o", Path("rec"),
                 "--seed", "4", "--count", "2"}),
            cli::kOk);
  std::string first = ReadBack("rec/recon-4-0.txt");
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 10);
  EXPECT_TRUE(fs::exists(Path("rec/recon-4-1.txt")));

  ASSERT_EQ(Run({"metrics", "--original", Path("in.txt"), "--anonymized",
                 Path("out.json"), "--topk", "5", "--pair-range", "0:3", "-o",
                 Path("report.json")}),
            cli::kOk)
      << err_.str();
  EXPECT_EQ(out_.str().rfind("tkd=", 0), 0u);
  EXPECT_NE(ReadBack("report.json").find("\"tlost\""), std::string::npos);
}

TEST_F(CliTest, VerifyReportsViolations) {
  Write("bad.json",
        R"({"k":3,"m":2,"dictionary":["a","b"],"forest":[{"type":"leaf",)"
        R"("size":3,"record_chunks":[{"domain":[0,1],"subrecords":)"
        R"([[0,1],[0],[1]]}],"term_chunk":[]}]})");
  EXPECT_EQ(Run({"verify", "-i", Path("bad.json")}), cli::kViolations);
  EXPECT_NE(out_.str().find("ChunkKm"), std::string::npos);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, SynthIsReproducible) {
  std::vector<std::string> args = {"synth", "--records", "500", "--domain",
                                   "80", "--avg-len", "4", "--seed", "7"};
  auto a = args, b = args;
  a.insert(a.end(), {"-o", Path("a.txt")});
  b.insert(b.end(), {"-o", Path("b.txt")});
  ASSERT_EQ(Run(a), cli::kOk);
  ASSERT_EQ(Run(b), cli::kOk);
  std::string text = ReadBack("a.txt");
  EXPECT_EQ(text, ReadBack("b.txt"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 500);
}

TEST_F(CliTest, ExitStatuses) {
  EXPECT_EQ(Run({"anonymize", "--bogus"}), cli::kUsage);
  EXPECT_EQ(Run({}), cli::kUsage);
  EXPECT_EQ(Run({"verify", "-i", Path("missing.json")}), cli::kIoError);
  Write("broken.json", "{not json");
  EXPECT_EQ(Run({"verify", "-i", Path("broken.json")}), cli::kStructural);
  Write("in.txt", testing::kExampleText);
  EXPECT_EQ(Run({"anonymize", "-k", "1", "-i", Path("in.txt"), "-o",
                 Path("o.json")}),
            cli::kUsage);
  Write("empty.txt", "\n\n");
  EXPECT_EQ(Run({"anonymize", "-i", Path("empty.txt"), "-o", Path("o.json")}),
            cli::kStructural);
  EXPECT_EQ(Run({"--help"}), cli::kOk);
}

}  // namespace
}  // namespace disassoc
