// Copyright 2026 The orient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orient/text_format.hpp"

namespace orient::cli {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "orient");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("orient_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, AnalyzeDStar) {
  const CliRun r = run({"analyze", write("dstar.txt", "5\n>...\n>>>\n..\n.\n")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("kings: {1}\n"), std::string::npos);
  EXPECT_NE(r.out.find("score sequence: [3, 3, 3, 5, 6]"), std::string::npos);
  EXPECT_NE(r.out.find("weak kings: {1, 2, 3, 4, 5}"), std::string::npos);
  EXPECT_NE(r.out.find("triples: transitive="), std::string::npos);
}

TEST_F(CliTest, VerifyMoon) {
  const CliRun r = run({"verify", "MOON", "--nmax", "5"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("counterexamples: 0\n"), std::string::npos);
}

TEST_F(CliTest, VerifyFalseClaimExitsOne) {
  const CliRun r = run({"verify", "MAXKING", "--nmax", "3", "--max-counterexamples", "1"});
  EXPECT_EQ(r.status, kExitFailed);
  EXPECT_NE(r.out.find("result: REFUTED"), std::string::npos);
}

TEST_F(CliTest, VerifyIsDeterministicAcrossWorkers) {
  auto strip_time = [](std::string s) {
    const auto at = s.find("elapsed_ms:");
    return s.erase(at, s.find('\n', at) - at);
  };
  const CliRun a = run({"verify", "T8", "--nmax", "5", "--workers", "1"});
  const CliRun b = run({"verify", "T8", "--nmax", "5", "--workers", "4"});
  EXPECT_EQ(strip_time(a.out), strip_time(b.out));
}

TEST_F(CliTest, ConstructWeakKingsExact) {
  const CliRun r = run({"construct", "weak-kings-exact", "6", "3"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("# certification: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("# labels: 1=x 2=y 3=u1"), std::string::npos);
  EXPECT_EQ(weak_kings(parse_graph(r.out)).size(), 3);
}

TEST_F(CliTest, ConstructStrictFailsOnUncertifiedConstruction) {
  EXPECT_EQ(run({"construct", "two-kings", "4"}).status, kExitOk);
  EXPECT_EQ(run({"construct", "two-kings", "4", "--strict"}).status, kExitFailed);
  EXPECT_EQ(run({"construct", "nksb", "4", "2", "2", "0", "--strict"}).status, kExitOk);
}

TEST_F(CliTest, ConstructWritesOutFile) {
  const std::string out = (dir_ / "g.txt").string();
  const CliRun r = run({"construct", "embed", write("c3.txt", "3\n><\n>\n"), "--out", out});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("certification: PASS"), std::string::npos);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(parse_graph(text.str()).order(), 6);
}

TEST_F(CliTest, SearchNksb) {
  const CliRun found = run({"search", "nksb", "--n", "4", "--k", "3", "--s", "2", "--b", "1"});
  EXPECT_EQ(found.status, kExitOk);
  EXPECT_NE(found.out.find("# (k, s, b): (3, 2, 1)"), std::string::npos);
  const CliRun missing = run({"search", "nksb", "--n", "5", "--k", "4", "--s", "4", "--b", "4"});
  EXPECT_EQ(missing.status, kExitFailed);
}

TEST_F(CliTest, SearchTournamentAndConverse) {
  EXPECT_EQ(run({"search", "tournament", "--n", "4", "--k", "4"}).status, kExitFailed);
  EXPECT_EQ(run({"search", "tournament", "--n", "3", "--k", "3"}).status, kExitOk);
  const CliRun c = run({"search", "embedding-converse", "--nmax", "5"});
  EXPECT_EQ(c.status, kExitOk);
  EXPECT_NE(c.out.find("# transmitter of the induced subgraph"), std::string::npos);
}

TEST_F(CliTest, ExportDot) {
  const std::string file = write("null.txt", "2\n.\n");
  const CliRun r = run({"export", file, "--dot"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("1 -> 2 [dir=none, style=dashed];"), std::string::npos);
  EXPECT_EQ(run({"export", file}).status, kExitUsage);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).status, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run({"verify", "T99", "--nmax", "3"}).status, kExitUsage);
  EXPECT_EQ(run({"verify", "T5", "--nmax", "9"}).status, kExitUsage);
  EXPECT_EQ(run({"construct", "weak-kings-exact", "3", "x"}).status, kExitUsage);
  EXPECT_EQ(run({"analyze", (dir_ / "absent.txt").string()}).status, kExitFile);
  const CliRun bad = run({"analyze", write("bad.txt", "3\n>x\n>\n")});
  EXPECT_EQ(bad.status, kExitFile);
  EXPECT_NE(bad.err.find("line 2, column 2"), std::string::npos);
  EXPECT_EQ(run({"--help"}).status, kExitOk);
}

}  // namespace
}  // namespace orient::cli
