// Copyright 2026 The Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "gtest/gtest.h"
#include "pqnmc/run_record.h"

namespace pqnmc::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  args.insert(args.begin(), "pqnmc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RunRecord Parse(const Outcome& o) { return FromJson(nlohmann::json::parse(o.out)); }

TEST(CliTest, OrderEc) {
  Outcome o = Call({"order", "--method", "ec", "--f", "6", "--q", "2", "--n", "2"});
  ASSERT_EQ(o.code, kOk) << o.err;
  RunRecord r = Parse(o);
  EXPECT_EQ(r.bound, "0.5198943946817");
  EXPECT_EQ(r.method, "ec");
  EXPECT_EQ(r.order.size(), 15u);
  EXPECT_EQ(r.cond_entropies.size(), 15u);
}

TEST(CliTest, OrderLdfAndTrivialEbg) {
  EXPECT_EQ(Parse(Call({"order", "--method", "ldf", "--f", "6"})).bound, "0.5197824997350");
  RunRecord r = Parse(Call({"order", "--method", "ebg", "--f", "2", "--q", "2", "--n", "2"}));
  EXPECT_EQ(r.order, (MonomialOrder{{1, 2}}));
  EXPECT_EQ(r.bound, "1.0000000000000");
}

TEST(CliTest, Formats) {
  Outcome csv = Call({"order", "--method", "ldf", "--f", "6", "--format", "csv",
                      "--no-timing"});
  EXPECT_EQ(csv.out,
            "f,method,bound,evaluations,wall_time_ms\n6,ldf,0.5197824997350,1,0\n");
  Outcome text = Call({"order", "--method", "ec", "--f", "4", "--format", "text", "--raw"});
  EXPECT_NE(text.out.find("order        1,3;2,4;1,4;2,3;1,2;3,4"), std::string::npos)
      << text.out;
  EXPECT_NE(text.out.find("bound_hex    0x"), std::string::npos);
  RunRecord raw = Parse(Call({"order", "--method", "ec", "--f", "6", "--raw"}));
  ASSERT_TRUE(raw.bound_hex.has_value());
  EXPECT_EQ(FormatBound(std::strtod(raw.bound_hex->c_str(), nullptr)), raw.bound);
}

TEST(CliTest, IdenticalRunsGiveIdenticalBytes) {
  std::vector<std::string> args = {"search", "--method", "random", "--f", "6",
                                   "--budget", "500", "--seed", "9", "--no-timing"};
  Outcome a = Call(args);
  Outcome b = Call(args);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  args.push_back("--threads");
  args.push_back("3");
  EXPECT_EQ(Call(args).out, a.out);
  EXPECT_EQ(SerializeRecord(Parse(a)), a.out);
}

TEST(CliTest, Search) {
  Outcome ex = Call({"search", "--method", "exhaustive", "--f", "5", "--q", "2", "--n", "2"});
  ASSERT_EQ(ex.code, kOk) << ex.err;
  EXPECT_EQ(Parse(ex).bound, "0.5321513151313");
  Outcome rnd = Call({"search", "--method", "random", "--f", "6", "--fixed-colors", "2",
                      "--budget", "100000", "--seed", "7"});
  ASSERT_EQ(rnd.code, kOk) << rnd.err;
  EXPECT_LE(std::stod(Parse(rnd).bound), 0.5198121367672);
  EXPECT_NE(rnd.err.find("100000 draws"), std::string::npos);
}

TEST(CliTest, Table) {
  Outcome one = Call({"table", "--f-range", "5..5", "--methods", "ec"});
  ASSERT_EQ(one.code, kOk) << one.err;
  EXPECT_EQ(one.out, "f,ec\n5,0.5382035621102\n");
  Outcome three = Call({"table", "--f-range", "5..7", "--q", "2", "--n", "2", "--methods",
                        "ec,e-ec,ldf,ebg"});
  ASSERT_EQ(three.code, kOk) << three.err;
  EXPECT_EQ(three.out,
            "f,ec,e-ec,ldf,ebg\n"
            "5,0.5382035621102,0.5321513151313,0.5321513151313,0.5321513151313\n"
            "6,0.5198943946817,0.5198121367672,0.5197824997350,0.5197824997350\n"
            "7,0.5158988408975,0.5130098344723,0.5129571653366,0.5129571653366\n");
  Outcome longer = Call({"table", "--f-range", "4..4", "--methods", "ebg", "--long",
                         "--no-timing"});
  EXPECT_EQ(longer.out, "f,method,bound,evaluations,wall_time_ms\n4,ebg,"
                        "0.5546074931610,16,0\n");
}

TEST(CliTest, TableToFile) {
  auto path = std::filesystem::temp_directory_path() / "pqnmc_cli_table.csv";
  Outcome o = Call({"table", "--f-range", "5..5", "--methods", "ec", "--out", path.string()});
  ASSERT_EQ(o.code, kOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "f,ec\n5,0.5382035621102\n");
  std::filesystem::remove(path);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"order", "--method", "best", "--f", "6"}).code, kUsage);
  EXPECT_EQ(Call({"order", "--method", "ec"}).code, kUsage);
  EXPECT_EQ(Call({"order", "--method", "ec", "--f", "17"}).code, kUsage);
  EXPECT_EQ(Call({"order", "--method", "ec", "--f", "6", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(Call({"table", "--f-range", "5..5", "--methods", ""}).code, kUsage);
  EXPECT_EQ(Call({"table", "--f-range", "5..5", "--methods", ","}).code, kUsage);
  EXPECT_EQ(Call({"table", "--f-range", "7..5"}).code, kUsage);
  EXPECT_EQ(Call({"table", "--f-range", "5..5", "--methods", "ec,nope"}).code, kUsage);
  EXPECT_EQ(Call({"order", "--help"}).code, kOk);
}

TEST(CliTest, GuardViolations) {
  Outcome q = Call({"order", "--method", "ec", "--f", "6", "--q", "4"});
  EXPECT_EQ(q.code, kGuard);
  EXPECT_NE(q.err.find("not prime"), std::string::npos);
  EXPECT_EQ(Call({"search", "--method", "exhaustive", "--f", "8"}).code, kGuard);
  EXPECT_EQ(Call({"search", "--method", "exhaustive", "--f", "6"}).code, kGuard);
  EXPECT_EQ(Call({"order", "--method", "e-ec", "--f", "13", "--fixed-colors", "1"}).code,
            kGuard);
}

TEST(CliTest, VerifySuites) {
  Outcome coloring = Call({"verify", "--suite", "coloring", "--f", "6"});
  EXPECT_EQ(coloring.code, kOk) << coloring.out;
  EXPECT_NE(coloring.out.find("color 5 is a matching of size 3: (1,4)(2,3)(5,6)"),
            std::string::npos);
  Outcome remarks = Call({"verify", "--suite", "remarks", "--f", "4"});
  EXPECT_EQ(remarks.code, kOk) << remarks.out;
  EXPECT_NE(remarks.out.find("PASS  optimal orders for n=2 and n=3 coincide"),
            std::string::npos);
  EXPECT_EQ(Call({"verify", "--suite", "entropy", "--f", "6"}).code, kOk);
  EXPECT_EQ(Call({"verify", "--suite", "graph", "--f", "7"}).code, kOk);
  EXPECT_EQ(Call({"verify", "--suite", "paths", "--f", "4"}).code, kOk);
  EXPECT_EQ(Call({"verify", "--suite", "remarks", "--f", "7"}).code, kGuard);
  EXPECT_EQ(Call({"verify", "--suite", "nope"}).code, kUsage);
}

TEST(CliTest, PathsAtFiveReportsComputedCount) {
  Outcome o = Call({"verify", "--suite", "paths", "--f", "5"});
  EXPECT_NE(o.out.find("PASS  lambda_5 = 34"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("PASS  Delta_5 = 657: brute force over all labeled orders: 657"),
            std::string::npos)
      << o.out;
}

TEST(CliTest, ThreadsFromEnvironment) {
  setenv("PQC_THREADS", "2", 1);
  Outcome o = Call({"order", "--method", "e-ec", "--f", "7", "--no-timing"});
  unsetenv("PQC_THREADS");
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, Call({"order", "--method", "e-ec", "--f", "7", "--no-timing",
                         "--threads", "1"}).out);
}

}  // namespace
}  // namespace pqnmc::cli
