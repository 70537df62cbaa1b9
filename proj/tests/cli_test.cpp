/*
 * Copyright 2026 The hyperpf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hyperpf/cli.hpp"
#include "hyperpf/hyperpfaffian.hpp"
#include "hyperpf/spec_file.hpp"

namespace hyperpf {
namespace {

const std::string kData = HYPERPF_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperpf");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& text, char first) {
  int count = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) count += !line.empty() && line[0] == first;
  return count;
}

TEST(CliTest, ComputeMethodsAgree) {
  const Outcome n2 = run({"compute", "--input", kData + "/n2.json", "--method", "definition"});
  EXPECT_EQ(n2.code, cli::kOk);
  EXPECT_EQ(n2.out, "x2 - x1\n");
  for (const char* method : {"exterior", "theorem"}) {
    EXPECT_EQ(run({"compute", "--input", kData + "/n2.json", "--method", method}).out, n2.out);
  }

  const Outcome torelli =
      run({"compute", "--input", kData + "/torelli4.json", "--method", "theorem"});
  EXPECT_EQ(torelli.code, cli::kOk);
  EXPECT_EQ(Polynomial::parse(torelli.out), -3 * vandermonde(4));
  EXPECT_EQ(run({"compute", "--input", kData + "/torelli4.json", "--method", "definition"}).out,
            torelli.out);
}

TEST(CliTest, ComputeOutputRoundTrips) {
  const SkewSpec spec = read_spec_file(kData + "/torelli4.json");
  const Outcome r = run({"compute", "--input", kData + "/torelli4.json", "--method", "exterior"});
  EXPECT_EQ(Polynomial::parse(r.out), pf_exterior(skew_function(spec)));
}

TEST(CliTest, ComputeErrors) {
  const Outcome bad = run({"compute", "--input", kData + "/bad_order.json", "--method", "theorem"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("r=[3,0]"), std::string::npos);

  const Outcome degree =
      run({"compute", "--input", kData + "/deficient6.json", "--method", "theorem"});
  EXPECT_EQ(degree.code, cli::kUsage);
  const Outcome zero =
      run({"compute", "--input", kData + "/deficient6.json", "--method", "definition"});
  EXPECT_EQ(zero.code, cli::kOk);
  EXPECT_EQ(zero.out, "0\n");

  EXPECT_EQ(run({"compute", "--input", kData + "/n2.json", "--method", "magic"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"compute", "--input", kData + "/missing.json", "--method", "theorem"}).code,
            cli::kUsage);
}

TEST(CliTest, Verify) {
  const Outcome ok = run({"verify", "--n", "4", "--k", "2", "--trials", "10", "--seed", "1"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_NE(ok.out.find("verified"), std::string::npos);
  const Outcome points =
      run({"verify", "--n", "12", "--k", "4", "--mode", "points", "--trials", "2"});
  EXPECT_EQ(points.code, cli::kOk) << points.err;
  EXPECT_EQ(run({"verify", "--n", "3", "--k", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--n", "4", "--k", "2", "--mode", "sideways"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--n", "12", "--k", "4", "--mode", "symbolic"}).code, cli::kUsage);
}

TEST(CliTest, Coeffs) {
  EXPECT_EQ(run({"coeffs", "--n", "4", "--k", "2"}).out, "+ a_{0,3} a_{1,2}\n# 1 terms, 0 negative\n");
  EXPECT_EQ(run({"coeffs", "--n", "2", "--k", "2"}).out, "+ a_{0,1}\n# 1 terms, 0 negative\n");
  const Outcome twelve = run({"coeffs", "--n", "12", "--k", "4"});
  EXPECT_EQ(twelve.code, cli::kOk);
  EXPECT_EQ(count_lines(twelve.out, '+') + count_lines(twelve.out, '-'), 32);
  EXPECT_EQ(count_lines(twelve.out, '-'), 6);
  EXPECT_NE(twelve.out.find("- a_{0,2,9,11} a_{1,6,7,8} a_{3,4,5,10}\n"), std::string::npos);
  EXPECT_EQ(run({"coeffs", "--n", "6", "--k", "4"}).code, cli::kUsage);
  EXPECT_EQ(run({"coeffs", "--n", "20", "--k", "4"}).code, cli::kUsage);
}

TEST(CliTest, Torelli) {
  EXPECT_EQ(run({"torelli", "--n", "4"}).out, "constant = -3, verified\n");
  EXPECT_EQ(run({"torelli", "--n", "6"}).out, "constant = -50, verified\n");
  EXPECT_EQ(run({"torelli", "--n", "5"}).code, cli::kUsage);
}

TEST(CliTest, Involution) {
  const Outcome r = run({"involution", "--n", "4", "--k", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out,
            "|W| = 48, |W^r| = 24, |W^d| = 24 (n!|R| = 24)\n"
            "W^r sum = 0, φ²=id on 24 elements, verified\n");
  EXPECT_EQ(run({"involution", "--n", "8", "--k", "2"}).code, cli::kUsage);
}

TEST(CliTest, Compose) {
  EXPECT_EQ(run({"compose", "--k", "2", "--n", "4", "--p", "8"}).out, "constant = 3, verified\n");
  EXPECT_EQ(run({"compose", "--k", "2", "--n", "2", "--p", "4"}).out, "constant = 1, verified\n");
  EXPECT_EQ(run({"compose", "--k", "2", "--n", "4", "--p", "6"}).code, cli::kUsage);
}

TEST(CliTest, UsageAndHelp) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"coeffs", "--n", "four", "--k", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliTest, Deterministic) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"verify", "--n", "6", "--k", "2", "--seed", "42"},
           {"compose", "--k", "2", "--n", "4", "--p", "8", "--seed", "7"},
           {"coeffs", "--n", "12", "--k", "4"}}) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

}  // namespace
}  // namespace hyperpf
