/*
 * Copyright 2026 The kappanet Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the command-line binary as a subprocess.

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support/golden.hpp"

namespace {

namespace fs = std::filesystem;
using kappanet::testing::CliResult;
using kappanet::testing::read_file;
using kappanet::testing::run_cli;

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

TEST(CliTest, GoldenOutputs) {
  const auto cases = kappanet::testing::load_cases();
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    const CliResult r = run_cli(c.arguments);
    EXPECT_EQ(r.status, 0) << c.name << ": " << r.err;
    EXPECT_EQ(r.out, read_file(kappanet::testing::golden_path(c.name)))
        << c.name;
  }
}

TEST(CliTest, ChainDefaults) {
  const CliResult r = run_cli("chain --length 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "probability\t0.680000\t0.320000"));
  EXPECT_TRUE(contains(r.out, "kappa\t0\t1\tbelieved(1)"));
}

TEST(CliTest, UnknownFlag) {
  const CliResult r = run_cli("query --bogus --network networks/chain_3.json "
                              "--target X3");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "unknown option")) << r.err;
  EXPECT_TRUE(contains(r.err, "--bogus")) << r.err;
}

TEST(CliTest, MissingSubcommandAndRequiredFlag) {
  EXPECT_EQ(run_cli("").status, 2);
  const CliResult r = run_cli("query --target X3");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "--network")) << r.err;
}

TEST(CliTest, UnreadableFile) {
  const CliResult r =
      run_cli("query --network networks/missing.json --target X1");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.err, "i/o error")) << r.err;
  EXPECT_TRUE(contains(r.err, "networks/missing.json")) << r.err;
}

TEST(CliTest, MalformedEvidence) {
  const CliResult r = run_cli(
      "query --network networks/chain_3.json --evidence X1 --target X3");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.err, "malformed evidence")) << r.err;
}

TEST(CliTest, UnknownVariableIsNamed) {
  const CliResult r = run_cli(
      "query --network networks/chain_3.json --evidence Q7=true --target X3");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.err, "Q7")) << r.err;
}

TEST(CliTest, DiagnosticsAreDistinct) {
  const std::vector<std::string> errs = {
      run_cli("query --bogus").err,
      run_cli("query --network networks/missing.json --target X1").err,
      run_cli("query --network networks/chain_3.json --evidence X1 "
              "--target X3")
          .err,
  };
  for (std::size_t i = 0; i < errs.size(); ++i) {
    for (std::size_t j = i + 1; j < errs.size(); ++j) {
      EXPECT_NE(errs[i], errs[j]);
    }
  }
}

TEST(CliTest, ImpossibleEvidenceFails) {
  const CliResult r =
      run_cli("query --network networks/car.json --evidence "
              "EngineStart=yes,EngineTurnOver=no --target Battery");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.err, "impossible evidence")) << r.err;
  EXPECT_TRUE(r.out.empty());
  // One line of diagnostic.
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);
}

TEST(CliTest, AbstractThenQueryMatchesCompareC2) {
  const fs::path out = fs::temp_directory_path() / "kappanet_cli_chain5.json";
  const CliResult a = run_cli("abstract --network networks/chain_5.json "
                              "--epsilon 0.2 --out " + out.string());
  ASSERT_EQ(a.status, 0) << a.err;
  const CliResult q = run_cli("query --network " + out.string() +
                              " --evidence X1=true --target X5");
  ASSERT_EQ(q.status, 0) << q.err;
  const CliResult c =
      run_cli("compare --network networks/chain_5.json --evidence X1=true "
              "--target X5 --epsilon 0.2");
  ASSERT_EQ(c.status, 0) << c.err;

  // Query rows are "value\tdegree"; compare rows end in "c2\tdifference".
  auto rows = [](const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cells;
      std::istringstream cell(line);
      std::string field;
      while (std::getline(cell, field, '\t')) cells.push_back(field);
      out.push_back(cells);
    }
    return out;
  };
  const auto qr = rows(q.out);
  const auto cr = rows(c.out);
  ASSERT_EQ(qr.size(), 3u);
  ASSERT_EQ(cr.size(), 3u);
  ASSERT_EQ(cr[0][cr[0].size() - 2], "c2");
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_EQ(qr[i][0], cr[i][0]);
    EXPECT_EQ(qr[i][1], cr[i][cr[i].size() - 2]);
  }
  fs::remove(out);
}

TEST(CliTest, FigureDirWritesTables) {
  const fs::path dir = fs::temp_directory_path() / "kappanet_cli_figures";
  fs::remove_all(dir);
  fs::create_directories(dir);
  ASSERT_EQ(run_cli("chain --length 10 --figure-dir " + dir.string()).status,
            0);
  ASSERT_EQ(run_cli("fork --effects 10 --observe 2 --figure-dir " +
                    dir.string())
                .status,
            0);
  const std::string chain = read_file(dir / "chain_belief.tsv");
  EXPECT_EQ(chain.rfind("distance\tprobability\tkappa_margin\n1\t0.800000\t1\n",
                        0),
            0u);
  EXPECT_TRUE(contains(read_file(dir / "fork_probability.tsv"),
                       "observed\tp_Y\tp_X10\n0\t0.040000\t0.224000\n"));
  EXPECT_TRUE(contains(read_file(dir / "fork_margin.tsv"),
                       "observed\tmargin_Y\tmargin_X10\n0\t-5\t-1\n"));
  fs::remove_all(dir);
}

TEST(CliTest, OutputIsDeterministic) {
  for (const auto& c : kappanet::testing::load_cases()) {
    EXPECT_EQ(run_cli(c.arguments).out, run_cli(c.arguments).out) << c.name;
  }
}

}  // namespace
