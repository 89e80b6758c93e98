// Copyright 2026 The dicke-squeezing Authors
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

#include "dicke/error.hpp"
#include "dicke/scenario.hpp"
#include "dicke_tools/cli.hpp"
#include "dicke_tools/sweep_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace dicke {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(FormatNumber, SeventeenDigitsAndTokens) {
  EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_number(1.0), "1");
  EXPECT_EQ(io::format_number(-0.0), "0");
  EXPECT_EQ(io::format_number(std::numeric_limits<double>::infinity()), "inf");
}

TEST(SweepIo, CsvRoundTripIsExact) {
  std::vector<SweepRow> rows(2);
  rows[0] = {0.1, 1.0 / 3, 2.0 / 7, 0.5, 0.25, 0, 0, 3.14, 1.1, 0.9, INFINITY, 2.5, 0.1, -0.05};
  rows[1].param = 1e-300;
  std::stringstream ss;
  io::write_rows(ss, rows, io::Format::kCsv);
  const auto back = io::read_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].rho_ee, 1.0 / 3);
  EXPECT_EQ(back[0].rho_ss, 2.0 / 7);
  EXPECT_TRUE(std::isinf(back[0].xi_r_n1));
  EXPECT_EQ(back[1].param, 1e-300);
}

TEST(SweepIo, HeaderOrderAndJson) {
  std::vector<SweepRow> rows(1);
  rows[0].xi_r_n2 = INFINITY;
  std::stringstream csv, json;
  io::write_rows(csv, rows, io::Format::kCsv);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header,
            "param,rho_ee,rho_ss,rho_eg,rho_gg,rho_es,rho_sg,alpha,xi_s_n1,xi_s_n2,xi_r_n1,xi_r_n2,"
            "measure_e,pt_min_eigenvalue");
  io::write_rows(json, rows, io::Format::kJson);
  EXPECT_NE(json.str().find("\"xi_r_n2\":\"inf\""), std::string::npos) << json.str();
  EXPECT_EQ(json.str().find("\"param\""), 1u);
}

TEST(SweepIo, RejectsMalformedCsv) {
  std::stringstream bad("param,rho_ee\n1,2\n");
  EXPECT_THROW(io::read_csv(bad), Error);
}

TEST(Cli, FigureMatchesLibrarySweep) {
  const auto r = run({"figure", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto rows = io::read_csv(in);
  const auto f = figure_preset(1);
  const auto direct = run_scenario_sweep(f.scenario, f.grid, f.solver);
  ASSERT_EQ(rows.size(), direct.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].param, direct[i].param);
    EXPECT_EQ(rows[i].measure_e, direct[i].measure_e);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = run({"sweep", "--scenario", "combined", "--steps", "30", "--threads", "3"});
  const auto b = run({"sweep", "--scenario", "combined", "--steps", "30"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ThresholdAndState) {
  const auto t = run({"threshold", "--scenario", "coherent", "--format", "json"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("\"threshold\":1.41421"), std::string::npos) << t.out;

  const auto s = run({"state", "--omega", "1"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("0.090909090909090"), std::string::npos) << s.out;

  const auto m = run({"state", "--n-ph", "0.25", "--m-mode", "classical", "--m-sign", "+"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find(",-0.095238095238095"), std::string::npos) << m.out;
}

TEST(Cli, WritesToOutputFile) {
  const std::string path = ::testing::TempDir() + "dicke_cli_out.csv";
  const auto r = run({"sweep", "--scenario", "quantum-squeezed", "--steps", "4", "--output", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(io::read_csv(in).size(), 4u);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"sweep"}).code, 1);
  EXPECT_EQ(run({"sweep", "--scenario", "coherent", "--steps", "1"}).code, 1);
  EXPECT_EQ(run({"sweep", "--scenario", "combined", "--solver", "analytic"}).code, 1);
  EXPECT_EQ(run({"sweep", "--scenario", "coherent", "--n-ph", "1"}).code, 1);
  EXPECT_EQ(run({"figure", "7"}).code, 1);
  EXPECT_EQ(run({"state", "--n-ph", "1", "--m-mode", "custom", "--m-value", "3"}).code, 1);
  EXPECT_EQ(run({"state", "--m-sign", "x"}).code, 1);
  EXPECT_EQ(run({"threshold", "--scenario", "quantum-squeezed"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace dicke
