// Copyright 2026 The qgamble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "qgamble/cli.hpp"
#include "qgamble/report.hpp"
#include "qgamble/svg.hpp"

using namespace qgamble;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

}  // namespace

TEST(WriteCsv, HeaderOnlyAndQuoting) {
  Table t{{"a", "b"}, {}};
  EXPECT_EQ(write_csv(t), "a,b\n");
  t.rows.push_back({std::int64_t{3}, std::string("x,y")});
  t.rows.push_back({std::monostate{}, std::vector<double>{-1.0, 0.5}});
  t.rows.push_back({true, std::string("say \"hi\"")});
  EXPECT_EQ(write_csv(t), "a,b\n3,\"x,y\"\n,\"-1,0.5\"\ntrue,\"say \"\"hi\"\"\"\n");
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(1.0), "1");
}

TEST(WriteJson, KeyOrderAndRoundTrip) {
  Report r;
  r.config["zeta"] = 1;
  r.config["alpha"] = 2;
  r.table = {{"x", "y"}, {{1.5, std::monostate{}}, {2.5, std::vector<double>{1.0, 2.0}}}};
  r.audit = Json{{"k", 0.25}};
  const std::string text = write_json(r);
  EXPECT_LT(text.find("\"config\""), text.find("\"rows\""));
  EXPECT_LT(text.find("\"rows\""), text.find("\"audit\""));
  EXPECT_LT(text.find("\"zeta\""), text.find("\"alpha\""));
  const Json back = Json::parse(text);
  EXPECT_EQ(back["rows"][0]["x"], 1.5);
  EXPECT_TRUE(back["rows"][0]["y"].is_null());
  EXPECT_EQ(back["rows"][1]["y"][1], 2.0);
  EXPECT_EQ(back["audit"]["k"], 0.25);
  EXPECT_EQ(text.back(), '\n');

  Report bare;
  bare.table = {{"x"}, {}};
  EXPECT_FALSE(Json::parse(write_json(bare)).contains("audit"));
}

TEST(SpectrumTable, ThreeStateGame) {
  const auto t = spectrum_table(correlation_spectrum(GameSpace(2)));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.header.front(), "index");
  EXPECT_EQ(t.header.back(), "sign_class");
  EXPECT_EQ(std::get<std::int64_t>(t.rows[0].back()), -1);
  EXPECT_EQ(std::get<std::string>(t.rows[1][2]), "odd");
}

TEST(VarianceTable, SingleRow) {
  const GameSpace gs(5);
  const auto csv = write_csv(variance_table(gs, payoff_variance(gs, 0, Player::One)));
  const auto ls = lines(csv);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "rounds_max,n,player,kappa,value,expected,interior");
  EXPECT_EQ(ls[1].rfind("5,0,1,1,", 0), 0u);
  EXPECT_EQ(ls[1].substr(ls[1].size() - 9), ",0.5,true");
  const auto value = std::stod(ls[1].substr(8));
  EXPECT_NEAR(value, 0.5, 1e-15);
}

TEST(RenderSvg, DeterministicAndValidated) {
  PlotSpec plot{"t", "x", "y", {{"s", {0.0, 1.0, 2.0}, {0.0, 1.0, 0.5}}}, {{1.0, "m"}}};
  const auto a = render_svg(plot);
  EXPECT_EQ(a, render_svg(plot));
  EXPECT_EQ(a.rfind("<svg", 0) == 0 || a.rfind("<?xml", 0) == 0, true);
  EXPECT_NE(a.find("<polyline"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);

  PlotSpec empty{"t", "x", "y", {}, {}};
  EXPECT_THROW(render_svg(empty), InvalidInput);
  PlotSpec short_series{"t", "x", "y", {{"s", {0.0}, {0.0}}}, {}};
  EXPECT_THROW(render_svg(short_series), InvalidInput);
}

TEST(RunCli, PeaksForOneRound) {
  const auto r = run({"peaks", "--n", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n,maxima,classical_centers\n1,\"-1,1\",\"-1,1\"\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(RunCli, SpectrumJson) {
  const auto r = run({"spectrum", "--rounds", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["config"]["rounds"], 2);
  EXPECT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][2]["sign_class"], 1);
}

TEST(RunCli, SweepPrefixesRounds) {
  const auto r = run({"sweep", "--rounds-max", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 1u + 2u + 3u + 4u);
  EXPECT_EQ(ls[0].rfind("rounds_max,index,", 0), 0u);
  EXPECT_EQ(ls[1].rfind("1,0,", 0), 0u);
  EXPECT_EQ(ls.back().rfind("3,3,", 0), 0u);
}

TEST(RunCli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"spectrum"}).code, kExitUsage);
  EXPECT_EQ(run({"spectrum", "--rounds", "2", "--mode", "torus"}).code, kExitUsage);
  EXPECT_EQ(run({"variance", "--rounds", "2", "--n", "5", "--player", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"spectrum", "--rounds", "0", "--mode", "periodic"}).code, kExitUsage);
  EXPECT_EQ(run({"diverge", "--kind", "weyl", "--cutoffs", "0.1,0.01"}).code, kExitUsage);
  const auto r = run({"density", "--n", "1", "--xi-min", "2", "--xi-max", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(RunCli, IoErrorExitsOne) {
  const auto r = run({"peaks", "--n", "1", "--out", "/nonexistent-dir/x/out.csv"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_TRUE(r.out.empty());
}

TEST(RunCli, OutAndSvgFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "qgamble_shell_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "density.csv";
  const auto svg = dir / "density.svg";
  const auto r = run({"density", "--n", "2", "--samples", "11", "--out", csv.string(), "--svg",
                      svg.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("wrote"), std::string::npos);
  EXPECT_EQ(lines(slurp(csv)).size(), 12u);
  EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Execute, HelpAndDeterminism) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  RunConfig c;
  c.subcommand = "compare";
  c.n = 3;
  c.svg_path = "unused.svg";
  const auto a = execute(c);
  const auto b = execute(c);
  ASSERT_TRUE(a.svg.has_value());
  EXPECT_EQ(a.document, b.document);
  EXPECT_EQ(*a.svg, *b.svg);
  c.subcommand = "nope";
  EXPECT_THROW(execute(c), InvalidInput);
}
