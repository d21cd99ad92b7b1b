// Copyright 2026 The catfilter Authors
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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "catfilter/cli.hpp"

namespace catfilter::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const fs::path dir = fs::temp_directory_path() / "catfilter_tests" / info->test_suite_name() / info->name();
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "catfilter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST(SweepRange, LogSweepHitsDecadesExactly) {
  const auto v = SweepRange{1e-2, 1e2, 41, true}.values();
  ASSERT_EQ(v.size(), 41u);
  EXPECT_EQ(v[20], 1.0);
  EXPECT_EQ(v.front(), 1e-2);
  EXPECT_EQ(v.back(), 1e2);
  const auto lin = SweepRange{0.0, 1.0, 5, false}.values();
  EXPECT_EQ(lin[2], 0.5);
  EXPECT_THROW((SweepRange{0.0, 1.0, 5, true}.values()), UsageError);
  EXPECT_THROW((SweepRange{1.0, 1.0, 5, false}.values()), UsageError);
  EXPECT_THROW((SweepRange{0.0, 1.0, 1, false}.values()), UsageError);
}

TEST(Config, ParsesKeyValueText) {
  RunConfig cfg;
  std::istringstream text(
      "# figure 3 setup\n"
      "gamma = 2.0\n"
      "epsilon = 0.1, 0.5   # two traces\n"
      "gamma_rel_points = 11\n"
      "gamma_rel_log = false\n"
      "format = json\n"
      "\n");
  apply_config_text(cfg, text, "inline");
  EXPECT_EQ(cfg.gamma, 2.0);
  EXPECT_EQ(cfg.epsilon_list, (std::vector<double>{0.1, 0.5}));
  EXPECT_EQ(cfg.gamma_rel_points, 11);
  EXPECT_EQ(cfg.gamma_rel_log, false);
  EXPECT_EQ(cfg.format, Format::kJson);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, RejectsBadLines) {
  RunConfig cfg;
  std::istringstream unknown("colour = blue\n");
  EXPECT_THROW(apply_config_text(cfg, unknown, "x"), UsageError);
  std::istringstream bad_number("gamma = fast\n");
  EXPECT_THROW(apply_config_text(cfg, bad_number, "x"), UsageError);
  std::istringstream no_equals("gamma 1\n");
  EXPECT_THROW(apply_config_text(cfg, no_equals, "x"), UsageError);
  RunConfig above;
  above.epsilon_list = {1.2};
  EXPECT_THROW(above.validate(), UsageError);
}

TEST(Cli, ExitStatusContract) {
  const fs::path dir = scratch_dir();
  EXPECT_EQ(invoke({"spectrum", "--epsilon", "1.1", "--out", dir.string()}).status, 2);
  EXPECT_EQ(invoke({"spectrum", "--no-such-flag"}).status, 2);
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"spectrum", "--format", "xml"}).status, 2);
  EXPECT_EQ(invoke({"spectrum", "--config", (dir / "missing.cfg").string()}).status, 2);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(Cli, VerifyPassesAndReportsEveryCheck) {
  const Outcome o = invoke({"verify"});
  EXPECT_EQ(o.status, 0) << o.out;
  EXPECT_NE(o.out.find("all checks passed"), std::string::npos);
  for (const auto& c : run_checks(RunConfig{})) {
    EXPECT_TRUE(c.pass) << c.name << " value " << c.value << " tol " << c.tolerance;
    EXPECT_NE(o.out.find(c.name), std::string::npos);
  }
}

TEST(Cli, CorruptedToleranceFailsVerify) {
  const Outcome o = invoke({"verify", "--corrupt-tolerance", "parseval"});
  EXPECT_EQ(o.status, 1);
  EXPECT_NE(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FlagsOverrideConfigOverrideEnvironment) {
  const fs::path dir = scratch_dir();
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "epsilon = 0.5\nout = " << (dir / "from_config").string() << "\n";
  }
  ASSERT_EQ(invoke({"spectrum", "--config", (dir / "run.cfg").string(), "--epsilon", "0.3"}).status, 0);
  const auto rows = read_csv(dir / "from_config" / "spectrum.csv");
  EXPECT_NEAR(rows[500][1], 1.69 / 0.49, 1e-11);

  ASSERT_EQ(invoke({"spectrum", "--config", (dir / "run.cfg").string(), "--out", (dir / "from_flag").string()}).status,
            0);
  EXPECT_TRUE(fs::exists(dir / "from_flag" / "spectrum.csv"));

  ::setenv("CATFILTER_OUT", (dir / "from_env").c_str(), 1);
  const int status = invoke({"spectrum", "--epsilon", "0"}).status;
  ::unsetenv("CATFILTER_OUT");
  ASSERT_EQ(status, 0);
  for (const auto& row : read_csv(dir / "from_env" / "spectrum.csv")) EXPECT_EQ(row[1], 1.0);
}

TEST(Cli, SpectrumFilesPerEpsilon) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"spectrum", "--epsilon", "0.3", "--epsilon", "0.7", "--out", dir.string()}).status, 0);
  const auto low = read_csv(dir / "spectrum_eps0.3.csv");
  const auto high = read_csv(dir / "spectrum_eps0.7.csv");
  ASSERT_EQ(low.size(), 1001u);
  EXPECT_EQ(low[500][0], 0.0);
  EXPECT_NEAR(low[500][3], 5.38, 0.05);
  EXPECT_NEAR(high[500][3], 15.07, 0.05);
}

TEST(Cli, JsonMirrorsCsv) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"equivloss", "--out", dir.string()}).status, 0);
  ASSERT_EQ(invoke({"equivloss", "--out", dir.string(), "--format", "json"}).status, 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "equivloss.json"));
  const auto rows = read_csv(dir / "equivloss.csv");
  ASSERT_EQ(doc["rows"].size(), rows.size());
  EXPECT_EQ(doc["columns"][0], "gamma_rel");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      EXPECT_NEAR(doc["rows"][i][j].get<double>(), rows[i][j], 1e-11 * std::abs(rows[i][j]));
    }
  }
}

TEST(Cli, CorrelationTraces) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"correlation", "--epsilon", "0", "--epsilon", "0.7", "--out", dir.string()}).status, 0);
  const auto limit = read_csv(dir / "correlation_eps0.csv");
  const auto strong = read_csv(dir / "correlation_eps0.7.csv");
  ASSERT_EQ(limit.size(), 257u);
  for (std::size_t i = 0; i < limit.size(); ++i) {
    EXPECT_NEAR(limit[i][1], std::exp(-std::abs(limit[i][0])), 1e-6);
    EXPECT_NEAR(strong[i][1], strong[limit.size() - 1 - i][1], 1e-12);
  }
}

TEST(Cli, EquivLossCurves) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"equivloss", "--out", dir.string()}).status, 0);
  const auto rows = read_csv(dir / "equivloss.csv");
  ASSERT_EQ(rows.size(), 41u);
  EXPECT_EQ(rows[20][0], 1.0);
  EXPECT_LT(rows.front()[1], 1e-3);
  double spread = 0.0;
  for (const auto& r : rows) spread = std::max(spread, *std::max_element(r.begin() + 1, r.end()) -
                                                           *std::min_element(r.begin() + 1, r.end()));
  EXPECT_LT(spread, 0.01);
}

TEST(Cli, ModeFunctions) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"modefuncs", "--out", dir.string()}).status, 0);
  const auto overlap = read_csv(dir / "modefuncs_overlap.csv");
  EXPECT_NEAR(overlap[0][2], 0.9, 1e-6);
  EXPECT_NEAR(overlap[0][3], 0.976908, 1e-5);
  const auto filtered = read_csv(dir / "modefuncs_filtered.csv");
  const auto& centre = filtered[filtered.size() / 2];
  EXPECT_EQ(centre[0], 0.0);
  EXPECT_NEAR(centre[1], 0.40825, 1e-5);
  // Equal rates fall back to the convolution route.
  EXPECT_EQ(invoke({"modefuncs", "--big-gamma", "1", "--out", dir.string()}).status, 0);
}

TEST(Cli, ModeMatchScan) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"modematch", "--out", dir.string()}).status, 0);
  const auto rows = read_csv(dir / "modematch.csv");
  ASSERT_EQ(rows.size(), 25u);
  EXPECT_NEAR(rows.front()[0], 0.05, 1e-15);
  EXPECT_NEAR(rows.back()[0], 10.0, 1e-13);
  EXPECT_NEAR(rows.front()[2], 0.9, 2e-3);
  EXPECT_NEAR(rows.back()[2], 1.0, 1e-2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_LE(rows[i][4], 1e-6);
    if (i > 0) EXPECT_GT(rows[i][2], rows[i - 1][2]);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const fs::path a = scratch_dir() / "a";
  const fs::path b = a.parent_path() / "b";
  for (const char* cmd : {"equivloss", "correlation", "modefuncs", "modematch"}) {
    ASSERT_EQ(invoke({cmd, "--out", a.string()}).status, 0);
    ASSERT_EQ(invoke({cmd, "--out", b.string()}).status, 0);
  }
  std::set<std::string> names;
  for (const auto& e : fs::directory_iterator(a)) names.insert(e.path().filename().string());
  EXPECT_EQ(names.size(), 8u);
  for (const auto& n : names) EXPECT_EQ(slurp(a / n), slurp(b / n)) << n;
}

TEST(Cli, GoldenRowsMatchFixtures) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"equivloss", "--out", dir.string()}).status, 0);
  ASSERT_EQ(invoke({"modematch", "--out", dir.string()}).status, 0);
  ASSERT_EQ(invoke({"modefuncs", "--out", dir.string()}).status, 0);
  ASSERT_EQ(invoke({"correlation", "--epsilon", "0", "--epsilon", "0.3", "--epsilon", "0.7", "--out", dir.string()})
                .status,
            0);
  ASSERT_EQ(invoke({"spectrum", "--epsilon", "0.3", "--epsilon", "0.7", "--out", dir.string()}).status, 0);

  int fixtures = 0;
  for (const auto& e : fs::directory_iterator(CATFILTER_FIXTURE_DIR)) {
    if (e.path().extension() != ".golden") continue;
    ++fixtures;
    const fs::path produced = dir / e.path().stem();
    ASSERT_TRUE(fs::exists(produced)) << produced;
    const std::string body = "\n" + slurp(produced);
    std::ifstream golden(e.path());
    std::string line;
    while (std::getline(golden, line)) {
      if (line.empty() || line[0] == '#') continue;  // license header
      EXPECT_NE(body.find("\n" + line + "\n"), std::string::npos) << e.path().filename() << ": " << line;
    }
  }
  EXPECT_GE(fixtures, 5);
}

}  // namespace
}  // namespace catfilter::cli
