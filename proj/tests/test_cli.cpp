#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"
#include "pilift/builtins.hpp"
#include "pilift/char_table.hpp"
#include "pilift/context.hpp"

using namespace pilift;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + PILIFT_CLI + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST(Cli, Chartab) {
  const auto r = cli("chartab --group builtin:s3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("X.2 (degree 2)"), std::string::npos);
  const auto j = nlohmann::json::parse(cli("chartab --group builtin:s3 --format json").out);
  EXPECT_EQ(j["characters"].size(), 3u);
}

TEST(Cli, ChartabJsonRoundTrip) {
  const auto j = nlohmann::json::parse(cli("chartab --group builtin:dic12 --format json").out);
  GroupContext ctx(builtin::by_name("dic12"));
  const auto& t = ctx.table(ctx.whole());
  ASSERT_EQ(j["characters"].size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t c = 0; c < t.size(); ++c) EXPECT_EQ(cyc_from_json(j["characters"][i]["values"][c]), t.value(i, c));
  }
}

TEST(Cli, Section4) {
  const auto r = cli("section4 --format json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lift_count"], 13);
  EXPECT_EQ(j["all_pass"], true);
}

TEST(Cli, VerifyOneGroup) {
  const auto r = cli("verify --pi 3 --group builtin:s3 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["anomaly_count"], 0);
}

TEST(Cli, EngineCommands) {
  EXPECT_EQ(cli("ipi --group builtin:a4 --pi 2").status, 0);
  const auto lifts = nlohmann::json::parse(cli("lifts --group builtin:s3 --pi 3 --phi 0 --format json").out);
  EXPECT_EQ(lifts["lift_count"], 2);
  const auto series = nlohmann::json::parse(cli("series --group builtin:c6 --pi 3 --format json").out);
  EXPECT_EQ(series["series"].size(), 2u);
  const auto pair = nlohmann::json::parse(cli("pair --group builtin:s3 --pi 3 --chi 2 --format json").out);
  EXPECT_TRUE(pair.contains("pair"));
  EXPECT_EQ(cli("inductive --group builtin:s3 --pi 3 --gens '(1 2 3)' --theta 1").status, 0);
  EXPECT_EQ(cli("main1 --group builtin:s4 --pi 2 --series 0").status, 0);
  EXPECT_EQ(cli("main2 --group builtin:s3 --pi 3 --series 1,3,6").status, 0);
}

TEST(Cli, PermFileInput) {
  const std::string path = ::testing::TempDir() + "/d8.perm";
  std::ofstream(path) << "degree 4\n(1 2 3 4)\n(1 3)\n";
  const auto r = cli("chartab --format json --group " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], 8);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "/out.json";
  EXPECT_EQ(cli("section4 --format json --output " + path).status, 0);
  std::ifstream f(path);
  EXPECT_EQ(nlohmann::json::parse(f)["lift_count"], 13);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("chartab --group builtin:nope").status, 2);
  EXPECT_EQ(cli("chartab --group /nonexistent.perm").status, 2);
  EXPECT_EQ(cli("ipi --group builtin:s3 --pi 4").status, 2);
  EXPECT_EQ(cli("ipi --group builtin:s3 --pi x").status, 2);
  EXPECT_EQ(cli("ipi --group builtin:s3").status, 2);
  EXPECT_EQ(cli("chartab --group builtin:s3 --format xml").status, 2);
  EXPECT_EQ(cli("pair --group builtin:s3 --pi 3 --chi 99").status, 2);
  EXPECT_EQ(cli("pair --group builtin:s3 --pi 3 --chi 0 --series 9").status, 2);
  EXPECT_EQ(cli("series --group builtin:a5 --pi 2").status, 2);
}

TEST(Cli, OrderCapFromEnvironment) {
  EXPECT_EQ(cli("chartab --group builtin:s4").status, 0);
  const std::string cmd = std::string("PILIFT_ORDER_CAP=10 \"") + PILIFT_CLI + "\" chartab --group builtin:s4 >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli("--help").status, 0); }
