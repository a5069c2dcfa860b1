#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using aksw::cli::run;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

json run_json(const std::vector<std::string>& args, int expected_exit = 0) {
  auto o = run(args);
  EXPECT_EQ(o.exit_code, expected_exit) << o.err;
  return json::parse(o.out);
}

const json* assertion(const json& report, const std::string& name) {
  for (const auto& s : report["sections"])
    for (const auto& a : s["assertions"])
      if (a["name"] == name) return &a;
  return nullptr;
}

}  // namespace

TEST(Cli, DimsMatchesHandCounts) {
  auto r = run_json({"dims", "--d", "2", "--n", "2", "--levi", "1,1"});
  const auto& res = r["sections"][0]["results"];
  EXPECT_EQ(res["sum_of_squares"], 8);
  EXPECT_EQ(res["quotient_dim"], 6);
  EXPECT_EQ(r["summary"]["status"], "pass");

  // Two-row quotient of H(S_3): 1 + 2^2.
  auto tl = run_json({"dims", "--d", "1", "--n", "3", "--levi", "2"});
  EXPECT_EQ(tl["sections"][0]["results"]["quotient_dim"], 5);
}

TEST(Cli, ReportSchema) {
  auto r = run_json({"dims", "--d", "1", "--n", "2"});
  EXPECT_EQ(r["schema"], "aksw-report/1");
  EXPECT_EQ(r["tool"]["name"], "aksw");
  EXPECT_TRUE(r["summary"].contains("passed"));
  EXPECT_FALSE(r["sections"][0].contains("duration_ms"));
  auto t = run_json({"dims", "--d", "1", "--n", "2", "--timings"});
  EXPECT_TRUE(t["sections"][0].contains("duration_ms"));
}

TEST(Cli, SchurWeylTwoBlocks) {
  auto r = run_json({"schur-weyl", "--m", "2", "--levi", "1,1", "--n", "2"});
  EXPECT_EQ(r["sections"][0]["results"]["image_rank"], 6);
  const json* a = assertion(r, "kernel equals ideal(tau)");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ((*a)["status"], "pass");
}

TEST(Cli, PresetsPass) {
  EXPECT_EQ(run_json({"schur-weyl", "--preset", "temperley-lieb", "--n", "3"})["sections"][0]["results"]["image_rank"], 5);
  EXPECT_EQ(run_json({"schur-weyl", "--preset", "hecke-a", "--n", "3"})["sections"][0]["results"]["image_rank"], 6);
  EXPECT_EQ(run_json({"schur-weyl", "--preset", "hecke-b", "--n", "2"})["sections"][0]["results"]["image_rank"], 8);
  EXPECT_EQ(run_json({"schur-weyl", "--preset", "ariki-koike", "--d", "2", "--n", "2"})["sections"][0]["results"]["image_rank"], 8);
  // Blob algebra with three blocks, n=2: multinomials 1,2 -> 3*1 + 3*4.
  EXPECT_EQ(run_json({"schur-weyl", "--preset", "blob", "--d", "3", "--n", "2"})["sections"][0]["results"]["image_rank"], 15);
}

TEST(Cli, ArikiCriterionSpecialization) {
  auto r = run_json({"verify", "--suite", "ariki-criterion", "--specialize", "u2=q2*u1", "--n", "2"});
  ASSERT_EQ(r["sections"].size(), 1u);
  const auto& res = r["sections"][0]["results"];
  EXPECT_EQ(res["value"], "0");
  EXPECT_EQ(res["semisimple"], false);
  auto g = run_json({"verify", "--suite", "ariki-criterion", "--d", "2", "--n", "2"});
  EXPECT_EQ(g["sections"][0]["results"]["semisimple"], true);
}

TEST(Cli, VerifyDefaultSuites) {
  auto r = run_json({"verify", "--d", "2", "--n", "2"});
  std::vector<std::string> names;
  for (const auto& s : r["sections"]) names.push_back(s["name"]);
  EXPECT_EQ(names, (std::vector<std::string>{"dims", "specht", "ariki-koike", "blob"}));
  EXPECT_EQ(r["summary"]["failed"], 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({"dims", "--n", "x"}).exit_code, 2);
  EXPECT_EQ(run({"schur-weyl", "--m", "3", "--levi", "1,1", "--n", "2"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope", "--d", "2", "--n", "2"}).exit_code, 2);
  EXPECT_EQ(run({"dims", "--preset", "blob", "--n", "2"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--suite", "ariki-criterion", "--specialize", "u2=", "--n", "2"}).exit_code, 2);
  EXPECT_EQ(run({"dims", "--format", "yaml", "--d", "1", "--n", "2"}).exit_code, 2);
}

TEST(Cli, ResourceRefusalExitsThree) {
  auto o = run({"schur-weyl", "--levi", "3,3", "--n", "4"});
  EXPECT_EQ(o.exit_code, 3);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(run({"schur-weyl", "--levi", "1,1", "--n", "3", "--max-dim", "5"}).exit_code, 3);
}

TEST(Cli, FailedAssertionMeansExitOne) {
  aksw::cli::Report r;
  r.command = "dims";
  r.sections.push_back({"s", {{"ok", true, {}}, {"bad", false, {}}}, {}, 0.0});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed(), 1u);
  EXPECT_NE(r.to_text(false).find("FAIL 1 passed, 1 failed"), std::string::npos);
}

TEST(Cli, VersionFlag) {
  auto o = run({"--version"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("aksw"), std::string::npos);
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  const std::vector<std::string> a = {"verify", "--d", "2", "--n", "3"};
  auto b = a;
  b.insert(b.end(), {"--jobs", "3"});
  auto x = run(a), y = run(a), z = run(b);
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(x.out, z.out);
}

TEST(Cli, WritesToReportDir) {
  auto dir = std::filesystem::temp_directory_path() / "aksw_report_dir_test";
  std::filesystem::remove_all(dir);
  ::setenv("AKSW_REPORT_DIR", dir.c_str(), 1);
  auto o = run({"dims", "--d", "1", "--n", "2"});
  ::unsetenv("AKSW_REPORT_DIR");
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_TRUE(o.out.empty());
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(json::parse(slurp(e.path()))["command"], "dims");
  }
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
}

struct Golden {
  std::vector<std::string> args;
  std::string file;
};

void PrintTo(const Golden& g, std::ostream* os) { *os << g.file; }

class CliGolden : public ::testing::TestWithParam<Golden> {};

TEST_P(CliGolden, MatchesFrozenReport) {
  const auto& g = GetParam();
  auto o = run(g.args);
  ASSERT_EQ(o.exit_code, 0) << o.err;
  EXPECT_EQ(o.out, slurp(std::filesystem::path(AKSW_GOLDEN_DIR) / g.file));
}

INSTANTIATE_TEST_SUITE_P(
    Reports, CliGolden,
    ::testing::Values(Golden{{"dims", "--d", "2", "--n", "2", "--levi", "1,1"}, "dims_d2_n2_levi1_1.json"},
                      Golden{{"schur-weyl", "--m", "2", "--levi", "1,1", "--n", "2"}, "schur_weyl_levi1_1_n2.json"},
                      Golden{{"verify", "--suite", "blob", "--d", "2", "--n", "2", "--format", "text"},
                             "verify_blob_d2_n2.txt"}),
    [](const auto& info) {
      std::string s = info.param.file.substr(0, info.param.file.find('.'));
      return s;
    });
