#include "trapcc/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace trapcc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) result.push_back(f);
  if (!line.empty() && line.back() == ',') result.emplace_back();
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("trapcc_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(-HUGE_VAL), "-inf");
  const double x = 0.52025042305936121;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST_F(CliTest, MassesJson) {
  const auto r = invoke({"masses", "--alpha", "0.5", "--beta", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tool"], "trapcc");
  EXPECT_EQ(j["command"], "masses");
  EXPECT_NEAR(j["payload"]["m"].get<double>(), 0.5202495, 1e-6);
  EXPECT_NEAR(j["payload"]["M"].get<double>(), 0.1814672, 1e-6);
  EXPECT_EQ(j["payload"]["label"], "BothPositive");
  EXPECT_TRUE(j["warnings"].empty());
}

TEST_F(CliTest, MassesCsv) {
  const auto r = invoke({"masses", "--alpha", "0.5", "--beta", "0.5", "--format", "csv"});
  ASSERT_EQ(r.code, kSuccess);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "alpha,beta,m,M,lambda,f1,f2,f3,a,b,r_A,r_B,label");
  const auto f = fields(rows[1]);
  ASSERT_EQ(f.size(), 13u);
  EXPECT_NEAR(std::stod(f[3]), -0.1056, 1e-4);
  EXPECT_EQ(f[12], "OnlyMUpperPositive");
}

TEST_F(CliTest, MassesErrors) {
  EXPECT_EQ(invoke({"masses", "--alpha", "0", "--beta", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"masses", "--alpha", "2", "--beta", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"masses", "--alpha", "0.5"}).code, kUsage);
  EXPECT_EQ(invoke({"masses", "--alpha", "x", "--beta", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}

TEST_F(CliTest, VerifySquare) {
  const auto r = invoke({"verify", "--alpha", "1", "--beta", "1"});
  EXPECT_EQ(r.code, kSuccess);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["payload"]["is_central_configuration"].get<bool>());
  EXPECT_LT(j["payload"]["normalized"]["max_residual"].get<double>(), 1e-12);
}

// The solved masses leave the upper pair's lateral balance unsatisfied.
TEST_F(CliTest, VerifyReportsLateralDefect) {
  const auto r = invoke({"verify", "--alpha", "0.5", "--beta", "1"});
  EXPECT_EQ(r.code, kVerificationFailed);
  const auto j = json::parse(r.out);
  EXPECT_FALSE(j["payload"]["is_central_configuration"].get<bool>());
  EXPECT_NEAR(j["payload"]["normalized"]["defects"][1][0].get<double>(), 1.85926174, 1e-7);
}

TEST_F(CliTest, VerifyNegativeMassWarns) {
  const auto r = invoke({"verify", "--alpha", "0.5", "--beta", "0.5"});
  EXPECT_EQ(r.code, kVerificationFailed);
  const auto j = json::parse(r.out);
  ASSERT_FALSE(j["warnings"].empty());
  EXPECT_EQ(j["warnings"][0].get<std::string>().rfind("NEGATIVE-MASS", 0), 0u);
}

TEST_F(CliTest, RasterWritesCsvAndSidecar) {
  const auto out = path("grid.csv");
  const auto r = invoke({"raster", "--resolution", "2", "--out", out});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(slurp(out));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "alpha,beta,f1,f3,m,M,label");
  EXPECT_EQ(fields(rows[1])[0], "0.25");
  EXPECT_EQ(fields(rows[2])[0], "0.75");
  EXPECT_EQ(fields(rows[3])[1], "0.75");
  EXPECT_EQ(fields(rows[3])[6], "OnlyMUpperPositive");
  EXPECT_EQ(fields(rows[4])[6], "OnlyMLowerPositive");
  const auto sidecar = json::parse(slurp(out + ".json"));
  EXPECT_EQ(sidecar["payload"]["cells"], 4);
  EXPECT_EQ(sidecar["payload"]["label_counts"]["OnlyMLowerPositive"], 1);
}

TEST_F(CliTest, RasterIsByteDeterministic) {
  const auto first = path("a.csv");
  const auto second = path("b.csv");
  ASSERT_EQ(invoke({"raster", "--resolution", "40", "--out", first}).code, kSuccess);
  ASSERT_EQ(invoke({"raster", "--resolution", "40", "--out", second}).code, kSuccess);
  EXPECT_EQ(slurp(first), slurp(second));
}

TEST_F(CliTest, RasterBothPositiveOnlyAboveHalfHeight) {
  const auto out = path("fine.csv");
  ASSERT_EQ(invoke({"raster", "--resolution", "400", "--out", out}).code, kSuccess);
  const auto rows = lines(slurp(out));
  ASSERT_EQ(rows.size(), 160001u);
  std::size_t both = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto f = fields(rows[k]);
    if (f[6] != "BothPositive") continue;
    ++both;
    EXPECT_GT(std::stod(f[1]), 0.5);
  }
  EXPECT_GT(both, 0u);
}

TEST_F(CliTest, RasterErrors) {
  EXPECT_EQ(invoke({"raster", "--resolution", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"raster", "--alpha-range", "0:1.5", "--resolution", "2", "--out",
                    path("x.csv")})
                .code,
            kUsage);
  EXPECT_EQ(invoke({"raster", "--beta-range", "1:0", "--resolution", "2", "--out",
                    path("x.csv")})
                .code,
            kUsage);
  EXPECT_EQ(
      invoke({"raster", "--resolution", "2", "--out", path("missing/dir/x.csv")}).code,
      kIoError);
}

TEST_F(CliTest, BoundaryExact) {
  const auto r = invoke({"boundary", "--which", "f1", "--axis", "alpha", "--fixed", "0.5"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "fixed,root,f_value,method");
  const auto f = fields(rows[1]);
  EXPECT_NEAR(std::stod(f[1]), 0.87143967248144997, 1e-10);
  EXPECT_EQ(f[3], "exact");
}

TEST_F(CliTest, BoundaryNoSignChange) {
  const auto r = invoke({"boundary", "--which", "f1", "--axis", "beta", "--fixed", "0.9"});
  ASSERT_EQ(r.code, kSuccess);
  const auto f = fields(lines(r.out)[1]);
  EXPECT_EQ(f[1], "no_sign_change");
  EXPECT_EQ(f[2], "");
}

TEST_F(CliTest, BoundaryPublished) {
  const auto out = path("b.csv");
  const auto r = invoke({"boundary", "--which", "f1", "--axis", "beta", "--fixed",
                         "0.5,0.7", "--method", "both", "--out", out});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(slurp(out));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(fields(rows[2])[1].rfind("domain_error:", 0), 0u);
  EXPECT_EQ(json::parse(r.out)["warnings"].size(), 2u);

  const auto g3 = invoke({"boundary", "--which", "f3", "--axis", "beta", "--fixed",
                          "0.5", "--method", "published"});
  ASSERT_EQ(g3.code, kSuccess);
  EXPECT_NEAR(std::stod(fields(lines(g3.out)[1])[1]), std::sqrt(0.8777247805), 1e-8);

  EXPECT_EQ(invoke({"boundary", "--axis", "alpha", "--fixed", "0.5", "--method",
                    "published"})
                .code,
            kUsage);
  EXPECT_EQ(invoke({"boundary", "--which", "f2", "--fixed", "0.5"}).code, kUsage);
}

TEST_F(CliTest, SimulateSquare) {
  const auto out = path("sq.csv");
  const auto r = invoke({"simulate", "--alpha", "1", "--beta", "1", "--out", out});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(slurp(out));
  EXPECT_EQ(rows[0], "t,x1,y1,x2,y2,x3,y3,x4,y4,energy,angmom");
  // 6284 steps at dt = 1e-3, sampled every 100 plus both ends.
  EXPECT_EQ(rows.size(), 1u + 1u + 62u + 1u);
  const auto summary = json::parse(slurp(out + ".json"));
  EXPECT_TRUE(summary["payload"]["rigid"].get<bool>());
  EXPECT_LT(summary["payload"]["rigidity"]["max_distance_deviation"].get<double>(), 1e-6);
}

TEST_F(CliTest, SimulateTrapezoidDeforms) {
  const auto r = invoke({"simulate", "--alpha", "0.5", "--beta", "1", "--out",
                         path("t.csv")});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_GT(json::parse(r.out)["payload"]["rigidity"]["max_distance_deviation"]
                .get<double>(),
            1e-5);
}

TEST_F(CliTest, SimulateRefusalsAndZeroPeriods) {
  EXPECT_EQ(invoke({"simulate", "--alpha", "0.5", "--beta", "0.5", "--out",
                    path("n.csv")})
                .code,
            kRefusedUnphysical);
  EXPECT_EQ(invoke({"simulate", "--alpha", "1", "--beta", "1", "--dt", "0", "--out",
                    path("n.csv")})
                .code,
            kUsage);
  const auto out = path("z.csv");
  ASSERT_EQ(invoke({"simulate", "--alpha", "1", "--beta", "1", "--periods", "0",
                    "--out", out})
                .code,
            kSuccess);
  EXPECT_EQ(lines(slurp(out)).size(), 1u);
}

TEST_F(CliTest, CompareApprox) {
  const auto out = path("cmp.json");
  const auto r = invoke({"compare-approx", "--resolution", "20", "--out", out});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = json::parse(slurp(out));
  EXPECT_EQ(j["payload"]["cells"], 400);
  EXPECT_GT(j["payload"]["f1"]["sign_agreement"].get<double>(), 0.9);
  EXPECT_TRUE(j["payload"]["published_formula_domains"]["g1_real_on"].empty());
  EXPECT_EQ(j["payload"]["published_formula_domains"]["g3_real_on"].size(), 1u);
}

}  // namespace
}  // namespace trapcc::cli
