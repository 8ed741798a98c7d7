#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "susy/cli.hpp"

using susy::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("susy_cli_test_" + name);
}

}  // namespace

TEST(Cli, ClassifyUnderdamped) {
  const Result r = invoke({"classify", "--m", "1", "--gamma", "2", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"regime\":\"underdamped\",\"omega_d_sq\":-1.0,\"omega\":1.0}\n");
}

TEST(Cli, ClassifyRejectsBadParameters) {
  const Result r = invoke({"classify", "--m", "0", "--gamma", "2", "--k", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("mass"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  const Result unknown = invoke({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({"spectrum", "--N", "3", "--omega", "1", "--bogus", "1"}).code, 2);
  EXPECT_EQ(invoke({"chirp", "--family", "sideways", "--omega", "1"}).code, 2);
}

TEST(Cli, SpectrumReport) {
  const Result r = invoke({"spectrum", "--N", "3", "--omega", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["computed"].size(), 3u);
  EXPECT_NEAR(j["computed"][0].get<double>(), -9.0, 5e-3);
  EXPECT_NEAR(j["computed"][1].get<double>(), -4.0, 5e-3);
  EXPECT_NEAR(j["computed"][2].get<double>(), -1.0, 5e-3);
  EXPECT_EQ(j["negative_count"].get<int>(), 3);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, SpectrumFailsAtImpossibleTolerance) {
  const Result r = invoke({"spectrum", "--N", "2", "--omega", "1", "--tol", "1e-12"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("abs_err"), std::string::npos);
}

TEST(Cli, ChirpOverRejectsPoleCrossing) {
  const Result r = invoke({"chirp", "--family", "over", "--N", "1", "--omega", "1", "--tmin", "-2",
                           "--tmax", "2", "--points", "100"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ChirpCsvRoundTripsAndIsDeterministic) {
  const std::vector<std::string> args{"chirp", "--family", "under", "--N", "2", "--omega", "0.7",
                                      "--tmin", "-3", "--tmax", "3", "--points", "101"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find('\r'), std::string::npos);

  const auto rows = parse_csv(a.out);
  ASSERT_EQ(rows.size(), 102u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "omega_sq"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double t = std::strtod(rows[i][0].c_str(), nullptr);
    const double v = std::strtod(rows[i][1].c_str(), nullptr);
    const double s = 1.0 / std::cosh(0.7 * t);
    EXPECT_NEAR(v, -6.0 * 0.49 * s * s, 1e-15);
    EXPECT_EQ(susy::cli::format_number(v), rows[i][1]);
  }
}

TEST(Cli, ChirpOverDefaultsAndLevelCheck) {
  const Result r = invoke({"chirp", "--family", "over", "--omega", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["t"].size(), 2001u);
  EXPECT_NEAR(j["t"][0].get<double>(), -0.7, 1e-15);
  EXPECT_EQ(invoke({"chirp", "--family", "over", "--N", "2", "--omega", "1"}).code, 2);
}

TEST(Cli, ModesWithSidecar) {
  const auto out = temp_path("modes.csv");
  const Result r = invoke({"modes", "--N", "3", "--omega", "1", "--points", "201", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream csv(out);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,y_1,y_2,y_3");

  std::ifstream side(out.string() + ".json");
  const Json j = Json::parse(side);
  ASSERT_EQ(j["modes"].size(), 3u);
  EXPECT_EQ(j["modes"][0]["eigenvalue"].get<double>(), -9.0);
  EXPECT_EQ(j["modes"][2]["eigenvalue"].get<double>(), -1.0);
  EXPECT_EQ(j["modes"][0]["k"].get<int>(), 3);
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".json");
}

TEST(Cli, RiccatiCheck) {
  const Result r = invoke({"riccati-check", "--n", "4", "--omega", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_LT(j["residual_lowering"].get<double>(), 1e-12);
  EXPECT_LT(j["residual_raising"].get<double>(), 1e-12);
  EXPECT_EQ(invoke({"riccati-check", "--n", "8", "--omega", "2", "--tol", "1e-30"}).code, 1);
  EXPECT_EQ(invoke({"riccati-check", "--n", "0", "--omega", "1"}).code, 2);
}

TEST(Cli, VerifyPasses) {
  const Result r = invoke({"verify", "--N", "4", "--omega", "0.5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("orthonormality"), std::string::npos);
}

TEST(Cli, Polar) {
  const auto out = temp_path("polar.csv");
  const Result r = invoke({"polar", "--N", "3", "--k", "2", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream side(out.string() + ".json");
  const Json j = Json::parse(side);
  EXPECT_LT(j["legendre_residual"].get<double>(), 1e-5);
  EXPECT_LT(j["proportionality"].get<double>(), 1e-7);
  std::ifstream csv(out);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "theta,y,legendre,ratio");
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".json");

  EXPECT_EQ(invoke({"polar", "--N", "3", "--k", "4"}).code, 2);
}

TEST(Cli, NewtonColumns) {
  const Result r = invoke({"newton", "--m", "1", "--gamma", "4", "--k", "3", "--tmin", "0", "--tmax",
                           "1", "--points", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "x_1", "x_2"}));
  // t = 1: cosh(1) e^{-2}, sinh(1) e^{-2}
  EXPECT_NEAR(std::strtod(rows[11][1].c_str(), nullptr), std::cosh(1.0) * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(std::strtod(rows[11][2].c_str(), nullptr), std::sinh(1.0) * std::exp(-2.0), 1e-15);
  EXPECT_NE(r.err.find("overdamped"), std::string::npos);
  EXPECT_EQ(invoke({"newton", "--m", "1", "--gamma", "4", "--k", "3"}).code, 2);
}

TEST(Cli, ExecutableExitCodes) {
  const std::string exe = SUSY_CLI_PATH;
  EXPECT_EQ(std::system((exe + " classify --m 1 --gamma 2 --k 1 > /dev/null").c_str()), 0);
  const int status = std::system((exe + " spectrum --N 2 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
