#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "solenoid/cli.hpp"
#include "solenoid/io.hpp"

namespace solenoid {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("solenoid_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

const char* kHalf = R"({"degree": 1, "variant": "pl", "breakpoints": [["0", "1/2"], ["1/2", "1"]]})";
const char* kFixed = R"({"degree": 1, "variant": "pl", "breakpoints": [["0", "0"], ["1/2", "3/4"]]})";
const char* kRot35 = R"({"degree": 1, "variant": "pl", "breakpoints": [["0", "3/5"]]})";
const char* kLp = R"({"lp": {"tower": [1, 2, 6],
  "summands": [[["0", "0"], ["1/2", "1/4"]], [["0", "0"], ["1", "1/16"]], [["0", "0"], ["3", "1/64"]]],
  "tail_bound": "1/192"}})";

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

TEST_F(Cli, RotationExamples) {
  Result r = run({"rotation", "--input", file("rot.json", kRot35), "--iters", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  io::Json j = io::Json::parse(r.out);
  EXPECT_EQ(j["exact"], "3/5");
  EXPECT_EQ(j["certified"], true);

  Result h = run({"rotation", "--input", file("half.json", kHalf), "--iters", "10"});
  ASSERT_EQ(h.code, 0);
  io::Json k = io::Json::parse(h.out);
  EXPECT_EQ(k["lo"], "2/5");
  EXPECT_EQ(k["hi"], "3/5");
  EXPECT_EQ(k["exact"], "1/2");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"rotation", "--input", file("bad.json", "{ not json")}).code, cli::kExitUsage);
  Result missing = run({"semiconj", "--input", path("missing.json")});
  EXPECT_EQ(missing.code, cli::kExitUsage);
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"rotation", "--input", file("h.json", kHalf), "--iters", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"orbit", "--input", file("f.json", kFixed), "--tol", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"rotation"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"density", "--input", file("h2.json", kHalf)}).code, cli::kExitUsage);
}

TEST_F(Cli, OrbitFixedPointMap) {
  Result r = run({"orbit", "--input", file("fixed.json", kFixed), "--iters", "60", "--start",
                  "x=1/2; k=(0,0,0,0,0,0,0,0)"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_GT(rows.size(), 2u);
  EXPECT_EQ(rows[0], "iterate,x,r1,r2,r3,r4,r5,r6,r7,r8,distance");
  Rational prev = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto cells = split(rows[i]);
    ASSERT_EQ(cells.size(), 11u);
    Rational d = parse_rational(cells.back());
    if (i > 1) EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_NE(r.err.find("AsymptoticToFiber"), std::string::npos);
}

TEST_F(Cli, OrbitRigidRotationIsZero) {
  Result r = run({"orbit", "--input", file("rot.json", kRot35), "--iters", "20", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_GT(rows.size(), 1u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(split(rows[i]).back(), "0");
  EXPECT_NE(r.err.find("FiberPeriodic"), std::string::npos);
}

TEST_F(Cli, OrbitBudgetZero) {
  Result r = run({"orbit", "--input", file("fixed.json", kFixed), "--iters", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 1u);
  EXPECT_NE(r.err.find("Inconclusive"), std::string::npos);
}

TEST_F(Cli, OrbitWithoutRationalRotation) {
  const char* golden = R"({"variant": "analytic", "alpha": 0.6180339887498949})";
  EXPECT_EQ(run({"orbit", "--input", file("g.json", golden), "--iters", "50"}).code, cli::kExitMath);
}

TEST_F(Cli, Semiconj) {
  const char* deg2 = R"({"degree": 2, "offset": 1, "lift": {"degree": 2, "variant": "pl",
    "breakpoints": [["0", "1/4"], ["1/2", "1/2"], ["3/2", "7/4"]]}})";
  Result r = run({"semiconj", "--input", file("d.json", deg2), "--samples", "50", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  io::Json j = io::Json::parse(r.out);
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["max_error"], "0");
  EXPECT_EQ(j["samples"], 50);
  EXPECT_EQ(j["period"], "2");
}

TEST_F(Cli, Hull) {
  Result r = run({"hull", "--input", file("half.json", kHalf), "--samples", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  io::Json j = io::Json::parse(r.out);
  EXPECT_EQ(j["classification"], "periodic");
  EXPECT_EQ(j["homomorphism_max_error"], "0");
  Result lp = run({"hull", "--input", file("lp.json", kLp)});
  ASSERT_EQ(lp.code, 0) << lp.err;
  io::Json k = io::Json::parse(lp.out);
  EXPECT_EQ(k["classification"], "limit_periodic");
  EXPECT_EQ(k["levels"].size(), 4u);
}

TEST_F(Cli, DensityWritesCsvAndSvg) {
  std::string out = path("density.csv");
  Result r = run({"density", "--input", file("lp.json", kLp), "--samples", "600", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream csv(out);
  std::stringstream buf;
  buf << csv.rdbuf();
  auto rows = lines(buf.str());
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "level,period,certified_bound,measured_gap");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto cells = split(rows[i]);
    EXPECT_LE(parse_rational(cells[3]), parse_rational(cells[2]));
  }
  EXPECT_TRUE(fs::exists(path("density.svg")));
  Result svg = run({"density", "--input", path("lp.json"), "--format", "svg"});
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST_F(Cli, BinaryExitCodes) {
  const std::string cli = SOLENOID_CLI_PATH;
  const std::string quiet = " > /dev/null 2>&1";
  auto code = [&](const std::string& args) {
    int status = std::system((cli + " " + args + quiet).c_str());
    return WEXITSTATUS(status);
  };
  EXPECT_EQ(code("rotation --input " + file("h.json", kHalf)), 0);
  EXPECT_EQ(code("rotation --input " + path("nope.json")), 2);
  EXPECT_EQ(code("--help"), 0);
}

}  // namespace
}  // namespace solenoid
