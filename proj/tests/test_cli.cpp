#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "setopt/cli.hpp"
#include "setopt/solver_direct.hpp"
#include "setopt/vectorizer.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = setopt::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("setopt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
    inst = (dir / "i.json").string();
    ASSERT_EQ(run({"example", "mfdvp", "-o", inst}).status, 0);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const char* name) const { return (dir / name).string(); }

  fs::path dir;
  std::string inst;
};

}  // namespace

TEST_F(Cli, SolveTypeTwo) {
  auto r = run({"solve", "-i", inst, "--concept", "type2", "--eps", "0", "-o", path("s.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "members: 0 1 2\n");
  auto j = json::parse(slurp(path("s.json")));
  EXPECT_EQ(j["members"], json::array({"0", "1", "2"}));
}

TEST_F(Cli, MinimalP) {
  auto r = run({"minimal-p", "-i", inst, "--x", "0", "--kind", "weak", "--exact"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "p_star=2\n");
  EXPECT_EQ(run({"minimal-p", "-i", inst, "--x", "0", "--kind", "min"}).out, "p_star=never\n");
}

TEST_F(Cli, PlotCountsImagesAndPoints) {
  auto r = run({"plot", "-i", inst, "-o", path("i.svg")});
  ASSERT_EQ(r.status, 0) << r.err;
  auto svg = slurp(path("i.svg"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<g class=\"image\""), 3u);
  EXPECT_EQ(count(svg, "<circle class=\"point"), 6u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST_F(Cli, PlotOutsideThePlaneWritesCsv) {
  std::ofstream(path("m3.json")) << R"({
    "cone": {"rows": [[1,0,0],[0,1,0],[0,0,1]], "e": [1,1,1]},
    "decisions": [{"label": "a", "x": [0]}, {"label": "b", "x": [1]}],
    "images": [{"type": "finite", "points": [[0,0,0]]},
               {"type": "finite", "points": [[1,1,1],[2,0,0]]}]})";
  auto r = run({"plot", "-i", path("m3.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(count(r.out, "\n"), 3u);  // header plus one row per decision
}

TEST_F(Cli, ReportsMatchTheLibrary) {
  ASSERT_EQ(run({"vectorize", "-i", inst, "--exact", "--p", "2", "--kind", "weak", "-o", path("v.json")}).status, 0);
  auto prob = setopt::make_problem<setopt::Rational>(setopt::load_instance(inst));
  auto lib = setopt::vp_report_to_json(
      setopt::membership_vp(prob, 2, setopt::Rational(0), setopt::VpKind::Weak));
  EXPECT_EQ(json::parse(slurp(path("v.json"))), lib);

  ASSERT_EQ(run({"solve", "-i", inst, "--exact", "--concept", "type1", "--eps", "1/2", "-o", path("s.json")}).status, 0);
  auto direct = setopt::report_to_json(
      setopt::solve_direct(prob, setopt::Concept::TypeOne, setopt::Rational(1, 2)));
  EXPECT_EQ(json::parse(slurp(path("s.json"))), direct);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  for (auto verb : {"solve", "vectorize"}) {
    ASSERT_EQ(run({verb, "-i", inst, "-o", path("a.json")}).status, 0);
    ASSERT_EQ(run({verb, "-i", inst, "-o", path("b.json")}).status, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json"))) << verb;
  }
  ASSERT_EQ(run({"example", "random_finite", "--seed", "9", "-o", path("r1.json")}).status, 0);
  ASSERT_EQ(run({"example", "random_finite", "--seed", "9", "-o", path("r2.json")}).status, 0);
  EXPECT_EQ(slurp(path("r1.json")), slurp(path("r2.json")));
}

TEST_F(Cli, WeightedSumAndCovering) {
  auto w = run({"weighted-sum", "-i", inst, "--w", "1,1", "--exact"});
  ASSERT_EQ(w.status, 0) << w.err;
  EXPECT_EQ(w.out, "value=0\n1: (1,-1)\n2: (-1,1)\n");
  EXPECT_EQ(run({"weighted-sum", "-i", inst, "--w", "-1,0"}).status, 2);

  auto c = run({"covering-p", "-i", inst, "--x", "0", "--eps", "100"});
  ASSERT_EQ(c.status, 0) << c.err;
  EXPECT_EQ(c.out, "p=1\n");
}

TEST_F(Cli, DiscretizeAndDistance) {
  ASSERT_EQ(run({"example", "random_finite", "--seed", "4", "-o", path("r.json")}).status, 0);
  auto d = run({"discretize", "-i", path("r.json"), "--eps", "2", "-o", path("d.json")});
  ASSERT_EQ(d.status, 0) << d.err;
  auto dist = run({"distance", "-i", path("r.json"), "--with", path("d.json")});
  ASSERT_EQ(dist.status, 0) << dist.err;
  ASSERT_EQ(dist.out.rfind("distance=", 0), 0u);
  EXPECT_LE(std::stod(dist.out.substr(9)), 2.0);
}

TEST_F(Cli, VerifyExitCodes) {
  auto ok = run({"verify", "--seeds", "2", "--polytope-seeds", "1", "-o", path("v.json")});
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_EQ(json::parse(slurp(path("v.json")))["failed"], 0);
  auto bad = run({"verify", "--seeds", "1", "--polytope-seeds", "0", "--inject-fault"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("FAIL oracle_equivalence"), std::string::npos) << bad.out;
}

TEST_F(Cli, ConvexExperiment) {
  auto r = run({"convex-exp", "--count", "1", "--grid", "9"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind("agreement: ", 0), 0u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"solve", "-i", inst, "--bogus"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"solve", "-i", path("missing.json")}).status, 2);
  EXPECT_EQ(run({"solve", "-i", inst, "--concept", "type9"}).status, 2);
  EXPECT_EQ(run({"minimal-p", "-i", inst, "--x", "nope"}).status, 2);
  EXPECT_EQ(run({"example", "cantor", "--T", "5", "--N", "2"}).status, 2);
  auto r = run({"solve", "-i", inst, "--bogus"});
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, ExactModeRejectsFloats) {
  std::ofstream(path("f.json")) << R"({
    "cone": {"rows": [[1,0],[0,1]], "e": [1,1]},
    "decisions": [{"label": "a", "x": [0]}],
    "images": [{"type": "finite", "points": [[0.5,0]]}]})";
  EXPECT_EQ(run({"solve", "-i", path("f.json")}).status, 0);
  EXPECT_EQ(run({"solve", "-i", path("f.json"), "--exact"}).status, 2);
}
