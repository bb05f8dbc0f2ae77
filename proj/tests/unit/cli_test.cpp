#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "diamdom/graph_io.hpp"

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "diamdom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = diamdom::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DIAMDOM_EXAMPLE_DIR) + "/" + name; }

TEST(Cli, RecognizeFiveCycle) {
  Result r = invoke({"recognize", data("c5.el")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["diameter"], 2);
  EXPECT_EQ(j["girth"], 5);
  EXPECT_EQ(j["claw_free"], true);
}

TEST(Cli, RecognizeClaw) {
  Result r = invoke({"recognize", data("claw.el")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["line_graph"], false);
  EXPECT_FALSE(j["witness"].is_null());
}

TEST(Cli, DimacsInputAndTextOutput) {
  Result r = invoke({"recognize", data("c5.dimacs"), "--format", "dimacs", "--output", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("girth 5"), std::string::npos);
}

TEST(Cli, ParseFailuresExitTwo) {
  EXPECT_EQ(invoke({"recognize", data("missing.el")}).code, 2);
  Result bad = invoke({"recognize", data("broken.el")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);
  EXPECT_EQ(invoke({"gamma", data("c5.el"), "--method", "magic"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, GammaMethods) {
  Result p = invoke({"gamma", data("petersen.el"), "--method", "girth5-diam2"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(Json::parse(p.out)["gamma"], 3);

  Result oct = invoke({"gamma", data("oct.el"), "--method", "line-diam2"});
  ASSERT_EQ(oct.code, 0) << oct.err;
  EXPECT_EQ(Json::parse(oct.out)["gamma"], 2);

  EXPECT_EQ(invoke({"gamma", data("k4.el"), "--method", "girth5-diam2"}).code, 3);
  EXPECT_EQ(invoke({"gamma", data("c5.el"), "--method", "bounded"}).code, 3);
  EXPECT_EQ(invoke({"gamma", data("c5.el"), "--method", "bounded", "--budget", "1"}).code, 3);
  Result b = invoke({"gamma", data("c5.el"), "--method", "bounded", "--budget", "2"});
  EXPECT_EQ(Json::parse(b.out)["gamma"], 2);
}

TEST(Cli, GammaAutoRouting) {
  Json p = Json::parse(invoke({"gamma", data("petersen.el")}).out);
  EXPECT_EQ(p["method"], "girth5_diam2");
  EXPECT_EQ(p["verified"], true);
  Json oct = Json::parse(invoke({"gamma", data("oct.el")}).out);
  EXPECT_EQ(oct["method"], "line_diam2");
  Json claw = Json::parse(invoke({"gamma", data("claw.el")}).out);
  EXPECT_EQ(claw["gamma"], 1);
}

TEST(Cli, Mmm) {
  Result r = invoke({"mmm", data("c5.el"), "--2k2-free"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["size"], 2);
  EXPECT_EQ(j["maximal"], true);
  EXPECT_EQ(invoke({"mmm", data("petersen.el"), "--cap", "2"}).code, 4);
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("diamdom_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliFiles, ReduceVcK14) {
  std::string prefix = (dir_ / "k3").string();
  Result r = invoke({"reduce", "vc-k14", data("k3.el"), "-k", "2", "--out", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["kprime"], 2);

  std::ifstream el(prefix + ".el");
  std::stringstream text;
  text << el.rdbuf();
  auto g = diamdom::parse_graph(text.str());
  EXPECT_EQ(g.vertex_count(), 10u);
  EXPECT_EQ(diamdom::to_edge_list(g), text.str());

  std::ifstream side(prefix + ".json");
  EXPECT_EQ(Json::parse(side), j);
}

TEST_F(CliFiles, ReduceCubic) {
  std::string prefix = (dir_ / "k4").string();
  Result r = invoke({"reduce", "cubic-clawfree", data("k4.el"), "-k", "1", "-d", "3", "--out", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 50);
  EXPECT_EQ(j["kprime"], 10);
  EXPECT_TRUE(fs::exists(prefix + ".el"));
}

TEST(Cli, ReducePreconditionsExitThree) {
  EXPECT_EQ(invoke({"reduce", "cubic-clawfree", data("c5.el"), "-k", "1"}).code, 3);
  EXPECT_EQ(invoke({"reduce", "cubic-clawfree", data("k4.el"), "-k", "1", "-d", "2"}).code, 3);
  EXPECT_EQ(invoke({"reduce", "split-trianglefree", data("c5.el"), "-k", "1"}).code, 3);
  EXPECT_EQ(invoke({"reduce", "vc-k14", data("k3.el")}).code, 2);
}

TEST(Cli, VerifyReduction) {
  Result r = invoke({"verify-reduction", "vc-k14", data("k3.el"), "-k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["passed"], true) << c["name"];
}

TEST(Cli, VerifyReductionIncompleteExitsFour) {
  Result r = invoke({"verify-reduction", "cubic-clawfree", data("k4.el"), "-k", "1", "--node-limit", "1"});
  EXPECT_EQ(r.code, 4);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["incomplete"], true);
  EXPECT_FALSE(j["checks"].empty());
}

TEST(Cli, VerifyReductionFailureExitsOne) {
  // Triangle is split (clique {0,1,2}) but has diameter 1, so use the
  // five-vertex split example with k = 1.
  std::string path = (fs::temp_directory_path() / "diamdom_split_example.el").string();
  std::ofstream(path) << "5 7\n0 1\n0 2\n1 2\n0 3\n1 3\n1 4\n2 4\n";
  Result r = invoke({"verify-reduction", "split-trianglefree", path, "-k", "1", "--clique", "0,1,2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["passed"], false);
  fs::remove(path);
}

}  // namespace
