#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "qcb/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qcb_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return qcb::cli::run(args, out_, err_);
  }

  json result() const { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

int tool_exit(const std::string& args) {
  const std::string cmd = std::string(QCB_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<double>> read_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_F(CliTest, ChernoffIdenticalStates) {
  const auto a = write("a.json", R"({"bloch": [0.1, 0.2, 0.3]})");
  ASSERT_EQ(run({"chernoff", "--a", a, "--b", a}), 0) << err_.str();
  const auto j = result();
  EXPECT_EQ(j["command"], "chernoff");
  EXPECT_EQ(j["results"]["exponent"].get<double>(), 0.0);
  EXPECT_EQ(j["version"], qcb::cli::kVersion);
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
}

TEST_F(CliTest, ChernoffVariants) {
  const auto z = write("z.json", R"({"ket": {"re": [1, 0]}})");
  const auto m = write("m.json", R"({"ket": {"re": [0, 1]}})");
  ASSERT_EQ(run({"chernoff", "--a", z, "--b", m}), 0) << err_.str();
  EXPECT_TRUE(result()["results"]["exponent"]["infinite"].get<bool>());

  const auto p = write("p.json", R"({"distribution": [0.25, 0.75]})");
  const auto q = write("q.json", R"({"distribution": [0.75, 0.25]})");
  ASSERT_EQ(run({"chernoff", "--a", p, "--b", q}), 0) << err_.str();
  EXPECT_NEAR(result()["results"]["s_star"].get<double>(), 0.5, 1e-6);

  const auto g0 = write("g0.json", R"({"gaussian": {"beta": 1.0, "q": 0, "p": 0, "r": 0.3, "phi": 0}})");
  const auto g1 = write("g1.json", R"({"gaussian": {"beta": 1.0, "q": 0.5, "p": 0, "r": 0.3, "phi": 0}})");
  ASSERT_EQ(run({"chernoff", "--a", g0, "--b", g1}), 0) << err_.str();
  EXPECT_NEAR(result()["results"]["s_star"].get<double>(), 0.5, 1e-6);
}

TEST_F(CliTest, ConstantsPrintTwelveDigits) {
  ASSERT_EQ(run({"constants", "--cd", "2"}), 0);
  EXPECT_NE(out_.str().find("1.14159265359"), std::string::npos) << out_.str();
  EXPECT_EQ(qcb::cli::format_number(0.1), "0.1");
  EXPECT_EQ(qcb::cli::format_number(1.0 / 3.0), "0.333333333333");
}

TEST_F(CliTest, Figure1BoundChainAndReproducible) {
  const auto out = (dir_ / "fig1.csv").string();
  ASSERT_EQ(run({"figure1", "--theta", "1.5708", "--steps", "20", "--out", out}), 0) << err_.str();
  const auto first = slurp(out);
  std::string header;
  const auto rows = read_csv(first, header);
  EXPECT_EQ(header, "r,d_qc,d_cc,fid_lower,fid_upper");
  ASSERT_EQ(rows.size(), 21u);
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 5u);
    EXPECT_LE(r[3], r[2] + 1e-9);
    EXPECT_LE(r[2], r[1] + 1e-9);
    EXPECT_LE(r[1], r[4] + 1e-9);
  }
  ASSERT_EQ(run({"figure1", "--theta", "1.5708", "--steps", "20", "--out", out}), 0);
  EXPECT_EQ(slurp(out), first);
}

TEST_F(CliTest, SampleIsSeededAndReproducible) {
  const auto out = (dir_ / "s.csv").string();
  ASSERT_EQ(run({"sample", "--prior", "qc", "--d", "3", "--count", "50", "--seed", "7", "--out", out}), 0)
      << err_.str();
  const auto first = slurp(out);
  std::string header;
  const auto rows = read_csv(first, header);
  EXPECT_EQ(header, "index,lambda_1,lambda_2,lambda_3,purity");
  ASSERT_EQ(rows.size(), 50u);
  for (const auto& r : rows) EXPECT_NEAR(r[1] + r[2] + r[3], 1.0, 1e-10);
  ASSERT_EQ(run({"sample", "--prior", "qc", "--d", "3", "--count", "50", "--seed", "7", "--out", out}), 0);
  EXPECT_EQ(slurp(out), first);
  EXPECT_EQ(run({"sample", "--prior", "qc", "--d", "3", "--count", "50", "--out", out}), 2);
}

TEST_F(CliTest, MulticopySweep) {
  const auto a = write("a.json", R"({"bloch": [0.9, 0, 0]})");
  const auto b = write("b.json", R"({"bloch": [0, 0.9, 0]})");
  const auto out = (dir_ / "m.csv").string();
  ASSERT_EQ(run({"multicopy", "--a", a, "--b", b, "--n-min", "30", "--n-max", "35", "--extrapolate", "--out", out}), 0)
      << err_.str();
  std::string header;
  const auto rows = read_csv(slurp(out), header);
  EXPECT_EQ(header, "n,pe,rate");
  EXPECT_EQ(rows.size(), 6u);
  const double slope = result()["results"]["fit"]["slope"].get<double>();
  EXPECT_NEAR(slope, 0.33136, 0.05 * 0.33136);
}

TEST_F(CliTest, DccAndMetricAndGeodesic) {
  const auto a = write("a.json", R"({"bloch": [0.3, 0, 0]})");
  const auto b = write("b.json", R"({"bloch": [0, 0.3, 0]})");
  ASSERT_EQ(run({"dcc", "--a", a, "--b", b}), 0) << err_.str();
  EXPECT_NEAR(result()["results"]["d_cc"].get<double>(), 0.023022, 1e-6);
  EXPECT_EQ(result()["results"]["regime"], "majority");

  const auto dir = write("d.json", R"({"matrix": {"re": [[0, 0.01], [0.01, 0]]}})");
  ASSERT_EQ(run({"metric", "--which", "bures", "--state", a, "--direction", dir}), 0) << err_.str();
  EXPECT_GT(result()["results"]["ds2"].get<double>(), 0.0);

  const auto z = write("z.json", R"({"bloch": [0, 0, 1]})");
  const auto mz = write("mz.json", R"({"bloch": [0, 0, -1]})");
  ASSERT_EQ(run({"geodesic", "--a", z, "--b", mz}), 0) << err_.str();
  EXPECT_NEAR(result()["results"]["distance"].get<double>(), 1.11072073454, 1e-10);
}

TEST_F(CliTest, ExitCodes) {
  const auto a = write("a.json", R"({"bloch": [0, 0, 1]})");
  const auto b = write("b.json", R"({"bloch": [1, 0, 0]})");
  const auto bad = write("bad.json", R"({"bloch": [0.9, 0.9, 0]})");
  const auto two = write("two.json", R"({"bloch": [0, 0, 1], "ket": {"re": [1, 0]}})");
  EXPECT_EQ(run({"nonsense"}), 2);
  EXPECT_EQ(run({"chernoff", "--a", bad, "--b", a}), 2);
  EXPECT_EQ(run({"chernoff", "--a", two, "--b", a}), 2);
  const auto edge = write("edge.json", R"({"matrix": {"re": [[1, 0, 0], [0, 0, 0], [0, 0, 0]]}})");
  const auto leave = write("leave.json", R"({"matrix": {"re": [[0, 0, 0], [0, 0, 1], [0, 1, 0]]}})");
  EXPECT_EQ(run({"metric", "--which", "qc", "--state", edge, "--direction", leave}), 3);
  EXPECT_EQ(run({"constants", "--cd", "40"}), 2);

  EXPECT_EQ(tool_exit("--version"), 0);
  EXPECT_EQ(tool_exit("chernoff --a " + a + " --b " + a), 0);
  EXPECT_EQ(tool_exit("chernoff --a " + bad + " --b " + a), 2);
  EXPECT_EQ(tool_exit("metric --which qc --state " + edge + " --direction " + leave), 3);
  EXPECT_EQ(tool_exit("dcc --a " + a + " --b " + b), 0);
}

TEST(Fnv, KnownVectors) {
  EXPECT_EQ(qcb::cli::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(qcb::cli::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
