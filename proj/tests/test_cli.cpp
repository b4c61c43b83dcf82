#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#ifndef GAUSS_BS_BINARY
#error "GAUSS_BS_BINARY must point at the gauss-bs executable"
#endif

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gaussbs_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }

  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(GAUSS_BS_BINARY) + " " + args + " > " +
                            path("stdout.txt") + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string slurp(const std::string& file) const {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  void write(const std::string& file, const std::string& text) const {
    std::ofstream out(file, std::ios::binary);
    out << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, figure_output_is_byte_identical_across_runs) {
  ASSERT_EQ(run("figure fig5 --out " + path("a.csv")), 0);
  ASSERT_EQ(run("figure fig5 --out " + path("b.csv")), 0);
  const std::string a = slurp(path("a.csv"));
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(path("b.csv")));
  EXPECT_EQ(a.substr(0, a.find('\n')), "theta,n_in,n_out,s_n,e_n");
}

TEST_F(CliTest, figure_rejects_bad_input) {
  EXPECT_EQ(run("figure fig9 --out " + path("x.csv")), 2);
  EXPECT_EQ(run("figure fig5 --lambda1-min 0.7 --out " + path("x.csv")), 2);
  EXPECT_EQ(run("figure fig4b --purity 0.5 --out " + path("x.csv")), 2);
  EXPECT_EQ(run("figure fig5 --out /nonexistent_dir_zzz/x.csv"), 2);
  EXPECT_EQ(run("figure"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(CliTest, verify_exit_codes) {
  EXPECT_EQ(run("verify --seed 42 --cases 40 --tol 1e-10"), 0);
  EXPECT_EQ(run("verify --seed 42 --cases 40 --tol 1e-300"), 1);
  EXPECT_EQ(run("verify --cases 0"), 2);
  EXPECT_EQ(run("verify --tol -1"), 2);
}

TEST_F(CliTest, verify_is_reproducible) {
  ASSERT_EQ(run("verify --seed 11 --cases 60 --tol 1e-10"), 0);
  const std::string first = slurp(path("stdout.txt"));
  ASSERT_EQ(run("verify --seed 11 --cases 60 --tol 1e-10"), 0);
  EXPECT_EQ(first, slurp(path("stdout.txt")));
}

TEST_F(CliTest, cascade_tree_checks_out) {
  write(path("tree.json"),
        R"({"protocol":"tree","lambda1_min":0.25,"depth":10,"theta_schedule":"random","seed":7})");
  ASSERT_EQ(run("cascade --config " + path("tree.json") + " --out " + path("t.csv")), 0);
  const std::string csv = slurp(path("t.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "level,sum_tau,sum_n,cum_s_n,residual");
  // 1 header + 11 level rows
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
  EXPECT_NE(slurp(path("stdout.txt")).find("limit totals"), std::string::npos);
}

TEST_F(CliTest, cascade_depletion_with_zero_angles) {
  write(path("dep.json"),
        R"({"protocol":"depletion","lambda1_min":0.3,"stages":3,"theta_schedule":[0,0,0]})");
  ASSERT_EQ(run("cascade --config " + path("dep.json") + " --out " + path("d.csv")), 0);
  const std::string csv = slurp(path("d.csv"));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    // sum_tau stays at the input depth, nothing is extracted, residual is zero
    std::istringstream fields(line);
    std::string field;
    std::vector<std::string> row;
    while (std::getline(fields, field, ',')) {
      row.push_back(field);
    }
    ASSERT_EQ(row.size(), 5u);
    EXPECT_NEAR(std::stod(row[1]), 0.2, 1e-12);
    EXPECT_EQ(row[3], "0");
    EXPECT_EQ(row[4], "0");
  }
}

TEST_F(CliTest, cascade_rejects_bad_configs) {
  write(path("unknown.json"), R"({"protocol":"tree","depth":4,"lambda1_min":0.3,"zzz":1})");
  EXPECT_EQ(run("cascade --config " + path("unknown.json") + " --out " + path("x.csv")), 2);

  write(path("broken.json"), "{protocol:");
  EXPECT_EQ(run("cascade --config " + path("broken.json") + " --out " + path("x.csv")), 2);

  write(path("both.json"),
        R"({"protocol":"tree","depth":4,"lambda1_min":0.3,"a":0.6})");
  EXPECT_EQ(run("cascade --config " + path("both.json") + " --out " + path("x.csv")), 2);

  write(path("wrong_len.json"),
        R"({"protocol":"tree","depth":4,"lambda1_min":0.3,"theta_schedule":[0.1,0.2]})");
  EXPECT_EQ(run("cascade --config " + path("wrong_len.json") + " --out " + path("x.csv")), 2);

  write(path("stages_on_tree.json"),
        R"({"protocol":"tree","depth":4,"stages":2,"lambda1_min":0.3})");
  EXPECT_EQ(run("cascade --config " + path("stages_on_tree.json") + " --out " + path("x.csv")),
            2);

  write(path("unphysical.json"),
        R"({"protocol":"tree","depth":4,"a":0.4,"b_re":0.4})");
  EXPECT_EQ(run("cascade --config " + path("unphysical.json") + " --out " + path("x.csv")), 2);

  EXPECT_EQ(run("cascade --config " + path("missing.json") + " --out " + path("x.csv")), 2);
}

TEST_F(CliTest, cascade_accepts_explicit_state) {
  write(path("ab.json"),
        R"({"protocol":"depletion","a":0.625,"b_re":0.375,"stages":2,"theta_schedule":0.6})");
  EXPECT_EQ(run("cascade --config " + path("ab.json") + " --out " + path("d.csv")), 0);
}

}  // namespace
