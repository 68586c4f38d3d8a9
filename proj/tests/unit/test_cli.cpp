#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("thermocap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "thermocap");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return thermocap::cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path write_config(const std::string& name, const std::string& fluid_d, const std::string& bulk,
                        const std::string& extra = "") {
    const fs::path path = dir_ / name;
    std::ofstream(path) << R"({"fluid": {"A": 1, "B": 1, "rho_c": 1, "T_c": 1, "mu_c": 0, "p_c": 0, "C": 1, "D": )"
                        << fluid_d << R"(, "E": 1}, "bulk": )" << bulk << extra << "}";
    return path;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, ProfileClosedWritesCsvAndObservables) {
  const fs::path out = dir_ / "p";
  ASSERT_EQ(run({"profile", "--out", out.string()}), 0) << err_.str();
  EXPECT_TRUE(fs::exists(out / "profile.csv"));
  EXPECT_TRUE(fs::exists(out / "observables.json"));
  EXPECT_FALSE(fs::exists(out / "newton.json"));
  EXPECT_NE(slurp(out / "profile.csv").find("\n0,1,-0.0050000000000000001\n"), std::string::npos);
  EXPECT_NE(slurp(out / "observables.json").find("\"seed\": 42"), std::string::npos);
}

TEST_F(CliTest, ProfileFullAddsNewtonTrace) {
  const fs::path out = dir_ / "p";
  ASSERT_EQ(run({"profile", "--full", "--out", out.string()}), 0) << err_.str();
  const std::string newton = slurp(out / "newton.json");
  EXPECT_NE(newton.find("\"converged\": true"), std::string::npos);
  EXPECT_NE(newton.find("\"residual_history\""), std::string::npos);
}

TEST_F(CliTest, FormatSelectsArtifacts) {
  const fs::path out = dir_ / "p";
  ASSERT_EQ(run({"profile", "--format", "csv", "--out", out.string()}), 0);
  EXPECT_TRUE(fs::exists(out / "profile.csv"));
  EXPECT_FALSE(fs::exists(out / "observables.json"));
  EXPECT_EQ(run({"profile", "--format", "yaml", "--out", out.string()}), 2);
}

TEST_F(CliTest, CriticalIsothermProfileIsASolverFailure) {
  const fs::path cfg = write_config("dt0.json", "0.2", R"({"delta_T": 0})");
  EXPECT_EQ(run({"profile", "--config", cfg.string(), "--out", (dir_ / "p").string()}), 3);
  EXPECT_NE(err_.str().find("CriticalIsotherm"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "p" / "profile.csv"));
}

TEST_F(CliTest, SolverFailureMessageIncludesNewtonReport) {
  const fs::path cfg = write_config("cap.json", "0.2", R"({"delta_T": 0.01})", R"(, "solver": {"max_iterations": 1})");
  EXPECT_EQ(run({"profile", "--full", "--config", cfg.string(), "--out", (dir_ / "p").string()}), 3);
  EXPECT_NE(err_.str().find("MaxIterations"), std::string::npos);
  EXPECT_NE(err_.str().find("newton report: iterations=1"), std::string::npos);
}

TEST_F(CliTest, CelerityReferenceAndLocusOverride) {
  const fs::path a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(run({"celerity", "--out", a.string()}), 0) << err_.str();
  const std::string ja = slurp(a / "celerity.json");
  EXPECT_NE(ja.find("\"v\": 3.464101615137"), std::string::npos);
  EXPECT_NE(ja.find("\"determinant_root\": {"), std::string::npos);
  ASSERT_EQ(run({"celerity", "--locus", "rho=1.0", "a=0", "g2=1.25e-9", "--out", b.string()}), 0) << err_.str();
  EXPECT_NE(slurp(b / "celerity.json").find("\"v\": 3.464101615137"), std::string::npos);
}

TEST_F(CliTest, CelerityAtCriticalIsothermSkipsRootFinding) {
  const fs::path cfg = write_config("dt0.json", "0.2", R"({"delta_T": 0})");
  ASSERT_EQ(run({"celerity", "--config", cfg.string(), "--out", dir_.string()}), 0) << err_.str();
  const std::string j = slurp(dir_ / "celerity.json");
  EXPECT_NE(j.find("\"v\": 0,"), std::string::npos);
  EXPECT_NE(j.find("\"determinant_root\": null"), std::string::npos);
}

TEST_F(CliTest, MalformedLocusIsAUsageError) {
  EXPECT_EQ(run({"celerity", "--locus", "rho=1", "a=0", "g=1", "--out", dir_.string()}), 2);
  EXPECT_EQ(run({"celerity", "--locus", "rho=1", "a=0", "--out", dir_.string()}), 2);
  EXPECT_EQ(run({"celerity", "--locus", "rho=-1", "a=0", "g2=1", "--out", dir_.string()}), 2);
}

TEST_F(CliTest, SweepExitCodes) {
  ASSERT_EQ(run({"sweep", "--out", (dir_ / "s").string()}), 0) << out_.str();
  EXPECT_TRUE(fs::exists(dir_ / "s" / "sweep.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "s" / "scaling.json"));

  const fs::path single = write_config("single.json", "0.2", R"({"delta_T": 0.01})", R"(, "sweep": {"delta_t_values": [0.01]})");
  EXPECT_EQ(run({"sweep", "--config", single.string(), "--out", (dir_ / "x").string()}), 2);

  const fs::path tight = write_config("tight.json", "0.2", R"({"delta_T": 0.01})",
                                      R"(, "sweep": {"use_full_solver": true, "tolerance_full": 1e-6})");
  EXPECT_EQ(run({"sweep", "--config", tight.string(), "--out", (dir_ / "t").string()}), 4);
  EXPECT_TRUE(fs::exists(dir_ / "t" / "scaling.json")) << "report written on law failure";
}

TEST_F(CliTest, CheckPassesAndRejectsIndefiniteGradients) {
  ASSERT_EQ(run({"check", "--seed", "42", "--out", dir_.string()}), 0) << out_.str();
  EXPECT_NE(out_.str().find("eos_gradient_fd"), std::string::npos);
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
  const fs::path bad = write_config("bad.json", "1.5", R"({"delta_T": 0.01})");
  EXPECT_EQ(run({"check", "--config", bad.string(), "--out", dir_.string()}), 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"profile", "--seed", "notanumber"}), 2);
  EXPECT_EQ(run({"profile", "--config", (dir_ / "missing.json").string()}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, IdenticalRunsAreByteIdentical) {
  for (const char* cmd : {"profile", "celerity", "sweep", "check"}) {
    const fs::path a = dir_ / (std::string(cmd) + "_a"), b = dir_ / (std::string(cmd) + "_b");
    ASSERT_EQ(run({cmd, "--full", "--seed", "9", "--out", a.string()}), 0) << cmd << err_.str();
    ASSERT_EQ(run({cmd, "--full", "--seed", "9", "--out", b.string()}), 0) << cmd;
    for (const auto& entry : fs::directory_iterator(a)) {
      EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << cmd << " " << entry.path().filename();
    }
  }
}

}  // namespace
