#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wblab/cli/commands.hpp"
#include "wblab/cli/config.hpp"
#include "wblab/cli/output.hpp"
#include "wblab/kernel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wblab::cli;

namespace {

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wblab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("wblab_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json manifest(const fs::path& dir) { return json::parse(slurp(dir / "manifest.json")); }

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

const std::vector<std::string> kSmallSim{"--set", "grid.n=32", "--set", "grid.length=16", "--set",
                                         "solver.T=0.5", "--set", "solver.dt=0.01", "--set",
                                         "solver.snapshot_stride=10"};

}  // namespace

TEST(Cli, MissingGridSizeNamesKey) {
  testing::internal::CaptureStderr();
  const int code = run_cli({"simulate", "--out", scratch("missing").string()});
  const std::string err = testing::internal::GetCapturedStderr();
  EXPECT_EQ(code, 2);
  EXPECT_NE(err.find("grid.n"), std::string::npos);
}

TEST(Cli, UnknownKeyRejected) {
  testing::internal::CaptureStderr();
  const int code = run_cli({"simulate", "--out", scratch("unknown").string(), "--set", "grid.n=32", "--set",
                            "physics.nu=0.3"});
  const std::string err = testing::internal::GetCapturedStderr();
  EXPECT_EQ(code, 2);
  EXPECT_NE(err.find("physics.nu"), std::string::npos);
}

TEST(Cli, BadValueRejectedBeforeWork) {
  const fs::path out = scratch("badmu");
  testing::internal::CaptureStderr();
  EXPECT_EQ(run_cli({"simulate", "--out", out.string(), "--set", "grid.n=32", "--set", "physics.mu=0"}), 2);
  EXPECT_NE(testing::internal::GetCapturedStderr().find("physics.mu"), std::string::npos);
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, LinearSimulation) {
  const fs::path out = scratch("linear");
  auto args = kSmallSim;
  args.insert(args.begin(), {"simulate", "--out", out.string(), "--set", "physics.epsilon=0", "--set",
                             "data.D0=0.1"});
  testing::internal::CaptureStdout();
  ASSERT_EQ(run_cli(args), 0);
  testing::internal::GetCapturedStdout();
  const json m = manifest(out);
  EXPECT_EQ(m["summary"]["lifespan"], "inf");
  EXPECT_LT(m["summary"]["max_energy_drift"].get<double>(), 1e-12);
  EXPECT_EQ(m["command"], "simulate");
  const auto rows = read_csv(out / "diagnostics.csv");
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0][0], "index");
  EXPECT_EQ(rows[0][5], "dealias_residual");
  EXPECT_TRUE(fs::exists(out / "snapshots" / "snapshot_00005.bin"));
}

TEST(Cli, DeterministicReruns) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const auto& out : {a, b}) {
    auto args = kSmallSim;
    args.insert(args.begin(), {"simulate", "--out", out.string(), "--seed", "42", "--set", "data.kind=random"});
    testing::internal::CaptureStdout();
    ASSERT_EQ(run_cli(args), 0);
    testing::internal::GetCapturedStdout();
  }
  EXPECT_EQ(slurp(a / "diagnostics.csv"), slurp(b / "diagnostics.csv"));
  EXPECT_EQ(slurp(a / "snapshots" / "snapshot_00003.bin"), slurp(b / "snapshots" / "snapshot_00003.bin"));
}

TEST(Cli, DecayScanPassThrough) {
  const fs::path out = scratch("decay");
  testing::internal::CaptureStdout();
  ASSERT_EQ(run_cli({"decay-scan", "--out", out.string(), "--set", "sweep.lambda=[2]", "--set", "sweep.mu=[0.1]",
                     "--set", "sweep.t=[7]"}),
            0);
  testing::internal::GetCapturedStdout();
  const auto rows = read_csv(out / "decay.csv");
  ASSERT_EQ(rows.size(), 2u);
  const auto row = wblab::dispersive_ratio(2.0, 0.1, 7.0);
  EXPECT_EQ(rows[1][4], format_number(row.sup_abs_I));
  EXPECT_EQ(rows[1][7], format_number(row.ratio));
  EXPECT_EQ(rows[1][8], "ok");
}

TEST(Cli, StrichartzAdmissibilityGate) {
  const fs::path out = scratch("strich");
  testing::internal::CaptureStdout();
  EXPECT_EQ(run_cli({"strichartz-scan", "--out", out.string(), "--set", "q=3", "--set", "r=6", "--set",
                     "sweep.lambda=[1]", "--set", "sweep.mu=[1]", "--set", "times.count=16", "--set", "packets=1"}),
            0);
  testing::internal::GetCapturedStdout();
  EXPECT_EQ(manifest(out)["summary"]["bracket_exponent_target"].get<double>(), 0.5);
  testing::internal::CaptureStderr();
  EXPECT_EQ(run_cli({"strichartz-scan", "--out", scratch("strich_bad").string(), "--set", "q=2", "--set", "r=inf",
                     "--set", "sweep.lambda=[1]", "--set", "sweep.mu=[1]"}),
            2);
  EXPECT_NE(testing::internal::GetCapturedStderr().find("admissible"), std::string::npos);
}

TEST(Cli, SweepFailuresStayInRow) {
  // the λ₀ = λ₁/4 triple needs a finer grid than n = 128; the run continues
  const fs::path out = scratch("bilinear");
  testing::internal::CaptureStdout();
  ASSERT_EQ(run_cli({"bilinear-scan", "--out", out.string(), "--jobs", "2", "--set", "grid.n=128", "--set",
                     "sweep.lambda1=[1]", "--set", "sweep.mu=[1]", "--set", "snapshots=5", "--set", "draws=1"}),
            0);
  testing::internal::GetCapturedStdout();
  const auto rows = read_csv(out / "bilinear.csv");
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[1][12].rfind("error", 0), 0u);
  EXPECT_EQ(rows[5][12], "ok");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][0], std::to_string((i - 1) / 2));
}

TEST(Cli, LifespanSweepEmitsEpsilonFit) {
  const fs::path out = scratch("lifespan");
  testing::internal::CaptureStdout();
  ASSERT_EQ(run_cli({"lifespan-sweep", "--out", out.string(), "--set", "grid.n=64", "--set", "solver.T=20", "--set",
                     "criterion.dealias_threshold=1", "--set", "sweep.epsilon=[0.5,0.35,0.25]", "--set",
                     "sweep.mu=[1]"}),
            0);
  testing::internal::GetCapturedStdout();
  const json s = manifest(out)["summary"];
  ASSERT_EQ(s["epsilon_exponent_fits"].size(), 1u);
  EXPECT_TRUE(s["epsilon_exponent_fits"][0].contains("slope"));
  EXPECT_LT(s["epsilon_exponent_fits"][0]["slope"].get<double>(), 0.0);
  EXPECT_EQ(s["violations_of_theory_line"], 0);
}

TEST(Cli, Selftest) {
  testing::internal::CaptureStdout();
  EXPECT_EQ(run_cli({"selftest", "--out", scratch("selftest").string()}), 0);
  EXPECT_NE(testing::internal::GetCapturedStdout().find("PASS"), std::string::npos);
}

TEST(Cli, BadFlags) {
  testing::internal::CaptureStderr();
  testing::internal::CaptureStdout();
  EXPECT_EQ(run_cli({"simulate", "--jobs", "0"}), 2);
  EXPECT_EQ(run_cli({"no-such-command"}), 2);
  testing::internal::GetCapturedStdout();
  testing::internal::GetCapturedStderr();
}

TEST(Config, SweepAxes) {
  RunConfig c(json::parse(R"({"a": {"dyadic": [-2, 1]}, "b": {"log": [1, 100, 3]}, "c": [1, 2.5], "d": 4})"));
  EXPECT_EQ(c.numbers("a"), (std::vector<double>{0.25, 0.5, 1, 2}));
  const auto b = c.numbers("b");
  ASSERT_EQ(b.size(), 3u);
  EXPECT_NEAR(b[1], 10.0, 1e-12);
  EXPECT_EQ(c.numbers("c"), (std::vector<double>{1, 2.5}));
  EXPECT_EQ(c.numbers("d"), (std::vector<double>{4}));
  EXPECT_NO_THROW(c.reject_unknown());
  RunConfig bad(json::parse(R"({"a": {"dyadic": [2, 1]}, "b": []})"));
  EXPECT_THROW(bad.numbers("a"), ConfigKeyError);
  EXPECT_THROW(bad.numbers("b"), ConfigKeyError);
}

TEST(Config, OverridesAndTypes) {
  RunConfig c;
  c.apply_override("grid.n=64");
  c.apply_override("data.kind=random");
  c.apply_override("sweep.mu=[1,0.1]");
  EXPECT_EQ(c.integer("grid.n"), 64);
  EXPECT_EQ(c.string("data.kind", ""), "random");
  EXPECT_EQ(c.numbers("sweep.mu").size(), 2u);
  EXPECT_THROW(c.number("data.kind"), ConfigKeyError);
  EXPECT_THROW(c.apply_override("novalue"), ConfigKeyError);
  c.apply_override("grid.length=2.5");
  EXPECT_THROW(c.integer("grid.length"), ConfigKeyError);
  try {
    c.number("physics.mu");
    FAIL();
  } catch (const ConfigKeyError& e) {
    EXPECT_EQ(e.key(), "physics.mu");
  }
}

TEST(Output, NumbersAndPool) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 0.0), "inf");
  EXPECT_EQ(format_number(-1.0 / 0.0), "-inf");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  std::vector<int> done(50, 0);
  std::vector<std::string> errors;
  run_indexed(
      done.size(), 4,
      [&](std::size_t i) {
        if (i == 7) throw std::runtime_error("boom");
        done[i] = static_cast<int>(i) + 1;
      },
      errors);
  EXPECT_EQ(errors[7], "boom");
  for (std::size_t i = 0; i < done.size(); ++i) {
    if (i == 7) continue;
    EXPECT_EQ(done[i], static_cast<int>(i) + 1);
    EXPECT_TRUE(errors[i].empty());
  }
}
