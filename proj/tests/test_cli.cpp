// End-to-end checks of the command-line tool: spawn the real binary, parse
// its output, verify the exit-code contract.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#ifndef GESBELL_BIN
#error "GESBELL_BIN must point at the gesbell binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GESBELL_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST(Cli, CertifyN3) {
  RunResult r = run("certify --n 3 --json");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto cert = nlohmann::json::parse(r.output);
  EXPECT_TRUE(cert["pass"].get<bool>());
  EXPECT_EQ(cert["k_min"].get<int>(), 3);
  for (const auto& stage : cert["stages"]) {
    EXPECT_TRUE(stage["pass"].get<bool>()) << stage.dump();
    if (stage["name"] == "bell_synth") {
      EXPECT_NEAR(stage["classical_bound"]["value"].get<double>(), 3.0, 1e-12);
      EXPECT_NEAR(stage["quantum_bound"]["value"].get<double>(),
                  1.0 + 2.0 * std::sqrt(2.0), 1e-12);
    }
    if (stage["name"] == "faces") EXPECT_EQ(stage["dim"].get<int>(), 0);
  }
}

TEST(Cli, CertifyN7FaceDimension) {
  RunResult r = run("certify --n 7 --json --trials 5");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto cert = nlohmann::json::parse(r.output);
  for (const auto& stage : cert["stages"]) {
    if (stage["name"] == "faces") EXPECT_EQ(stage["dim"].get<int>(), 7);
    if (stage["name"] == "bell_synth") {
      EXPECT_NEAR(stage["quantum_bound"]["value"].get<double>(),
                  2.0 + 2.0 * std::sqrt(2.0), 1e-12);
      EXPECT_NEAR(stage["classical_bound"]["value"].get<double>(), 4.0, 1e-12);
    }
  }
}

TEST(Cli, CheckGmeShorCode) {
  std::string path = std::string(::testing::TempDir()) + "/shor9.txt";
  std::ofstream out(path);
  out << "ZZ1111111\n1ZZ111111\n111ZZ1111\n1111ZZ111\n111111ZZ1\n1111111ZZ\n"
         "XXXXXX111\n111XXXXXX\n";
  out.close();
  RunResult r = run("check-gme " + path + " --json");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto report = nlohmann::json::parse(r.output);
  EXPECT_FALSE(report["rank_criterion"].get<bool>());
  EXPECT_FALSE(report["oracle"].get<bool>());
  EXPECT_EQ(report["N"].get<int>(), 9);
}

TEST(Cli, ConstructMaxMatchesPublishedN7) {
  RunResult r = run("construct max --n 7");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "+XXZZ1XX\n+ZZZ1XX1\n+1XXXX11\n+111ZZZZ\n");
  RunResult h = run("construct h --n 7");
  EXPECT_EQ(h.output, "+11ZZ111\n+1111XX1\n+11111XX\n");
}

TEST(Cli, BellClassicalChsh) {
  RunResult r = run("bell classical --family chsh --json");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto out = nlohmann::json::parse(r.output);
  EXPECT_NEAR(out["value"]["value"].get<double>(), 2.0, 1e-12);
}

TEST(Cli, BellSynthRoundTripsThroughFile) {
  RunResult synth = run("bell synth --family max --n 3");
  ASSERT_EQ(synth.exit_code, 0);
  std::string path = std::string(::testing::TempDir()) + "/i3.json";
  std::ofstream(path) << synth.output;
  RunResult classical = run("bell classical --file " + path + " --json");
  ASSERT_EQ(classical.exit_code, 0) << classical.output;
  auto out = nlohmann::json::parse(classical.output);
  EXPECT_NEAR(out["value"]["value"].get<double>(), 3.0, 1e-12);
}

TEST(Cli, BellSosAndQuantum) {
  RunResult sos = run("bell sos --family max --n 3 --trials 3 --seed 5 --json");
  ASSERT_EQ(sos.exit_code, 0) << sos.output;
  auto out = nlohmann::json::parse(sos.output);
  EXPECT_LE(out["max_residual"].get<double>(), 1e-9);

  RunResult quantum = run("bell quantum --family max --n 3 --json");
  ASSERT_EQ(quantum.exit_code, 0) << quantum.output;
  auto q = nlohmann::json::parse(quantum.output);
  EXPECT_NEAR(q["max_eigenvalue"].get<double>(), 1.0 + 2.0 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(q["subspace_max"].get<double>(), 1.0 + 2.0 * std::sqrt(2.0), 1e-9);
}

TEST(Cli, SelftestAndFaces) {
  RunResult self = run("selftest verify --n 3 --trials 8 --json");
  ASSERT_EQ(self.exit_code, 0) << self.output;
  auto out = nlohmann::json::parse(self.output);
  EXPECT_TRUE(out["pass"].get<bool>());
  EXPECT_LE(out["canonicalize_residual"].get<double>(), 1e-8);

  RunResult faces = run("faces --n 5 --json");
  ASSERT_EQ(faces.exit_code, 0) << faces.output;
  auto f = nlohmann::json::parse(faces.output);
  EXPECT_EQ(f["face_dim"].get<int>(), 1);
}

TEST(Cli, ExitCodes) {
  // Validation failure: a generator set that stabilizes nothing.
  std::string path = std::string(::testing::TempDir()) + "/bad.txt";
  std::ofstream(path) << "+XX\n-XX\n";
  EXPECT_EQ(run("check-gme " + path).exit_code, 2);

  // Resource limit: dense work beyond --dense-limit.
  EXPECT_EQ(run("faces --n 20 --dense-limit 12").exit_code, 4);

  // Usage errors come back as CLI parse failures, not crashes.
  EXPECT_NE(run("construct max").exit_code, 0);
}
