// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kData = LTOEPLITZ_DATA_DIR;
const std::string kConfigs = LTOEPLITZ_CONFIG_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ltoeplitz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ltoeplitz::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("ltoeplitz_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, IndexOnLexTorus) {
  const auto r = invoke({"index", "--config", kConfigs + "/index_lattice.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("character (0,3): index 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("character (1,0): no index"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("character (0,-2): index -2"), std::string::npos) << r.out;
}

TEST(Cli, IndexOfClassicalShift) {
  const auto r = invoke({"index", "--config", kConfigs + "/index_shift.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Fredholm index -1"), std::string::npos) << r.out;
}

TEST(Cli, IndexWritesReports) {
  const auto dir = scratch("index");
  const auto r = invoke({"index", "--config", kConfigs + "/index_torus.json", "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "report.txt"));
  EXPECT_TRUE(fs::exists(dir / "report.struct"));
  fs::remove_all(dir);
}

TEST(Cli, SpectrumOutputsAreByteIdentical) {
  const auto a = scratch("spec_a"), b = scratch("spec_b");
  for (const auto& d : {a, b}) {
    const auto r = invoke({"spectrum", "--config", kConfigs + "/spectrum_disk.json", "--out", d.string(),
                           "--resolution", "512", "--window", "128"});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  for (const char* f : {"spectrum.csv", "probes.csv", "report.txt", "report.struct"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_EQ(slurp(a / "probes.csv").rfind("mu_re,mu_im,window_size,min_singular_value\n", 0), 0u);
  EXPECT_NE(slurp(a / "report.struct").find("\"Disk\""), std::string::npos);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Cli, VerifySingleCheck) {
  const auto r = invoke({"verify", "--config", kData + "/catalog.json", "--check", "index_suite:shift"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS index_suite:shift"), std::string::npos);
  EXPECT_NE(r.out.find("1/1 checks passed"), std::string::npos);
}

TEST(Cli, VerifyFaultFixtureFails) {
  const auto r = invoke({"verify", "--config", kData + "/fault_fixture.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyUnknownCheck) {
  const auto r = invoke({"verify", "--config", kData + "/catalog.json", "--check", "nonsense"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyIsDeterministicUnderSeed) {
  const auto a = invoke({"verify", "--config", kData + "/catalog.json", "--check", "defining_relation:random",
                         "--seed", "77"});
  const auto b = invoke({"verify", "--config", kData + "/catalog.json", "--check", "defining_relation:random",
                         "--seed", "77"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"index"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"index", "--config", "/nonexistent/config.json"}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--config", kConfigs + "/index_lattice.json"}).code, 2);
}

TEST(Cli, VerifyAllOnBundledCatalog) {
  const auto r = invoke({"verify", "--config", kData + "/catalog.json"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}
