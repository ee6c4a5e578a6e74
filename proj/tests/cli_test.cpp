#include <gmpxx.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cayleypair/commands.hpp"
#include "cayleypair/error.hpp"
#include "json.hpp"
#include "table1.hpp"

using namespace cayleypair;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::string& command, const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run_command(command, cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(int a, int b) {
  RunConfig c;
  c.a = a;
  c.b = b;
  return c;
}

}  // namespace

TEST(Cli, PairSymmetricGroup) {
  CliRun r = run_cli("pair", config(1, 0));
  ASSERT_EQ(r.code, kExitOk);
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["pair"]["group"], "S3");
  EXPECT_EQ(j["counts"]["X"], 6);
  EXPECT_EQ(j["pair"]["S1"].size(), 3u);
}

TEST(Cli, PairAlternatingGroup) {
  CliRun r = run_cli("pair", config(2, 0));
  ASSERT_EQ(r.code, kExitOk);
  json j = json::parse(r.out);
  EXPECT_EQ(j["pair"]["group"], "A5");
  EXPECT_EQ(j["counts"]["X"], 60);
}

TEST(Cli, InvalidPairs) {
  CliRun r = run_cli("pair", config(2, 1));
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("Wilson exception theta_0"), std::string::npos);
  EXPECT_EQ(run_cli("pair", config(1, 1)).code, kExitInvalidInput);
  EXPECT_EQ(run_cli("verify", config(2, 2)).code, kExitInvalidInput);
  EXPECT_EQ(run_cli("frobnicate", config(1, 0)).code, kExitInvalidInput);
}

TEST(Cli, ResourceCaps) {
  RunConfig c = config(1, 2);
  c.cap_elements = 50;
  EXPECT_EQ(run_cli("walk", c).code, kExitResourceCap);
  RunConfig s = config(1, 4);
  EXPECT_EQ(run_cli("spectra", s).code, kExitResourceCap);
}

TEST(Cli, VerifyPasses) {
  CliRun r = run_cli("verify", config(1, 0));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_TRUE(j["properties"]["nonisomorphic"]["pass"].get<bool>());
  EXPECT_TRUE(j["properties"]["random_walk"]["pass"].get<bool>());
  EXPECT_TRUE(j["properties"]["spectral"]["pass"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
  RunConfig c = config(2, 0);
  c.T = 8;
  CliRun first = run_cli("verify", c), second = run_cli("verify", c);
  EXPECT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, WalkReproducesTableOne) {
  RunConfig c = config(1, 0);
  c.T = 5;
  c.gens1 = "(1,3,2);(1,2,3);(1,3)";
  c.gens2 = "(1,3);(2,3);()";
  CliRun r = run_cli("walk", c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j["mu1"]["mu"].size(), 6u);
  const std::vector<Permutation> cols = table1::columns();
  for (int t = 0; t <= 5; ++t) {
    for (int g = 0; g < 6; ++g) {
      const std::string name = format_cycles(cols[g]);
      std::size_t idx = 0;
      while (j["mu1"]["elements"][idx] != name) ++idx;
      int den = 1;
      for (int i = 0; i < t; ++i) den *= 3;
      mpq_class e1(table1::kMu1[t][g], den), e2(table1::kMu2[t][g], den);
      e1.canonicalize();
      e2.canonicalize();
      auto str = [](const mpq_class& q) { return q.get_den() == 1 ? q.get_num().get_str() : q.get_str(); };
      EXPECT_EQ(j["mu1"]["mu"][t][idx], str(e1));
      std::size_t idx2 = 0;
      while (j["mu2"]["elements"][idx2] != name) ++idx2;
      EXPECT_EQ(j["mu2"]["mu"][t][idx2], str(e2));
    }
  }
  EXPECT_TRUE(j["tv_equal"].get<bool>());
}

TEST(Cli, SpectraListsFivePolynomials) {
  CliRun r = run_cli("spectra", config(1, 0));
  ASSERT_EQ(r.code, kExitOk);
  json j = json::parse(r.out);
  for (const char* k : {"Y", "X_rho", "X_psi", "X_rhopsi", "Z"}) EXPECT_TRUE(j["polynomials"].contains(k)) << k;
  EXPECT_TRUE(j["all_pass"].get<bool>());
}

TEST(Cli, ExportWritesDotFiles) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "cayleypair_export_test";
  std::filesystem::remove_all(dir);
  RunConfig c = config(1, 0);
  c.output_dir = dir.string();
  c.formats = {"dot"};
  CliRun r = run_cli("export", c);
  ASSERT_EQ(r.code, kExitOk);
  for (const char* f : {"x1.dot", "x2.dot", "y.dot", "x_rhopsi.dot", "z.dot"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::filesystem::remove_all(dir);
}

TEST(Cli, GeneratorListParsing) {
  auto g = parse_generator_list("(1,2);();(2,3)", 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_TRUE(g[1].is_identity());
  EXPECT_THROW(parse_generator_list("", 3), InvalidInput);
}
