#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "m04/commands.hpp"

using namespace m04;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(M04_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const double kGolden2 = (3.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(Classify, PseudoAnosov) {
  const auto r = cmd_classify("w1^-1 w2");
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["class"], "pseudo_anosov");
  EXPECT_EQ(r.payload["trace_abs"], 3);
  EXPECT_NEAR(r.payload["stretch"].get<double>(), 2.6180340, 1e-7);
  EXPECT_EQ(r.payload["matrix"], json::parse("[[2,-1],[-1,1]]"));
  EXPECT_EQ(r.payload["vector"], json::parse(R"(["0","1/2"])"));
}

TEST(Classify, IdentityAndReducible) {
  const auto id = cmd_classify("id");
  ASSERT_TRUE(id.ok);
  EXPECT_EQ(id.payload["class"], "finite_order");
  EXPECT_EQ(id.payload["in_N"], true);
  EXPECT_TRUE(id.payload["stretch"].is_null());
  EXPECT_EQ(cmd_classify("w1").payload["class"], "reducible");
}

TEST(Classify, ParseFailure) {
  const auto r = cmd_classify("w1 w4");
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.payload.is_null());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics.front().find("position 3"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Rep, Universal) {
  const auto r = cmd_rep("universal", "w1", {});
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["matrix"][0][1], json::parse(R"({"var":"s","terms":[[3,-1],[1,-1],[-1,-1]]})"));
  EXPECT_EQ(r.payload["matrix"][1][0], json::parse(R"({"var":"s","terms":[]})"));
}

TEST(Rep, HomologyAndLevel) {
  EXPECT_EQ(cmd_rep("homology", "w2", {}).payload["matrix"], json::parse("[[1,0],[-1,1]]"));
  const auto lvl = cmd_rep("level", "w1", {std::nullopt, 1});
  ASSERT_TRUE(lvl.ok);
  const Complex a = std::polar(1.0, -2.0 * std::numbers::pi / 12.0);
  const Complex a_inv_sq = 1.0 / (a * a);
  EXPECT_NEAR(lvl.payload["matrix"][0][0][0].get<double>(), a_inv_sq.real(), 1e-14);
  EXPECT_NEAR(lvl.payload["matrix"][0][0][1].get<double>(), a_inv_sq.imag(), 1e-14);
  EXPECT_EQ(lvl.payload["ell"], 1);
}

TEST(Rep, MissingParamsAndBadKind) {
  EXPECT_FALSE(cmd_rep("geometric", "w1", {}).ok);
  EXPECT_FALSE(cmd_rep("level", "w1", {}).ok);
  EXPECT_FALSE(cmd_rep("bogus", "w1", {}).ok);
  EXPECT_FALSE(cmd_rep("universal", "w9", {}).ok);
  EXPECT_TRUE(cmd_rep("geometric", "w1", {2, 3}).ok);
  EXPECT_TRUE(cmd_rep("geometric-tilde", "w1", {2, 3}).ok);
}

TEST(Converge, PseudoAnosovToCsv) {
  const auto path = std::filesystem::temp_directory_path() / "m04_converge_test.csv";
  ConvergeOptions opts{10, 1000, 10, path.string(), nullptr};
  const auto r = cmd_converge("w1^-1 w2", opts);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["rows"], 100);
  EXPECT_LT(std::abs(r.payload["last"]["trace_abs"].get<double>() - 3.0), 0.05);
  EXPECT_NEAR(r.payload["last"]["lambda_abs"].get<double>(), kGolden2, 0.05);
  EXPECT_EQ(r.payload["homology_trace_abs"], 3);

  std::ifstream in(path);
  std::string header, line, last;
  std::getline(in, header);
  EXPECT_EQ(header, "k,trace_abs,lambda_abs");
  int count = 0;
  while (std::getline(in, line)) {
    last = line;
    ++count;
  }
  EXPECT_EQ(count, 100);
  EXPECT_EQ(last.rfind("1000,", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Converge, IdentityRowsAreTwo) {
  std::ostringstream csv;
  ConvergeOptions opts{1, 50, 7, std::nullopt, &csv};
  ASSERT_TRUE(cmd_converge("id", opts).ok);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) EXPECT_NE(line.find(",2,"), std::string::npos) << line;
}

TEST(Converge, Errors) {
  EXPECT_FALSE(cmd_converge("w1", {0, 10, 1, std::nullopt, nullptr}).ok);
  EXPECT_FALSE(cmd_converge("w1", {10, 5, 1, std::nullopt, nullptr}).ok);
  EXPECT_FALSE(cmd_converge("w1", {1, 5, 1, "/nonexistent-dir/x.csv", nullptr}).ok);
}

TEST(Traintrack, Examples) {
  const auto r = cmd_traintrack("w1^-1 w2 w3^-1");
  ASSERT_TRUE(r.ok);
  // The printed base matrices all fix e4, so no product is primitive.
  EXPECT_EQ(r.payload["primitive"], false);
  EXPECT_TRUE(r.payload["pf_eigenvalue"].is_null());
  const double stretch = cmd_classify("w1^-1 w2 w3^-1").payload["stretch"].get<double>();
  EXPECT_NEAR(r.payload["spectral_radius"].get<double>(), stretch, 1e-9 * stretch);
  EXPECT_LE(std::abs(r.payload["delta"].get<double>()), 1e-9 * stretch);

  EXPECT_FALSE(cmd_traintrack("w1").ok);
  const auto w2 = cmd_traintrack("w2");
  ASSERT_TRUE(w2.ok);
  EXPECT_EQ(w2.payload["primitive"], false);
  EXPECT_TRUE(w2.payload["pf_eigenvalue"].is_null());
}

TEST(Verify, DefaultRunPasses) {
  const auto r = cmd_verify();
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["failed"], 0);
  EXPECT_GT(r.payload["total"].get<int>(), 20);
}

TEST(Verify, CorruptedGeneratorsFailRelations) {
  VerifyOptions opts;
  opts.corrupt = true;
  const auto r = cmd_verify(opts);
  ASSERT_TRUE(r.ok);
  int failed_relations = 0;
  for (const auto& item : r.payload["items"]) {
    if (!item["passed"].get<bool>() && item["name"].get<std::string>().rfind("relations.", 0) == 0) ++failed_relations;
  }
  EXPECT_GE(failed_relations, 3);
}

TEST(Verify, EmptySelection) {
  VerifyOptions opts;
  opts.only = std::vector<std::string>{};
  const auto r = cmd_verify(opts);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["total"], 0);
}

TEST(Reconstruct, MatchesSkein) {
  const auto r = cmd_reconstruct("w1 w2^-1 w3", std::nullopt);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["samples"], 7);
  EXPECT_EQ(r.payload["matches_skein"], true);
  EXPECT_FALSE(cmd_reconstruct("w1 w2^-1 w3", 5).ok);
}

TEST(Cli, ExitCodesAndDeterminism) {
  const CliRun a = run_cli("classify \"w1^-1 w2\"");
  const CliRun b = run_cli("classify \"w1^-1 w2\"");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["class"], "pseudo_anosov");
  EXPECT_EQ(j["stretch"].dump(), "2.61803398874989");

  EXPECT_EQ(run_cli("classify w4").exit_code, 1);
  EXPECT_EQ(run_cli("traintrack w1").exit_code, 1);
  EXPECT_EQ(run_cli("converge w1 --k-min 0").exit_code, 1);
  EXPECT_EQ(run_cli("--quiet classify w1").out, "");
}

TEST(Cli, SubcommandsRun) {
  EXPECT_EQ(run_cli("rep universal w1").exit_code, 0);
  EXPECT_EQ(run_cli("rep geometric w1 --n 2 --k 3").exit_code, 0);
  EXPECT_EQ(run_cli("rep level w1 --k 1").exit_code, 0);
  EXPECT_EQ(run_cli("rep level w1").exit_code, 1);
  EXPECT_EQ(run_cli("traintrack \"w1^-1 w2 w3^-1\"").exit_code, 0);
  EXPECT_EQ(run_cli("reconstruct w1 w2").exit_code, 0);
  const CliRun v = run_cli("verify --only ell");
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(json::parse(v.out)["total"], 1);
  const CliRun csv = run_cli("converge id --k-min 1 --k-max 3 --step 1 --csv");
  EXPECT_EQ(csv.out, "k,trace_abs,lambda_abs\n1,2,\n2,2,\n3,2,\n");
}
