#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string &args) {
  const std::string cmd = std::string(QVA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = ::popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

json run_json(const std::string &args, int expected_status = 0) {
  const CliRun r = run(args);
  EXPECT_EQ(r.status, expected_status) << args;
  return json::parse(r.out);
}

} // namespace

TEST(Cli, EnumerateChargeOne) {
  const json j = run_json("enumerate --degree 4 --max-charge 1");
  EXPECT_EQ(j["degree"], 4);
  EXPECT_EQ(j["monomials"], json::parse("[[[1,-4]], [[1,-3],[1,-1]]]"));
}

TEST(Cli, EnumerateVacuum) {
  const json j = run_json("enumerate --degree 0");
  EXPECT_EQ(j["monomials"], json::parse("[[]]"));
}

TEST(Cli, EnumerateDegreeFour) {
  const json j = run_json("enumerate --degree 4");
  ASSERT_EQ(j["monomials"].size(), 5u);
  EXPECT_EQ(j["monomials"][3], json::parse("[[4,-4]]"));
}

TEST(Cli, Characters) {
  EXPECT_EQ(run_json("character --level 1 --degree 8")["coeffs"],
            json::parse("[1,1,1,1,2,2,3,3,4]"));
  EXPECT_EQ(run_json("character --degree 5")["coeffs"], json::parse("[1,1,2,3,5,7]"));
  EXPECT_EQ(run_json("character --level 3 --degree 2")["coeffs"], json::parse("[1,1,2]"));
  EXPECT_EQ(run_json("character --max-charge 1 --degree 8")["coeffs"],
            json::parse("[1,1,1,1,2,2,3,3,4]"));
}

TEST(Cli, VerifySuites) {
  for (const char *args : {"verify --suite g --h-order 30", "verify --suite rmatrix --h-order 20",
                           "verify --suite relations --pmax 5 --t 1"}) {
    const json j = run_json(args);
    EXPECT_TRUE(j["passed"].get<bool>()) << args;
    ASSERT_FALSE(j["checks"].empty());
    for (const auto &c : j["checks"]) {
      EXPECT_TRUE(c["passed"].get<bool>()) << c.dump();
      EXPECT_TRUE(c["first_failure"].is_null());
      EXPECT_TRUE(c["params"].is_object());
    }
  }
}

TEST(Cli, VerificationFailureExitsWithOne) {
  // h-order 1 cannot expose the first coefficient of g.
  const json j = run_json("verify --suite g --h-order 1", 1);
  EXPECT_FALSE(j["passed"].get<bool>());
  bool saw_failure = false;
  for (const auto &c : j["checks"])
    if (!c["passed"].get<bool>()) {
      saw_failure = true;
      EXPECT_TRUE(c["first_failure"].is_string());
    }
  EXPECT_TRUE(saw_failure);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  for (const char *args : {"", "verify --suite bogus", "enumerate", "enumerate --degree -1",
                           "character --degree 3 --level 0", "verify --t 1/0",
                           "verify --t abc --suite g", "frobnicate",
                           "character --degree 3 --level 1 --max-charge 1",
                           "enumerate --degree 2 --format xml"})
    EXPECT_EQ(run(args).status, 2) << args;
}

TEST(Cli, HelpExitsWithZero) { EXPECT_EQ(run("--help").status, 0); }

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run("enumerate --degree 9").out, run("enumerate --degree 9").out);
  EXPECT_EQ(run("verify --suite basis --seed 7").out, run("verify --suite basis --seed 7").out);
}

TEST(Cli, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "qva_cli_test_out.json";
  std::filesystem::remove(path);
  const CliRun r = run("character --degree 4 --out " + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(json::parse(f)["coeffs"], json::parse("[1,1,2,3,5]"));
  std::filesystem::remove(path);
}

TEST(Cli, PlainFormat) {
  const CliRun r = run("enumerate --degree 4 --max-charge 1 --format plain");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("x_(1)(-3)x_(1)(-1)"), std::string::npos);
}
