#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Result run(const std::vector<std::string>& args, bool merge_stderr = false) {
  std::string cmd = quote(MRD_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::vector<std::string> example = {"--ell", "3", "--g", "1/(1-t^3)", "--f", "t/(1-t^3)",
                                          "--f", "t*(1+t^3)", "--f", "t/(1+t^3)"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Cli, EvalPrintsCoefficients) {
  const auto r = run({"eval", "t", "--order", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0, 1, 0, 0\n");
  EXPECT_EQ(run({"eval", "1/(1-2*t)", "--order", "3", "--format", "csv"}).out, "1,2,4,8\n");
}

TEST(Cli, BuildRunningExample) {
  const auto r = run(with({"build", "--rows", "9", "--cols", "9", "--format", "json"}, example));
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["rows"], 9);
  EXPECT_EQ(j["entries"][8][2], "5");
  EXPECT_EQ(j["entries"][7][4], "3");
  EXPECT_EQ(j["entries"][3][0], "1");
}

TEST(Cli, FormatsCarryTheSameValues) {
  const auto args = std::vector<std::string>{"build", "--g", "1/(1-t)", "--f", "t/(1-t)", "--rows", "4", "--cols", "4"};
  const auto text = run(args).out;
  const auto csv = run(with(args, {"--format", "csv"})).out;
  const json j = json::parse(run(with(args, {"--format", "json"})).out);
  EXPECT_EQ(csv, "1,0,0,0\n1,1,0,0\n1,2,1,0\n1,3,3,1\n");
  EXPECT_EQ(text, "1 0 0 0\n1 1 0 0\n1 2 1 0\n1 3 3 1\n");
  EXPECT_EQ(j["entries"][3], json({"1", "3", "3", "1"}));
}

TEST(Cli, SequenceOfTheRunningExample) {
  EXPECT_EQ(run(with({"seq", "--which", "A", "--terms", "4"}, example)).out, "1, 0, 0, 1\n");
  EXPECT_EQ(run(with({"seq", "--which", "Z2", "--terms", "7"}, example)).out, "3, 0, 0, -4, 0, 0, 8\n");
  const json j = json::parse(run(with({"seq", "--terms", "10", "--format", "json"}, example)).out);
  EXPECT_EQ(j["ell"], 3);
  EXPECT_EQ(j["Z"][1], json({"2", "-1", "1", "-1"}));
  EXPECT_EQ(run(with({"seq", "--which", "Z3"}, example)).status, 2);
}

TEST(Cli, ClassicalSequences) {
  const auto r = run({"seq", "--type", "--g", "1/(1-t)", "--f", "1/(1-t)", "--which", "A", "--terms", "4"});
  EXPECT_EQ(r.out, "1, 1, 0, 0\n");
}

TEST(Cli, ProductionMatrix) {
  const json j = json::parse(run(with({"prodmat", "--size", "9", "--format", "json"}, example)).out);
  EXPECT_EQ(j["entries"][4][1], "-1");
  EXPECT_EQ(j["entries"][8][2], "8");
  EXPECT_EQ(j["entries"][0][3], "1");
}

TEST(Cli, GroupOperations) {
  const auto sq = run({"mul", "--g", "1/(1-t)", "--f", "t/(1-t)", "--g2", "1/(1-t)", "--f2", "t/(1-t)", "--order", "4"});
  EXPECT_EQ(sq.status, 0);
  EXPECT_NE(sq.out.find("g: 1, 2, 4, 8, 16"), std::string::npos) << sq.out;
  EXPECT_NE(sq.out.find("f: 0, 1, 2, 4, 8"), std::string::npos) << sq.out;
  const auto iv = run({"inv", "--g", "1/(1-t)", "--f", "t/(1-t)", "--order", "4", "--format", "json"});
  const json j = json::parse(iv.out);
  EXPECT_EQ(j["g"]["coeffs"], json({"1", "-1", "1", "-1", "1"}));
}

TEST(Cli, Compress) {
  const json j = json::parse(run(with({"compress", "--rows", "8", "--cols", "8", "--format", "json"}, example)).out);
  EXPECT_EQ(j["matrix"]["entries"][7][5], "9");
  EXPECT_EQ(j["ell"], 3);
  EXPECT_EQ(j["ghat"]["coeffs"][1], "1");
}

TEST(Cli, TotalPositivityAndBudget) {
  const std::vector<std::string> dbl = {"--g", "1/(1-t^2)", "--f", "t", "--f", "t/(1-t^2)"};
  const auto ok = run(with({"tp", "--compressed", "--rows", "6", "--max-order", "3", "--format", "json"}, dbl));
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(json::parse(ok.out)["ok"].get<bool>());
  const auto over = run(with({"tp", "--compressed", "--rows", "10", "--max-order", "4", "--budget", "100"}, dbl));
  EXPECT_EQ(over.status, 3);
  const auto pf = run({"pf", "--seq", "1,1,1", "--depth", "3", "--terms", "6", "--format", "json"});
  EXPECT_EQ(pf.status, 0);
  EXPECT_FALSE(json::parse(pf.out)["ok"].get<bool>());
}

TEST(Cli, IdentityReportsExitZero) {
  const auto r = run({"identity", "fuss", "--ell", "2", "--p", "1", "--m", "2", "--n", "3", "--s", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
  const json u = json::parse(run({"identity", "umbral", "--m", "3", "--n", "4", "--x", "1/2", "--format", "json"}).out);
  EXPECT_TRUE(u["holds"].get<bool>());
  const auto rs = run({"identity", "riosum", "--g", "1/(1-t)", "--f", "t/(1-t)", "--m", "2", "--n", "3", "--s", "4"});
  EXPECT_EQ(rs.status, 0);
  const auto gr = run({"identity", "grunert", "--expr", "catalan()", "--m", "3", "--order", "8", "--format", "csv"});
  EXPECT_EQ(gr.status, 0);
  EXPECT_EQ(gr.out.front(), '"');
}

TEST(Cli, ExitCodes) {
  const auto syntax = run({"eval", "1+*t"}, true);
  EXPECT_EQ(syntax.status, 2);
  EXPECT_NE(syntax.out.find("byte 2"), std::string::npos) << syntax.out;
  EXPECT_NE(syntax.out.find("expected one of"), std::string::npos);
  EXPECT_EQ(run({"eval", "foo(t)"}).status, 2);
  EXPECT_EQ(run({"eval", "sqrt(2+t)"}).status, 1);
  EXPECT_EQ(run({"eval", "revert(t^2)"}).status, 1);
  EXPECT_EQ(run({"build", "--g", "1", "--f", "t^2"}).status, 2);
  EXPECT_EQ(run({"build", "--g", "1", "--f", "t", "--f", "t^2"}).status, 2);
  EXPECT_EQ(run({"nonsense"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"eval", "t", "--order", "x"}).status, 2);
}

TEST(Cli, SpecFile) {
  const auto path = std::filesystem::temp_directory_path() / "mrd_cli_spec.json";
  {
    std::ofstream f(path);
    f << R"json({"kind": "proper", "ell": 2, "g": "1/(1-t^2)", "f": ["t", {"coeffs": [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]}]})json";
  }
  const auto r = run({"build", "--spec", path.string(), "--rows", "5", "--cols", "5", "--format", "csv"});
  std::filesystem::remove(path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1,0,0,0,0\n0,1,0,0,0\n1,0,1,0,0\n0,1,0,1,0\n1,0,2,0,1\n");
  EXPECT_EQ(run({"build", "--spec", "/nonexistent/spec.json"}).status, 2);
}

TEST(Cli, Grammar) {
  const auto r = run({"grammar"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("sqrt"), std::string::npos);
}
