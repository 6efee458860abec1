// Runs the schurcol executable through a shell.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "schurcol/json_io.h"

namespace {

using schurcol::io::Json;

struct ShellResult {
  int status = -1;
  std::string out;
};

// Captures stdout; the command redirects stderr itself.
ShellResult shell(const std::string& command) {
  ShellResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string bin() { return SCHURCOL_BIN; }

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "/schurcol_" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, PipeClosure) {
  const ShellResult r = shell("echo '{\"params\":[[0.5,0],[0,0.3],[1,0]]}' | " + bin() +
                      " realize --route closed-form 2>/dev/null | " + bin() + " schur 2>/dev/null");
  ASSERT_EQ(r.status, 0);
  const auto p = schurcol::io::complex_list_from_json(schurcol::io::parse(r.out)["parameters"]);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_LT(std::abs(p[0] - 0.5), 1e-8);
  EXPECT_LT(std::abs(p[1] - std::complex<double>(0.0, 0.3)), 1e-8);
  EXPECT_LT(std::abs(p[2] - 1.0), 1e-8);
}

TEST(Cli, DiagnosticsAreJsonLinesOnStderr) {
  const std::string err = temp_path("diag.jsonl");
  const ShellResult r = shell("echo '{\"c\":[1,0],\"zeros\":[[0.3,0],[0,-0.4]]}' | " + bin() +
                      " realize --route model 2>" + err);
  ASSERT_EQ(r.status, 0);
  const std::string lines = read_file(err);
  std::size_t start = 0;
  int count = 0;
  bool saw_equivalence = false;
  while (start < lines.size()) {
    const std::size_t end = lines.find('\n', start);
    const Json line = schurcol::io::parse(lines.substr(start, end - start));
    if (line.contains("check") && line["check"] == "route_equivalence") {
      saw_equivalence = true;
      EXPECT_LE(line["residual"].get<double>(), 1e-9);
    }
    ++count;
    start = end + 1;
  }
  EXPECT_TRUE(saw_equivalence);
  EXPECT_GE(count, 2);
  EXPECT_NE(lines.find("{\"status\":\"ok\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(shell("echo '{\"params\":[[2,0],[1,0]]}' | " + bin() + " realize 2>/dev/null").status, 2);
  EXPECT_EQ(shell("echo 'not json' | " + bin() + " schur 2>/dev/null").status, 2);
  EXPECT_EQ(shell("echo '{\"matrix\":[[[1,0],[0,0]],[[0,0],[1,0]]]}' | " + bin() +
                  " schur 2>/dev/null").status,
            3);
  EXPECT_EQ(shell("echo '[[[0,0],[1,0]],[[1,0],[0,0]]]' | " + bin() + " eval --z 0.25 2>/dev/null").status, 0);
}

TEST(Cli, EvalOutput) {
  const ShellResult r = shell("echo '[[[0,0],[1,0]],[[1,0],[0,0]]]' | " + bin() + " eval --z 0.25 2>/dev/null");
  EXPECT_EQ(r.out, "[0.25,0]\n");
}

TEST(Cli, InputOutputFilesAndDeterminism) {
  const std::string in = temp_path("in.json");
  const std::string out1 = temp_path("out1.json");
  const std::string out2 = temp_path("out2.json");
  std::ofstream(in) << "{\"c\":[1,0],\"zeros\":[[0.3,0],[0,-0.4],[0.1,0.7]]}";
  ASSERT_EQ(shell(bin() + " --input " + in + " --output " + out1 + " realize --route model 2>/dev/null").status, 0);
  ASSERT_EQ(shell(bin() + " realize --route model --input " + in + " --output " + out2 + " 2>/dev/null").status, 0);
  const std::string a = read_file(out1);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, read_file(out2));
}

TEST(Cli, CoupleFromFiles) {
  const std::string outer = temp_path("outer.json");
  const std::string inner = temp_path("inner.json");
  std::ofstream(outer) << "{\"section\":[0.5,0]}";
  std::ofstream(inner) << "{\"n\":0,\"matrix\":[[[-1,0]]]}";
  const ShellResult r = shell(bin() + " couple --outer " + outer + " --inner " + inner + " 2>/dev/null");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(schurcol::io::parse(r.out)["n"], 1);
}

TEST(Cli, VerifyPerturbed) {
  const ShellResult r = shell("echo '[[[0,0],[1.001,0]],[[1,0],[0,0]]]' | " + bin() + " verify 2>&1 >/dev/null");
  EXPECT_NE(r.out.find("\"check\":\"unitarity\""), std::string::npos);
  EXPECT_NE(r.out.find("\"status\":\"error\""), std::string::npos);
}

TEST(Cli, HessenbergUpper) {
  const ShellResult r = shell("echo '[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]' | " + bin() +
                      " hessenberg --orientation upper 2>/dev/null");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(schurcol::io::parse(r.out)["orientation"], "upper");
}

}  // namespace
