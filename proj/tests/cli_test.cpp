#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support/fixtures.hpp"

#ifndef GEMKIT_CLI
#error "GEMKIT_CLI must name the gemkit executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GEMKIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string gem(const std::string& stem) { return fixtures::data_path(stem + ".gem"); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gemkit_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, InvariantsOfTheSphere) {
  const auto r = run("invariants " + gem("s4"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rho=0 omega_G=0 k-witness=0"), std::string::npos) << r.out;
}

TEST(Cli, BrokenInputExitsOne) {
  const auto path = scratch("broken.gem");
  std::ofstream(path) << "gem v1\ncolors 3\norder 2\nc0: 1 0\nc1: 0 1\nc2: 1 0\n";
  EXPECT_EQ(run("invariants " + path.string()).code, 1);
  EXPECT_EQ(run("validate " + path.string()).code, 1);
  EXPECT_EQ(run("invariants /nonexistent/file.gem").code, 1);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("invariants " + gem("cp2") + " --m 0 --mprime 1").code, 1);
  EXPECT_EQ(run("invariants " + gem("cp2") + " --m 1").code, 1);
  EXPECT_EQ(run("invariants " + gem("cp2") + " --bogus").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, WrongRankClaimExitsTwo) {
  EXPECT_EQ(run("invariants " + gem("cp2") + " --m 1 --mprime 1").code, 2);
  EXPECT_EQ(run("invariants " + gem("cp2") + " --m 0 --mprime 0").code, 0);
}

TEST(Cli, ReportOverBundledGems) {
  const auto r = run("report " + std::string(GEMKIT_DATA_DIR));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("name", 0), 0u);
  const auto header = r.out.substr(0, r.out.find('\n'));
  EXPECT_LT(header.find("G"), header.find("D_G"));
  EXPECT_LT(header.find("D_G"), header.find(" k "));
  EXPECT_LT(header.find(" k "), header.find("class"));
  EXPECT_LT(header.find("class"), header.find("notes"));
  EXPECT_NE(r.out.find("ingest-only"), std::string::npos);
}

TEST(Cli, ReportFlagsViolatedExpectations) {
  const auto dir = scratch("bad_report");
  fs::create_directories(dir);
  auto g = gemkit::load_gem(gem("cp2")).with_meta("expected_rho", "3");
  gemkit::save_gem((dir / "cp2.gem").string(), g);
  EXPECT_EQ(run("report " + dir.string()).code, 2);
  EXPECT_EQ(run("invariants " + (dir / "cp2.gem").string()).code, 2);
}

TEST(Cli, JsonIsDeterministicAndParses) {
  for (const std::string& cmd : {"invariants " + gem("cp2"), "recognize " + gem("xi2"),
                                "report " + std::string(GEMKIT_DATA_DIR), "trisect " + gem("cp2")}) {
    const auto a = run(cmd + " --json");
    const auto b = run(cmd + " --json");
    EXPECT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_TRUE(nlohmann::json::accept(a.out)) << cmd;
  }
}

TEST(Cli, ConvertRoundTrip) {
  const auto json = scratch("cp2.json");
  EXPECT_EQ(run("convert " + gem("cp2") + " --to json --out " + json.string()).code, 0);
  const auto back = run("convert " + json.string());
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, gemkit::read_file(gem("cp2")));
}

TEST(Cli, FundamentalGroupCommands) {
  const auto r = run("pi1 " + gem("s1xs3") + " --collapse --abelianize");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("collapse: stuck"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("abelianization: Z (free rank 1)"), std::string::npos) << r.out;
  EXPECT_EQ(run("pi1 " + gem("s1xts3")).code, 1);
  EXPECT_EQ(run("pi1 " + gem("s1xts3") + " --non-bipartite --abelianize").code, 0);
}

TEST(Cli, TrisectionBoundLine) {
  const auto r = run("trisect " + gem("cp2") + " --min");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CP2  g_GT <= 1"), std::string::npos) << r.out;
  const auto s = run("trisect " + gem("s1xs3") + " --min");
  EXPECT_NE(s.out.find("inapplicable"), std::string::npos) << s.out;
}

TEST(Cli, HomologyAndRecognition) {
  EXPECT_NE(run("homology " + gem("s1xs3")).out.find("betti (Q): (1,1,0,1,1)"), std::string::npos);
  EXPECT_NE(run("homology " + gem("s1xts3") + " --mod2").out.find("betti (Z/2): (1,1,0,1,1)"), std::string::npos);
  EXPECT_NE(run("recognize " + gem("xi2")).out.find("SingularGem, singular color 4"), std::string::npos);
}

TEST(Cli, SumAndEnumerate) {
  const auto out = scratch("sum.gem");
  EXPECT_EQ(run("sum " + gem("cp2") + " 0 " + gem("cp2") + " 1 --out " + out.string()).code, 0);
  EXPECT_EQ(gemkit::load_gem(out.string()).order(), 14);
  EXPECT_EQ(run("sum " + gem("cp2") + " 0 " + gem("cp2") + " 0").code, 1);
  const auto e = run("enum --order 4 --bipartite");
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("classes: "), std::string::npos);
  EXPECT_EQ(run("enum --order 18").code, 1);
}
