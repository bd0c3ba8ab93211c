#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result zmx(const std::string& args) {
  const std::string cmd = std::string(ZMX_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string drop_first_line(const std::string& s) { return s.substr(s.find('\n') + 1); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zmx-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenFamilies) {
  EXPECT_EQ(zmx("gen --family squarepath --n 9").out.substr(0, 5), "9 15\n");
  const Result m = zmx("gen --family mergedleaf --m 6 --i 2 --j 5");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out.substr(0, 3), "11 ");
  EXPECT_EQ(zmx("gen --family fan --m 4").out.substr(0, 2), "5 ");
  EXPECT_EQ(zmx("gen --family circpair --k 3 --which 2").out.substr(0, 2), "9 ");
  ASSERT_EQ(zmx("gen --family path --n 7 --out " + path("p7.g")).code, 0);
  EXPECT_EQ(slurp(path("p7.g")), "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(zmx("").code, 2);
  EXPECT_EQ(zmx("gen --family nosuch").code, 2);
  EXPECT_EQ(zmx("gen --family mergedleaf --m 3 --i 3 --j 2").code, 2);
  EXPECT_EQ(zmx("verify --corpus bogus --strategy tree").code, 2);
  EXPECT_EQ(zmx("verify --corpus 'trees:n<=3' --strategy nosuch").code, 2);
  EXPECT_EQ(zmx("synth --graphs x.g --budget 2 --expect maybe").code, 2);
}

TEST_F(Cli, RunTreeOnTwoVertexPath) {
  zmx("gen --family path --n 2 --out " + path("p2.g"));
  const Result r = zmx("run --graph " + path("p2.g") + " --strategy tree --start 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(drop_first_line(r.out),
            "0: v=0 env=(0|0:1) -> assign=1 goto=0 chosen=1\n"
            "1: v=1 env=(0|1:1) -> assign=2 goto=1 chosen=0\n"
            "2: v=0 env=(1|2:1) -> STOP\n"
            "# outcome=success colors=2\n");
}

TEST_F(Cli, RunSingleVertex) {
  zmx("gen --family path --n 1 --out " + path("k1.g"));
  const Result r = zmx("run --graph " + path("k1.g") + " --strategy dfs --start 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-> STOP"), std::string::npos);
}

TEST_F(Cli, RunPathColorsByDistanceAndWritesDot) {
  zmx("gen --family path --n 7 --out " + path("p7.g"));
  const Result r = zmx("run --graph " + path("p7.g") +
                       " --strategy tree --start 0 --adversary first --dot " + path("p7.dot"));
  EXPECT_EQ(r.code, 0);
  const std::string dot = slurp(path("p7.dot"));
  const char* want[] = {"0:1", "1:2", "2:3", "3:1", "4:2", "5:3", "6:1"};
  for (const char* w : want) EXPECT_NE(dot.find(w), std::string::npos) << w;
}

TEST_F(Cli, RunIsByteStable) {
  zmx("gen --family squarepath --n 8 --out " + path("sq.g"));
  const std::string cmd = "run --graph " + path("sq.g") + " --strategy squarepath --start 0 --adversary seeded:5";
  const Result a = zmx(cmd), b = zmx(cmd);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST_F(Cli, VerifyAndReport) {
  const Result v = zmx("verify --corpus 'trees:n<=5' --strategy tree --max-colors 3 --checks");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.substr(0, v.out.find('\n')), "graph_id,start,verdict,states,max_colors");
  EXPECT_EQ(zmx("verify --corpus 'trees:n<=5' --strategy tree --max-colors 2").code, 1);
  const Result r = zmx("report --corpus paths:1..9 --strategy pathrecolorer --starts leaves --max-colors 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("graphs=9"), std::string::npos);
  EXPECT_NE(r.out.find("result=pass"), std::string::npos);
}

TEST_F(Cli, WitnessReplaysThroughRun) {
  zmx("gen --family squarepath --n 6 --out " + path("sq6.g"));
  const Result v = zmx("verify --corpus file:" + path("sq6.g") + " --strategy squarepath --witness-dir " +
                       path("w") + " --out " + path("report.csv"));
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(slurp(path("report.csv")).find("sq6,1,stopped-incomplete,"), std::string::npos);
  const std::string witness = slurp(path("w/sq6-s1.trace"));
  ASSERT_NE(witness.find("# outcome=stopped-incomplete"), std::string::npos);

  const auto at = witness.find("# script=");
  ASSERT_NE(at, std::string::npos);
  std::string script = witness.substr(at + 9);
  script = script.substr(0, script.find('\n'));
  const Result replay = zmx("run --graph " + path("sq6.g") + " --strategy squarepath --start 1" +
                            (script.empty() ? "" : " --script " + script));
  EXPECT_EQ(replay.code, 1);
  EXPECT_EQ(drop_first_line(replay.out), drop_first_line(witness.substr(0, at)));
}

TEST_F(Cli, SynthExpectations) {
  zmx("gen --family path --n 7 --out " + path("p7.g"));
  zmx("gen --family complete --n 3 --out " + path("tri.g"));
  EXPECT_EQ(zmx("synth --graphs " + path("p7.g") + " --budget 2 --expect unrealizable").code, 0);
  EXPECT_EQ(zmx("synth --graphs " + path("p7.g") + " --budget 2 --expect realizable").code, 1);
  const Result r = zmx("synth --graphs " + path("tri.g") + " --budget 2 --expect realizable --table-out " +
                       path("tri.table"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify " + path("tri.g") + " ok"), std::string::npos);
  const Result again = zmx("verify --corpus file:" + path("tri.g") + " --strategy table:" + path("tri.table") +
                           " --max-colors 2");
  EXPECT_EQ(again.code, 0);
}

TEST_F(Cli, Circumference) {
  zmx("gen --family mergedleaf --m 5 --i 2 --j 5 --out " + path("c.g"));
  const Result r = zmx("circumference --graph " + path("c.g"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
}
