#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kBin = NBP_CLI;
const std::string kDir = NBP_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = kBin + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(Cli, Validate) {
  auto r = run("validate " + kDir + "/c9-bare.pg");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("in-class girth=9", 0), 0u);
}

TEST(Cli, CountC5) {
  auto r = run("count " + kDir + "/c5.pg");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n");
  EXPECT_EQ(run("--jobs 2 count " + kDir + "/c5.pg").out, "10\n");
}

TEST(Cli, AuditEndsWithConservation) {
  for (auto* name : {"c5", "c9-ear", "special2-exerciser", "tetrad-exerciser", "path5"}) {
    auto r = run("audit " + kDir + "/" + name + ".pg");
    std::string tail = "conservation=OK total=0/3\n";
    ASSERT_GE(r.out.size(), tail.size());
    EXPECT_EQ(r.out.substr(r.out.size() - tail.size()), tail) << name;
    EXPECT_EQ(r.code, 1) << name;  // every curated instance has some negative element
  }
}

TEST(Cli, ColorThenCheck) {
  for (auto* name : {"c9-ear", "l4-exerciser", "tetrad-exerciser", "triangle-pendant"}) {
    auto c = run("color " + kDir + "/" + name + ".pg");
    EXPECT_EQ(c.code, 0) << name;
    EXPECT_NE(c.out.find("certificate=valid"), std::string::npos);
    auto k = run("check " + kDir + "/" + name + ".pg " + first_line(c.out));
    EXPECT_EQ(k.code, 0) << name << "\n" << k.out;
  }
}

TEST(Cli, CheckRejects) {
  auto r = run("check " + kDir + "/c5.pg IIFFF");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("independent=I-I edge"), std::string::npos);
  EXPECT_EQ(run("check " + kDir + "/c5.pg FFFFF").code, 1);
  EXPECT_EQ(run("check " + kDir + "/c5.pg IFF").code, 2);
}

TEST(Cli, Superextend) {
  auto r = run("superextend " + kDir + "/c9-ear.pg --cycle 0,1,2,3,4,5,6,7,8 --precolor IFFFFFFFF.");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out).substr(0, 9), "IFFFFFFFF");
  EXPECT_EQ(run("superextend " + kDir + "/c9-ear.pg --cycle 0,1,2 --precolor IFF.......").code, 2);
}

TEST(Cli, GenIsDeterministic) {
  auto a = run("gen --family ears:14:9 --seed 4");
  auto b = run("gen --family ears:14:9 --seed 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("pg 1\n", 0), 0u);
  EXPECT_EQ(run("gen --family nope --seed 1").code, 2);
}

TEST(Cli, Trace) {
  auto r = run("trace " + kDir + "/l4-exerciser.pg");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("step 0 kind=", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("validate").code, 2);
  EXPECT_EQ(run("validate /no/such/file.pg").code, 2);
  EXPECT_EQ(run("count " + kDir + "/c5.pg --mode sideways").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
