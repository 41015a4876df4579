#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CCRING_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ccring_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, CatalogListsRings) {
  auto r = run("catalog");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "z2q8"));
  EXPECT_TRUE(has_line(r.out, "ex52"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("report no-such-ring").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("report").code, 2);
  EXPECT_EQ(run("lattice z4 --kind sideways").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("--strict --max-ideals 4 report z2q8").code, 3);
  EXPECT_EQ(run("--max-ideals 4 report z2q8").code, 0);
  EXPECT_EQ(run("--max-ideals 4 lattice z2q8").code, 3);
}

TEST(Cli, MalformedFileIsInputError) {
  auto path = temp_file("bad.ring");
  std::ofstream(path) << "shape 4\none 1\nmul 0 0 -> 7\n";
  EXPECT_EQ(run("report " + path.string()).code, 2);
  std::ofstream(path) << "shape 2\none 1\n";  // not a ring
  EXPECT_EQ(run("report " + path.string()).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, QuotientByGroupSum) {
  auto r = run("quotient z2q8 --gens group-sum report");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "cardinality=128")) << r.out;
  EXPECT_TRUE(has_line(r.out, "centrally_essential=false;witness=e+a+b+ab")) << r.out;
  EXPECT_EQ(run("quotient z2q8 --gens group_sum report").out, r.out);
}

TEST(Cli, QuotientByLeastIdealIsCommutative) {
  auto r = run("quotient ex52 --gens least report");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "commutative=true")) << r.out;
}

TEST(Cli, ZeroIdealGivesTheRingItself) {
  EXPECT_EQ(run("quotient z2d4 --gens 0 report").out, run("report z2d4").out);
  EXPECT_EQ(run("quotient z2d4 --gens 1 report").code, 2);
}

TEST(Cli, SuiteListing) {
  auto r = run("paper-suite --list");
  EXPECT_EQ(r.code, 0);
  EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 12);
}

TEST(Cli, RingspecRoundTripThroughFile) {
  auto spec = run("ringspec z2d4");
  ASSERT_EQ(spec.code, 0);
  auto path = temp_file("z2d4.ring");
  std::ofstream(path) << spec.out;
  auto again = run("ringspec " + path.string());
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(again.out, spec.out);
  // a ring file carries no ideal names, so only the cardinality and verdict lines are compared
  auto a = run("report " + path.string()), b = run("report z2d4");
  for (const char* line : {"cardinality=256", "center_size=32", "centrally_essential=true", "lie_class=2"}) {
    EXPECT_TRUE(has_line(a.out, line)) << line;
    EXPECT_TRUE(has_line(b.out, line)) << line;
  }
  std::filesystem::remove(path);
}

TEST(Cli, QuotientExportReloads) {
  auto spec = run("quotient z2q8 --gens group-sum export");
  ASSERT_EQ(spec.code, 0);
  auto path = temp_file("quot.ring");
  std::ofstream(path) << spec.out;
  auto r = run("report " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "cardinality=128")) << r.out;
  EXPECT_TRUE(r.out.find("centrally_essential=false") != std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, LatticeToFile) {
  auto path = temp_file("z4.dot");
  auto r = run("lattice z4 --dot " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "ideals=3")) << r.out;
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "digraph lattice {");
  std::filesystem::remove(path);
}

TEST(Cli, PrettyReport) {
  auto r = run("--pretty report z4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find('='), std::string::npos);
}
