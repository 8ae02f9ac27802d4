#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braceforge/brace.hpp"
#include "braceforge/classify.hpp"
#include "braceforge/oracle.hpp"
#include "support.hpp"

namespace bf = braceforge;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string command = std::string("'") + BRACEFORGE_CLI + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("braceforge-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return "'" + (dir_ / name).string() + "'"; }

  fs::path dir_;
};

TEST_F(Cli, EnumerateCounts) {
  for (const auto& [group, count] :
       std::vector<std::pair<std::string, std::size_t>>{{"4", 2}, {"2,2", 2}, {"2", 1}, {"3", 1}}) {
    const Result r = run("enumerate --group " + group + " --prime " +
                         (group == "3" ? "3" : "2"));
    ASSERT_EQ(r.status, 0) << group;
    EXPECT_EQ(bf::parse_class_list(r.out).records.size(), count) << group;
  }
}

TEST_F(Cli, EnumerateIsDeterministic) {
  const Result a = run("enumerate --group 2,4 --jobs 1");
  const Result b = run("enumerate --group 2,4 --jobs 4");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(bf::parse_class_list(a.out).records.size(), 14u);
}

TEST_F(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run("enumerate --group 4 --prime 3").status, 1);
  EXPECT_EQ(run("enumerate --group 6").status, 1);
  EXPECT_EQ(run("report --in " + path("missing.classes")).status, 3);
  spit(dir_ / "bad.classes", "BRACEFORGE-CLASSES 1\n4\nnot a record\ncount=1\n");
  EXPECT_EQ(run("report --in " + path("bad.classes")).status, 3);
  EXPECT_EQ(run("oracle --group 4,4,4").status, 4);
  EXPECT_NE(run("report").status, 0);
}

TEST_F(Cli, Report) {
  ASSERT_EQ(run("enumerate --group 4 --out " + path("c4.classes")).status, 0);
  const Result r = run("report --in " + path("c4.classes") + " --format tsv");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].substr(16), "\t1");
  EXPECT_EQ(lines[1].substr(16), "\t1");
  EXPECT_LT(lines[0], lines[1]);
  EXPECT_EQ(lines[2], "# total=2");

  spit(dir_ / "names.tsv", lines[0].substr(0, 16) + "\tC4\n" + lines[1].substr(0, 16) + "\tV4\n");
  const Result named = run("report --in " + path("c4.classes") + " --id-map " + path("names.tsv"));
  EXPECT_EQ(named.out, "C4\t1\nV4\t1\n# total=2\n");

  spit(dir_ / "empty.classes", "BRACEFORGE-CLASSES 1\n4\ncount=0\n");
  EXPECT_EQ(run("report --in " + path("empty.classes")).out, "# total=0\n");
}

TEST_F(Cli, VerifyDetectsTampering) {
  ASSERT_EQ(run("enumerate --group 2,2 --out " + path("v4.classes")).status, 0);
  EXPECT_EQ(run("verify --in " + path("v4.classes") + " --seed 7").status, 0);
  std::string text = slurp(dir_ / "v4.classes");
  // Class lengths are 1 and 3; make the second one wrong.
  const std::size_t at = text.find("\t3\t");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 3, "\t2\t");
  spit(dir_ / "tampered.classes", text);
  EXPECT_EQ(run("verify --in " + path("tampered.classes")).status, 2);

  // The same class twice.
  std::string twice = slurp(dir_ / "v4.classes");
  const std::size_t second = twice.find('\n', twice.find('\n') + 1) + 1;
  const std::string record = twice.substr(second, twice.find('\n', second) + 1 - second);
  twice.insert(second, record);
  twice.replace(twice.find("count=2"), 7, "count=3");
  spit(dir_ / "twice.classes", twice);
  EXPECT_EQ(run("verify --in " + path("twice.classes")).status, 2);
}

TEST_F(Cli, ClassifyMatchesEnumerate) {
  const bf::GroupSpec s = testing_support::spec({2, 4});
  std::string input = "# oracle output\n";
  for (const auto& h : bf::brute_force_regular_oracle(s, 2))
    input += bf::format_hol_list(bf::generating_set(s, h)) + "\n";
  spit(dir_ / "subgroups.txt", input);
  const Result classified = run("classify --group 2,4 --jobs 3 --in " + path("subgroups.txt"));
  ASSERT_EQ(classified.status, 0);
  EXPECT_EQ(classified.out, run("enumerate --group 2,4").out);

  spit(dir_ / "not-regular.txt", "0,0 | 1,0;0,3\n");
  EXPECT_EQ(run("classify --group 2,4 --in " + path("not-regular.txt")).status, 2);
}

TEST_F(Cli, OracleCompare) {
  for (const std::string group : {"4", "2,4", "3,3"}) {
    const Result r = run("oracle --group " + group);
    EXPECT_EQ(r.status, 0) << group;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }
}

TEST_F(Cli, BracesOutput) {
  ASSERT_EQ(run("enumerate --group 4 --out " + path("c4.classes")).status, 0);
  const Result r = run("braces --in " + path("c4.classes"));
  ASSERT_EQ(r.status, 0);
  std::size_t blocks = 0;
  for (std::size_t start = 0; start < r.out.size();) {
    std::size_t end = r.out.find("\n\n", start);
    if (end == std::string::npos) end = r.out.size();
    const bf::RegularSubgroup lambda = bf::parse_brace_file(r.out.substr(start, end - start + 1));
    EXPECT_TRUE(bf::verify_lambda_cocycle(lambda));
    ++blocks;
    start = end + 2;
  }
  EXPECT_EQ(blocks, 2u);
}

TEST_F(Cli, ResumeAfterHalt) {
  const Result reference = run("enumerate --group 2,2,2");
  ASSERT_EQ(reference.status, 0);
  const std::string ckpt = path("ckpt");
  EXPECT_NE(run("enumerate --group 2,2,2 --checkpoint-dir " + ckpt + " --halt-at-layer 1").status, 0);
  EXPECT_TRUE(fs::exists(dir_ / "ckpt" / "layer-1.ckpt"));
  EXPECT_FALSE(fs::exists(dir_ / "ckpt" / "layer-2.ckpt"));
  const Result resumed = run("enumerate --group 2,2,2 --checkpoint-dir " + ckpt + " --resume");
  ASSERT_EQ(resumed.status, 0);
  EXPECT_EQ(resumed.out, reference.out);

  std::string text = slurp(dir_ / "ckpt" / "layer-1.ckpt");
  text.replace(text.find("count="), 6, "count=9");
  spit(dir_ / "ckpt" / "layer-1.ckpt", text);
  fs::remove(dir_ / "ckpt" / "layer-2.ckpt");
  for (int k = 3; k < 32; ++k) fs::remove(dir_ / "ckpt" / ("layer-" + std::to_string(k) + ".ckpt"));
  EXPECT_EQ(run("enumerate --group 2,2,2 --checkpoint-dir " + ckpt + " --resume").status, 3);
}

}  // namespace
