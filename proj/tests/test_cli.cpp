#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

const std::string kCli = DEFCOL_CLI_PATH;
const std::string kFixtures = DEFCOL_FIXTURE_DIR;

int run(const std::string& args, std::string* output = nullptr) {
  std::string cmd = kCli + " " + args;
  if (output) {
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/defcol_cli_out.txt";
    int rc = std::system((cmd + " > " + tmp + " 2>/dev/null").c_str());
    std::ifstream in(tmp);
    output->assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::remove(tmp.c_str());
    return WEXITSTATUS(rc);
  }
  int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve exit codes") {
  CHECK(run("solve " + kFixtures + "/c5.edges --defects 2,4") == 0);
  CHECK(run("solve " + kFixtures + "/c5.edges --defects 0,0") == 1);
  CHECK(run("solve " + kFixtures + "/does_not_exist.edges --defects 2,4") == 2);
  CHECK(run("solve " + kFixtures + "/c5.edges --defects 2,oops") == 2);
}

TEST_CASE("solve emits a parsable coloring") {
  std::string out;
  REQUIRE(run("solve " + kFixtures + "/c5.edges --defects 2,4", &out) == 0);
  std::string tmp = "/tmp/defcol_test_coloring.txt";
  {
    std::ofstream f(tmp);
    f << out;
  }
  CHECK(run("verify " + kFixtures + "/c5.edges " + tmp + " --defects 2,4") == 0);
  CHECK(run("verify " + kFixtures + "/c5.edges " + tmp + " --defects 0,0") == 1);
  std::remove(tmp.c_str());
}

TEST_CASE("family verdicts") {
  CHECK(run("family " + kFixtures + "/c5.edges") == 0);
  std::string out;
  CHECK(run("family " + kFixtures + "/c6.edges", &out) == 1);
  CHECK(out.find("ForbiddenCycle") != std::string::npos);
}

TEST_CASE("scan-lemmas") {
  std::string out;
  CHECK(run("scan-lemmas " + kFixtures + "/c5.edges", &out) == 0);
  CHECK(out.find("lemma_2_4") != std::string::npos);
  CHECK(run("scan-lemmas " + kFixtures + "/c6.edges") == 1);
}

TEST_CASE("discharge builtin and DSL agree") {
  std::string builtin_out;
  std::string dsl_out;
  REQUIRE(run("discharge " + kFixtures + "/c5.edges --rules builtin", &builtin_out) == 0);
  REQUIRE(run("discharge " + kFixtures + "/c5.edges --rules " + kFixtures +
                  "/builtin_r1_r7.drules",
              &dsl_out) == 0);
  CHECK(builtin_out.find("\"initial\": \"-8\"") != std::string::npos);
  CHECK(builtin_out.find("\"final\": \"-8\"") != std::string::npos);
  CHECK(builtin_out.find("-3/2") != std::string::npos);
  CHECK(dsl_out.find("\"final\": \"-8\"") != std::string::npos);

  CHECK(run("discharge " + kFixtures + "/c5.edges --rules " + kFixtures + "/bad.drules") == 2);
  CHECK(run("discharge " + kFixtures + "/does_not_exist --rules builtin") == 2);
}

TEST_CASE("corpus-run summarizes and keeps going") {
  std::string out;
  int rc = run("corpus-run " + kFixtures + "/c5.edges " + kFixtures + "/c6.edges " + kFixtures +
                   "/theta_2_3_5.edges --defects 2,4 --jobs 1",
               &out);
  CHECK(rc == 0);
  CHECK(out.find("\"family_members\": 2") != std::string::npos);
  CHECK(out.find("\"theorem_violations\": 0") != std::string::npos);

  // a corrupt file is logged, the rest still runs
  int rc2 = run("corpus-run " + kFixtures + "/bad.drules " + kFixtures + "/c5.edges", &out);
  CHECK(rc2 == 0);
  CHECK(out.find("\"graphs\": 1") != std::string::npos);
}

TEST_CASE("conjecture sweep over the tiny corpus") {
  std::string out;
  CHECK(run("conjecture-sweep " + kFixtures + "/c5.edges " + kFixtures + "/c6.edges --format csv",
            &out) == 0);
  CHECK(out.find("d1,d2,family_members,satisfiable,unsatisfiable") != std::string::npos);
  CHECK(out.find("2,4,1,1,0") != std::string::npos);
}

TEST_CASE("gen-small round trips through corpus-run") {
  std::string plc = "/tmp/defcol_gen4.plc";
  REQUIRE(run("gen-small --max-n 4 -o " + plc) == 0);
  std::string out;
  CHECK(run("corpus-run " + plc + " --defects 2,4", &out) == 0);
  // n<=4 family members: K1, K2, P3, P4, K1_3 (all forests at this size)
  CHECK(out.find("\"theorem_violations\": 0") != std::string::npos);
  std::remove(plc.c_str());
}

}  // TEST_SUITE
