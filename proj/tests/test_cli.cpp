// Drives the CLI binary end to end: output bytes, exit codes, file output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const char* path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(FH_CLI_PATH) + " " + args + " >cli_stdout.tmp 2>cli_stderr.tmp";
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp("cli_stdout.tmp");
  result.err = slurp("cli_stderr.tmp");
  std::remove("cli_stdout.tmp");
  std::remove("cli_stderr.tmp");
  return result;
}

}  // namespace

TEST_CASE("gen emits the matrix in each format") {
  RunResult csv = run_cli("gen 1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "1\n");

  RunResult csv2 = run_cli("gen 2");
  CHECK(csv2.exit_code == 0);
  CHECK(csv2.out == "1,1/2\n1/2,1/6\n");

  RunResult json = run_cli("gen 2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out ==
        "{\"entries\":[[\"1\",\"1/2\"],[\"1/2\",\"1/6\"]],"
        "\"kind\":\"hankel\",\"n\":2}\n");

  RunResult mm = run_cli("gen 2 --format mm");
  CHECK(mm.exit_code == 0);
  CHECK(mm.out.substr(0, 41) == "%%MatrixMarket matrix array real general\n");
}

TEST_CASE("invert emits the exact inverse") {
  RunResult csv = run_cli("invert 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "-2,6\n6,-12\n");

  for (const char* method : {"closed", "gover-fact", "gover-binom", "gauss"}) {
    RunResult result = run_cli(std::string("invert 3 --method ") + method);
    CHECK(result.exit_code == 0);
    CHECK(result.out == "3,-24,60\n-24,168,-360\n60,-360,720\n");
  }
}

TEST_CASE("verify prints one line per order and sets the exit code") {
  RunResult ok = run_cli("verify 10");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out ==
        "n=1 PASS\nn=2 PASS\nn=3 PASS\nn=4 PASS\nn=5 PASS\n"
        "n=6 PASS\nn=7 PASS\nn=8 PASS\nn=9 PASS\nn=10 PASS\n");

  RunResult corrupted = run_cli("verify 3 --inject-failure");
  CHECK(corrupted.exit_code == 1);
  CHECK(corrupted.out == "n=1 FAIL\nn=2 FAIL\nn=3 FAIL\n");
}

TEST_CASE("identities reports each family and sets the exit code") {
  RunResult ok = run_cli("identities 4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("reflection PASS") != std::string::npos);
  CHECK(ok.out.find("chu-vandermonde PASS") != std::string::npos);
  CHECK(ok.out.find("row-sum PASS") != std::string::npos);
  CHECK(ok.out.find("delta-sum PASS") != std::string::npos);

  RunResult corrupted = run_cli("identities 2 --inject-failure");
  CHECK(corrupted.exit_code == 1);
  CHECK(corrupted.out.find("delta-sum FAIL") != std::string::npos);
}

TEST_CASE("condition prints exact and approximate values") {
  RunResult result = run_cli("condition 3");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "1,1,1\n2,27,27\n3,1900,1900\n");
}

TEST_CASE("floatstudy emits reports") {
  RunResult csv = run_cli("floatstudy 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.substr(0, 8) == "1,1,0,0\n");

  RunResult json = run_cli("floatstudy 2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"kind\":\"report\"") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("gen").exit_code == 2);
  CHECK(run_cli("gen 0").exit_code == 2);
  CHECK(run_cli("gen -4").exit_code == 2);
  CHECK(run_cli("gen 2 --format yaml").exit_code == 2);
  CHECK(run_cli("gen 2 --no-such-flag").exit_code == 2);
  CHECK(run_cli("invert 2 --method magic").exit_code == 2);
  CHECK(run_cli("definitely-not-a-command 3").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output is byte-deterministic") {
  for (const std::string args :
       {std::string("invert 6 --format json"), std::string("gen 5 --format mm"),
        std::string("floatstudy 3 --format csv"), std::string("condition 4")}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
  }
}

TEST_CASE("--output writes the same bytes to a file") {
  RunResult direct = run_cli("invert 4 --format csv");
  RunResult redirected = run_cli("invert 4 --format csv --output cli_file.tmp");
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp("cli_file.tmp") == direct.out);
  std::remove("cli_file.tmp");

  // Unwritable path fails loudly.
  RunResult bad = run_cli("invert 4 --output /no/such/dir/file.csv");
  CHECK(bad.exit_code == 2);
  CHECK(!bad.err.empty());
}
