#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "sprigid/report.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string &args) {
  const std::string command = std::string(SPRIGID_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string golden(const std::string &name) {
  return read_file(std::string(SPRIGID_REPO_DIR) + "/tests/golden/" + name);
}

}  // namespace

TEST_CASE("cli text reports match the golden files", "[cli]") {
  CHECK(run_cli("tables C2").output == golden("tables_C2.txt"));
  CHECK(run_cli("tables C3").output == golden("tables_C3.txt"));
  CHECK(run_cli("tables C4").output == golden("tables_C4.txt"));
  CHECK(run_cli("tables C5").output == golden("tables_C5.txt"));
  CHECK(run_cli("uniqueness C2").output == golden("uniqueness_C2.txt"));
  CHECK(run_cli("uniqueness C3").output == golden("uniqueness_C3.txt"));
  CHECK(run_cli("uniqueness C4").output == golden("uniqueness_C4.txt"));
  CHECK(run_cli("scan --max-rank 6").output == golden("scan_rank6.txt"));
}

TEST_CASE("cli exit codes distinguish usage, verdict, and success", "[cli]") {
  CHECK(run_cli("tables C2").exit_code == 0);
  CHECK(run_cli("uniqueness C17").exit_code == 0);
  CHECK(run_cli("spectrum C2 --count 4").exit_code == 0);
  CHECK(run_cli("verify-parity 5/2 --trials 10 --seed 3").exit_code == 0);
  // assertion ran and failed: the method cannot certify A2
  CHECK(run_cli("uniqueness A2").exit_code == 2);
  // usage errors
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("tables").exit_code == 1);
  CHECK(run_cli("tables B2").exit_code == 1);
  CHECK(run_cli("tables Q9").exit_code == 1);
  CHECK(run_cli("tables A2").exit_code == 1);
  CHECK(run_cli("frobnicate C2").exit_code == 1);
  CHECK(run_cli("tables C2 --format yaml").exit_code == 1);
  CHECK(run_cli("verify-gss 9").exit_code == 1);
  CHECK(run_cli("verify-parity 7/2").exit_code == 1);
  CHECK(run_cli("spectrum C2 --count 0").exit_code == 1);
}

TEST_CASE("cli json output parses and carries the same content", "[cli]") {
  const RunResult json = run_cli("uniqueness C4 --format json");
  REQUIRE(json.exit_code == 0);
  const sprigid::Report report = sprigid::parse_report(json.output);
  CHECK(report.command == "uniqueness");
  CHECK(report.inputs.at("group") == "C4");
  CHECK(report.rows.size() == 2);
  bool solution_count_seen = false, surviving_seen = false, conclusion_seen = false;
  for (const auto &v : report.verdicts) {
    if (v == "solution_count=2") solution_count_seen = true;
    if (v == "surviving_count=1") surviving_seen = true;
    if (v == "conclusion=rigid_by_method") conclusion_seen = true;
  }
  CHECK(solution_count_seen);
  CHECK(surviving_seen);
  CHECK(conclusion_seen);
}

TEST_CASE("cli csv output uses crlf rows", "[cli]") {
  const RunResult csv = run_cli("tables C2 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.rfind("weight,casimir,dim,fs_type,note", 0) == 0);
  CHECK(csv.output.find("\r\n") != std::string::npos);
  CHECK(csv.output.find("\"(2,1)\",15,16,quaternionic,") != std::string::npos);
}

TEST_CASE("cli output is deterministic across runs", "[cli]") {
  const std::string a = run_cli("verify-gss 2 --trials 20 --seed 42 --format json").output;
  const std::string b = run_cli("verify-gss 2 --trials 20 --seed 42 --format json").output;
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("spectrum count one gives the constants line", "[cli]") {
  const RunResult r = run_cli("spectrum C2 --count 1 --format json");
  REQUIRE(r.exit_code == 0);
  const sprigid::Report report = sprigid::parse_report(r.output);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].at("eigenvalue") == "0");
  CHECK(report.rows[0].at("multiplicity") == 1);
}
