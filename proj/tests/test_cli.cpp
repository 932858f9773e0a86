#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "tlbd/json_io.hpp"
#include "tlbd/jw.hpp"

using namespace tlbd;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TLBD_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("theta subcommand") {
  RunResult r = run_cli("theta 2 1 1 --eps 1 --method both");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q^-2 + q^2") != std::string::npos);
  CHECK(r.out.find("[q=1: 2]") != std::string::npos);

  // non-admissible: the recursion prints 0, the oracle refuses
  CHECK(run_cli("theta 1 0 2 --method rec").exit_code == 0);
  CHECK(run_cli("theta 1 0 2 --method matrix").exit_code == 1);

  RunResult j = run_cli("theta 1 1 2 --format json");
  CHECK(j.exit_code == 0);
  Json parsed = Json::parse(j.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed[0].at("theta") == "q^-2 + 1 + q^2");
  CHECK(parsed[0].at("theta_at_1") == "3");
}

TEST_CASE("decompose subcommand") {
  RunResult r = run_cli("decompose --labels \"2,-2\" --tensor \"2,2\" --eps 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{6:1,4:2,2:4,0:4,-2:4,-4:2,-6:1}\n");
  RunResult j = run_cli("decompose --labels \"2,-2\" --tensor \"2,2\" --format json");
  CHECK(j.exit_code == 0);
  CHECK(Json::parse(j.out).at("mult").at("0") == 4);
}

TEST_CASE("basis subcommand") {
  RunResult r = run_cli("basis --hom 2 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count=6") != std::string::npos);
  RunResult j = run_cli("basis --hom 0 2 --format json");
  CHECK(j.exit_code == 0);
  Json parsed = Json::parse(j.out);
  CHECK(parsed.at("count") == 2);
  CHECK(parsed.at("diagrams").size() == 2);
}

TEST_CASE("trace subcommand") {
  RunResult r = run_cli("trace --n 2 --eps 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q^-2 + q^2\n");
  RunResult r3 = run_cli("trace --n 3 --eps -1");
  CHECK(r3.out == "q^-3 + q^3\n");
}

TEST_CASE("jw subcommand output is deterministic and json round-trips") {
  RunResult a = run_cli("jw --kind d --n 3");
  RunResult b = run_cli("jw --kind d --n 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("terms=") != std::string::npos);

  RunResult j = run_cli("jw --kind b+ --n 2 --format json");
  CHECK(j.exit_code == 0);
  CHECK(morphism_from_json(Json::parse(j.out)) == jw(ProjectorKind::Bplus, 2, 1));
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify --suite relations --max-n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("suite relations:") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("jw --n 2 --kind nonsense").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("jw").exit_code == 1);           // missing required --n
  CHECK(run_cli("theta 1 2").exit_code == 1);    // missing positional
  CHECK(run_cli("--help").exit_code == 0);
}
