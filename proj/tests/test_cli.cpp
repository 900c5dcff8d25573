#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

const char* cli_path() {
  const char* p = std::getenv("GARSIDE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "GARSIDE_CLI must point at the CLI binary");
  return p;
}

// Runs the CLI with a shell-quoted argument string, capturing stdout+stderr.
RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) {
    cmd = "printf '%b' '" + stdin_text + "' | ";
  }
  cmd += std::string("'") + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kExample = R"({"n":4,"perm":[4,2,3,1],"exps":[0,-1,2,-1]})";

}  // namespace

TEST_CASE("reduce emits the geodesic of the worked example byte-exactly") {
  RunResult r = run("reduce --n 4 '" + kExample + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "t[0] s3 t[2] t[0] s4 s3 t[-1]\n");

  RunResult len = run("length '" + kExample + "'");
  CHECK(len.exit_code == 0);
  CHECK(len.output == "7\n");
}

TEST_CASE("length of the identity") {
  RunResult r = run(R"(length --n 3 '{"n":3,"perm":[1,2,3],"exps":[0,0,0]}')");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n");
}

TEST_CASE("reduce output re-parsed through eval reproduces the matrix") {
  RunResult word = run("reduce --n 4 '" + kExample + "'");
  REQUIRE(word.exit_code == 0);
  std::string w = word.output.substr(0, word.output.size() - 1);
  RunResult back = run("eval --n 4 '" + w + "'");
  CHECK(back.exit_code == 0);
  CHECK(nlohmann::json::parse(back.output) == nlohmann::json::parse(kExample));
}

TEST_CASE("wp exit codes express equality") {
  CHECK(run("wp --n 3 --k 1 't[2] t[1]' == 't[5] t[4]'").exit_code == 0);
  CHECK(run("wp --n 3 --k 1 't[2] t[1]' 't[5] t[4]'").output == "true\n");
  RunResult neq = run("wp --n 2 --k 1 't[0] t[0]' == 't[1] t[1]'");
  CHECK(neq.exit_code == 1);
  CHECK(neq.output == "false\n");
  CHECK(run("wp --n 3 --k 1 't[0]' 'xx' 't[1]'").exit_code == 2);
}

TEST_CASE("parse errors report the token and its position, exit 2") {
  RunResult r = run("reduce --n 3 't[1] q7 s3'");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("q7") != std::string::npos);
  CHECK(r.output.find("token 2") != std::string::npos);
  CHECK(r.output.find("offset 5") != std::string::npos);

  CHECK(run("length --n 2 's5'").exit_code == 2);
  CHECK(run("length 't[1]'").exit_code == 2);          // word needs --n
  CHECK(run("frobnicate --n 2 't[1]'").exit_code == 2);  // unknown subcommand
  CHECK(run(R"(length '{"n":2,"perm":[1,1],"exps":[0,0]}')").exit_code == 2);
}

TEST_CASE("json envelopes") {
  RunResult r = run("length --json --n 3 's3 s3'");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["ok"] == true);
  CHECK(j["result"] == 0);

  RunResult f = run("wp --json --n 2 --k 1 't[0]' 't[1]'");
  CHECK(f.exit_code == 1);
  CHECK(nlohmann::json::parse(f.output)["result"] == false);

  RunResult e = run("length --json --n 2 'zz'");
  CHECK(e.exit_code == 2);
  nlohmann::json je = nlohmann::json::parse(e.output);
  CHECK(je["ok"] == false);
  CHECK(je["error"].is_string());

  RunResult nf = run("nf --json --n 2 --k 1 't[0]^-1'");
  CHECK(nf.exit_code == 0);
  nlohmann::json jn = nlohmann::json::parse(nf.output);
  CHECK(jn["result"]["delta"] == -1);
  CHECK(jn["result"]["factors"] == nlohmann::json::array({"t[1]"}));
}

TEST_CASE("member, meet, join and nf round out the lattice surface") {
  CHECK(run(R"(member --k 1 '{"n":2,"perm":[1,2],"exps":[-1,1]}')").exit_code == 0);
  RunResult out_of = run(R"(member --k 1 '{"n":2,"perm":[1,2],"exps":[-3,3]}')");
  CHECK(out_of.exit_code == 1);
  CHECK(out_of.output == "false\n");
  CHECK(run(R"(member --k 3 '{"n":2,"perm":[1,2],"exps":[-3,3]}')").exit_code == 0);

  CHECK(run("meet --n 2 --k 1 't[0]' 't[5]'").output == "e\n");
  CHECK(run("join --n 2 --k 1 't[0]' 't[5]'").output == "t[1] t[0]\n");
  CHECK(run("meet --side right --n 2 --k 1 't[0]' 't[5]'").output == "e\n");
  // every atom divides delta, even with a large index
  CHECK(run("join --n 2 --k 1 't[9]' 't[9]'").output == "t[9]\n");
  // diag(x^-3, x^3) divides delta^3 but not delta
  CHECK(run("meet --n 2 --k 1 't[3] t[0]' 't[0]'").exit_code == 2);

  CHECK(run("nf --n 2 --k 1 't[1] t[0]'").output == "delta^1\n");
  CHECK(run("nf --n 2 --k 1 't[0]^-1'").output == "delta^-1 | t[1]\n");
  CHECK(run("nf --n 2 --k 1 'e'").output == "delta^0\n");
}

TEST_CASE("batch mode reads one operand per line") {
  RunResult r = run("length --n 3 -", "t[0] t[5]\\ns3 t[1] s3 t[1]\\ne\\n");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n2\n0\n");

  RunResult mixed = run("member --n 2 --k 1 -", "t[4]\\nt[3] t[0]\\n");
  CHECK(mixed.exit_code == 1);
  CHECK(mixed.output == "true\nfalse\n");
}

TEST_CASE("verify suites run from the CLI") {
  RunResult ok = run("verify --suite monoid --n 3 --k 2 --bound 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("ok") != std::string::npos);
  CHECK(run("verify --suite cll --n 3 --k 1").exit_code == 0);
  CHECK(run("verify --suite shi --n 4").exit_code == 0);
  CHECK(run("verify --suite phi --n 3 --k 2").exit_code == 0);
  CHECK(run("verify --suite k-iso --n 3").exit_code == 0);
  CHECK(run("verify --suite nonsense --n 3").exit_code == 2);
}

TEST_CASE("dot emits a collapsed divisor diagram") {
  RunResult r = run("dot --n 2 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph") != std::string::npos);
  CHECK(r.output.find("t[*]") != std::string::npos);
  CHECK(r.output.find("t[2] t[0]") != std::string::npos);  // the delta node
  RunResult again = run("dot --n 2 --k 2");
  CHECK(again.output == r.output);  // deterministic
}
