// End-to-end checks that run the installed command-line binary. Skipped
// unless ARRLOG_CLI (path to the binary) and ARRLOG_DATA (fixture
// directory) are set; the cli_end_to_end ctest entry provides both.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

const char* cliBinary() { return std::getenv("ARRLOG_CLI"); }

std::string dataPath(const std::string& name) {
  const char* d = std::getenv("ARRLOG_DATA");
  REQUIRE(d != nullptr);
  return std::string(d) + "/" + name;
}

CliResult runCli(const std::string& args) {
  std::string cmd = std::string(cliBinary()) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli-exec");

TEST_CASE("analyze reports a free arrangement as json") {
  if (!cliBinary()) return;
  CliResult r = runCli("analyze " + dataPath("boolean3.arr") + " --json");
  REQUIRE(r.status == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["freeness"]["free"] == true);
  CHECK(doc["input"]["field"] == "fp:32003");
  CHECK(doc["lattice"]["rank"] == 3);
  // fixed top-level key order for byte-stable output
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"input", "lattice", "freeness", "pd", "tame",
                                         "purity", "wakefield", "ext"});

  CliResult again = runCli("analyze " + dataPath("boolean3.arr") + " --json");
  CHECK(again.out == r.out);  // deterministic bytes
}

TEST_CASE("analyze text report covers a non-free arrangement") {
  if (!cliBinary()) return;
  CliResult r = runCli("analyze " + dataPath("generic_4_3.arr"));
  REQUIRE(r.status == 0);
  CHECK(r.out.find("free") != std::string::npos);
  CHECK(r.out.find("not-free") != std::string::npos);
}

TEST_CASE("analyze rejects proportional rows") {
  if (!cliBinary()) return;
  CliResult r = runCli("analyze " + dataPath("bad_duplicate.arr"));
  CHECK(r.status == 2);
  CHECK(r.out.find("not reduced") != std::string::npos);
}

TEST_CASE("analyze reports parse errors with line numbers") {
  if (!cliBinary()) return;
  CliResult r = runCli("analyze " + dataPath("bad_coeff.arr"));
  CHECK(r.status == 2);
  CHECK(r.out.find("line 5") != std::string::npos);

  CliResult missing = runCli("analyze /nonexistent/file.arr");
  CHECK(missing.status == 2);
}

TEST_CASE("analyze warns about bad characteristic") {
  if (!cliBinary()) return;
  CliResult r = runCli("analyze " + dataPath("braid3.arr") + " --field fp:3 --json");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("warning") != std::string::npos);
  auto body = r.out.substr(r.out.find('{'));
  auto doc = nlohmann::ordered_json::parse(body);
  CHECK(doc["purity"] == "skipped-bad-characteristic");
  CHECK(doc["input"]["field"] == "fp:3");
}

TEST_CASE("oracle agrees on fixtures and honors empty ranges") {
  if (!cliBinary()) return;
  CliResult r = runCli("oracle " + dataPath("generic_4_3.arr") + " 0 3");
  CHECK(r.status == 0);
  CliResult empty = runCli("oracle " + dataPath("generic_4_3.arr") + " 2 1");
  CHECK(empty.status == 0);
}

TEST_CASE("suite validates its grid bounds") {
  if (!cliBinary()) return;
  CliResult bad = runCli("suite 3 4");
  CHECK(bad.status == 2);
  CliResult r = runCli("suite 4 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("series subcommand expands closed forms") {
  if (!cliBinary()) return;
  CliResult r = runCli("series T --coeff 5,3,1 --json");
  REQUIRE(r.status == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  // 2/t + 2
  auto terms = doc["coefficient"];
  REQUIRE(terms.size() == 2);
  CHECK(terms[0][0] == -1);
  CHECK(terms[0][1] == 2);
  CHECK(terms[1][0] == 0);
  CHECK(terms[1][1] == 2);

  CliResult q = runCli("series Q --ell 3 --p 1 --coeff 4 --json");
  REQUIRE(q.status == 0);
  auto qd = nlohmann::ordered_json::parse(q.out);
  REQUIRE(qd["coefficient"].size() == 1);
  CHECK(qd["coefficient"][0][0] == -1);
  CHECK(qd["coefficient"][0][1] == 1);

  CliResult bad = runCli("series X");
  CHECK(bad.status == 2);
}

TEST_CASE("unknown flags exit with the input error code") {
  if (!cliBinary()) return;
  CliResult r = runCli("analyze --definitely-not-a-flag");
  CHECK(r.status == 2);
}

TEST_SUITE_END();
