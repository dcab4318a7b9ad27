#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "cqwa/json_io.hpp"

namespace {
struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CQWA_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}
}  // namespace

TEST_CASE("nf agrees across bracketings") {
  Run a = run("nf --family L --n 3 'x3*x2*x1'");
  Run b = run("nf --family L --n 3 '(x3*x2)*x1'");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == "q^-1*x1*x2*x3 + (1 - q^-1)*x1 + (1 - q^-1)*x3\n");
}

TEST_CASE("exit codes") {
  CHECK(run("suite --name structure --family L --n 3").status == 0);
  CHECK(run("suite --name cluster --n 3").status == 0);
  Run bad = run("nf --family L --n 3 'x1 x2'");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("offset 3") != std::string::npos);
  CHECK(run("suite --name cluster --n 4").status == 2);
}

TEST_CASE("suite json") {
  Run r = run("suite --name embedding --n 3 --json");
  REQUIRE(r.status == 0);
  auto j = cqwa::Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() > 5);
}

TEST_CASE("mutate prints the new variable") {
  Run r = run("mutate --quiver P --n 5 --at 0");
  CHECK(r.status == 0);
  CHECK(r.out.find("var 0 = q*w0^-1*w1*w5 + w0^-1") != std::string::npos);
  Run j = run("mutate --quiver P --n 3 --at 0,1 --json");
  CHECK(j.status == 0);
  CHECK(cqwa::Json::parse(j.out)["d"] == 2);
}

TEST_CASE("bracket on a preset") {
  Run r = run("bracket --preset FL --n 3 x1 x2");
  CHECK(r.status == 0);
  CHECK(r.out == "x1*x2 - 1\n");
}

TEST_CASE("classify from a file") {
  const std::string good = std::string(CQWA_GOLDEN_DIR) + "/scrambled_linear3.json";
  Run ok = run("classify --file " + good);
  CHECK(ok.status == 0);
  CHECK(ok.out.find("verified") != std::string::npos);
  const std::string path = "cli_test_bad.json";
  {
    // q_12 = q, q_13 = 1, q_23 = 1 with r_12 = 1 - q: connected only through one edge
    std::ofstream f(path);
    f << R"({"n":3,"q":[[1,[[2,"1"]],1],[[[-2,"1"]],1,1],[1,1,1]],"r":[[0,[[0,"1"],[2,"-1"]],0],[[[0,"-1"],[2,"1"]],0,0],[0,0,0]]})";
  }
  CHECK(run("classify --file " + path).status == 2);
  {
    std::ofstream f(path);
    cqwa::Matrix<cqwa::LaurentScalar> q = cqwa::preset_cyclic(3).q_table(), r = cqwa::preset_cyclic(3).r_table();
    r(0, 2) = r(0, 2) * cqwa::LaurentScalar(2);
    f << cqwa::to_json(cqwa::Presentation::from_upper(q, r)).dump();
  }
  Run obstructed = run("classify --file " + path);
  CHECK(obstructed.status == 1);
  CHECK(obstructed.out.find("not normalisable") != std::string::npos);
  CHECK(run("classify --file does_not_exist.json").status == 2);
}
