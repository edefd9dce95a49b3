#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args` through the shell, capturing stdout.
Run run(const std::string& args) {
  const std::string command = std::string(QSYS_CLI_PATH) + " " + args +
                              " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    r.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream out(name);
  out << text;
  return name;
}

}  // namespace

TEST_CASE("table checks") {
  const std::string good =
      write_temp("cli_r3.txt", "magma 3\n0 2 1\n2 1 0\n1 0 2\n");
  CHECK(run("check-table " + good).status == 0);
  CHECK(run("check-table --profile kei " + good).status == 0);
  const std::string bad =
      write_temp("cli_bad.txt", "magma 3\n0 0 1\n2 1 0\n1 0 2\n");
  const Run r = run("--format json check-table " + bad);
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["failure_counts"].contains("right-invertibility"));
  const std::string garbled = write_temp("cli_garbled.txt", "magma 3\n0 0\n");
  CHECK(run("check-table " + garbled).status == 2);
  CHECK(run("check-table no_such_file.txt").status == 2);
}

TEST_CASE("system checks") {
  CHECK(run("check-system systems:t3r3z2").status == 0);
  CHECK(run("check-system systems:t3r3z2 --kind g_family").status == 0);
  CHECK(run("check-system systems:axet-s3").status == 0);
  const Run broken = run("check-system systems:broken-cond4");
  CHECK(broken.status == 1);
  CHECK(broken.out.find("condition-4") != std::string::npos);
  CHECK(run("check-system systems:broken-cond4 --kind fw_system").status == 0);
  CHECK(run("check-system systems:t3r3z2 --kind nonsense").status == 1);
}

TEST_CASE("associated quandle and involutions") {
  const Run a = run("associated systems:t3r3z2");
  CHECK(a.status == 0);
  CHECK(a.out.rfind("magma 6\n", 0) == 0);
  const Run inv = run("--format json involutions systems:t3r3z2");
  CHECK(inv.status == 0);
  CHECK(nlohmann::json::parse(inv.out)["count"].get<int>() > 0);
}

TEST_CASE("colouring counts") {
  const Run r = run("color fixtures:theta systems:t3r3z2");
  CHECK(r.status == 0);
  CHECK(r.out == "12\n");
  CHECK(run("colour fixtures:mwf systems:t3r3z2 --mode generating").out ==
        "0\n");
  const Run j =
      run("--format json --jobs 2 color fixtures:mwuf systems:t3r3z2 --mode "
          "generating");
  CHECK(nlohmann::json::parse(j.out)["count"] == 18);
  CHECK(run("color fixtures:nonesuch systems:t3r3z2").status == 2);
}

TEST_CASE("fuzzing") {
  const Run ok = run("fuzz systems:t3r3z2 --scope handlebody --trials 10");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("mismatches 0") != std::string::npos);
  CHECK(run("fuzz systems:broken-cond4 --scope trivalent --trials 5").status ==
        1);
  const Run neg = run(
      "fuzz systems:broken-cond4 --scope trivalent --moves tr2 --unchecked "
      "--trials 50 --seed 1");
  CHECK(neg.status == 1);
  CHECK(neg.out.find("FAIL") != std::string::npos);
}

TEST_CASE("presentations and invariants") {
  const Run w = run("wirtinger fixtures:hopf -o cli_hopf.pres");
  CHECK(w.status == 0);
  const Run fp = run("homs cli_hopf.pres --fingerprint");
  CHECK(fp.status == 0);
  CHECK(fp.out.find("S3 18") != std::string::npos);
  CHECK(run("homs cli_hopf.pres groups:Z3").out == "9\n");
  CHECK(run("kauffman fixtures:theta").out == "constituents 3\n{[], [], []}\n");
  CHECK(run("kauffman fixtures:theta --invariant colour:systems:t3r3z2").out ==
        "constituents 3\n{[6], [6], [6]}\n");
}

TEST_CASE("fixtures and usage") {
  const Run list = run("fixtures list");
  CHECK(list.status == 0);
  CHECK(list.out.find("mwuf") != std::string::npos);
  CHECK(run("fixtures show unknot").out == "arcs 1\n");
  CHECK(run("").status == 2);
  CHECK(run("--help").status == 0);
  CHECK(run("--format yaml fixtures list").status == 2);
}
