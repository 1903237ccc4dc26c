#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "hankel/hankel.hpp"
#include "hankel/serialize.hpp"

#ifndef HANKEL_CLI_PATH
#error "HANKEL_CLI_PATH must name the built command-line binary"
#endif

using namespace hankel;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(HANKEL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("det") {
  CHECK(run("det --family 3,1 --n 1 --x symbolic").out == "5 - 2x\n");
  CHECK(run("det --family 2,1 --n 3 --x 2").out == "-7\n");
  CHECK(run("det --family 3,1 --n 0").out == "1\n");
  CHECK(run("det --family 3,1 --n 1 --variant K").out == "36 - 9x - 2x^2\n");
  CHECK(run("det --family 3,1 --n 1..2").out == "n=1: 5 - 2x\nn=2: 74 - 60x + 12x^2\n");
}

TEST_CASE("factor") {
  auto r = run("factor --family 3,1 --n 10 --x 0");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "2^2·7^2·37·41^2·43^3·47^2·53 · 41740796329");
  CHECK(r.out.find("41740796329: prime") != std::string::npos);
  CHECK(run("factor --family 3,2 --n 10").out == "2^2·3·7^3·37·41^2·43^3·47^3·53^2·59·61\n");
  CHECK(run("factor --family 3,1 --n 10 --x 1").out == "2^2·3·7^3·37·41^2·43^3·47^3·53^2·59·61\n");
  CHECK(run("factor --family 3,1 --n 0").out == "1\n");
  CHECK(run("factor --family 3,1 --n 2 --x symbolic").status == 2);
  CHECK(run("factor --family 3,1 --n 2 --bound 1").status == 2);
}

TEST_CASE("series") {
  CHECK(run("series --t --beta 3 --order 3").out == "1, 1, 3, 12\n");
  CHECK(run("series --f --family 2,1 --form closed --order 1").out == "[1], [3, 1]\n");
  CHECK(run("series --tau --order 2").out == "1, 3/2, 5\n");
  CHECK(run("series --f --family 3,1 --form closed21 --order 1").status == 2);
  CHECK(run("series --t --tau --order 1").status == 2);
  auto j = Json::parse(run("--format json series --f --family 3,1 --order 3").out);
  auto s = series_from_json(j);
  for (int k = 0; k <= 3; ++k) CHECK(s[k] == a_poly(FamilyId::binom(3, 1), k));
}

TEST_CASE("verify and the exit-status contract") {
  CHECK(run("verify --check de1 --n 1..12").status == 0);
  CHECK(run("verify --check dodgson --family 2,1 --n 1..8").status == 0);
  auto fig = run("--format json verify --check fig4 --n 1..8");
  CHECK(fig.status == 0);
  auto rows = Json::parse(fig.out);
  CHECK(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row["status"] != "fail");
    CHECK(row["check"] == "fig4");
  }
  CHECK(rows[1]["status"] == "finding");
  CHECK(run("verify --check fixture-fail --n 0").status == 1);
  CHECK(run("verify --check fixture-finding --n 0..3").status == 0);
  CHECK(run("verify --check fixture-finding,fixture-fail --n 0").status == 1);
  CHECK(run("verify --check degree --family aex --n 1").status == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify --check no-such-check --n 1").status == 2);
  CHECK(run("det --family 7 --n 1").status == 2);
  CHECK(run("det --family 3,1 --n 5..3").status == 2);
  CHECK(run("det --family 3,1 --n -1").status == 2);
  CHECK(run("det --family 3,1 --n 1 --x 1/0").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("--format yaml det --family 3,1").status == 2);
  CHECK(run("verify --check de1 --family 2,1 --n 1").status == 2);
}

TEST_CASE("json and csv output") {
  auto j = Json::parse(run("--format json det --family 2,1 --n 4").out);
  CHECK(j["family"] == "2,1");
  CHECK(poly_from_json(j["value"]) == hankel_det(FamilyId::binom(2, 1), 4));
  auto csv = run("--format csv verify --check P21at2 --n 0..2").out;
  CHECK(first_line(csv) == "check,family,n,x,status,detail");
  CHECK(csv.find("P21at2,\"2,1\",2,2,pass,") != std::string::npos);
  auto sweep = run("--format json sweep --family 2,1 --n 1..3");
  CHECK(sweep.status == 0);
  CHECK(Json::parse(sweep.out).size() > 20);
}

TEST_CASE("determinant cache") {
  auto path = temp_file("hankel_cli_cache_test.jsonl");
  const std::string flag = "--cache " + path.string() + " ";
  CHECK(run(flag + "det --family 3,1 --n 1..3").status == 0);
  {
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
      auto e = Json::parse(line);
      CHECK(e.contains("version"));
      CHECK(poly_from_json(e["value"]) == hankel_det(FamilyId::binom(3, 1), e["n"].get<int>()));
      ++lines;
    }
    CHECK(lines == 3);
  }
  CHECK(run(flag + "--recheck det --family 3,1 --n 1..3").status == 0);
  // a later line for the same key wins; a wrong value is caught by --recheck
  {
    std::ofstream out(path, std::ios::app);
    out << R"({"family":"3,1","n":2,"variant":"H","value":["1"],"version":"hankel-1"})" << "\n";
  }
  CHECK(run(flag + "det --family 3,1 --n 2").out == "1\n");
  CHECK(run(flag + "--recheck det --family 3,1 --n 2").status == 1);
  CHECK(run(flag + "--no-cache det --family 3,1 --n 2").out == "74 - 60x + 12x^2\n");
  CHECK(run("det --family 3,1 --n 2", "HANKEL_CACHE=" + path.string()).out == "1\n");
  std::filesystem::remove(path);
}
