#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "quiverkit/checks.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + QUIVERKIT_CLI_PATH + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("gamma emits versioned JSON and DOT") {
  Run json = run("gamma --n 4 --m 1 --emit json");
  REQUIRE(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["schema"] == "quiverkit/1");
  CHECK(j["vertices"].size() == 9);
  CHECK(j["arrows"].size() == 12);
  CHECK(j["tau"]["(2,4)"] == "(1,3)");

  Run dot = run("gamma --n 3 --m 2 --emit dot");
  REQUIRE(dot.code == 0);
  std::size_t vertices = 0;
  std::istringstream lines(dot.out);
  for (std::string line; std::getline(lines, line);) {
    vertices += line.find("->") == std::string::npos && line.size() > 2 && line.back() == ';';
  }
  CHECK(vertices == 8);
  CHECK(dot.out.find("style=dashed, label=\"tau\"") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("gamma --n 1 --m 1").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("gamma --n 4 --emit svg").code == 2);
  CHECK(run("mutate --matrix '[[0,1],[1,0]]' --steps 1").code == 2);
  CHECK(run("mutate --matrix '[[0,1],[-1,0]]' --steps 3").code == 2);
  CHECK(run("mutate --matrix 'not json'").code == 2);
  CHECK(run("verify --only nonsense").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("caps exit with 3") {
  CHECK(run("gamma --n 4 --m 1", "QUIVERKIT_CAP=5").code == 3);
  CHECK(run("gamma --n 4 --m 1", "QUIVERKIT_CAP=9").code == 0);
  CHECK(run("angulations --n 8 --m 2").code == 3);
  CHECK(run("mutate --matrix '[[0,2],[-2,0]]' --enumerate --cap 10").code == 3);
}

TEST_CASE("power and classify reports") {
  Run power = run("power --n 3 --m 2 --components");
  REQUIRE(power.code == 0);
  auto p = nlohmann::json::parse(power.out);
  CHECK(p["schema"] == "quiverkit/1");
  CHECK(p["m"] == 2);
  REQUIRE(p["components"].size() == 3);
  CHECK(p["components"][0]["vertices"].size() == 8);

  Run classify = run("classify --n 3 --m 2 --report json");
  REQUIRE(classify.code == 0);
  auto c = nlohmann::json::parse(classify.out);
  CHECK(c["principal"]["size"] == 8);
  CHECK(c["others"].size() == 2);
  CHECK(c["ducrest_odd_m"]["agrees"] == "n/a");
  CHECK(run("classify --n 3 --m 2 --report text").out.find("Gamma(3,2)") != std::string::npos);
}

TEST_CASE("mutate renders fractions") {
  Run steps = run("mutate --matrix '[[0,1],[-1,0]]' --steps 1,2");
  REQUIRE(steps.code == 0);
  auto s = nlohmann::json::parse(steps.out);
  CHECK(s["cluster"][0] == "(1 + u_2) / u_1");
  CHECK(s["cluster"][1] == "(1 + u_1 + u_2) / (u_1*u_2)");

  Run all = run("mutate --matrix '[[0,1,0],[-1,0,1],[0,-1,0]]' --enumerate");
  REQUIRE(all.code == 0);
  auto e = nlohmann::json::parse(all.out);
  CHECK(e["count"] == 9);
  CHECK(e["all_laurent"] == true);
}

TEST_CASE("angulations are listed as sorted pairs") {
  Run r = run("angulations --n 3 --m 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 12);
  CHECK(j["angulations"][0] == nlohmann::json::parse("[[1,4],[1,6]]"));
}

TEST_CASE("verify exit code follows the hard checks") {
  CHECK(run("verify --only octagon").code == 0);
  CHECK(run("verify --only counting").code == 0);
  CHECK(run("verify --only ducrest").code == 0);
  const bool all_pass = quiverkit::all_gating_passed(quiverkit::run_checks({}));
  CHECK(run("verify").code == (all_pass ? 0 : 4));
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  for (const std::string args : {"gamma --n 5 --m 2", "power --n 3 --m 3 --components --emit dot",
                                 "classify --n 4 --m 3", "angulations --n 4 --m 2",
                                 "mutate --matrix '[[0,1,0],[-1,0,1],[0,-1,0]]' --enumerate"}) {
    CAPTURE(args);
    Run a = run("--threads 1 " + args);
    Run b = run("--threads 4 " + args);
    Run c = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}
