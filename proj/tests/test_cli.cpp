#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run sul(const std::string& args) {
  const std::string cmd = std::string(SUL_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("sul_cli_test_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("bounds") {
  const Run r = sul("bounds --s +1 --d 12");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["type"] == "bound_report");
  CHECK(j["schema_version"] == 1);
  CHECK(j["report"]["upper_analytic"].get<double>() == doctest::Approx(1.562978).epsilon(1e-6));
  CHECK(j["report"]["sharp"].get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(j["passed"] == true);
  const Run v = sul("bounds --s -1 --d 4 --gamma -2");
  REQUIRE(v.code == 0);
  CHECK(json::parse(v.out)["report"]["lower"] == 0.0);
}

TEST_CASE("bounds sweep as csv") {
  const Run r = sul("bounds --s -1 --d 1..24 --sweep --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 25);
  CHECK(r.out.rfind("s,d,gamma,ell,lower,lower_method,upper_analytic,upper_numeric,sharp\n", 0) == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(sul("").code == 2);
  CHECK(sul("bogus").code == 2);
  CHECK(sul("bounds --s 3 --d 2").code == 2);
  CHECK(sul("bounds --s 1 --d 0").code == 2);
  CHECK(sul("radius --in /nonexistent/f.json").code == 2);
  CHECK(sul("verify --suite nope").code == 2);
  CHECK(sul("optimize --s 1 --d 3 --format csv").code == 2);
  TempDir tmp;
  std::ofstream(tmp / "bad.json") << "{\"kind\": \"gaussian\", ";
  CHECK(sul("radius --in " + tmp / "bad.json").code == 2);
}

TEST_CASE("construct, radius and file output") {
  TempDir tmp;
  REQUIRE(sul("construct --kind f0 --d 12 -o " + tmp / "f0.json").code == 0);
  const json f0 = json::parse(slurp(tmp / "f0.json"));
  CHECK(f0["type"] == "construction");
  const Run r = sul("radius --in " + tmp / "f0.json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["radius"]["r"].get<double>() == doctest::Approx(f0["radius"]["r"].get<double>()).epsilon(1e-12));
  CHECK(j["radius"]["r"].get<double>() >= std::sqrt(2.0));
  // byte-identical on repeat
  REQUIRE(sul("construct --kind f0 --d 12 -o " + tmp / "again.json").code == 0);
  CHECK(slurp(tmp / "f0.json") == slurp(tmp / "again.json"));
  const Run csv = sul("radius --in " + tmp / "f0.json --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find('\n') != std::string::npos);
}

TEST_CASE("shift round trip") {
  TempDir tmp;
  std::ofstream(tmp / "g.json")
      << R"({"kind":"gaussian","d":2,"ell":2,"harmonic_kind":"COORDINATE_PRODUCT","terms":[{"c":1,"a":1},{"c":-2,"a":3}]})";
  const Run up = sul("shift --in " + tmp / "g.json --lift --ell 2 --s 1 --function-out " + tmp / "up.json");
  REQUIRE(up.code == 0);
  const json j = json::parse(up.out);
  CHECK(j["record"]["target_dim"] == 6);
  CHECK(j["record"]["sign_out"] == -1);
  const Run down = sul("shift --in " + tmp / "up.json --drop --ell 2 --harmonic COORDINATE_PRODUCT --s -1 --function-out " +
                       tmp / "down.json");
  REQUIRE(down.code == 0);
  const json back = json::parse(slurp(tmp / "down.json"));
  const json orig = json::parse(slurp(tmp / "g.json"));
  CHECK(back["d"] == 2);
  CHECK(back["terms"] == orig["terms"]);
}

TEST_CASE("optimize, verify and demo") {
  const Run o = sul("optimize --s -1 --d 1 --N 8");
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["result"]["r_upper"].get<double>() >= 1.0 - 1e-3);
  CHECK(j["result"]["certification"]["integral_ok"] == true);
  const Run v = sul("verify --suite riesz");
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["passed"] == true);
  const Run d = sul("demo-nazarov --delta 0.1 --gamma -0.5 --q 2 --alpha -0.3");
  REQUIRE(d.code == 0);
  CHECK(json::parse(d.out)["report"]["increasing"] == true);
}
