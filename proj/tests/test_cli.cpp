#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ybe/report.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(YBE_FIXTURES) + "/" + name + ".json"; }

fs::path write_temp(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / ("ybe_cli_" + name + ".json");
  std::ofstream(p) << body;
  return p;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"info"}).code == 2);
  CHECK(run({"info", "/no/such/file.json"}).code == 2);
  CHECK(run({"element", fx("p3")}).code == 2);
  CHECK(run({"element", fx("p3"), "--word", "1 4"}).code == 2);
  CHECK(run({"element", fx("p3"), "--word", "1 x"}).code == 2);
  CHECK(run({"oracle", fx("p3"), "--radius", "-1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate") {
  const Run ok = run({"validate", fx("example15")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid solution, n = 4\n");

  const auto bad = write_temp("notbraided", R"({"n":3,"sigma":[[1,3,2],[1,3,2],[2,3,1]]})");
  const Run nb = run({"validate", bad.string()});
  CHECK(nb.code == 1);
  CHECK(nb.err.find("invalid solution") != std::string::npos);

  const auto garbled = write_temp("garbled", "{\"n\":2,");
  const Run pe = run({"validate", garbled.string()});
  CHECK(pe.code == 1);
  CHECK(pe.err.find("parse error") != std::string::npos);
}

TEST_CASE("info") {
  const Run r = run({"info", fx("example15")});
  CHECK(r.code == 0);
  CHECK(r.out.find("class m = 2") != std::string::npos);
  CHECK(r.out.find("D = [1,4,3,2]") != std::string::npos);
  CHECK(r.out.find("multipermutation level: irretractable") != std::string::npos);
  CHECK(r.out.find("theta_2 = x2x4") != std::string::npos);

  const Run j = run({"info", fx("p3"), "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["class"] == 3);
  CHECK(doc["frozen_words"] == nlohmann::json::parse("[[1,2,3],[2,3,1],[3,1,2]]"));
  CHECK(doc["iyb_order"] == 3);
}

TEST_CASE("germ") {
  const Run list = run({"germ", fx("p3"), "--list"});
  CHECK(list.code == 0);
  CHECK(count_lines(list.out) == 27);
  CHECK(list.out.rfind("(0,0,0) [1,2,3] 1\n", 0) == 0);

  const Run j = run({"germ", fx("example15"), "--json"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).size() == 16);

  const Run guard = run({"germ", fx("example15"), "--max-germ", "15"});
  CHECK(guard.code == 3);
  CHECK(guard.err.find("guard exceeded") != std::string::npos);
}

TEST_CASE("brace-check") {
  const Run e = run({"brace-check", fx("example15")});
  CHECK(e.code == 0);
  CHECK(e.out.find("4096 triples, exhaustive") != std::string::npos);
  const Run p = run({"brace-check", fx("p3"), "--json", "--seed", "7"});
  REQUIRE(p.code == 0);
  const auto doc = nlohmann::json::parse(p.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["seed"] == 7);
}

TEST_CASE("dim and rep") {
  const Run d = run({"dim", fx("example15"), "--json"});
  REQUIRE(d.code == 0);
  const DimensionReport r = dimension_report_from_json(nlohmann::json::parse(d.out));
  CHECK(r == dimension_report(testing::example15()));
  CHECK(run({"dim", fx("example15"), "--json"}).out == d.out);

  const Run ball = run({"dim", fx("p3"), "--radius", "4"});
  CHECK(ball.out.find("ball rank at radius 4 = 6") != std::string::npos);

  const fs::path out = fs::temp_directory_path() / "ybe_cli_rep.json";
  const Run rep = run({"rep", fx("p3"), "--out", out.string()});
  REQUIRE(rep.code == 0);
  std::ifstream in(out);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["spanning"].size() == 6);
  CHECK(doc["dimension"] == 6);
  CHECK(doc["spanning"][0]["entries"].size() == 16);
  CHECK(doc["spanning"][0]["label"] == "theta_1 = x1x2x3");
}

TEST_CASE("oracle") {
  const Run o = run({"oracle", fx("example15"), "--radius", "3"});
  CHECK(o.code == 0);
  CHECK(o.out.find("pass") != std::string::npos);
  const Run j = run({"oracle", fx("trivial2"), "--json"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
}

TEST_CASE("element") {
  const Run e = run({"element", fx("example15"), "--word", "1 1 2", "--json"});
  REQUIRE(e.code == 0);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["vector"] == nlohmann::json::parse("[2,1,0,0]"));
  CHECK(doc["decomposition"]["alpha"] == nlohmann::json::parse("[1,0,0,0]"));

  const Run inv = run({"element", fx("example15"), "--word", "1 -1"});
  CHECK(inv.code == 0);
  CHECK(inv.out.rfind("pi = (0,0,0,0)\n", 0) == 0);
}

TEST_CASE("external binary matches in-process run") {
  const fs::path dump = fs::temp_directory_path() / "ybe_cli_ext.json";
  const std::string cmd =
      std::string(YBE_CLI) + " dim --json " + fx("p3") + " > " + dump.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(dump);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"dim", fx("p3"), "--json"}).out);
}
