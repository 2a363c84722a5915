#include "support.hpp"

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "milnorinf/cli.hpp"

using namespace mt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("milnor command") {
  auto r = call({"milnor", "x1^7*x2+x3^3+x2", "--weights", "2,1,5", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mu"] == "14");
  CHECK(j["N"] == "15");
  CHECK(j["k"] == "14");
  CHECK(j["branches"].size() == 1);
  CHECK(j["chi_FN"] == "3");

  auto t = call({"milnor", "x1^7*x2+x3^3+x2", "--weights", "1,2,3"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("14") != std::string::npos);
}

TEST_CASE("abstract mode") {
  auto r = call({"milnor", "--abstract", "--top", "x1^265+x1*x2^11+x1*x3^8+x3*x4^4", "--weights", "1,24,33,58",
                 "--k", "100", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mu"] == "66416");
  CHECK(j["chi_FN"] == "-66250");
}

TEST_CASE("exit codes") {
  CHECK(call({"check-wly", "x1^2*x2^2+x1", "--weights", "1,1"}).code == kExitNotWly);
  CHECK(call({"check-wly", "x1^7*x2+x3^3+x2", "--weights", "2,1,5"}).code == kExitOk);
  CHECK(call({"milnor", "x1^^2"}).code == kExitParse);
  CHECK(call({"milnor", "2x + y^2"}).code == kExitParse);
  CHECK(call({"milnor", "x1^7*x2+x3^3+x2", "--weights", "2,1"}).code == kExitError);
  CHECK(call({"no-such-command"}).code == kExitParse);
  CHECK(call({"milnor", "x1^2*x2^2+x1"}).code == kExitNotWly);
}

TEST_CASE("parse errors are reported with a position") {
  auto r = call({"oracle", "x1^^2"});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("column 4") != std::string::npos);
}

TEST_CASE("oracle, tame, compare and ts commands") {
  auto o = call({"oracle", "x1^2*x2+x3^3+x2"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find('4') != std::string::npos);

  auto t = call({"tame", "x1^3+x1*x2+x1*x3^2+x3*x4^2+x3", "--weights", "1,2,1,1", "--format", "json"});
  REQUIRE(t.code == kExitOk);
  CHECK(nlohmann::json::parse(t.out)["status"] == "CriterionNotMet");

  auto w = call({"tame", "x1^3+x1*x2+x1*x3^2+x3*x4^2+x3", "--weights", "1,2,1,1", "--witness",
                 "1/n^2, -n^4/4, -n^2/2, 0", "--format", "json"});
  REQUIRE(w.code == kExitOk);
  CHECK(nlohmann::json::parse(w.out)["status"] == "NotTame");

  auto c = call({"compare", "x1^3+x1*x2+x1*x3^2+x3*x4^2+x2", "x1^3+x1*x2+x1*x3^2+x3*x4^2+x3^2", "--weights",
                 "1,2,1,1", "--format", "json"});
  REQUIRE(c.code == kExitOk);
  auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["equivalent"] == true);
  CHECK(cj["strength"] == "Diffeomorphic");

  auto s = call({"ts", "x1^2*x2+x3^3+x2", "y1^2*y2+y3^3+y2", "--oracle", "--format", "json"});
  REQUIRE(s.code == kExitOk);
  CHECK(nlohmann::json::parse(s.out)["mu"] == "16");
}

TEST_CASE("JSON output is deterministic") {
  std::vector<std::string> args{"analyze", "x1^7*x2+x3^3+x2", "--weights", "1,2,3", "--format", "json"};
  auto a = call(args);
  auto b = call(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("branch hints through the command line") {
  auto r = call({"milnor", "--abstract", "--top", "x1^265+x1*x2^11+x1*x3^8+x3*x4^4", "--weights", "1,24,33,58",
                 "--k", "2", "--branch-point", "0,-1,1,0", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["mu"] == "66514");
}

TEST_CASE("input files") {
  std::string path = "cli_input_test.txt";
  {
    std::ofstream f(path);
    f << "x1^7*x2 + x3^3 + x2\n\n";
  }
  auto r = call({"milnor", "--input", path, "--weights", "2,1,5", "--format", "json"});
  CHECK(r.code == kExitOk);
  std::remove(path.c_str());
}
