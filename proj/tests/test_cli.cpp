#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "holozeta/cli.hpp"
#include "holozeta/json_io.hpp"

using namespace holozeta;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holozeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json J(const std::string& s) { return Json::parse(s); }

}  // namespace

TEST_CASE("zeta JSON for x^2 at p = 3") {
  const auto r = run({"zeta", "--local", "-f", "x^2", "--vars", "x", "-p", "3", "--char-order", "2", "--char-index", "1",
                      "--json"});
  REQUIRE(r.code == 0);
  const auto j = J(r.out);
  CHECK(j["q"] == 3);
  CHECK(j["numerator"] == J(R"([["0/1"],["0/1"],["2/3"]])"));
  CHECK(j["denominator_factors"] == J(R"([{"nu":1,"N":2,"mult":1}])"));
  CHECK(j["denominator"] == J(R"([["3/1"],["0/1"],["-1/1"]])"));
  CHECK(j["actual_pole_lines"] == J(R"([{"nu":1,"N":2}])"));
  CHECK(j["trusted"] == true);
}

TEST_CASE("monodromy JSON for the cusp") {
  const auto r = run({"monodromy", "-f", "x^2+y^3", "--vars", "x,y", "--origin", "--json"});
  REQUIRE(r.code == 0);
  CHECK(J(r.out)["factors"] == J(R"([{"e":2,"exp":1},{"e":3,"exp":1},{"e":6,"exp":-1}])"));
  const auto ax = run({"monodromy", "-f", "x^5+y^2+x^4*z^2", "--vars", "x,y,z", "--axis", "z", "--json"});
  REQUIRE(ax.code == 0);
  CHECK(J(ax.out)["factors"] == J(R"([{"e":2,"exp":1},{"e":4,"exp":-1}])"));
  CHECK(run({"monodromy", "-f", "x^5+y^2+x^4*z^2", "--vars", "x,y,z", "--axis", "2", "--json"}).out == ax.out);
}

TEST_CASE("oracle-compare") {
  const auto r =
      run({"oracle-compare", "-f", "x^2", "--vars", "x", "-p", "3", "--char-order", "2", "--terms", "2", "--global", "--json"});
  REQUIRE(r.code == 0);
  const auto j = J(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["oracle_series"] == J(R"([["2/3"],["0/1"],["2/9"]])"));
  CHECK(j["formula_series"] == j["oracle_series"]);
  const auto a = run({"oracle-compare", "-f", "x^2+y^3", "--vars", "x,y", "-p", "5", "--char-order", "4", "--terms", "auto",
                      "--budget", "1e6", "--json"});
  REQUIRE(a.code == 0);
  CHECK(J(a.out)["equal"] == true);
  CHECK(J(a.out)["terms"] == 3);
}

TEST_CASE("exit codes and error objects") {
  auto r = run({"zeta", "-f", "x^2", "--vars", "x", "-p", "4", "--char-order", "2"});
  CHECK(r.code == 2);
  CHECK(J(r.err)["error"]["kind"] == "usage");
  CHECK(run({"zeta", "-f", "x^2", "--vars", "x", "-p", "7", "--char-order", "4"}).code == 2);
  CHECK(run({"zeta", "-f", "x^2", "--vars", "x", "-p", "7", "--char-order", "6", "--char-index", "2"}).code == 2);
  CHECK(run({"zeta", "-f", "x^2", "--vars", "x", "-p", "7", "--char-order", "1"}).code == 2);
  r = run({"zeta", "-f", "x^^2", "--vars", "x", "-p", "3", "--char-order", "2"});
  CHECK(r.code == 2);
  CHECK(J(r.err)["error"]["kind"] == "parse");
  r = run({"zeta", "-f", "x^2+2*x*y+y^2", "--vars", "x,y", "-p", "3", "--char-order", "2"});
  CHECK(r.code == 1);
  CHECK(J(r.err)["error"]["kind"] == "domain");
  // --force computes anyway and marks the result untrusted
  r = run({"zeta", "-f", "x^2+2*x*y+y^2", "--vars", "x,y", "-p", "3", "--char-order", "2", "--force", "--json"});
  CHECK(r.code == 0);
  CHECK(J(r.out)["trusted"] == false);
  r = run({"oracle-compare", "-f", "x+y+z", "--vars", "x,y,z", "-p", "7", "--char-order", "2", "--terms", "5", "--budget",
           "1000", "--json"});
  CHECK(r.code == 1);
  CHECK(run({"monodromy", "-f", "x^2+y^3+z^2", "--vars", "x,y,z", "--axis", "z"}).code == 1);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"zeta", "--vars", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> z{"check", "-f", "x^3+x^2*y^2+x^2*z^2", "--vars", "x,y,z", "-p", "7", "--char-order", "6",
                                   "--json"};
  CHECK(run(z).out == run(z).out);
  const std::vector<std::string> s{"cancel-suite", "--seed", "11", "--count", "2"};
  const auto a = run(s), b = run(s);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(J(a.out)["passed"] == true);
}

TEST_CASE("newton JSON round trip") {
  const auto n = run({"newton", "-f", "x^3+y^2+3*x^2*z^2+z^7", "--vars", "x,y,z", "--json"});
  REQUIRE(n.code == 0);
  const auto j = J(n.out);
  CHECK(j["n"] == 3);
  CHECK(j["vertices"].size() == 4);
  const std::string path = "holozeta_roundtrip.json";
  std::ofstream(path) << n.out;
  for (const char* kind : {"--local", "--global"}) {
    const auto direct = run({"zeta", kind, "-f", "x^3+y^2+3*x^2*z^2+z^7", "--vars", "x,y,z", "-p", "13", "--char-order",
                             "6", "--json"});
    const auto again = run({"zeta", kind, "--from-json", path, "-p", "13", "--char-order", "6", "--json"});
    CHECK(direct.code == 0);
    CHECK(direct.out == again.out);
  }
  // vertices that do not match the polynomial are refused
  auto bad = j;
  bad["vertices"][0] = J("[9,9,9]");
  std::ofstream(path) << bad.dump();
  CHECK(run({"zeta", "--from-json", path, "-p", "13", "--char-order", "6"}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("classify and check") {
  const auto c = run({"classify", "-f", "x^3+x^2*y^2+x^2*z^2", "--vars", "x,y,z", "--json"});
  REQUIRE(c.code == 0);
  int x2 = 0;
  for (const auto& f : J(c.out))
    if (f["kind"] == "X2") ++x2;
  CHECK(x2 >= 1);
  const auto h = run({"check", "-f", "x^2", "--vars", "x", "-p", "3", "--char-order", "2", "--json"});
  REQUIRE(h.code == 0);
  CHECK(J(h.out)["verdict"] == J(R"({"kind":"pole_explained","m":2,"location":"origin"})"));
}
