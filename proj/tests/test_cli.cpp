#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "nsa/io.hpp"

#include <sstream>
#include <string>
#include <vector>

using nsa::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  // The error object is the last line of stderr.
  Json error() const {
    auto end = err.find_last_not_of('\n');
    auto start = err.rfind('\n', end);
    return Json::parse(err.substr(start == std::string::npos ? 0 : start + 1));
  }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nsa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = nsa::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NSA_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("hyper eval reports canonical form, class and standard part") {
  auto r = run({"hyper", "eval", "(2+e)/(1+3*e)"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["canonical"] == "(2+e)/(1+3*e)");
  CHECK(j["classification"]["kind"] == "appreciable");
  CHECK(j["st"] == "2");
  CHECK(j["decomposition"]["real"] == "2");

  r = run({"hyper", "eval", "1/e"});
  CHECK(r.code == 0);
  CHECK(r.json()["classification"]["kind"] == "infinite");
  CHECK(r.json()["st"] == "+inf");

  r = run({"hyper", "eval", "(1)/(0)"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "ZeroDenominator");
}

TEST_CASE("hyper st and root") {
  CHECK(run({"hyper", "st", "3-e^2"}).json()["st"] == "3");
  auto r = run({"hyper", "root", "4+4*e+e^2", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["root"] == "2+e");
  r = run({"hyper", "root", "-1", "2"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "NegativeEvenRoot");
  CHECK(run({"hyper", "eval", "2+"}).code == 2);
}

TEST_CASE("germ compare verdicts and exit codes") {
  auto r = run({"germ", "compare", "rf(1/n)", "ep([];[0])", "lt"});
  CHECK(r.json()["verdict"] == "false-ae");
  CHECK(r.code == 1);
  r = run({"germ", "compare", "ep([];[0,1])", "ep([];[0])", "eq"});
  CHECK(r.json()["verdict"] == "ultrafilter-dependent");
  CHECK(r.code == 1);
  r = run({"germ", "compare", "ep([];[0])", "rf(1/n)", "lt"});
  CHECK(r.json()["verdict"] == "true-ae");
  CHECK(r.code == 0);
  r = run({"germ", "compare", "rf(n)", "ep([];[0,1])", "eq"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "MixedClasses");
  CHECK(run({"germ", "compare", "rf(n)", "rf(1)", "gt"}).code == 2);
}

TEST_CASE("germ classify and los") {
  auto r = run({"germ", "classify", "rf((2*n+1)/(n+3))"});
  CHECK(r.code == 0);
  CHECK(r.json()["classification"]["standard_part"] == "2");
  r = run({"germ", "classify", "ep([5];[1,0])"});
  CHECK(r.json()["classification"]["definite"].is_null());
  CHECK(r.json()["classification"]["per_residue"].size() == 2);

  r = run({"germ", "los", "x < y", "--assign", "x=rf(1/n)", "--assign", "y=rf(2/n)"});
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"] == "true-ae");
  CHECK(r.json()["agree"] == true);
  r = run({"germ", "los", "x = 0", "--assign", "x=ep([];[0,1])"});
  CHECK(r.code == 1);
  CHECK(r.json()["verdict"] == "ultrafilter-dependent");
  r = run({"germ", "los", "x = y", "--assign", "x=rf(1)"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "UnboundConstant");
  CHECK(run({"germ", "los", "(forall x in A)(x = x)"}).code == 2);
}

TEST_CASE("bqf eval and define") {
  auto r = run({"bqf", "eval", "(forall x in A)(x in B)", "--bind", "A={a}", "--bind", "B={a,b}"});
  CHECK(r.code == 0);
  CHECK(r.json()["value"] == true);
  CHECK(r.json()["transfer_holds"] == true);
  r = run({"bqf", "eval", "(forall x in B)(x in A)", "--bindings", R"({"A":["a"],"B":["a","b"]})"});
  CHECK(r.code == 1);
  CHECK(r.json()["value"] == false);

  r = run({"bqf", "define", "x in B", "--bound", "A", "--bindings", R"({"A":["a","b","c"],"B":["b","c","d"]})"});
  CHECK(r.code == 0);
  CHECK(r.json()["set"] == "{b, c}");
  CHECK(r.json()["members"] == Json::parse(R"(["b","c"])"));

  CHECK(run({"bqf", "eval", "(forall x)(x = x)"}).error()["error"] == "UnboundedQuantifier");
  CHECK(run({"bqf", "eval", "x in"}).code == 2);
  CHECK(run({"bqf", "eval", "y in A", "--bind", "A={a}"}).error()["error"] == "UnboundConstant");
}

TEST_CASE("topo check") {
  auto r = run({"topo", "check", data("sierpinski.json"), "regular"});
  CHECK(r.code == 1);
  auto v = r.json()["verdicts"][0];
  CHECK(v["holds"] == false);
  CHECK(v["oracle_agrees"] == true);
  CHECK(v["witness"]["points"] == Json::parse(R"(["a"])"));
  CHECK(v["witness"]["sets"] == Json::parse(R"([["b"]])"));

  r = run({"topo", "check", data("discrete3.json")});
  CHECK(r.code == 0);
  CHECK(r.json()["verdicts"].size() == 10);
  for (const auto& verdict : r.json()["verdicts"]) CHECK(verdict["holds"] == true);

  r = run({"topo", "check", data("malformed_opens.json")});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "NotClosedUnderUnion");
  CHECK(run({"topo", "check", data("missing.json")}).code == 2);
  CHECK(run({"topo", "check", R"({"points":["a"]})"}).code == 2);
  CHECK(run({"topo", "check", data("sierpinski.json"), "t9"}).code == 2);
}

TEST_CASE("topo hull") {
  auto r = run({"topo", "hull", data("three_point.json"), "--stone-cech"});
  CHECK(r.code == 0);
  CHECK(r.json()["points"] == 1);

  r = run({"topo", "hull", data("discrete3.json"), "--family", data("family_001.json")});
  CHECK(r.code == 0);
  CHECK(r.json()["points"] == 2);
  CHECK(r.json()["classes"] == Json::parse(R"([["0","1"],["2"]])"));
  CHECK(r.json()["lifted"]["f"]["{2}"] == "1");

  r = run({"topo", "hull", data("sierpinski.json"), "--family", data("sierpinski_split.json")});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "DiscontinuousFamilyMember");
  CHECK(r.error()["message"].get<std::string>().find("{a, b}") != std::string::npos);

  CHECK(run({"topo", "hull", data("sierpinski.json")}).code == 2);
  CHECK(run({"topo", "hull", data("sierpinski.json"), "--stone-cech", "--hewitt"}).code == 2);
  CHECK(run({"topo", "hull", data("sierpinski.json"), "--hewitt"}).code == 0);
  CHECK(run({"topo", "hull", data("sierpinski.json"), "--t0-reflect"}).json()["points"] == 2);
}

TEST_CASE("topo reflect and dot") {
  auto r = run({"topo", "reflect", R"({"points":["a","b"],"opens":[[],["a","b"]]})"});
  CHECK(r.code == 0);
  CHECK(r.json()["points"] == 1);

  r = run({"topo", "dot", data("sierpinski.json")});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("digraph"));
  CHECK(r.out.find("\"a\" -> \"b\"") != std::string::npos);
  CHECK(run({"topo", "dot", data("sierpinski.json"), "--format", "json"}).json()["dot"] == r.out);
  CHECK(run({"hyper", "eval", "e", "--format", "dot"}).code == 2);
}

TEST_CASE("audit") {
  auto r = run({"audit", "--max-points", "3"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["spaces_with_max_points"] == 29);
  CHECK(j["passed"] == true);
  for (const auto& t : j["theorems"])
    if (t["asserted"] == true) CHECK(t["counterexamples"].empty());

  r = run({"audit", "--max-points", "4"});
  CHECK(r.code == 0);
  CHECK(r.json()["spaces_with_max_points"] == 355);

  r = run({"audit", "--max-points", "9"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "TooLarge");
}

TEST_CASE("output is byte-deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"audit", "--max-points", "4", "--seed", "5"},
        std::vector<std::string>{"topo", "check", std::string(NSA_TEST_DATA_DIR) + "/three_point.json"},
        std::vector<std::string>{"hyper", "eval", "(1+e)^3/(2-e)", "--format", "table"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  auto parallel = run({"audit", "--max-points", "4"}), serial = run({"audit", "--max-points", "4", "--serial"});
  CHECK(parallel.out == serial.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"hyper"}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"audit", "--max-points", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("io round trips") {
  auto s = nsa::io::space_from_json(nsa::io::read_json_file(data("three_point.json")));
  CHECK(nsa::io::space_from_json(nsa::io::to_json(s)) == s);
  auto e = nsa::bqf::parse_entity("{a, {b, {}}, <a, b>}");
  CHECK(nsa::io::entity_from_json(nsa::io::to_json(e)) == e);
  CHECK_THROWS_AS(nsa::io::entity_from_json(Json(3)), nsa::Error);
}
