#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "e6char/cli.hpp"
#include "fixtures.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = e6char::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json payload(const Run& r) {
  const json doc = json::parse(r.out);
  CHECK(doc.at("schema_version") == "1");
  return doc.at("payload");
}

}  // namespace

TEST_CASE("roots") {
  auto r = run({"roots", "--type", "E6", "--format", "json"});
  REQUIRE(r.code == 0);
  auto p = payload(r);
  CHECK(json::parse(r.out).at("command") == "roots");
  REQUIRE(p.at("roots").size() == 36);
  bool found = false;
  for (const auto& rec : p.at("roots"))
    if (rec.at("beta_index") == 30) {
      found = true;
      CHECK(rec.at("root") == json({1, 2, 3, 2, 1, 2}));
      CHECK(rec.at("weight") == json({0, 0, 0, 0, 0, 1}));
      CHECK(rec.at("height") == 11);
    }
  CHECK(found);

  r = run({"roots", "--type", "A2", "--format", "json"});
  CHECK(payload(r).at("roots").size() == 3);

  r = run({"roots", "--type", "E6", "--only-nonsimple", "--format", "json"});
  p = payload(r);
  REQUIRE(p.at("roots").size() == 30);
  for (const auto& rec : p.at("roots")) {
    const int k = rec.at("beta_index");
    const auto& b = fixtures::kBeta.at(k - 1);
    CHECK(rec.at("root") == json(std::vector<long long>(b.begin(), b.end())));
  }

  r = run({"roots", "--format", "latex", "--only-nonsimple"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\begin{tabular}") != std::string::npos);
  CHECK(r.out.find("$\\beta_{24}$ & $\\alpha_1+2\\alpha_2+2\\alpha_3+\\alpha_4+\\alpha_6$ & $\\omega_2-\\omega_5$") !=
        std::string::npos);

  r = run({"roots"});
  CHECK(r.code == 0);
  CHECK(r.out.find("beta30") != std::string::npos);
}

TEST_CASE("char") {
  auto r = run({"char", "--type", "E6", "--hw", "0,0,0,0,0,1", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(payload(r).at("dim") == "78");
  r = run({"char", "--type", "A2", "--hw", "1,1", "--wt", "0,0", "--format", "json"});
  CHECK(payload(r).at("mult") == 2);
  r = run({"char", "--type", "E6", "--hw", "1,0,0,0,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim = 27") != std::string::npos);
  r = run({"char", "--type", "A2", "--hw", "1,1", "--wt", "0,0"});
  CHECK(r.out.find("= 2") != std::string::npos);
}

TEST_CASE("graded") {
  auto r = run({"graded", "--lambda", "0,1,0,0,0,0", "--dims"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("351 + 27 t") != std::string::npos);
  CHECK(r.out.find("status proved") != std::string::npos);

  r = run({"graded", "--lambda", "0,0,0,0,0,1", "--dims", "--format", "json"});
  auto p = payload(r);
  CHECK(p.at("dims").at("polynomial") == "78 + t");
  CHECK(p.at("status") == "proved");
  CHECK(p.at("lambda") == json({0, 0, 0, 0, 0, 1}));
  REQUIRE(p.at("degrees").size() == 2);
  CHECK(p.at("degrees")[1].at("t") == 1);
  CHECK(p.at("degrees")[1].at("components")[0].at("hw") == json({0, 0, 0, 0, 0, 0}));
  CHECK(p.at("degrees")[1].at("components")[0].at("mult") == 1);
  CHECK(p.at("degrees")[0].at("components")[0].at("dim") == "78");

  r = run({"graded", "--lambda", "0,0,1,0,0,0", "--format", "json"});
  CHECK(payload(r).at("status") == "upper_bound_only");

  // Bourbaki omega_2 is the adjoint weight.
  r = run({"graded", "--lambda", "0,1,0,0,0,0", "--bourbaki", "--dims"});
  CHECK(r.out.find("78 + t") != std::string::npos);

  r = run({"graded", "--lambda", "0,1,0,0,0,0", "--expand", "--format", "json"});
  CHECK(payload(r).at("expanded").size() == 2);
}

TEST_CASE("psi") {
  auto r = run({"psi", "--lambda", "1,0,0,0,1,0", "--format", "json"});
  CHECK(payload(r).at("verdict") == "empty");
  r = run({"psi", "--lambda", "0,1,0,0,0,0", "--format", "json"});
  auto p = payload(r);
  CHECK(p.at("psi") == json({24, 26, 28, 29, 30}));
  CHECK(p.at("verdict") == "psi_omega2");
  r = run({"psi", "--lambda", "0,1,0,1,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not_covered") != std::string::npos);
  CHECK(r.out.find("for no weight") != std::string::npos);
  r = run({"psi", "--lambda", "0,0,1,0,0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("m3") != std::string::npos);
}

TEST_CASE("minaff") {
  auto r = run({"minaff", "--type", "A2", "--hw", "1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto p = payload(r);
  CHECK(p.at("centers")[0].at("center") == 0);
  CHECK(p.at("centers")[1].at("center") == 1);
  r = run({"minaff", "--type", "A2", "--hw", "1,1", "--epsilon", "-1", "--format", "json"});
  CHECK(payload(r).at("centers")[1].at("center") == -1);
  r = run({"minaff", "--hw", "1,0,0,0,1,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("type A") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "roots"});
  CHECK(r.code == 0);
  CHECK(r.out.find("36 roots, beta and weight tables matched") != std::string::npos);
  r = run({"verify", "--suite", "nonexistent"});
  CHECK(r.code == 2);
  r = run({"verify", "--suite", "lweight", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(payload(r).at("ok") == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"char", "--type", "E6"}).code == 2);
  CHECK(run({"char", "--type", "E6", "--hw", "1,0"}).code == 2);
  CHECK(run({"char", "--type", "E6", "--hw", "1,x,0,0,0,0"}).code == 2);
  CHECK(run({"char", "--type", "A2", "--hw", "-1,0"}).code == 2);
  CHECK(run({"char", "--type", "G2", "--hw", "1,0"}).code == 2);
  CHECK(run({"char", "--type", "A2", "--hw", "1,0", "--format", "latex"}).code == 2);
  CHECK(run({"graded", "--lambda", "0,1,0,0,0,-1"}).code == 2);
  CHECK(run({"roots", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output round-trips and is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"roots", "--format", "json"},
      {"char", "--hw", "0,0,0,0,0,1", "--format", "json"},
      {"graded", "--lambda", "1,1,0,1,0,1", "--dims", "--expand", "--format", "json"},
      {"psi", "--lambda", "0,1,0,1,0,0", "--format", "json"},
      {"minaff", "--hw", "2,1,0,0,0,0", "--format", "json"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const json doc = json::parse(a.out);
    CHECK(json::parse(doc.dump()) == doc);
    CHECK(doc.dump(2) + "\n" == a.out);
  }
}

TEST_CASE("text and JSON agree on numbers") {
  const auto text = run({"graded", "--lambda", "0,1,0,1,0,1", "--dims"});
  const auto p = payload(run({"graded", "--lambda", "0,1,0,1,0,1", "--dims", "--format", "json"}));
  CHECK(text.out.find(p.at("dims").at("polynomial").get<std::string>()) != std::string::npos);
  CHECK(text.out.find("total " + p.at("dims").at("total").get<std::string>()) != std::string::npos);
  for (const auto& deg : p.at("degrees"))
    for (const auto& c : deg.at("components")) CHECK(text.out.find("[" + c.at("dim").get<std::string>() + "]") != std::string::npos);

  const auto ctext = run({"char", "--hw", "1,1", "--type", "A2"});
  const auto cjson = payload(run({"char", "--hw", "1,1", "--type", "A2", "--format", "json"}));
  CHECK(ctext.out.find("dim = " + cjson.at("dim").get<std::string>()) != std::string::npos);
}

TEST_CASE("output width") {
  setenv("E6CHAR_WIDTH", "40", 1);
  const auto r = run({"graded", "--lambda", "1,1,0,1,1,1"});
  unsetenv("E6CHAR_WIDTH");
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) CHECK(line.size() <= 40);
}
