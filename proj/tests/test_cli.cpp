#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "padic/expr.hpp"
#include "padic/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd =
      std::string(PADIC_CLI_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

std::string data(const std::string& name) {
  return std::string(PADIC_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("radii: fully resolved run exits 0") {
  RunResult r = run_cli("radii --input " + data("exp.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["all_exact"] == true);
  CHECK(doc["stages_used"] == 1);
  REQUIRE(doc["verdicts"].size() == 1);
  CHECK(doc["verdicts"][0]["exact"] == "-1");
  CHECK(doc["verdicts"][0]["stage_found"] == 1);
  CHECK(doc["stages"][0]["constraints"][0]["at_least"] == "-1");
}

TEST_CASE("radii: censored run exits 2 with the final bound") {
  RunResult r = run_cli("radii --input " + data("trivial.json"));
  CHECK(r.exit_code == 2);
  json doc = json::parse(r.out);
  CHECK(doc["all_exact"] == false);
  CHECK(doc["verdicts"][0]["at_least"] == "-1/8");
  CHECK(doc["stages"].size() == 4);
}

TEST_CASE("radii: malformed expression exits 1 and reports a position") {
  RunResult r = run_cli("radii --input " + data("malformed.json"));
  CHECK(r.exit_code == 1);
  // the diagnostic goes to stderr; stdout stays empty
  CHECK(r.out.empty());
}

TEST_CASE("radii: reports are byte-identical across runs") {
  RunResult a = run_cli("radii --input " + data("rank2.json"));
  RunResult b = run_cli("radii --input " + data("rank2.json"));
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("radii: text format and max-stages override") {
  RunResult r = run_cli("radii --format text --max-stages 0 --input " + data("exp.json"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("log-radius >= -1") != std::string::npos);
  CHECK(r.out.find("budget exhausted") != std::string::npos);
}

TEST_CASE("pushforward: trivial rank 1 emits the derivation correction") {
  RunResult r = run_cli("pushforward --input " + data("trivial.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["rank"] == 2);
  CHECK(doc["log_radius"] == "0");
  auto entry = [&](int i, int j) {
    return padic::parse_ratfunc(doc["matrix"][i][j].get<std::string>());
  };
  using padic::Poly;
  using padic::RatFunc;
  CHECK(entry(0, 0) == RatFunc(0));
  CHECK(entry(0, 1) == RatFunc(0));
  CHECK(entry(1, 0) == RatFunc(0));
  CHECK(entry(1, 1) == RatFunc(Poly(padic::make_rat(-1, 2)), Poly::variable()));
}

TEST_CASE("pushforward: rank doubles and the point moves") {
  RunResult r = run_cli("pushforward --input " + data("rank2.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["rank"] == 4);
  CHECK(doc["matrix"].size() == 4);
}

TEST_CASE("polygon: exact vertices, slopes, cutoff") {
  RunResult r = run_cli("polygon --input " + data("airy.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["cutoff"] == "-1");
  CHECK(doc["points"][1][1] == "inf");
  CHECK(doc["points"][2][1] == "-2");
  REQUIRE(doc["vertices"].size() == 2);
  CHECK(doc["vertices"][0][0] == "0");
  CHECK(doc["vertices"][1][0] == "2");
  CHECK(doc["slopes"][0] == "-1");
  CHECK(doc["slopes"][1] == "-1");
}

TEST_CASE("polygon: requires an operator input") {
  RunResult r = run_cli("polygon --input " + data("trivial.json"));
  CHECK(r.exit_code == 1);
}

TEST_CASE("polygon and radii write SVG files") {
  std::string svg = "cli_polygon.svg";
  RunResult r = run_cli("polygon --svg " + svg + " --input " + data("airy.json"));
  CHECK(r.exit_code == 0);
  std::string body = slurp(svg);
  CHECK(body.find("<svg") != std::string::npos);
  CHECK(body.find("polyline") != std::string::npos);
  std::remove(svg.c_str());

  std::string svg2 = "cli_radii.svg";
  RunResult r2 = run_cli("radii --svg " + svg2 + " --input " + data("exp.json"));
  CHECK(r2.exit_code == 0);
  CHECK(slurp(svg2).find("<svg") != std::string::npos);
  std::remove(svg2.c_str());
}

TEST_CASE("oracle: table with the exact window") {
  RunResult r = run_cli("oracle --terms 32 --input " + data("visible.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["terms"] == 32);
  // w_32 = -3*32 - v_2(32!) = -96 - 31 = -127
  bool found = false;
  for (const auto& row : doc["window"]) {
    if (row["n"] == 32) {
      CHECK(row["w"] == "-127");
      CHECK(row["ratio"] == "-127/32");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("unknown flags and missing input exit 1") {
  CHECK(run_cli("radii --nope 2>/dev/null").exit_code == 1);
  CHECK(run_cli("radii --input does_not_exist.json").exit_code == 1);
}

TEST_CASE("problem-file validation") {
  using padic::parse_problem;
  using padic::ProblemError;

  padic::ProblemFile ok = parse_problem(
      R"({"p": 5, "log_radius": "-1/2", "operator": {"coeffs": ["T"]},
          "max_stages": 2, "degree_cap": 64, "oracle_terms": 16})");
  CHECK(ok.point.p == 5);
  CHECK(ok.point.t == padic::make_rat(-1, 2));
  CHECK(ok.max_stages == 2);
  CHECK(ok.degree_cap == 64);
  CHECK(ok.oracle_terms == 16);
  CHECK(ok.as_module().rank() == 1);

  auto bad = [](const std::string& body) {
    CHECK_THROWS_AS(parse_problem(body), ProblemError);
  };
  bad("{not json");
  bad(R"(["array"])");
  bad(R"({"log_radius": "0", "operator": {"coeffs": ["1"]}})");          // no p
  bad(R"({"p": 6, "log_radius": "0", "operator": {"coeffs": ["1"]}})");  // composite
  bad(R"({"p": 2, "operator": {"coeffs": ["1"]}})");                     // no radius
  bad(R"({"p": 2, "log_radius": "1/0", "operator": {"coeffs": ["1"]}})");
  bad(R"({"p": 2, "log_radius": "0"})");  // neither module nor operator
  bad(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": ["1"]},
          "module": {"matrix": [["0"]]}})");  // both
  bad(R"({"p": 2, "log_radius": "0", "module": {"matrix": [["0", "1"]]}})");  // not square
  bad(R"({"p": 2, "log_radius": "0", "module": {"matrix": []}})");
  bad(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": []}})");
  bad(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": ["T+"]}})");
  bad(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": ["1"]}, "max_stages": -1})");
  bad(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": ["1"]}, "degree_cap": 0})");
  bad(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": ["1"]}, "oracle_terms": 4})");

  // parse errors carry the JSON path and the in-expression position
  try {
    parse_problem(R"({"p": 2, "log_radius": "0", "operator": {"coeffs": ["1", "T+*2"]}})");
    FAIL("expected ProblemError");
  } catch (const ProblemError& e) {
    std::string msg = e.what();
    CHECK(msg.find("operator.coeffs[1]") != std::string::npos);
    CHECK(msg.find("1:3") != std::string::npos);
  }
}

TEST_CASE("polygon of an operator with zero coefficient collapses to the origin") {
  RunResult r = run_cli("polygon --input " + data("zero_op.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["vertices"].size() == 1);
  CHECK(doc["vertices"][0][0] == "0");
  CHECK(doc["vertices"][0][1] == "0");
  CHECK(doc["slopes"][0] == "inf");
}

TEST_CASE("polygon of d - 1: vertices and cutoff line data") {
  RunResult r = run_cli("polygon --input " + data("exp.json"));
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["vertices"].size() == 2);
  CHECK(doc["vertices"][1][0] == "1");
  CHECK(doc["vertices"][1][1] == "-1");
  CHECK(doc["cutoff"] == "-1");
}

TEST_CASE("malformed expressions report file position on stderr") {
  std::string err_path = "cli_err.txt";
  std::string cmd = std::string(PADIC_CLI_BIN) + " radii --input " + data("malformed.json") +
                    " 2> " + err_path + " > /dev/null";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
  std::string err = slurp(err_path);
  std::remove(err_path.c_str());
  CHECK(err.find("operator.coeffs[0]") != std::string::npos);
  CHECK(err.find("1:3") != std::string::npos);
}
