#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using pseudoanalytic::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "pseudoanalytic-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"formal-power", "--grid", "1x1"}).code == 2);
  CHECK(call({"formal-power", "--ctx", "nowhere"}).code == 2);
  CHECK(call({"formal-power", "--box", "3,1,0.5,3"}).code == 2);
  CHECK(call({"formal-power", "--box", "-1,1,0.5,3"}).code == 2);
  CHECK(call({"formal-power", "--ctx", "g_1xy3", "-n", "2"}).code == 2);
  CHECK(call({"formal-power", "--ctx", "g_xy", "-n", "1", "--oracle", "--via-transplant", "unit"}).code == 2);
  CHECK(call({"formal-power", "--quad-order", "1"}).code == 2);
  CHECK(call({"verify", "--perturb", "no.such.invariant"}).code == 2);
  CHECK(call({"kernel-grid", "--ctx", "hyperbolic_unit"}).code == 2);
  CHECK(call({"kernel-grid", "--closed-form", "printed", "-a", "i", "--grid", "3x3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("formal-power for f = 1 is (z - z0)^3") {
  const Result r = call({"formal-power", "--ctx", "unit", "-n", "3", "-a", "1", "--center", "0,0", "--grid", "11x11",
                         "--oracle", "--tol", "1e-12"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 122);
  CHECK(rows[0] == std::vector<std::string>{"x", "y", "re", "im", "oracle_re", "oracle_im", "rel_err"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][6]) <= 1e-12);
  CHECK(r.err.find("PASS") != std::string::npos);
}

TEST_CASE("formal-power oracle comparisons") {
  const Result f = call({"formal-power", "--ctx", "f_y2", "-n", "1", "-a", "1", "--center", "1,2", "--grid", "20x20",
                         "--box", "0.5,3,0.5,3", "--oracle"});
  CHECK(f.code == 0);
  const Result g = call({"formal-power", "--ctx", "g_1xy3", "-n", "2", "-a", "i", "--center", "1,2", "--grid",
                         "10x10", "--via-transplant", "f_y2", "--oracle", "--format", "json"});
  REQUIRE(g.code == 0);
  const auto doc = nlohmann::json::parse(g.out);
  CHECK(doc["schema"] == "pseudoanalytic/1");
  CHECK(doc["spec"]["command"] == "formal-power");
  CHECK(doc["spec"]["via_transplant"] == "f_y2");
  REQUIRE(doc["rows"].size() == 100);
  for (const auto& row : doc["rows"]) CHECK(row["rel_err"].get<double>() <= 1e-6);
  // a tolerance below the attainable accuracy is a verification failure
  CHECK(call({"formal-power", "--ctx", "f_y2", "-n", "2", "--grid", "5x5", "--oracle", "--tol", "1e-300"}).code == 1);
}

TEST_CASE("kernel-grid") {
  SUBCASE("f = 1 gives H = 1 and null cells near the pole") {
    const Result r = call({"kernel-grid", "--ctx", "unit", "--center", "0,0", "--grid", "21x21", "--exclude", "0.15",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    int nulls = 0;
    for (const auto& row : doc["rows"]) {
      if (row["H"].is_null()) {
        ++nulls;
        CHECK(row["re"].is_null());
        continue;
      }
      CHECK(std::fabs(row["H"].get<double>() - 1.0) <= 1e-10);
    }
    CHECK(nulls == 9);
    const Result c = call({"kernel-grid", "--ctx", "unit", "--center", "0,0", "--grid", "21x21", "--exclude", "0.15"});
    const auto rows = csv(c.out);
    CHECK(rows[0] == std::vector<std::string>{"x", "y", "re", "im", "H"});
    CHECK(rows[1 + 10 * 21 + 10] == std::vector<std::string>{"0", "0", "", "", ""});
  }
  SUBCASE("closed forms for g = x y") {
    const std::vector<std::string> base{"kernel-grid", "--grid", "12x12", "--circle", "0.02"};
    auto with = [&](const char* which) {
      auto a = base;
      a.insert(a.end(), {"--closed-form", which});
      return call(a);
    };
    const Result corrected = with("corrected");
    CHECK(corrected.code == 0);
    CHECK(corrected.err.find("H on |z-z0|=0.02") != std::string::npos);
    const Result printed = with("printed");
    CHECK(printed.code == 1);
    CHECK(printed.err.find("FAIL") != std::string::npos);
  }
  SUBCASE("a path through the pole is a numerical error") {
    CHECK(call({"kernel-grid", "--base", "1,5.0000001", "--grid", "3x3"}).code == 3);
  }
}

TEST_CASE("verify") {
  const Result list = call({"verify", "--list"});
  std::istringstream is(list.out);
  int n = 0;
  for (std::string line; std::getline(is, line);) ++n;
  CHECK(n >= 25);

  const Result h = call({"verify", "--ctx", "hyperbolic_unit", "--format", "json"});
  CHECK(h.code == 0);
  const auto doc = nlohmann::json::parse(h.out);
  bool cr = false, kg = false;
  for (const auto& row : doc["rows"]) {
    CHECK(row["pass"] == true);
    cr = cr || row["name"] == "hyperbolic.cauchy_riemann";
    kg = kg || row["name"] == "hyperbolic.klein_gordon_factorization";
  }
  CHECK(cr);
  CHECK(kg);

  const Result p = call({"verify", "--ctx", "hyperbolic_unit", "--perturb", "hyperbolic.cauchy_riemann"});
  CHECK(p.code == 1);
  CHECK(p.err.find("1 failed hyperbolic.cauchy_riemann") != std::string::npos);
}

TEST_CASE("sequence") {
  const Result u = call({"sequence", "--ctx", "unit", "-M", "2", "--grid", "3x3", "--format", "json"});
  REQUIRE(u.code == 0);
  const auto doc = nlohmann::json::parse(u.out);
  REQUIRE(doc["rows"].size() == 27);
  for (const auto& row : doc["rows"]) {
    CHECK(row["F_re"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(row["F_im"].get<double>()) <= 1e-12);
    CHECK(std::fabs(row["G_re"].get<double>()) <= 1e-12);
    CHECK(row["G_im"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row["status"] == "ok");
  }
  CHECK(call({"sequence", "--ctx", "f_y2", "-M", "3", "--grid", "3x3"}).code == 0);
  const Result g = call({"sequence", "--ctx", "g_1xy3", "-M", "2", "--grid", "4x4"});
  CHECK(g.code == 0);
  CHECK(g.err.find("F2/(y/y0)^2") != std::string::npos);
}
