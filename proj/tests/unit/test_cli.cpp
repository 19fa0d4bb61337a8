#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "riesz/measures.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = riesz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("riesz_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(dir);
    std::ofstream(dir / "sphere.toml") << "shape = sphere\ncenter = 0, 0, 0\nradius = 1\n";
    std::ofstream(dir / "box.toml") << "shape = box\nlower = 0, 0, 0\nupper = 1, 1, 1\n";
    std::ofstream(dir / "bad.toml") << "shape = sphere\ncenter = 0, 0, 0\nradius = one\n";
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

std::vector<std::vector<double>> read_csv_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate leja points with a manifest") {
  Workspace ws;
  const auto r = invoke({"generate", "--set", ws("sphere.toml"), "--method", "leja", "--n", "100", "--seed", "7", "--out", ws("pts.csv")});
  REQUIRE(r.code == 0);
  CHECK(first_line(ws("pts.csv")) == "x1,x2,x3");
  CHECK(read_csv_rows(ws("pts.csv")).size() == 100);
  REQUIRE(r.out.rfind("energy ", 0) == 0);
  CHECK(std::stod(r.out.substr(7)) <= 1.0);

  const auto m = json::parse(slurp(ws("pts.manifest.json")));
  std::set<std::string> keys;
  for (const auto& [k, v] : m.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"argv", "command", "kernel", "outputs", "params", "results", "seed", "set_definition", "tool_version"});
  CHECK(m["command"] == "generate");
  CHECK(m["kernel"]["alpha"] == 2.0);
  CHECK(m["kernel"]["dim"] == 3);
  CHECK(m["seed"] == 7);
  CHECK(m["params"]["method"] == "leja");

  // Replaying the recorded arguments reproduces the points bitwise.
  const std::string first = slurp(ws("pts.csv"));
  fs::remove(ws("pts.csv"));
  CHECK(invoke(m["argv"].get<std::vector<std::string>>()).code == 0);
  CHECK(slurp(ws("pts.csv")) == first);
}

TEST_CASE("generate a Fekete pair") {
  Workspace ws;
  const auto r = invoke({"generate", "--set", ws("sphere.toml"), "--method", "fekete", "--n", "2", "--out", ws("two.csv")});
  REQUIRE(r.code == 0);
  std::ifstream in(ws("two.csv"));
  const auto pts = riesz::read_points_csv(in);
  REQUIRE(pts.size() == 2);
  CHECK(riesz::distance(pts[0], pts[1]) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(invoke({"generate", "--set", ws("sphere.toml"), "--method", "random", "--n", "1", "--out", ws("one.csv")}).code == 0);
}

TEST_CASE("exit codes") {
  Workspace ws;
  CHECK(invoke({"generate", "--method", "fekete", "--n", "2"}).code == 2);
  const auto bad = invoke({"generate", "--set", ws("bad.toml"), "--n", "3", "--out", ws("x.csv")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(invoke({"generate", "--set", ws("missing.toml"), "--n", "3"}).code == 2);
  CHECK(invoke({"generate", "--set", ws("sphere.toml"), "--method", "simplex", "--n", "3", "--out", ws("x.csv")}).code == 2);
  CHECK(invoke({"generate", "--set", ws("sphere.toml"), "--method", "leja", "--n", "3", "--xi0=0,0,0", "--out", ws("x.csv")}).code == 3);
  CHECK(invoke({"study", "--set", ws("box.toml"), "--ns", "10,20", "--out", ws("s.csv")}).code == 4);
  CHECK(invoke({"study", "--set", ws("sphere.toml"), "--ns", "10", "--alpha", "1.5", "--out", ws("s.csv")}).code == 4);
  CHECK(invoke({"verify", "--only", "no_such_check"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("study table") {
  Workspace ws;
  const auto r = invoke({"study", "--set", ws("sphere.toml"), "--method", "fekete", "--ns", "10,20,40,80", "--seed", "3", "--out", ws("study.csv")});
  REQUIRE(r.code == 0);
  CHECK(first_line(ws("study.csv")) == "n,energy,energy_gap,m_E,deficit_at_probe,sup_deficit,lhs,rhs,r,moment_distance,I_value");
  const auto rows = read_csv_rows(ws("study.csv"));
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][3] == 0.0);
    CHECK(std::isfinite(rows[i][7]));
    if (rows[i][10] >= 0.0) CHECK(rows[i][7] >= rows[i][6]);
    if (i > 0) CHECK(std::abs(rows[i][2]) <= std::abs(rows[i - 1][2]) + 1e-5);
  }
  const auto m = json::parse(slurp(ws("study.manifest.json")));
  CHECK(m["command"] == "study");
  CHECK(m["params"]["ra"] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("verify filter and verdict schema") {
  Workspace ws;
  const auto r = invoke({"verify", "--only", "energy", "--out", ws("v.json")});
  CHECK(r.code == 0);
  const auto v = json::parse(slurp(ws("v.json")));
  CHECK(v["passed"] == true);
  REQUIRE(v["criteria"].size() == 1);
  CHECK(v["criteria"][0]["name"] == "energy_correctness");
  std::set<std::string> keys;
  for (const auto& [k, val] : v["criteria"][0].items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"criterion", "details", "group", "name", "passed", "summary", "within_budget"});

  std::ofstream(ws("ledger.csv")) << "name,inputs,value,error_estimate,seed\nreference_energy,two_points_distance_1,2,0,0\n";
  const auto corrupted = invoke({"verify", "--only", "oracle_provenance", "--ledger", ws("ledger.csv"), "--out", ws("v2.json")});
  CHECK(corrupted.code == 1);
  CHECK(corrupted.err.find("oracle_provenance") != std::string::npos);
}

TEST_CASE("potential query") {
  Workspace ws;
  std::ofstream(ws("one.csv")) << "x1,x2,x3\n0,0,1\n";
  const auto r = invoke({"potential", "--set", ws("sphere.toml"), "--points", ws("one.csv"), "--y=0,0,-3"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["equilibrium_potential"] == doctest::Approx(1.0 / 3.0));
  CHECK(j["configuration_potential"] == doctest::Approx(0.25));
  CHECK(j["deficit"] == doctest::Approx(1.0 / 3.0 - 0.25));
  CHECK(j["d_E"] == doctest::Approx(2.0));
  CHECK(invoke({"potential", "--set", ws("sphere.toml"), "--points", ws("one.csv"), "--y=0,0"}).code == 2);
}

}  // TEST_SUITE
