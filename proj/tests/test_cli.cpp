#include "cli.hpp"
#include "qgraph/cli/run_config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qgraph;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("theta invariant text output") {
  const auto r = run({"theta", "-c", "1,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-q^(1/2) - q^(-1/2)") != std::string::npos);
  const auto bad = run({"theta", "-c", "1,1,1"});
  CHECK(bad.code == 0);
  CHECK(bad.out.find("admissible: false") != std::string::npos);
}

TEST_CASE("tet invariant json output carries metadata") {
  const auto r = run({"--format", "json", "tet", "-c", "2,2,2,2,2,2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["convention"] == "triangle-sum");
  CHECK(j["meta"]["version"] == version());
  CHECK(j["meta"]["config_hash"].get<std::string>().size() == 16);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "annihilation", "--graph", "theta", "--max", "6"}).code == 0);
  CHECK(run({"verify", "annihilation", "--graph", "theta", "--edge", "a", "--max", "6", "--negative-control"}).code == 1);
  CHECK(run({"verify", "annihilation", "--graph", "tet", "--edge", "1", "--max", "3", "--variant", "printed"}).code == 1);
  CHECK(run({"verify", "no-such-check"}).code == 2);
  CHECK(run({"verify", "annihilation", "--edge", "q"}).code == 2);
  CHECK(run({"theta", "-c", "1,x,0"}).code == 2);
  CHECK(run({"--format", "yaml", "theta", "-c", "1,1,0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"asymptotics", "theta", "--x", "0.5,0.5"}).code == 2);
  CHECK(run({"asymptotics", "theta", "--x", "0.5,0.5,0.5", "--hbar", "0.1"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  const std::vector<std::string> a{"--format", "json", "lagrangian", "--graph", "theta", "--samples", "8", "--seed", "7"};
  const auto r1 = run(a), r2 = run(a);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  const auto csv1 = run({"--format", "csv", "residual", "--graph", "theta", "--samples", "8"});
  const auto csv2 = run({"--format", "csv", "--workers", "2", "residual", "--graph", "theta", "--samples", "8"});
  CHECK(csv1.code == 0);
  auto body = [](const std::string& s) { return s.substr(s.find("\nindex")); };
  CHECK(body(csv1.out) == body(csv2.out));
  const auto v1 = run({"--format", "json", "verify", "symmetry", "--max", "3"});
  const auto v2 = run({"--format", "json", "verify", "symmetry", "--max", "3"});
  CHECK(v1.out == v2.out);
}

TEST_CASE("configuration file and environment override") {
  const std::string cfg = temp_file("qgraph_test_cfg.json", R"({"seed": 11, "tolerances": {"lagrangian_theta": 1e-7}})");
  const auto r = run({"--config", cfg, "--format", "json", "lagrangian", "--samples", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["config"]["seed"] == 11);
  CHECK(j["tolerance"].get<double>() == doctest::Approx(1e-7));

  const std::string env = temp_file("qgraph_test_env.json", R"({"seed": 23})");
  setenv("QGRAPH_CONFIG", env.c_str(), 1);
  const auto e = run({"--format", "json", "lagrangian", "--samples", "3"});
  CHECK(nlohmann::json::parse(e.out)["meta"]["config"]["seed"] == 23);
  const auto both = run({"--config", cfg, "--format", "json", "lagrangian", "--samples", "3"});
  CHECK(nlohmann::json::parse(both.out)["meta"]["config"]["seed"] == 11);
  const std::string broken = temp_file("qgraph_test_bad.json", R"({"colour": 1})");
  setenv("QGRAPH_CONFIG", broken.c_str(), 1);
  CHECK(run({"theta", "-c", "0,0,0"}).code == 2);
  unsetenv("QGRAPH_CONFIG");
  CHECK(run({"--config", "/nonexistent/qgraph.json", "theta", "-c", "0,0,0"}).code == 2);
}

TEST_CASE("config hash tracks the configuration") {
  RunConfig a, b;
  CHECK(a.hash() == b.hash());
  b.seed = 8;
  CHECK(a.hash() != b.hash());
  CHECK_THROWS_AS(a.merge(nlohmann::json{{"tolerances", {{"bogus", 1.0}}}}), UsageError);
  CHECK_THROWS_AS(a.merge(nlohmann::json{{"precision", 10}}), UsageError);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("numeric subcommands") {
  const auto s = run({"--format", "json", "saddle", "--x", "0.5,0.5,0.5,0.5,0.5,0.5"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["rows"].size() == 3);
  const auto g = run({"--format", "csv", "asymptotics", "theta", "--x", "0.5,0.5,0.5", "--hbar", "-0.03125,-0.015625"});
  CHECK(g.code == 0);
  CHECK(g.out.find("hbar,") != std::string::npos);
  CHECK(run({"gradient", "--samples", "5"}).code == 0);
}
