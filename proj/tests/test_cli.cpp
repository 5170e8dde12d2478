// End-to-end checks of the command-line tool: invokes the built binary,
// parses its CSV/JSON output, and checks determinism and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CMVWALK_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::pair<long, double>> parse_csv(const std::string& text) {
  std::vector<std::pair<long, double>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    rows.emplace_back(std::stol(line.substr(0, comma)),
                      std::stod(line.substr(comma + 1)));
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("simulate: one hadamard step") {
  const RunResult r =
      run_cli("simulate --walk-type 1 --coin hadamard --init 1,0 --steps 1");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == 0);
  CHECK(rows[0].second == doctest::Approx(0.5));
  CHECK(rows[1].second == doctest::Approx(0.5));
}

TEST_CASE("simulate: deterministic mover emits a single row") {
  const RunResult r = run_cli("simulate --walk-type 2 --coin real:0 --steps 7");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].first == 7);
  CHECK(rows[0].second == doctest::Approx(1.0));
}

TEST_CASE("simulate: tree coin localizes at the origin") {
  const RunResult r = run_cli(
      "simulate --walk-type 2 --coin real:-0.333333333333333 --gamma "
      "180 --degrees --steps 400");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(!rows.empty());
  CHECK(rows[0].first == 0);
  CHECK(std::abs(rows[0].second - 0.25) < 2e-2);
}

TEST_CASE("limit: closed forms and tree mode") {
  const RunResult r =
      run_cli("limit --walk-type 1 --param 0.6 --init 1,0 --xmax 2");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].second == doctest::Approx(0.45));
  CHECK(rows[1].second == doctest::Approx(0.1125));
  CHECK(r.output.find("# escape_mass,0.4") != std::string::npos);

  const RunResult tree = run_cli("limit --tree 3 --case B --xmax 1");
  const auto trows = parse_csv(tree.output);
  REQUIRE(trows.size() == 2);
  CHECK(trows[0].second == doctest::Approx(0.25));
  CHECK(trows[1].second == doctest::Approx(0.375));

  const RunResult zero = run_cli("limit --walk-type 2 --param -0.3333333 --xmax 3");
  for (const auto& row : parse_csv(zero.output)) CHECK(row.second == 0.0);

  const RunResult ces = run_cli("tree --kappa 3 --case B --xmax 1 --cesaro");
  const auto crows = parse_csv(ces.output);
  CHECK(crows[0].second == doctest::Approx(0.125));
}

TEST_CASE("spectrum: JSON schema and values") {
  const RunResult r = run_cli("spectrum --walk-type 1 --param 0.6 --samples 8");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.contains("ac"));
  REQUIRE(j.contains("atoms"));
  REQUIRE(j.contains("total_mass"));
  REQUIRE(j["atoms"].size() == 1);
  CHECK(j["atoms"][0]["theta"].get<double>() == doctest::Approx(0.0));
  CHECK(j["atoms"][0]["mass"].get<double>() == doctest::Approx(0.6));
  CHECK(j["total_mass"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

  const RunResult none = run_cli("spectrum --walk-type 1 --param 0,0.5");
  CHECK(nlohmann::json::parse(none.output)["atoms"].empty());

  const RunResult two = run_cli("spectrum --walk-type 2 --param 0.3333333333333333");
  const auto j2 = nlohmann::json::parse(two.output);
  REQUIRE(j2["atoms"].size() == 2);
  CHECK(j2["atoms"][0]["mass"].get<double>() == doctest::Approx(0.25));
  CHECK(j2["atoms"][1]["mass"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("spectrum: parameter can come from a coin") {
  const RunResult r = run_cli("spectrum --walk-type 1 --coin real:0.6 --samples 4");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["atoms"][0]["mass"].get<double>() == doctest::Approx(0.6));
}

TEST_CASE("output files are written atomically and deterministically") {
  const std::string path = temp_path("cmvwalk_cli_test.csv");
  const std::string args =
      "simulate --walk-type 1 --coin hadamard --steps 40 --output " + path;
  CHECK(run_cli(args).exit_code == 0);
  std::stringstream first;
  first << std::ifstream(path).rdbuf();
  CHECK(run_cli(args).exit_code == 0);
  std::stringstream second;
  second << std::ifstream(path).rdbuf();
  CHECK(first.str() == second.str());
  CHECK(!first.str().empty());
  CHECK(!fs::exists(path + ".tmp"));
  fs::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("simulate --walk-type 1 --coin nonsense --steps 3").exit_code == 2);
  CHECK(run_cli("simulate --walk-type 3 --coin hadamard --steps 3").exit_code == 2);
  CHECK(run_cli("spectrum --walk-type 1").exit_code == 2);  // no coin, no param
  CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("verify subcommand runs a fast suite") {
  const RunResult r = run_cli("verify --suite conjugation");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  const RunResult strict = run_cli("verify --suite conjugation --tol 1e-18");
  CHECK(strict.exit_code == 1);
  CHECK(strict.output.find("FAIL") != std::string::npos);
}
