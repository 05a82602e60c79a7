#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
  const char* path = std::getenv("TRUNCIRC_CLI");
  REQUIRE_MESSAGE(path != nullptr,
                  "TRUNCIRC_CLI must point at the CLI binary");
  return path;
}

struct RunResult {
  int exit_code;
  std::string output;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/truncirc_cli_test_stdout.txt";
  const std::string cmd =
      cli_path() + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), slurp(out_path)};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("distortion subcommand emits one CSV row per n") {
  const RunResult r = run_cli("distortion --n-range 2..3 --samples 2 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n,sampled_pairs") == 0);
  CHECK(r.output.find("\n2,") != std::string::npos);
  CHECK(r.output.find("\n3,") != std::string::npos);
}

TEST_CASE("identical config and seed give byte-identical output files") {
  const std::string out_a = "/tmp/truncirc_cli_det_a.csv";
  const std::string out_b = "/tmp/truncirc_cli_det_b.csv";
  const std::string common = "distortion --n-range 2..3 --samples 2 --seed 9 --out ";
  CHECK(run_cli(common + out_a).exit_code == 0);
  CHECK(run_cli(common + out_b).exit_code == 0);
  const std::string a = slurp(out_a), b = slurp(out_b);
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("json format is valid JSON") {
  const RunResult r =
      run_cli("recover-circle --n-range 3 --samples 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.is_array());
  CHECK(j.at(0).at("n") == 3);
}

TEST_CASE("distance subcommand reproduces the antipodal closed form") {
  const std::string file_a = "/tmp/truncirc_state_a.json";
  const std::string file_b = "/tmp/truncirc_state_b.json";
  write_file(file_a, R"({"type":"pure","roots":[0.0]})");
  write_file(file_b, R"({"type":"pure","roots":[3.141592653589793]})");
  const RunResult r =
      run_cli("distance " + file_a + " " + file_b + " --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("n") == 2);
  CHECK(std::abs(j.at("d_n").get<double>() - 2.0) < 1e-6);
  // Pullbacks are the densities 1 -+ cos t, whose transport distance is 4/pi.
  CHECK(std::abs(j.at("w1_of_pullbacks").get<double>() -
                 4.0 / std::numbers::pi) < 1e-2);
}

TEST_CASE("config file overrides flags") {
  const std::string cfg = "/tmp/truncirc_cli_cfg.json";
  write_file(cfg, R"({"seed": 123, "samples": 2, "n_range": "2..3"})");
  const RunResult via_config = run_cli("distortion --seed 999 --config " + cfg);
  const RunResult via_flags =
      run_cli("distortion --n-range 2..3 --samples 2 --seed 123");
  CHECK(via_config.exit_code == 0);
  CHECK(via_config.output == via_flags.output);
}

TEST_CASE("approximate accepts a target measure file") {
  const std::string target = "/tmp/truncirc_target.json";
  write_file(target,
             R"({"type":"measure","atoms":[{"angle":0.0,"weight":0.5},)"
             R"({"angle":3.141592653589793,"weight":0.5}]})");
  const RunResult r =
      run_cli("approximate --m 2 --grid 1024 --target " + target);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("stage,param") == 0);
}

TEST_CASE("domain errors exit with code 2") {
  CHECK(run_cli("distance /nonexistent_a.json /nonexistent_b.json").exit_code ==
        2);
  CHECK(run_cli("distortion --n-range 5..3").exit_code == 2);
  CHECK(run_cli("distortion --n-range 1..2").exit_code == 2);
  CHECK(run_cli("distortion --format yaml").exit_code == 2);
}
