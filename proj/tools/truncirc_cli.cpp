// Command-line driver for the truncated-circle experiments.
//
// Subcommands:
//   distortion      max |d_n - W1| over sampled random pure-state pairs
//   approximate     three-stage approximation of a target circle measure
//   recover-circle  Fejer-state distortion against arc distance
//   distance        d_n and W1 for two states given as JSON files
//
// Exit codes: 0 success, 2 domain error, 3 solver non-convergence in
// --strict mode.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "truncirc/errors.hpp"
#include "truncirc/experiments.hpp"

namespace {

using truncirc::ExperimentConfig;
using truncirc::OutputFormat;

struct CliOptions {
  std::string n_range = "2..8";
  int samples = 12;
  std::uint64_t seed = 0;
  int grid = 4096;
  int max_iters = 100000;
  double tol = 1e-9;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  bool strict = false;
  bool timing = false;
  int m = 2;
};

std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> values;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    values.push_back(std::stoi(text));
  } else {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw truncirc::DomainError("n-range: descending range " + text);
    for (int n = lo; n <= hi; ++n) values.push_back(n);
  }
  for (int n : values)
    if (n < 2) throw truncirc::DomainError("n-range: n must be >= 2");
  return values;
}

// JSON config file overrides command-line flags.
void apply_config_file(CliOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw truncirc::DomainError("cannot open config: " + opt.config_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw truncirc::DomainError(opt.config_path + ": " + e.what());
  }
  opt.n_range = j.value("n_range", opt.n_range);
  opt.samples = j.value("samples", opt.samples);
  opt.seed = j.value("seed", opt.seed);
  opt.grid = j.value("grid", opt.grid);
  opt.max_iters = j.value("max_iters", opt.max_iters);
  opt.tol = j.value("tol", opt.tol);
  opt.out = j.value("out", opt.out);
  opt.format = j.value("format", opt.format);
  opt.strict = j.value("strict", opt.strict);
  opt.timing = j.value("timing", opt.timing);
  opt.m = j.value("m", opt.m);
}

ExperimentConfig build_config(const CliOptions& opt) {
  ExperimentConfig cfg;
  cfg.n_values = parse_n_range(opt.n_range);
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.grid = opt.grid;
  cfg.solver.max_iters = opt.max_iters;
  cfg.solver.tol = opt.tol;
  cfg.strict = opt.strict;
  cfg.timing = opt.timing;
  cfg.m = opt.m;
  return cfg;
}

OutputFormat parse_format(const std::string& format) {
  if (format == "csv") return OutputFormat::csv;
  if (format == "json") return OutputFormat::json;
  throw truncirc::DomainError("unknown format '" + format + "'");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw truncirc::DomainError("cannot open output file: " + path);
  out << content;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--n-range", opt.n_range,
                  "Truncation sizes, A..B or a single value");
  cmd->add_option("--samples", opt.samples, "Number of sampled states");
  cmd->add_option("--seed", opt.seed, "Random seed (fixed seed => identical output)");
  cmd->add_option("--grid", opt.grid, "W1 grid resolution");
  cmd->add_option("--max-iters", opt.max_iters, "Solver iteration cap");
  cmd->add_option("--tol", opt.tol, "Solver stall tolerance");
  cmd->add_option("--out", opt.out, "Output path (stdout when omitted)");
  cmd->add_option("--format", opt.format, "csv | json");
  cmd->add_option("--config", opt.config_path,
                  "JSON config overriding the flags above");
  cmd->add_flag("--strict", opt.strict,
                "Exit 3 when any solver instance fails to converge");
  cmd->add_flag("--timing", opt.timing,
                "Report measured runtimes (breaks byte-identical reruns)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated circle geometry: spectral and transport distances"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string target_path, state_a, state_b;

  auto* distortion = app.add_subcommand(
      "distortion",
      "Empirical lower estimate of the distortion of the pullback map: "
      "columns n, sampled_pairs, max/mean |d_n - W1| (lower estimates: the "
      "sup is sampled), runtime_s, all_converged");
  add_common_flags(distortion, opt);

  auto* approximate = app.add_subcommand(
      "approximate",
      "Three-stage approximation of a target measure by pure-state "
      "pullbacks: columns stage, param (m, N, or kernel power), state_size, "
      "w1_to_target, ratio_error");
  add_common_flags(approximate, opt);
  approximate->add_option("--target", target_path,
                          "Target measure JSON (type: measure)");
  approximate->add_option("--m", opt.m, "Number of roots of unity to snap to");

  auto* recover = app.add_subcommand(
      "recover-circle",
      "Fejer states vs the circle: columns n, sampled_lambda_count, "
      "distortion_lower_estimate, gh_upper_bound (= distortion/2), "
      "max_rel_arc_error, all_converged");
  add_common_flags(recover, opt);

  auto* distance = app.add_subcommand(
      "distance", "d_n, W1 of the pullbacks, and solver diagnostics for two "
                  "states given as JSON files");
  add_common_flags(distance, opt);
  distance->add_option("fileA", state_a, "First state JSON")->required();
  distance->add_option("fileB", state_b, "Second state JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(opt);
    const ExperimentConfig cfg = build_config(opt);
    const OutputFormat format = parse_format(opt.format);

    bool unconverged = false;
    if (distortion->parsed()) {
      const auto rows = truncirc::run_distortion_study(cfg);
      for (const auto& r : rows) unconverged = unconverged || !r.all_converged;
      write_output(opt.out, truncirc::render_distortion(rows, format));
    } else if (approximate->parsed()) {
      truncirc::CircleMeasure target;
      if (target_path.empty()) {
        target = truncirc::CircleMeasure::uniform();
      } else {
        target = truncirc::to_measure(truncirc::load_state_file(target_path));
      }
      const auto rows = truncirc::run_approximation_study(cfg, target);
      write_output(opt.out, truncirc::render_approximation(rows, format));
    } else if (recover->parsed()) {
      const auto rows = truncirc::run_circle_recovery(cfg);
      for (const auto& r : rows) unconverged = unconverged || !r.all_converged;
      write_output(opt.out, truncirc::render_recovery(rows, format));
    } else if (distance->parsed()) {
      const auto a = truncirc::load_state_file(state_a);
      const auto b = truncirc::load_state_file(state_b);
      const auto record = truncirc::run_distance(cfg, a, b);
      unconverged = !record.converged;
      write_output(opt.out, truncirc::render_distance(record, format));
    }

    if (opt.strict && unconverged) {
      std::cerr << "solver failed to converge (strict mode)\n";
      return 3;
    }
  } catch (const truncirc::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
