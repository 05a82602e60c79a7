#ifndef TRUNCIRC_EXPERIMENTS_HPP
#define TRUNCIRC_EXPERIMENTS_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "truncirc/connes.hpp"
#include "truncirc/serialize.hpp"
#include "truncirc/states.hpp"

namespace truncirc {

enum class OutputFormat { csv, json };

struct ExperimentConfig {
  std::vector<int> n_values;
  int samples = 12;
  std::uint64_t seed = 0;
  int grid = 4096;
  SolverOptions solver;
  bool strict = false;
  // Measured runtimes vary between runs; they are reported only on request so
  // that a fixed config and seed produce byte-identical output.
  bool timing = false;

  // Approximation-study schedule.
  int m = 2;                                  // roots-of-unity count
  std::vector<double> big_ns = {1e2, 1e3, 1e4};  // stage-2 N ladder
  std::vector<int> powers = {2, 4, 8, 16};       // stage-3 kernel powers
};

/// Empirical lower estimate of dis R_n*: max |d_n - W1| over sampled
/// pure-state pairs at each n.
struct DistortionRow {
  int n;
  int sampled_pairs;
  double max_discrepancy;
  double mean_discrepancy;
  double runtime_s;
  bool all_converged;
};
std::vector<DistortionRow> run_distortion_study(const ExperimentConfig& cfg);

/// One stage of the three-step approximation pipeline.
struct ApproxRow {
  int stage;           // 1 = snap, 2 = density fit, 3 = kernel power
  double param;        // m, N, or the kernel power n
  int state_size;      // size of the pure state built at this stage (0 for stage 1)
  double w1_to_target;
  double ratio_error;  // max |normalized density ratio - target weight|
};
std::vector<ApproxRow> run_approximation_study(const ExperimentConfig& cfg,
                                               const CircleMeasure& target);

/// Fejer-state circle recovery: distortion of the correspondence
/// {(tau_{f_n^lambda}, lambda)} against arc distance, sampled at L angles.
struct RecoveryRow {
  int n;
  int sampled_lambda_count;
  double distortion_estimate;
  double gh_upper_bound;
  double max_rel_arc_error;  // max |d_n - arc| / arc over sampled pairs
  bool all_converged;
};
std::vector<RecoveryRow> run_circle_recovery(const ExperimentConfig& cfg);

/// Ad-hoc two-state query: both metrics plus solver diagnostics.
struct DistanceRecord {
  int n;
  double d_n;
  double w1_of_pullbacks;
  double feasibility;
  bool converged;
  int iterations;
  std::vector<std::complex<double>> maximizer_diags;  // t_0..t_{n-1}
};
DistanceRecord run_distance(const ExperimentConfig& cfg, const AnyState& a,
                            const AnyState& b);

std::string render_distortion(const std::vector<DistortionRow>& rows,
                              OutputFormat format);
std::string render_approximation(const std::vector<ApproxRow>& rows,
                                 OutputFormat format);
std::string render_recovery(const std::vector<RecoveryRow>& rows,
                            OutputFormat format);
std::string render_distance(const DistanceRecord& record, OutputFormat format);

}  // namespace truncirc

#endif
