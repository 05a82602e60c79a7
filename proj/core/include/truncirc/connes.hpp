#ifndef TRUNCIRC_CONNES_HPP
#define TRUNCIRC_CONNES_HPP

#include <Eigen/Dense>
#include <span>

#include "truncirc/states.hpp"
#include "truncirc/toeplitz.hpp"

namespace truncirc {

struct SolverOptions {
  double step_scale = 1.0;  // initial step = step_scale / ||gradient||
  int max_iters = 100000;
  double tol = 1e-9;       // objective stall tolerance
  int stall_window = 50;   // iterations without improvement before stopping
  int dykstra_max = 200;
  double dykstra_tol = 1e-11;
};

/// Result of maximizing |phi(T) - psi(T)| over Hermitian Toeplitz T with
/// ||[D_n, T]|| <= 1. The value is a certified lower bound: it is attained by
/// `maximizer`, whose commutator norm is reported in `feasibility`.
struct DistanceCertificate {
  double value = 0.0;
  ToeplitzMatrix maximizer = ToeplitzMatrix(1);
  double feasibility = 0.0;   // ||[D_n, T*]||, <= 1 + 1e-8
  double gap_estimate = 0.0;  // objective movement over the final window
  bool converged = true;
  int iterations = 0;
};

/// Connes distance on the truncated circle, by projected gradient ascent in
/// the substituted variable s_k = k t_k (feasible set: Hermitian Toeplitz,
/// zero main diagonal, operator norm <= 1; linear objective).
DistanceCertificate connes_distance(const MomentState& phi,
                                    const MomentState& psi,
                                    const SolverOptions& options = {});

/// Pairwise distances; diagonal zero, each pair solved once.
Eigen::MatrixXd distance_matrix(std::span<const MomentState> states,
                                const SolverOptions& options = {});

}  // namespace truncirc

#endif
