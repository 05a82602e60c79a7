#include "truncirc/connes.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "truncirc/errors.hpp"

namespace truncirc {

namespace {

using Complex = std::complex<double>;

// Hermitian Toeplitz matrix with zero main diagonal from coordinates
// s_1..s_{n-1}.
Eigen::MatrixXcd materialize(const Eigen::VectorXcd& s) {
  const int n = int(s.size()) + 1;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 0.0;
    for (int j = 0; j < i; ++j) {
      m(i, j) = s(i - j - 1);
      m(j, i) = std::conj(s(i - j - 1));
    }
  }
  return m;
}

// Projection onto the Toeplitz-with-zero-diagonal subspace: average each
// subdiagonal (pairing with the conjugate superdiagonal), drop the diagonal.
Eigen::VectorXcd toeplitz_coords(const Eigen::MatrixXcd& m) {
  const int n = int(m.rows());
  Eigen::VectorXcd s(n - 1);
  for (int d = 1; d < n; ++d) {
    Complex acc(0.0);
    for (int i = d; i < n; ++i) acc += m(i, i - d) + std::conj(m(i - d, i));
    s(d - 1) = acc / double(2 * (n - d));
  }
  return s;
}

// Projection onto the operator-norm unit ball: clip eigenvalues to [-1, 1].
Eigen::MatrixXcd project_ball(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success)
    throw NumericError("connes_distance: eigendecomposition failed");
  Eigen::VectorXd clipped =
      es.eigenvalues().cwiseMax(-1.0).cwiseMin(1.0);
  return es.eigenvectors() * clipped.asDiagonal() *
         es.eigenvectors().adjoint();
}

// Dykstra alternating projections onto {||S|| <= 1} intersect the Toeplitz
// zero-diagonal subspace, in matrix space.
Eigen::VectorXcd project_feasible(const Eigen::VectorXcd& s,
                                  const SolverOptions& opt) {
  Eigen::MatrixXcd x = materialize(s);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(x.rows(), x.cols());
  Eigen::MatrixXcd q = p;
  Eigen::VectorXcd coords = s;
  for (int it = 0; it < opt.dykstra_max; ++it) {
    const Eigen::MatrixXcd y = project_ball(x + p);
    p = x + p - y;
    const Eigen::VectorXcd next = toeplitz_coords(y + q);
    const Eigen::MatrixXcd x2 = materialize(next);
    q = y + q - x2;
    const double change = (x2 - x).norm();
    x = x2;
    coords = next;
    if (change < opt.dykstra_tol) break;
  }
  // Dykstra's intermediate iterate can sit slightly outside the ball when the
  // iteration budget runs out.  The subspace is scale-invariant, so a radial
  // correction restores exact feasibility without leaving it.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(materialize(coords));
  if (es.info() != Eigen::Success)
    throw NumericError("connes_distance: eigendecomposition failed");
  const double norm = std::max(std::abs(es.eigenvalues()(0)),
                               std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
  if (norm > 1.0 + 1e-12) coords /= norm;
  return coords;
}

double objective(const Eigen::VectorXcd& delta, const Eigen::VectorXcd& s) {
  double v = 0.0;
  for (int idx = 0; idx < delta.size(); ++idx)
    v += 2.0 * (delta(idx) * s(idx)).real() / double(idx + 1);
  return v;
}

}  // namespace

DistanceCertificate connes_distance(const MomentState& phi,
                                    const MomentState& psi,
                                    const SolverOptions& options) {
  if (phi.size() != psi.size())
    throw DomainError("connes_distance: state sizes differ");
  const int n = phi.size();
  if (n < 2) throw DomainError("connes_distance: n must be >= 2");

  // The difference of the two states pairs with a Toeplitz matrix T as
  // 2 Re sum_k delta_k t_k.  The commutator [D, T] is anti-Hermitian with
  // k t_k on diagonal k, so its operator norm equals the norm of the
  // Hermitian zero-diagonal Toeplitz matrix with u_k = i k t_k on diagonal k.
  // We optimise in the coordinates u_k, where the feasible set is exactly
  // {Hermitian Toeplitz, zero diagonal, operator norm <= 1}; the objective
  // becomes 2 Re sum_k (-i delta_k) u_k / k.
  Eigen::VectorXcd delta(n - 1);
  for (int idx = 0; idx < n - 1; ++idx)
    delta(idx) =
        Complex(0.0, -1.0) * (phi.moment(idx + 1) - psi.moment(idx + 1));

  DistanceCertificate cert;
  cert.maximizer = ToeplitzMatrix(n);
  if (delta.norm() < 1e-14) {
    cert.feasibility = 0.0;
    return cert;
  }

  // Ascent direction for the linear objective 2 Re sum delta_k u_k / k.
  // The projection step works in the matrix Frobenius metric, where the
  // coordinate u_k is spread over 2(n-k) entries; dividing by (n-k) makes the
  // coordinate step agree with the Frobenius-metric gradient so projected
  // ascent has the true maximizer as its fixed point.
  Eigen::VectorXcd grad(n - 1);
  for (int idx = 0; idx < n - 1; ++idx) {
    const int k = idx + 1;
    grad(idx) = std::conj(delta(idx)) * (2.0 / (double(k) * double(n - k)));
  }

  if (n == 2) {
    // Closed form: the constraint reduces to |s_1| <= 1.
    Eigen::VectorXcd s(1);
    s(0) = grad(0) / std::abs(grad(0));
    cert.value = objective(delta, s);
    cert.maximizer.set_hermitian_pair(1, Complex(0.0, -1.0) * s(0));
    cert.feasibility = spectral_norm(dirac_commutator(cert.maximizer));
    cert.iterations = 0;
    return cert;
  }

  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(n - 1);
  double best = 0.0;
  Eigen::VectorXcd best_s = s;
  const double step0 = options.step_scale / grad.norm();
  const double step_cap = 1e3 * step0;
  double step = step0;
  double window_start_best = 0.0;
  int iter = 0;
  bool converged = false;
  while (iter < options.max_iters) {
    ++iter;
    const Eigen::VectorXcd candidate = project_feasible(s + step * grad, options);
    const double cand_obj = objective(delta, candidate);
    if (cand_obj <= objective(delta, s) && step > 1e-14 / grad.norm()) {
      step *= 0.5;  // projected step failed to improve
      continue;
    }
    s = candidate;
    step = std::min(step * 1.25, step_cap);  // successful step: probe larger
    if (cand_obj > best) {
      best = cand_obj;
      best_s = s;
    }
    if (iter % options.stall_window == 0) {
      if (best - window_start_best < options.tol) {
        converged = true;
        break;
      }
      window_start_best = best;
    }
  }

  // Certify feasibility of the best iterate, rescaling if the projection
  // overshot the ball.
  // Undo the coordinate rotation: t_k = -i u_k / k.
  ToeplitzMatrix t_star(n);
  for (int k = 1; k < n; ++k)
    t_star.set_hermitian_pair(k, Complex(0.0, -1.0) * best_s(k - 1) / double(k));
  double feas = spectral_norm(dirac_commutator(t_star));
  if (feas > 1.0 + 1e-8) {
    for (int k = 1; k < n; ++k)
      t_star.set_hermitian_pair(k, t_star.diag(k) / feas);
    best /= feas;
    feas = spectral_norm(dirac_commutator(t_star));
  }

  cert.value = std::abs(best);
  cert.maximizer = t_star;
  cert.feasibility = feas;
  cert.gap_estimate = best - window_start_best;
  cert.converged = converged;
  cert.iterations = iter;
  return cert;
}

Eigen::MatrixXd distance_matrix(std::span<const MomentState> states,
                                const SolverOptions& options) {
  const int count = int(states.size());
  for (int i = 1; i < count; ++i)
    if (states[size_t(i)].size() != states[0].size())
      throw DomainError("distance_matrix: states must share a common size");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const double v =
          connes_distance(states[size_t(i)], states[size_t(j)], options).value;
      d(i, j) = v;
      d(j, i) = v;
    }
  return d;
}

}  // namespace truncirc
