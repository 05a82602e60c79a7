#include "truncirc/toeplitz.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "truncirc/errors.hpp"

namespace truncirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

Eigen::VectorXcd circle_vector(int n, double node) {
  Eigen::VectorXcd f(n);
  for (int i = 0; i < n; ++i) f(i) = std::polar(1.0 / std::sqrt(double(n)), i * node);
  return f;
}

// Roots of sum_k u_k z^k via the companion matrix of the monic normalization.
std::vector<std::complex<double>> poly_roots(const Eigen::VectorXcd& u) {
  int deg = int(u.size()) - 1;
  while (deg > 0 && std::abs(u(deg)) < 1e-14 * u.cwiseAbs().maxCoeff()) --deg;
  if (deg == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -u(i) / u(deg);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw NumericError("poly_roots: companion eigendecomposition failed");
  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i) roots[size_t(i)] = es.eigenvalues()(i);
  return roots;
}

// Decomposition for rank r <= n-1: nodes from the kernel polynomial of the
// leading (r+1) x (r+1) block, weights by least squares against the diagonals.
std::vector<VandermondeAtom> decompose_rank_deficient(const ToeplitzMatrix& t,
                                                      int rank, double tol) {
  const int n = t.size();
  if (rank == 0) return {};

  Eigen::MatrixXcd sub = t.dense().topLeftCorner(rank + 1, rank + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sub);
  if (es.info() != Eigen::Success)
    throw NumericError("vandermonde_decompose: eigendecomposition failed");
  Eigen::VectorXcd kernel = es.eigenvectors().col(0);

  // T_sub u = 0 forces p(conj(lambda)) = 0 for p(z) = sum u_k z^k, so the
  // nodes are the conjugates of the kernel polynomial's roots.
  auto roots = poly_roots(kernel);
  double max_drift = 0.0;
  std::vector<double> nodes;
  for (const auto& z : roots) {
    max_drift = std::max(max_drift, std::abs(1.0 - std::abs(z)));
    nodes.push_back(wrap_angle(-std::arg(z)));
  }
  if (max_drift > 1e-6)
    throw ConditioningError(
        "vandermonde_decompose: kernel-polynomial root off the unit circle "
        "(max |1-|root|| = " + std::to_string(max_drift) + ")",
        max_drift);

  // Merge nearly coincident nodes.
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> merged;
  for (double node : nodes) {
    if (!merged.empty() && std::abs(node - merged.back()) < 1e-8) continue;
    merged.push_back(node);
  }
  if (!merged.empty() && merged.size() > 1 &&
      std::abs((merged.front() + kTwoPi) - merged.back()) < 1e-8)
    merged.pop_back();

  // diag(k) = (1/n) sum_j d_j e^{ik node_j} for k = 0..n-1, split into real
  // equations; solve for nonnegative weights, dropping the tiny ones.
  auto solve_weights = [&](const std::vector<double>& nds) {
    const int r = int(nds.size());
    Eigen::MatrixXd a(2 * n, r);
    Eigen::VectorXd b(2 * n);
    for (int k = 0; k < n; ++k) {
      const auto dk = t.diag(k);
      b(2 * k) = dk.real();
      b(2 * k + 1) = dk.imag();
      for (int j = 0; j < r; ++j) {
        const auto e = std::polar(1.0 / n, k * nds[size_t(j)]);
        a(2 * k, j) = e.real();
        a(2 * k + 1, j) = e.imag();
      }
    }
    return Eigen::VectorXd(a.colPivHouseholderQr().solve(b));
  };

  Eigen::VectorXd weights = solve_weights(merged);
  std::vector<double> kept;
  for (int j = 0; j < weights.size(); ++j)
    if (weights(j) > tol) kept.push_back(merged[size_t(j)]);
  if (kept.size() != merged.size() && !kept.empty()) weights = solve_weights(kept);
  else kept = merged;

  std::vector<VandermondeAtom> atoms;
  for (int j = 0; j < int(kept.size()); ++j)
    if (weights(j) > tol) atoms.push_back({weights(j), kept[size_t(j)]});
  return atoms;
}

}  // namespace

ToeplitzMatrix ToeplitzMatrix::identity(int n) {
  ToeplitzMatrix t(n);
  t.set_diag(0, 1.0);
  return t;
}

void ToeplitzMatrix::set_diag(int k, Complex value) {
  if (k <= -n_ || k >= n_)
    throw DomainError("ToeplitzMatrix::set_diag: index outside (-n, n)");
  diags_[static_cast<size_t>(k + n_ - 1)] = value;
}

void ToeplitzMatrix::set_hermitian_pair(int k, Complex value) {
  set_diag(k, value);
  set_diag(-k, std::conj(value));
}

bool ToeplitzMatrix::is_hermitian(double tol) const {
  if (std::abs(diag(0).imag()) > tol) return false;
  for (int k = 1; k < n_; ++k)
    if (std::abs(diag(-k) - std::conj(diag(k))) > tol) return false;
  return true;
}

Eigen::MatrixXcd ToeplitzMatrix::dense() const {
  Eigen::MatrixXcd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = diag(i - j);
  return m;
}

ToeplitzMatrix compress(const TrigPoly& f, int n) {
  ToeplitzMatrix t(n);
  for (int k = -(n - 1); k <= n - 1; ++k) t.set_diag(k, f.coeff(k));
  return t;
}

ToeplitzMatrix dirac_commutator(const ToeplitzMatrix& t) {
  const int n = t.size();
  ToeplitzMatrix out(n);
  for (int k = -(n - 1); k <= n - 1; ++k) out.set_diag(k, double(k) * t.diag(k));
  return out;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <
                                  1e-13 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw NumericError("spectral_norm: eigendecomposition failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  if (svd.info() != Eigen::Success)
    throw NumericError("spectral_norm: SVD failed");
  return svd.singularValues()(0);
}

double spectral_norm(const ToeplitzMatrix& t) { return spectral_norm(t.dense()); }

bool is_psd(const ToeplitzMatrix& t, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t.dense(),
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("is_psd: eigendecomposition failed");
  return es.eigenvalues()(0) >= -tol;
}

ToeplitzMatrix vandermonde_reconstruct(std::span<const VandermondeAtom> atoms,
                                       int n) {
  ToeplitzMatrix t(n);
  for (int k = -(n - 1); k <= n - 1; ++k) {
    std::complex<double> v(0.0);
    for (const auto& atom : atoms)
      v += atom.weight * std::polar(1.0 / n, k * atom.node);
    t.set_diag(k, v);
  }
  return t;
}

std::vector<VandermondeAtom> vandermonde_decompose(const ToeplitzMatrix& t,
                                                   double tol) {
  const int n = t.size();
  if (!t.is_hermitian(1e-10))
    throw DomainError("vandermonde_decompose: input is not Hermitian");

  Eigen::MatrixXcd dense = t.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("vandermonde_decompose: eigendecomposition failed");
  const double min_eig = es.eigenvalues()(0);
  const double max_eig = es.eigenvalues()(n - 1);
  if (min_eig < -tol)
    throw DomainError("vandermonde_decompose: input is not PSD (min eigenvalue " +
                      std::to_string(min_eig) + ")");
  if (max_eig <= tol) return {};

  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > tol * max_eig) ++rank;

  std::vector<VandermondeAtom> atoms;
  if (rank == n) {
    // Full rank: split off the largest weight at node 0 that keeps the
    // remainder PSD and singular, d = 1 / <f_1, T^{-1} f_1>, then recurse.
    Eigen::VectorXcd f1 = circle_vector(n, 0.0);
    Eigen::VectorXcd x = dense.ldlt().solve(f1);
    const double d = 1.0 / f1.dot(x).real();
    if (!(d > 0))
      throw NumericError("vandermonde_decompose: anchor weight not positive");
    ToeplitzMatrix rest(n);
    for (int k = -(n - 1); k <= n - 1; ++k)
      rest.set_diag(k, t.diag(k) - d / double(n));
    atoms = decompose_rank_deficient(rest, n - 1, tol);
    atoms.push_back({d, 0.0});
  } else {
    atoms = decompose_rank_deficient(t, rank, tol);
  }

  const double residual =
      (vandermonde_reconstruct(atoms, n).dense() - dense).norm();
  const double scale = dense.norm();
  if (residual > 1e-8 * std::max(scale, 1e-300))
    throw NumericError(
        "vandermonde_decompose: reconstruction residual " +
        std::to_string(residual / scale) + " exceeds 1e-8 relative");
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.node < b.node; });
  return atoms;
}

}  // namespace truncirc
