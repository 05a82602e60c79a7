#ifndef TRUNCIRC_TOEPLITZ_HPP
#define TRUNCIRC_TOEPLITZ_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "truncirc/trig_poly.hpp"

namespace truncirc {

/// n x n Toeplitz matrix stored by its diagonal values: entry (i, j) equals
/// diag(i - j). Hermitian instances satisfy diag(-k) = conj(diag(k)).
class ToeplitzMatrix {
public:
  using Complex = std::complex<double>;

  explicit ToeplitzMatrix(int n) : n_(n), diags_(2 * n - 1, Complex(0.0)) {
    if (n < 1) throw std::invalid_argument("ToeplitzMatrix: n must be >= 1");
  }

  static ToeplitzMatrix identity(int n);

  int size() const { return n_; }

  Complex diag(int k) const {
    if (k <= -n_ || k >= n_) return Complex(0.0);
    return diags_[static_cast<size_t>(k + n_ - 1)];
  }
  void set_diag(int k, Complex value);
  /// Sets diag(k) = value and diag(-k) = conj(value).
  void set_hermitian_pair(int k, Complex value);

  bool is_hermitian(double tol = 1e-12) const;

  Eigen::MatrixXcd dense() const;

private:
  int n_;
  std::vector<Complex> diags_;  // index k + n - 1
};

/// The compression P_n f P_n: diag(k) = c_k of f for |k| <= n-1; higher
/// coefficients are discarded.
ToeplitzMatrix compress(const TrigPoly& f, int n);

/// [D_n, T] with D_n = diag(1, ..., n): the Toeplitz matrix with
/// diag(k) = k * T.diag(k). Anti-Hermitian-symmetric when T is Hermitian in
/// the sense that the result of i*[D,T] is Hermitian.
ToeplitzMatrix dirac_commutator(const ToeplitzMatrix& t);

/// Largest singular value. Hermitian inputs are dispatched to a selfadjoint
/// eigensolver, general inputs to an SVD.
double spectral_norm(const Eigen::MatrixXcd& m);
double spectral_norm(const ToeplitzMatrix& t);

/// True iff the minimum eigenvalue of the Hermitian matrix T is >= -tol.
bool is_psd(const ToeplitzMatrix& t, double tol);

/// One rank-one component d |f_lambda><f_lambda| of a PSD Toeplitz matrix,
/// with f_z = n^{-1/2} (1, z, ..., z^{n-1}) and z = e^{i node}.
struct VandermondeAtom {
  double weight;  // d > 0
  double node;    // angle in [0, 2*pi)
};

/// Sum of d_j |f_{lambda_j}><f_{lambda_j}| as an n x n Toeplitz matrix.
ToeplitzMatrix vandermonde_reconstruct(std::span<const VandermondeAtom> atoms,
                                       int n);

/// Caratheodory-Fejer decomposition of a PSD Toeplitz matrix into at most n
/// rank-one circle projectors. Unique (up to ordering) when rank <= n-1; for
/// full-rank input an anchor atom at node 0 is split off first, which makes
/// the output deterministic but is one of many valid decompositions.
///
/// `tol` is both the PSD slack and the relative eigenvalue threshold deciding
/// numerical rank. Throws DomainError for non-PSD input and ConditioningError
/// when kernel-polynomial roots leave the unit circle by more than 1e-6.
std::vector<VandermondeAtom> vandermonde_decompose(const ToeplitzMatrix& t,
                                                   double tol = 1e-9);

}  // namespace truncirc

#endif
