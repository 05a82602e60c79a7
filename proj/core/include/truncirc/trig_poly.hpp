#ifndef TRUNCIRC_TRIG_POLY_HPP
#define TRUNCIRC_TRIG_POLY_HPP

#include <complex>
#include <span>
#include <vector>

namespace truncirc {

/// Trigonometric polynomial f(t) = sum_{|k| <= K} c_k e^{ikt}.
///
/// Coefficients are with respect to the orthonormal basis e_k(t) = e^{ikt}
/// and the normalized Haar measure, so the integral of f equals coeff(0).
/// Coefficients are stored densely over [-K, K]; degrees stay small in this
/// project so no sparse representation is needed.
class TrigPoly {
public:
  using Complex = std::complex<double>;

  TrigPoly() : degree_(0), coeffs_(1, Complex(0.0)) {}
  explicit TrigPoly(int degree)
      : degree_(degree), coeffs_(2 * degree + 1, Complex(0.0)) {}

  static TrigPoly constant(double value);
  /// The basis exponential e_k.
  static TrigPoly basis(int k);

  int degree() const { return degree_; }

  /// Coefficient c_k; zero outside [-K, K].
  Complex coeff(int k) const {
    if (k < -degree_ || k > degree_) return Complex(0.0);
    return coeffs_[static_cast<size_t>(k + degree_)];
  }
  void set_coeff(int k, Complex value);

  Complex eval(double t) const;
  /// Evaluation of a real-coefficient-symmetric polynomial; the imaginary
  /// part must be negligible and is discarded.
  double eval_real(double t) const;

  /// True iff c_{-k} = conj(c_k) for all k (within tol), i.e. f is real-valued.
  bool is_real(double tol = 1e-12) const;

  /// Minimum of eval_real over a uniform grid of `points` angles.
  double min_on_grid(int points) const;
  /// Maximizing angle of eval_real over a uniform grid of `points` angles.
  double argmax_on_grid(int points) const;

  /// Pointwise product; coefficients are the convolution of the inputs'.
  TrigPoly operator*(const TrigPoly& other) const;

  /// Same polynomial rescaled so that coeff(0) = 1. Requires coeff(0) != 0.
  TrigPoly normalized_density() const;

  /// f(t - alpha).
  TrigPoly rotated(double alpha) const;

private:
  int degree_;
  std::vector<Complex> coeffs_;  // index k + degree_
};

/// Density proportional to prod_j (1 - cos(t - angles[j])), scaled so that it
/// integrates to 1. Empty input yields the constant 1.
TrigPoly root_form_density(std::span<const double> angles);

/// The Fejer kernel concentrated at theta: coefficients
/// (1 - |k|/n) e^{-ik theta} for |k| <= n-1. Nonnegative, integral 1.
TrigPoly fejer_density(int n, double theta);

/// Density proportional to (1 - cos(m (t - rotation)))^n, integral 1.
TrigPoly power_kernel(int m, int n, double rotation);

}  // namespace truncirc

#endif
