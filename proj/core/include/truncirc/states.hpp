#ifndef TRUNCIRC_STATES_HPP
#define TRUNCIRC_STATES_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "truncirc/toeplitz.hpp"
#include "truncirc/trig_poly.hpp"

namespace truncirc {

/// Pure state on the n x n Toeplitz system, stored canonically by the n-1
/// root angles of its polynomial Q_xi(z) = sum_k xi_k z^{n-k-1}. The unit
/// vector xi is derived from the roots, with the leading coefficient of Q_xi
/// real positive so equal root sets give identical vectors.
class PureState {
public:
  explicit PureState(std::vector<double> roots);

  int size() const { return n_; }
  const std::vector<double>& roots() const { return roots_; }
  const Eigen::VectorXcd& xi() const { return xi_; }

  /// Density of the pullback measure, |sum_k xi_k e^{ikt}|^2; integral 1.
  TrigPoly pullback_density() const;

private:
  int n_;
  std::vector<double> roots_;
  Eigen::VectorXcd xi_;
};

/// General state on the n x n Toeplitz system in moment coordinates:
/// m_k is the value of the state on the unit diagonal E_k. m_0 = 1,
/// m_{-k} = conj(m_k), and the Toeplitz matrix of the moments is PSD.
class MomentState {
public:
  /// `moments` holds m_0..m_{n-1}; negative moments follow by conjugation.
  /// Validates unitality, positivity and density nonnegativity.
  MomentState(int n, std::vector<std::complex<double>> moments);

  int size() const { return n_; }
  /// m_k for any k in (-n, n).
  std::complex<double> moment(int k) const;

  /// Degree n-1 density of the pullback measure: coefficient c_k = m_{-k},
  /// so that evaluate pairs with the density as integral f * density dHaar.
  TrigPoly pullback_density() const;

private:
  int n_;
  std::vector<std::complex<double>> moments_;  // m_0..m_{n-1}
};

/// Measure on the circle: point masses plus an optional polynomial density.
struct CircleMeasure {
  struct Atom {
    double angle;
    double weight;
  };
  std::vector<Atom> atoms;
  std::optional<TrigPoly> density;

  double total_mass() const;
  bool is_state(double tol = 1e-12) const;

  static CircleMeasure point(double angle);
  static CircleMeasure uniform();
  static CircleMeasure from_density(TrigPoly density);
};

PureState pure_from_roots(std::vector<double> angles);

double evaluate(const PureState& state, const ToeplitzMatrix& t);
double evaluate(const MomentState& state, const ToeplitzMatrix& t);

/// Moment coordinates of a pure state: m_k = <xi, E_k xi>.
MomentState moment_state(const PureState& state);

CircleMeasure pullback(const PureState& state);
CircleMeasure pullback(const MomentState& state);

/// Moments m_k = sum_i w_i e^{+ik angle_i} + density coefficient c_{-k},
/// the convention under which pullback(moments_from_measure(mu, n)) restores
/// trig-poly densities of degree <= n-1 exactly.
MomentState moments_from_measure(const CircleMeasure& mu, int n);

/// The pure state whose pullback is the Fejer kernel concentrated at theta:
/// roots at theta + 2*pi*j/n, j = 1..n-1.
PureState fejer_state(int n, double theta);

/// Pure state of size m+1+l whose density, evaluated at the m-th roots of
/// unity and normalized, approximates the weight vector with error O(1/sqrt(N)).
/// Roots sit at 2*pi*j/m - sqrt(2 t_j / N); when l >= 1 an extra root of
/// multiplicity l is placed at mu_extra and the weights are pre-compensated
/// by (1 - cos(lambda_j - mu_extra))^{-l}.
PureState approx_state(std::span<const double> weights, double big_n, int l,
                       double mu_extra = 0.0);

/// Pure state of size n*m + 1 with density proportional to
/// (1 - cos(m (t - rotation)))^n: the m-th roots of unity rotated by
/// `rotation`, each with multiplicity n.
PureState power_state(int m, int n, double rotation);

/// Pure state whose density is proportional to the product of phi's density
/// and the power kernel; roots are the concatenation of both root lists.
/// Throws if phi's density vanishes at every maximum of the kernel.
PureState product_state(const PureState& phi, int m, int n, double rotation);

}  // namespace truncirc

#endif
